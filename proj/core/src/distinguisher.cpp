#include "twistspin/distinguisher.hpp"

#include <numeric>

#include "twistspin/alexander.hpp"
#include "twistspin/errors.hpp"

namespace twistspin {

namespace {

void check_side(std::int64_t m, std::int64_t n, const char* side) {
  if (m == 0) throw DomainError(std::string(side) + ": m = 0 (spun knot) is outside the determinant criterion");
  if (n <= 0) throw DomainError(std::string(side) + ": n must be positive");
  if (std::gcd(m < 0 ? -m : m, n) != 1) throw DomainError(std::string(side) + ": |m| and n must be coprime");
}

bool is_even(std::int64_t m) { return m % 2 == 0; }

}  // namespace

Verdict distinguish_by_determinants(const Integer& det1, std::int64_t m1, std::int64_t n1, const Integer& det2,
                                    std::int64_t m2, std::int64_t n2) {
  check_side(m1, n1, "left");
  check_side(m2, n2, "right");
  Verdict v;
  v.evidence = {abs(det1), abs(det2), is_even(m1), is_even(m2)};
  const auto& e = v.evidence;
  if (e.m1_even && e.m2_even) {
    if (e.det1 != e.det2) {
      v.outcome = Verdict::Outcome::distinguished;
      v.rule = Verdict::Rule::case1;
    }
  } else if (e.m1_even != e.m2_even) {
    const Integer& even_det = e.m1_even ? e.det1 : e.det2;
    if (even_det != 1) {
      v.outcome = Verdict::Outcome::distinguished;
      v.rule = Verdict::Rule::case2;
      v.swapped = !e.m1_even;
    }
  }
  return v;
}

Verdict distinguish(const Presentation& k1, std::int64_t m1, std::int64_t n1, const Presentation& k2, std::int64_t m2,
                    std::int64_t n2) {
  check_side(m1, n1, "left");
  check_side(m2, n2, "right");
  return distinguish_by_determinants(knot_determinant(k1), m1, n1, knot_determinant(k2), m2, n2);
}

std::string render_verdict(const Verdict& v) {
  switch (v.rule) {
    case Verdict::Rule::case1:
      return "DISTINGUISHED (Thm 1 case 1: " + v.evidence.det1.get_str() + " ≠ " + v.evidence.det2.get_str() + ")";
    case Verdict::Rule::case2: {
      const Integer& even_det = v.swapped ? v.evidence.det2 : v.evidence.det1;
      return "DISTINGUISHED (Thm 1 case 2: det " + even_det.get_str() + " ≠ 1)";
    }
    case Verdict::Rule::none:
      break;
  }
  return "INCONCLUSIVE (no theorem case applies)";
}

std::string_view outcome_name(Verdict::Outcome o) {
  return o == Verdict::Outcome::distinguished ? "distinguished" : "inconclusive";
}

std::string_view rule_name(Verdict::Rule r) {
  switch (r) {
    case Verdict::Rule::case1: return "ThmCase1";
    case Verdict::Rule::case2: return "ThmCase2";
    case Verdict::Rule::none: break;
  }
  return "None";
}

std::array<ParityConstraint, 4> parity_table_row(Parity m2, Parity beta1, Parity beta2) {
  using enum ParityConstraint;
  if (m2 == Parity::even && beta2 == Parity::even) {
    throw DomainError("beta2 even with m2 even contradicts gcd(beta2, m2) = 1");
  }
  if (beta1 != Parity::odd) throw DomainError("beta1 is odd because m1 is even and coprime to beta1");
  if (m2 == Parity::even) return {P, Z_2, P, Z_beta2};
  if (beta2 == Parity::even) return {Z_2, P, Z_m2, P};
  throw DomainError("row (odd, odd, odd) is not tabulated; beta2 can always be chosen even when m2 is odd");
}

std::string_view to_string(ParityConstraint c) {
  switch (c) {
    case ParityConstraint::P: return "P";
    case ParityConstraint::Z_2: return "Z/2";
    case ParityConstraint::Z_beta2: return "Z/beta2";
    case ParityConstraint::Z_m2: return "Z/m2";
  }
  return "P";
}

}  // namespace twistspin
