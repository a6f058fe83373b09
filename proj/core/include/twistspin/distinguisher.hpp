#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "twistspin/laurent.hpp"
#include "twistspin/words.hpp"

namespace twistspin {

// Determinant criterion for branched twist spins K1^(m1,n1), K2^(m2,n2):
//   case 1: m1, m2 both even and det(K1) != det(K2);
//   case 2: exactly one of m1, m2 even and the even side has det != 1.
// Case 2 is applied with the sides swapped when m2 is the even one, since
// equivalence of 2-knots is symmetric. Parity is taken on |m|.
// Failure of both cases means only that the criterion does not apply.
struct Verdict {
  enum class Outcome { distinguished, inconclusive };
  enum class Rule { case1, case2, none };

  struct Evidence {
    Integer det1;
    Integer det2;
    bool m1_even = false;
    bool m2_even = false;
    friend bool operator==(const Evidence&, const Evidence&) = default;
  };

  Outcome outcome = Outcome::inconclusive;
  Rule rule = Rule::none;
  // Case 2 was applied with K2 in the role of the even side.
  bool swapped = false;
  Evidence evidence;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Throws DomainError for m == 0, n <= 0 or non-coprime (|m|, n).
Verdict distinguish(const Presentation& k1, std::int64_t m1, std::int64_t n1, const Presentation& k2, std::int64_t m2,
                    std::int64_t n2);

// Same criterion from precomputed knot determinants.
Verdict distinguish_by_determinants(const Integer& det1, std::int64_t m1, std::int64_t n1, const Integer& det2,
                                    std::int64_t m2, std::int64_t n2);

// "DISTINGUISHED (Thm 1 case 1: 3 ≠ 5)", "DISTINGUISHED (Thm 1 case 2: det 3 ≠ 1)",
// "INCONCLUSIVE (no theorem case applies)".
std::string render_verdict(const Verdict& v);
// "distinguished" / "inconclusive"
std::string_view outcome_name(Verdict::Outcome o);
// "ThmCase1" / "ThmCase2" / "None"
std::string_view rule_name(Verdict::Rule r);

enum class Parity { even, odd };

// What substituting t = -1 into each of the four closed-form E_1 generator
// families yields, for the two parity patterns (m2, beta1, beta2) that can
// occur. "P" carries no information; "Z/x" means the determinant ratio lies in Z/x.
enum class ParityConstraint { P, Z_2, Z_beta2, Z_m2 };

// Admissible rows: (even, odd, odd) and (odd, odd, even). Throws DomainError
// otherwise (e.g. beta even with m even contradicts gcd(beta, m) = 1).
std::array<ParityConstraint, 4> parity_table_row(Parity m2, Parity beta1, Parity beta2);
std::string_view to_string(ParityConstraint c);

}  // namespace twistspin
