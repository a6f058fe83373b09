#include "twistspin/btspin.hpp"

#include <numeric>

#include "twistspin/errors.hpp"

namespace twistspin {

namespace {

void require_nonzero_m(const BtSpinParams& params) {
  if (params.m == 0) throw DomainError("the elementary ideal formulas require m != 0");
}

}  // namespace

BtSpinParams solve_beta_alpha(std::int64_t m, std::int64_t n, ParityPreference parity) {
  if (m == 0) throw DomainError("m = 0 (spun knot) has no Bezout data; use spun_knot_params()");
  if (n <= 0) throw DomainError("n must be positive");
  const std::int64_t abs_m = m < 0 ? -m : m;
  if (std::gcd(abs_m, n) != 1) {
    throw DomainError("|m| = " + std::to_string(abs_m) + " and n = " + std::to_string(n) + " are not coprime");
  }
  BtSpinParams p;
  p.m = m;
  p.n = n;
  p.epsilon = m >= 0 ? 1 : -1;

  if (abs_m == 1) {
    p.beta = 1;
  } else {
    // beta = epsilon * n^-1 mod |m|, taken in [1, |m|).
    Integer inverse;
    const Integer modulus(std::to_string(abs_m));
    mpz_invert(inverse.get_mpz_t(), Integer(std::to_string(n)).get_mpz_t(), modulus.get_mpz_t());
    Integer beta = inverse * p.epsilon;
    mpz_mod(beta.get_mpz_t(), beta.get_mpz_t(), modulus.get_mpz_t());
    p.beta = std::stoll(beta.get_str());
  }
  if (abs_m % 2 == 1) {
    const bool even = p.beta % 2 == 0;
    if ((parity == ParityPreference::prefer_even && !even) || (parity == ParityPreference::prefer_odd && even)) {
      p.beta += abs_m;
    }
  }
  p.alpha = (p.epsilon - n * p.beta) / m;
  validate(p);
  return p;
}

BtSpinParams spun_knot_params() { return BtSpinParams{0, 1, 1, 1, 0}; }

void validate(const BtSpinParams& p) {
  const std::int64_t abs_m = p.abs_m();
  if (p.n <= 0) throw DomainError("n must be positive");
  if (std::gcd(abs_m, p.n) != 1) throw DomainError("|m| and n must be coprime");
  if (p.epsilon != (p.m >= 0 ? 1 : -1)) throw DomainError("epsilon must be the sign of m");
  if (p.beta <= 0) throw DomainError("beta must be positive");
  if (p.m * p.alpha + p.n * p.beta != p.epsilon) throw DomainError("m*alpha + n*beta != epsilon");
  if (p.epsilon * p.n * p.beta + p.alpha * abs_m != 1) throw DomainError("meridian does not abelianize to t");
}

Presentation btspin_presentation(const Presentation& knot, const BtSpinParams& params) {
  validate(params);
  const std::size_t s = knot.generator_count();
  const auto h = static_cast<Generator>(s);

  std::vector<std::string> names = knot.generator_names();
  names.push_back("h");
  std::vector<Word> relators = knot.relators();
  relators.reserve(knot.relator_count() + s + 1);
  for (Generator i = 0; i < s; ++i) {
    relators.push_back(Word({{i, 1}, {h, 1}, {i, -1}, {h, -1}}));
  }
  relators.push_back(word_power(0, params.abs_m()) * word_power(h, params.beta));
  return Presentation(std::move(names), std::move(relators), meridian_word(params, s));
}

Word meridian_word(const BtSpinParams& params, std::size_t knot_generators) {
  return word_power(0, -params.epsilon * params.n) * word_power(static_cast<Generator>(knot_generators), params.alpha);
}

WeightAssignment btspin_weights(const BtSpinParams& params, std::size_t knot_generators) {
  WeightAssignment w = WeightAssignment::uniform(knot_generators, -params.beta);
  w.set(static_cast<Generator>(knot_generators), params.abs_m());
  return w;
}

PolyMatrix btspin_alexander_matrix(const Presentation& knot, const BtSpinParams& params) {
  return alexander_matrix(btspin_presentation(knot, params), btspin_weights(params, knot.generator_count()));
}

std::vector<LaurentPoly> e1_closed_form_generators(const Presentation& knot, const BtSpinParams& params) {
  validate(params);
  require_nonzero_m(params);
  const std::int64_t abs_m = params.abs_m();
  const std::int64_t beta = params.beta;
  const std::size_t l = knot.generator_count();

  const LaurentPoly one(1);
  const LaurentPoly one_minus_tm = one - LaurentPoly::t_power(abs_m);
  const std::vector<LaurentPoly> s{
      one_minus_tm,
      one - LaurentPoly::t_power(beta),
      geometric_sum(beta, abs_m),
      geometric_sum(abs_m, beta),
  };

  const LaurentPoly delta = alexander_polynomial(knot);
  const Ideal e2 = e2_generators(knot);

  std::vector<LaurentPoly> prefixes;
  prefixes.push_back(substitute_power(delta, beta));
  for (const auto& g : e2.generators()) prefixes.push_back(substitute_power(g, beta) * one_minus_tm);
  prefixes.push_back(pow(one_minus_tm, static_cast<unsigned>(l - 1)));

  std::vector<LaurentPoly> out;
  out.reserve(prefixes.size() * s.size());
  for (const auto& prefix : prefixes) {
    for (const auto& factor : s) out.push_back(normalize(prefix * factor));
  }
  return out;
}

Ideal e1_closed_form(const Presentation& knot, const BtSpinParams& params) {
  return Ideal::generated_by(e1_closed_form_generators(knot, params));
}

Ideal e1_brute_force(const Presentation& knot, const BtSpinParams& params, const MinorOptions& options) {
  require_nonzero_m(params);
  return elementary_ideal(btspin_alexander_matrix(knot, params), 1, options);
}

VanishingReport e0_check(const Presentation& knot, const BtSpinParams& params, const MinorOptions& options) {
  require_nonzero_m(params);
  return e0_check(btspin_alexander_matrix(knot, params), options);
}

VanishingReport e0_check(const PolyMatrix& btspin_matrix, const MinorOptions& options) {
  return minors_vanish(btspin_matrix, btspin_matrix.cols(), options);
}

}  // namespace twistspin
