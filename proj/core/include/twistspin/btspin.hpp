#pragma once

#include <cstdint>
#include <vector>

#include "twistspin/alexander.hpp"
#include "twistspin/fox.hpp"
#include "twistspin/laurent.hpp"
#include "twistspin/words.hpp"

namespace twistspin {

enum class ParityPreference { any, prefer_even, prefer_odd };

// Integer data of the (m, n)-branched twist spin.
//
// Invariants: gcd(|m|, n) = 1, beta > 0, m*alpha + n*beta = epsilon, and
// epsilon*n*beta + alpha*|m| = 1 (the meridian abelianizes to t).
struct BtSpinParams {
  std::int64_t m = 0;
  std::int64_t n = 1;
  int epsilon = 1;  // +1 if m >= 0, else -1
  std::int64_t beta = 1;
  std::int64_t alpha = 0;

  std::int64_t abs_m() const { return m < 0 ? -m : m; }

  friend bool operator==(const BtSpinParams&, const BtSpinParams&) = default;
};

// Smallest positive beta with n*beta = epsilon (mod |m|), moved to the
// preferred parity when |m| is odd (beta and beta + |m| differ in parity);
// alpha from m*alpha + n*beta = epsilon. For even |m| beta is necessarily odd
// and the preference is ignored.
// Throws DomainError for m == 0, n <= 0 or gcd(|m|, n) != 1.
BtSpinParams solve_beta_alpha(std::int64_t m, std::int64_t n, ParityPreference parity = ParityPreference::any);

// The spun knot (m, n) = (0, 1): beta = 1, alpha = 0.
BtSpinParams spun_knot_params();

// Checks every BtSpinParams invariant; throws DomainError on violation.
void validate(const BtSpinParams& params);

// <x1..xs, h | r_1..r_t, x_i h x_i^-1 h^-1 (each i), x1^|m| h^beta> with
// meridian x1^(-epsilon n) h^alpha. m == 0 yields the final relator h.
Presentation btspin_presentation(const Presentation& knot, const BtSpinParams& params);

// x1^(-epsilon n) h^alpha, where h is generator index `knot_generators`.
Word meridian_word(const BtSpinParams& params, std::size_t knot_generators);

// x_i |-> t^-beta, h |-> t^|m|.
WeightAssignment btspin_weights(const BtSpinParams& params, std::size_t knot_generators);

// Alexander matrix of btspin_presentation under btspin_weights: (2l+1) x (l+1).
PolyMatrix btspin_alexander_matrix(const Presentation& knot, const BtSpinParams& params);

// The closed-form first elementary ideal, as an explicit list (normalized,
// in construction order, duplicates kept):
//   Delta(t^beta) S, G_i(t^beta) (1 - t^|m|) S, (1 - t^|m|)^(l-1) S
// with S = {1 - t^|m|, 1 - t^beta, (1 - t^(|m| beta))/(1 - t^beta), (1 - t^(|m| beta))/(1 - t^|m|)}
// and G_i the generators of E_2 of the knot.
// Throws DomainError for m == 0.
std::vector<LaurentPoly> e1_closed_form_generators(const Presentation& knot, const BtSpinParams& params);
Ideal e1_closed_form(const Presentation& knot, const BtSpinParams& params);

// All l x l minors of btspin_alexander_matrix. Throws ResourceLimitError past
// options.max_minors and DomainError for m == 0.
Ideal e1_brute_force(const Presentation& knot, const BtSpinParams& params, const MinorOptions& options = {});

// Whether every (l+1) x (l+1) minor of btspin_alexander_matrix vanishes.
VanishingReport e0_check(const Presentation& knot, const BtSpinParams& params, const MinorOptions& options = {});
VanishingReport e0_check(const PolyMatrix& btspin_matrix, const MinorOptions& options = {});

}  // namespace twistspin
