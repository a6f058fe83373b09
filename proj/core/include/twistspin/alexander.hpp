#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "twistspin/laurent.hpp"
#include "twistspin/poly_matrix.hpp"
#include "twistspin/words.hpp"

namespace twistspin {

// Finitely generated ideal of Z[t, t^-1].
//
// Generators are normalized, deduplicated and sorted by canonical_less; zero
// generators are dropped. The zero ideal has no generators. Whenever a
// generator is a unit the ideal collapses to the single generator 1.
class Ideal {
 public:
  enum class Kind { zero, unit, general };

  Ideal() = default;  // zero ideal
  static Ideal zero() { return {}; }
  static Ideal unit();
  static Ideal generated_by(std::vector<LaurentPoly> generators);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  bool is_unit() const noexcept { return kind_ == Kind::unit; }
  const std::vector<LaurentPoly>& generators() const noexcept { return generators_; }

  // Normalized gcd of the generators, the generator of the smallest principal
  // ideal containing this one. Zero for the zero ideal.
  LaurentPoly gcd() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  Kind kind_ = Kind::zero;
  std::vector<LaurentPoly> generators_;
};

// "E_k = < g1 ; g2 >", "E_k = 0" or "E_k = (1)".
std::string render_ideal(std::size_t k, const Ideal& ideal);

// Parallelism and work ceiling for minor enumeration.
struct MinorOptions {
  // Refuse (ResourceLimitError) when the number of square submatrices exceeds this.
  std::size_t max_minors = 2'000'000;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Number of size x size submatrices of a rows x cols matrix, saturating at SIZE_MAX.
std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t size);

// Determinant of A restricted to the given rows and columns, by fraction-free
// (Bareiss) elimination with exact Laurent division. The empty minor is 1.
// Throws DomainError for out-of-range indices or a non-square selection.
LaurentPoly minor_det(const PolyMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
LaurentPoly determinant(const PolyMatrix& a);

// E_k(A) for A in M(p, q): all (q-k)-minors when 0 < q-k <= p, the zero
// ideal when q-k > p and the unit ideal when q-k <= 0.
Ideal elementary_ideal(const PolyMatrix& a, std::size_t k, const MinorOptions& options = {});

struct VanishingReport {
  bool all_zero = true;
  // Minors actually evaluated; stops early at the first nonzero one.
  std::size_t minors_checked = 0;
  std::size_t minors_total = 0;
};

// Whether every size x size minor of A is the zero polynomial.
VanishingReport minors_vanish(const PolyMatrix& a, std::size_t size, const MinorOptions& options = {});

// Normalized gcd of the (l-1)-minors of the Alexander matrix at x_i |-> t.
// Presentations with a single generator give 1. Returns 0 when every minor
// vanishes, which signals a malformed presentation rather than a knot.
// Throws DomainError for presentations that are not of Wirtinger shape.
LaurentPoly alexander_polynomial(const Presentation& pres);

// |Delta(-1)|.
Integer knot_determinant(const Presentation& pres);

// E_2 of the Wirtinger Alexander matrix at x_i |-> t.
Ideal e2_generators(const Presentation& pres);

// Matrix operations that preserve elementary ideals (adjoin_zero_row and
// stabilize_unit keep E_k with the same k).
namespace equivalence {
struct PermuteRows {
  std::vector<std::size_t> permutation;  // new row i = old row permutation[i]
};
struct PermuteCols {
  std::vector<std::size_t> permutation;
};
struct Combination {
  std::size_t source;
  LaurentPoly coefficient;
};
struct AddRowCombination {
  std::size_t target;
  std::vector<Combination> terms;  // row target += sum coefficient * row source
};
struct AddColCombination {
  std::size_t target;
  std::vector<Combination> terms;
};
struct AdjoinZeroRow {};
struct StabilizeUnit {};
}  // namespace equivalence

using EquivalenceOp = std::variant<equivalence::PermuteRows, equivalence::PermuteCols, equivalence::AddRowCombination,
                                   equivalence::AddColCombination, equivalence::AdjoinZeroRow,
                                   equivalence::StabilizeUnit>;

// Throws DomainError for invalid indices, non-permutations or combinations that reference the target itself.
PolyMatrix apply_equivalence(const PolyMatrix& a, const EquivalenceOp& op);

inline constexpr std::array<long, 4> kFingerprintPoints{-1, 2, 3, 5};

// For each point t0: the gcd over generators of |evaluate_cleared(g, t0)|
// with every prime factor of t0 removed (those are units after
// evaluation). Equal ideals have equal fingerprints; the converse is false.
std::vector<Integer> ideal_eval_fingerprint(const Ideal& ideal, std::span<const long> points = kFingerprintPoints);

// Necessary condition for I == J: equal fingerprints and associate generator gcds.
bool ideals_compatible(const Ideal& i, const Ideal& j, std::span<const long> points = kFingerprintPoints);

}  // namespace twistspin
