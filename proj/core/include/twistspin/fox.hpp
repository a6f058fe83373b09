#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistspin/laurent.hpp"
#include "twistspin/poly_matrix.hpp"
#include "twistspin/words.hpp"

namespace twistspin {

// Abelianization data: generator g |-> t^weight(g).
class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::vector<Exponent> weights);

  // Every one of `count` generators |-> t^weight.
  static WeightAssignment uniform(std::size_t count, Exponent weight);

  void set(Generator g, Exponent weight);
  std::optional<Exponent> get(Generator g) const;
  // Throws DomainError when g has no weight.
  Exponent at(Generator g) const;
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<std::optional<Exponent>> weights_;
};

// Free derivative d(w)/d(x_g), by a single left-to-right scan:
// d(uv) = d(u) + u d(v), d(x_g) = 1, d(x_g^-1) = -x_g^-1, other letters 0.
GroupRingElement fox_derivative(const Word& w, Generator g);

// Exponent of t that w maps to: sum_g weight(g) * exponent_sum(w, g).
Exponent abelianize_exponent(const Word& w, const WeightAssignment& weights);

// Z-linear extension of w |-> t^abelianize_exponent(w).
LaurentPoly abelianize(const GroupRingElement& e, const WeightAssignment& weights);

// Entry (i, j) = abelianize(fox_derivative(r_i, j)). Rows follow relators,
// columns follow generators; empty relators give zero rows.
PolyMatrix alexander_matrix(const Presentation& p, const WeightAssignment& weights);

}  // namespace twistspin
