#pragma once

// Reference implementations used only by the test suites. They deliberately
// avoid the library's algorithms: determinants by cofactor expansion, gcds by
// Euclid over Q, subsets by bitmask, Alexander matrices written down directly
// from crossing data instead of through Fox calculus.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "twistspin/knot_codec.hpp"
#include "twistspin/laurent.hpp"
#include "twistspin/poly_matrix.hpp"

namespace oracle {

using twistspin::Integer;
using twistspin::LaurentPoly;
using twistspin::PolyMatrix;

inline LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    LaurentPoly term = m[0][j] * cofactor_det(sub);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

inline LaurentPoly cofactor_minor(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
  std::vector<std::vector<LaurentPoly>> m;
  for (auto r : rows) {
    std::vector<LaurentPoly> row;
    for (auto c : cols) row.push_back(a(r, c));
    m.push_back(std::move(row));
  }
  return cofactor_det(m);
}

// Polynomial gcd by the Euclidean algorithm over Q, then cleared to a
// primitive integer polynomial times the gcd of contents.
inline LaurentPoly rational_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  using Q = std::vector<mpq_class>;
  auto to_q = [](const LaurentPoly& x) {
    Q out;
    if (x.is_zero()) return out;
    out.resize(static_cast<std::size_t>(x.max_exponent() - x.min_exponent() + 1));
    for (const auto& t : x.terms()) out[static_cast<std::size_t>(t.exponent - x.min_exponent())] = mpq_class(t.coefficient);
    return out;
  };
  auto trim = [](Q& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  auto content_of = [](const LaurentPoly& x) {
    Integer g = 0;
    for (const auto& t : x.terms()) g = gcd(g, t.coefficient);
    return g;
  };
  Q a = to_q(p);
  Q b = to_q(q);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      const mpq_class factor = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
      a.back() = 0;
      trim(a);
    }
    std::swap(a, b);
  }
  // a is the gcd up to a rational scalar; clear denominators and make primitive.
  Integer lcm_den = 1;
  for (auto& c : a) {
    c.canonicalize();
    lcm_den = lcm(lcm_den, c.get_den());
  }
  std::vector<Integer> coeffs;
  for (auto& c : a) coeffs.push_back(Integer(c * lcm_den));
  Integer cont = 0;
  for (auto& c : coeffs) cont = gcd(cont, c);
  for (auto& c : coeffs) c /= cont;
  const Integer scale = gcd(content_of(p), content_of(q));
  for (auto& c : coeffs) c *= scale;
  return twistspin::normalize(LaurentPoly::from_coefficients(coeffs));
}

// Normalized gcd of every size x size minor, enumerating subsets by bitmask.
// Returns 0 if all minors vanish.
inline LaurentPoly minor_gcd(const PolyMatrix& a, std::size_t size) {
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1U << i)) s.push_back(i);
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  LaurentPoly g;
  for (const auto& rows : subsets(a.rows(), size)) {
    for (const auto& cols : subsets(a.cols(), size)) {
      LaurentPoly d = cofactor_minor(a, rows, cols);
      if (d.is_zero()) continue;
      g = g.is_zero() ? twistspin::normalize(d) : rational_gcd(g, d);
    }
  }
  return g;
}

// Alexander matrix at x_i |-> t written down from crossing data:
// positive crossing (o u o^-1 w^-1): o: 1 - t, u: t, w: -1;
// negative crossing (o^-1 u o w^-1): o: 1 - t^-1, u: t^-1, w: -1.
inline PolyMatrix direct_alexander_matrix(const twistspin::KnotDiagram& d) {
  PolyMatrix a(d.crossings.size(), d.arc_count);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    const twistspin::Exponent s = x.sign > 0 ? 1 : -1;
    a(i, x.over_arc) += LaurentPoly(1) - LaurentPoly::t_power(s);
    a(i, x.under_in_arc) += LaurentPoly::t_power(s);
    a(i, x.under_out_arc) -= LaurentPoly(1);
  }
  return a;
}

inline LaurentPoly alexander_polynomial(const twistspin::KnotDiagram& d) {
  if (d.arc_count == 1) return LaurentPoly(1);
  return minor_gcd(direct_alexander_matrix(d), d.arc_count - 1);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int exp_range = 3, int coeff_range = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<LaurentPoly::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exp(rng), Integer(coeff(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int max_terms = 3) {
  PolyMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_poly(rng, max_terms, 2, 3);
  }
  return m;
}

}  // namespace oracle
