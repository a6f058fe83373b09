#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace twistspin {

using Integer = mpz_class;
using Exponent = std::int64_t;

// An element of Z[t, t^-1] with arbitrary-precision coefficients.
//
// Stored sparsely as (exponent, coefficient) pairs sorted by increasing
// exponent. No stored coefficient is zero, so the zero polynomial is the
// empty term list and structural equality is ring equality.
class LaurentPoly {
 public:
  struct Term {
    Exponent exponent;
    Integer coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(const Integer& coefficient, Exponent exponent);
  // t^exponent
  static LaurentPoly t_power(Exponent exponent);
  // Accepts terms in any order with repeated exponents; they are combined.
  static LaurentPoly from_terms(std::vector<Term> terms);
  // Coefficients of 1, t, t^2, ... multiplied by t^shift.
  static LaurentPoly from_coefficients(std::span<const Integer> coefficients, Exponent shift = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  // +-t^k
  bool is_unit() const noexcept;
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Integer coefficient(Exponent e) const;

  // Only meaningful when !is_zero().
  Exponent min_exponent() const { return terms_.front().exponent; }
  Exponent max_exponent() const { return terms_.back().exponent; }
  const Integer& lowest_coefficient() const { return terms_.front().coefficient; }
  const Integer& highest_coefficient() const { return terms_.back().coefficient; }

  // Multiply by t^k.
  LaurentPoly shifted(Exponent k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Canonical rendering, e.g. "1 - t + t^2", "t^-1 + 2 + t", "0".
  std::string to_string() const;
  // Inverse of to_string. Also tolerates '*' between coefficient and t,
  // arbitrary whitespace and repeated exponents. Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_scaled(const LaurentPoly& rhs, int sign);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Total order used to sort generator lists deterministically: by span
// (max - min exponent), then min exponent, then coefficients.
bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

// p(t^k). Throws DomainError for k == 0.
LaurentPoly substitute_power(const LaurentPoly& p, Exponent k);

// sum_{i=0}^{count-1} t^(step*i), i.e. the polynomial (1 - t^(step*count)) / (1 - t^step).
// Throws DomainError for step == 0 or count < 0.
LaurentPoly geometric_sum(Exponent step, Exponent count);

// p(u) for u in {1, -1}. Throws DomainError otherwise.
Integer evaluate_at_unit(const LaurentPoly& p, int u);

// (t^s p)(t0) where s = max(0, -min_exponent); equals p(t0) up to the unit t0^s.
// Throws DomainError for t0 == 0.
Integer evaluate_cleared(const LaurentPoly& p, long t0);

// Canonical associate under the units +-t^k: lowest exponent 0 and positive
// lowest-degree coefficient. normalize(0) == 0.
LaurentPoly normalize(const LaurentPoly& p);

// Greatest common divisor in Z[t, t^-1], returned normalized.
// Throws DomainError when both arguments are zero.
LaurentPoly gcd_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly gcd_up_to_unit(std::span<const LaurentPoly> polys);

// Content (gcd of coefficients, nonnegative) of p; 0 for p == 0.
Integer content(const LaurentPoly& p);

// q such that p == q * divisor, if one exists in Z[t, t^-1].
// Throws DomainError when divisor is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& divisor);

}  // namespace twistspin
