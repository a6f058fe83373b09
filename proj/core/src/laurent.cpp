#include "twistspin/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "twistspin/errors.hpp"

namespace twistspin {

namespace {

// Ordinary polynomial in Z[t], coefficient of t^i at index i, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

// Z[t] representative after removing the largest power of t: p = t^shift * dense.
Dense to_dense(const LaurentPoly& p, Exponent* shift) {
  Dense out;
  if (p.is_zero()) {
    *shift = 0;
    return out;
  }
  *shift = p.min_exponent();
  out.resize(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1));
  for (const auto& term : p.terms()) out[static_cast<std::size_t>(term.exponent - *shift)] = term.coefficient;
  return out;
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_all(Dense& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

Dense primitive_part(Dense p) {
  Integer c = dense_content(p);
  if (c != 0 && c != 1) divide_all(p, c);
  return p;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = degree(b);
  const Integer& lead = b.back();
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const Integer coeff = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lead;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= coeff * b[static_cast<std::size_t>(i)];
    trim(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : a) c *= scale;
  }
  return a;
}

// Subresultant remainder sequence (Collins / Brown), as in Knuth vol. 2 Algorithm 4.6.1C.
Dense dense_gcd(Dense u, Dense v) {
  if (u.empty()) return primitive_part(std::move(v));
  if (v.empty()) return primitive_part(std::move(u));
  Integer d = gcd(dense_content(u), dense_content(v));
  u = primitive_part(std::move(u));
  v = primitive_part(std::move(v));
  if (degree(u) < degree(v)) std::swap(u, v);

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const int delta = degree(u) - degree(v);
    Dense r = pseudo_remainder(u, v);
    if (r.empty()) break;
    if (degree(r) == 0) {
      v = Dense{1};
      break;
    }
    Integer h_pow;
    mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * h_pow;
    divide_all(r, divisor);
    u = std::move(v);
    v = std::move(r);
    g = u.back();
    // h <- g^delta / h^(delta - 1)
    Integer g_pow;
    mpz_pow_ui(g_pow.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      g_pow *= h;
      h = g_pow;
    } else {
      Integer h_den;
      mpz_pow_ui(h_den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), g_pow.get_mpz_t(), h_den.get_mpz_t());
    }
  }
  Dense result = primitive_part(std::move(v));
  for (auto& c : result) c *= d;
  return result;
}

// Exact quotient a / b in Z[t] when b(0) != 0; nullopt when b does not divide a.
std::optional<Dense> dense_divide_exact(Dense a, const Dense& b) {
  const int db = degree(b);
  if (degree(a) < db) {
    if (a.empty()) return Dense{};
    return std::nullopt;
  }
  Dense q(static_cast<std::size_t>(degree(a) - db + 1));
  const Integer& lead = b.back();
  Integer coeff;
  while (!a.empty() && degree(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(coeff.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
    const int shift = degree(a) - db;
    q[static_cast<std::size_t>(shift)] = coeff;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= coeff * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, Exponent exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.push_back({exponent, coefficient});
  return p;
}

LaurentPoly LaurentPoly::t_power(Exponent exponent) { return monomial(Integer(1), exponent); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == term.exponent) {
      p.terms_.back().coefficient += term.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::span<const Integer> coefficients, Exponent shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) p.terms_.push_back({shift + static_cast<Exponent>(i), coefficients[i]});
  }
  return p;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_[0].coefficient == 1 || terms_[0].coefficient == -1);
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coefficient;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.exponent += k;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back({b->exponent, sign > 0 ? b->coefficient : Integer(-b->coefficient)});
      ++b;
    } else {
      Integer c = sign > 0 ? Integer(a->coefficient + b->coefficient) : Integer(a->coefficient - b->coefficient);
      if (c != 0) merged.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coefficient = -term.coefficient;
  return p;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const Exponent low = lhs.min_exponent() + rhs.min_exponent();
  const Exponent span = lhs.max_exponent() + rhs.max_exponent() - low + 1;
  // Dense accumulation is cheaper than a map for the short spans seen in practice.
  if (span <= 4096) {
    std::vector<Integer> acc(static_cast<std::size_t>(span));
    for (const auto& a : lhs.terms_) {
      for (const auto& b : rhs.terms_) {
        mpz_addmul(acc[static_cast<std::size_t>(a.exponent + b.exponent - low)].get_mpz_t(),
                   a.coefficient.get_mpz_t(), b.coefficient.get_mpz_t());
      }
    }
    return LaurentPoly::from_coefficients(acc, low);
  }
  std::map<Exponent, Integer> acc;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) acc[a.exponent + b.exponent] += a.coefficient * b.coefficient;
  }
  LaurentPoly out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.push_back({e, std::move(c)});
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = term.coefficient < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Integer magnitude = abs(term.coefficient);
    if (term.exponent == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str();
    os << 't';
    if (term.exponent != 1) os << '^' << term.exponent;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&](std::string& out) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
  };

  std::vector<Term> terms;
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;

    const std::size_t term_start = pos;
    std::string digits;
    read_digits(digits);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    skip_ws();
    Exponent exponent = 0;
    bool has_t = false;
    if (pos < text.size() && text[pos] == '*') {
      if (digits.empty()) throw ParseError("'*' without a coefficient", pos);
      ++pos;
      skip_ws();
      if (pos == text.size() || text[pos] != 't') throw ParseError("expected 't' after '*'", pos);
    }
    if (pos < text.size() && text[pos] == 't') {
      has_t = true;
      exponent = 1;
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        int exp_sign = 1;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          exp_sign = text[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::string exp_digits;
        read_digits(exp_digits);
        if (exp_digits.empty()) throw ParseError("expected exponent after '^'", pos);
        try {
          exponent = exp_sign * static_cast<Exponent>(std::stoll(exp_digits));
        } catch (const std::out_of_range&) {
          throw ParseError("exponent out of range", pos);
        }
      }
    }
    if (digits.empty() && !has_t) throw ParseError("expected a term", term_start);
    terms.push_back({exponent, sign * coeff});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  const Exponent span_a = a.max_exponent() - a.min_exponent();
  const Exponent span_b = b.max_exponent() - b.min_exponent();
  if (span_a != span_b) return span_a < span_b;
  if (a.min_exponent() != b.min_exponent()) return a.min_exponent() < b.min_exponent();
  auto ta = a.terms();
  auto tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].exponent != tb[i].exponent) return ta[i].exponent < tb[i].exponent;
    if (ta[i].coefficient != tb[i].coefficient) return ta[i].coefficient < tb[i].coefficient;
  }
  return ta.size() < tb.size();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly substitute_power(const LaurentPoly& p, Exponent k) {
  if (k == 0) throw DomainError("substitute_power: exponent multiplier must be nonzero");
  std::vector<LaurentPoly::Term> terms(p.terms().begin(), p.terms().end());
  for (auto& term : terms) term.exponent *= k;
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly geometric_sum(Exponent step, Exponent count) {
  if (step == 0) throw DomainError("geometric_sum: step must be nonzero");
  if (count < 0) throw DomainError("geometric_sum: count must be nonnegative");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(count));
  for (Exponent i = 0; i < count; ++i) terms.push_back({step * i, Integer(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

Integer evaluate_at_unit(const LaurentPoly& p, int u) {
  if (u != 1 && u != -1) throw DomainError("evaluate_at_unit: point must be 1 or -1");
  Integer value = 0;
  for (const auto& term : p.terms()) {
    if (u == -1 && (term.exponent % 2 != 0)) {
      value -= term.coefficient;
    } else {
      value += term.coefficient;
    }
  }
  return value;
}

Integer evaluate_cleared(const LaurentPoly& p, long t0) {
  if (t0 == 0) throw DomainError("evaluate_cleared: point must be nonzero");
  if (p.is_zero()) return 0;
  const Exponent shift = std::max<Exponent>(0, -p.min_exponent());
  // Horner from the top exponent down.
  Integer value = 0;
  Exponent current = p.max_exponent() + shift;
  Integer step;
  const Integer base(t0);
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Exponent e = it->exponent + shift;
    mpz_pow_ui(step.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(current - e));
    value = value * step + it->coefficient;
    current = e;
  }
  mpz_pow_ui(step.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(current));
  return value * step;
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.min_exponent());
  if (out.lowest_coefficient() < 0) out = -out;
  return out;
}

Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& term : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coefficient.get_mpz_t());
  return g;
}

LaurentPoly gcd_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd_up_to_unit: gcd(0, 0) is undefined");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_unit() || q.is_unit()) return LaurentPoly(1);
  Exponent shift_p = 0;
  Exponent shift_q = 0;
  Dense g = dense_gcd(to_dense(p, &shift_p), to_dense(q, &shift_q));
  return normalize(LaurentPoly::from_coefficients(g));
}

LaurentPoly gcd_up_to_unit(std::span<const LaurentPoly> polys) {
  LaurentPoly g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize(p) : gcd_up_to_unit(g, p);
    if (g == LaurentPoly(1)) break;
  }
  if (g.is_zero()) throw DomainError("gcd_up_to_unit: all inputs are zero");
  return g;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("divide_exact: division by zero");
  if (p.is_zero()) return LaurentPoly{};
  if (divisor.term_count() == 1) {
    const auto& d = divisor.terms()[0];
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& term : p.terms()) {
      if (!mpz_divisible_p(term.coefficient.get_mpz_t(), d.coefficient.get_mpz_t())) return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), term.coefficient.get_mpz_t(), d.coefficient.get_mpz_t());
      terms.push_back({term.exponent - d.exponent, std::move(c)});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }
  Exponent shift_p = 0;
  Exponent shift_d = 0;
  auto quotient = dense_divide_exact(to_dense(p, &shift_p), to_dense(divisor, &shift_d));
  if (!quotient) return std::nullopt;
  return LaurentPoly::from_coefficients(*quotient, shift_p - shift_d);
}

}  // namespace twistspin
