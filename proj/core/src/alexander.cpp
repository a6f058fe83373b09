#include "twistspin/alexander.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "twistspin/errors.hpp"
#include "twistspin/fox.hpp"

namespace twistspin {

namespace {

// All size-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > n) return out;
  std::vector<std::size_t> current(size);
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    out.push_back(current);
    std::size_t i = size;
    while (i > 0 && current[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < size; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::size_t binomial_saturating(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value *= static_cast<unsigned long>(n - k + i);
    value /= static_cast<unsigned long>(i);
  }
  if (value > Integer(std::to_string(std::numeric_limits<std::size_t>::max()))) {
    return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(value.get_ui());
}

unsigned worker_count(const MinorOptions& options, std::size_t jobs) {
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs / 16, 1)));
}

// Runs body(index) for index in [0, count) on a pool of threads. body returns
// false to request early termination.
template <typename Body>
void parallel_indices(std::size_t count, unsigned threads, Body&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      if (!body(i)) stop.store(true, std::memory_order_relaxed);
    }
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
}

void check_minor_budget(std::size_t total, const MinorOptions& options) {
  if (total > options.max_minors) {
    throw ResourceLimitError("refusing to enumerate " + std::to_string(total) + " minors (limit " +
                             std::to_string(options.max_minors) + ")");
  }
}

}  // namespace

Ideal Ideal::unit() {
  Ideal i;
  i.kind_ = Kind::unit;
  i.generators_.push_back(LaurentPoly(1));
  return i;
}

Ideal Ideal::generated_by(std::vector<LaurentPoly> generators) {
  Ideal ideal;
  std::vector<LaurentPoly> kept;
  kept.reserve(generators.size());
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_unit()) return unit();
    kept.push_back(normalize(g));
  }
  if (kept.empty()) return ideal;
  std::sort(kept.begin(), kept.end(), canonical_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  ideal.kind_ = Kind::general;
  ideal.generators_ = std::move(kept);
  return ideal;
}

LaurentPoly Ideal::gcd() const {
  if (is_zero()) return {};
  return gcd_up_to_unit(generators_);
}

std::string render_ideal(std::size_t k, const Ideal& ideal) {
  std::ostringstream os;
  os << "E_" << k << " = ";
  switch (ideal.kind()) {
    case Ideal::Kind::zero: os << '0'; break;
    case Ideal::Kind::unit: os << "(1)"; break;
    case Ideal::Kind::general:
      os << "< ";
      for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        os << (i ? " ; " : "") << ideal.generators()[i].to_string();
      }
      os << " >";
      break;
  }
  return os.str();
}

std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t size) {
  const std::size_t r = binomial_saturating(rows, size);
  const std::size_t c = binomial_saturating(cols, size);
  if (r != 0 && c > std::numeric_limits<std::size_t>::max() / r) return std::numeric_limits<std::size_t>::max();
  return r * c;
}

LaurentPoly minor_det(const PolyMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw DomainError("minor_det: row and column selections differ in size");
  for (auto r : rows) {
    if (r >= a.rows()) throw DomainError("minor_det: row index " + std::to_string(r) + " out of range");
  }
  for (auto c : cols) {
    if (c >= a.cols()) throw DomainError("minor_det: column index " + std::to_string(c) + " out of range");
  }
  const std::size_t n = rows.size();
  if (n == 0) return LaurentPoly(1);
  std::vector<LaurentPoly> m;
  m.reserve(n * n);
  for (auto r : rows) {
    for (auto c : cols) m.push_back(a(r, c));
  }
  auto at = [&](std::size_t i, std::size_t j) -> LaurentPoly& { return m[i * n + j]; };

  int sign = 1;
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        if (previous == LaurentPoly(1)) {
          at(i, j) = std::move(numerator);
        } else {
          auto quotient = divide_exact(numerator, previous);
          if (!quotient) throw std::logic_error("minor_det: inexact Bareiss division");
          at(i, j) = std::move(*quotient);
        }
      }
      at(i, k) = LaurentPoly{};
    }
    previous = at(k, k);
  }
  LaurentPoly det = at(n - 1, n - 1);
  return sign > 0 ? det : -det;
}

LaurentPoly determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant: matrix is not square");
  std::vector<std::size_t> idx(a.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return minor_det(a, idx, idx);
}

Ideal elementary_ideal(const PolyMatrix& a, std::size_t k, const MinorOptions& options) {
  if (k >= a.cols()) return Ideal::unit();
  const std::size_t size = a.cols() - k;
  if (size > a.rows()) return Ideal::zero();

  check_minor_budget(minor_count(a.rows(), a.cols(), size), options);
  const auto row_sets = combinations(a.rows(), size);
  const auto col_sets = combinations(a.cols(), size);
  const std::size_t total = row_sets.size() * col_sets.size();
  const unsigned threads = worker_count(options, total);

  std::vector<std::vector<LaurentPoly>> found(total);
  std::atomic<bool> saw_unit{false};
  parallel_indices(total, threads, [&](std::size_t i) {
    LaurentPoly d = minor_det(a, row_sets[i / col_sets.size()], col_sets[i % col_sets.size()]);
    if (d.is_unit()) {
      saw_unit = true;
      return false;
    }
    if (!d.is_zero()) found[i].push_back(normalize(d));
    return true;
  });
  if (saw_unit) return Ideal::unit();

  std::vector<LaurentPoly> generators;
  for (auto& f : found) {
    for (auto& g : f) generators.push_back(std::move(g));
  }
  return Ideal::generated_by(std::move(generators));
}

VanishingReport minors_vanish(const PolyMatrix& a, std::size_t size, const MinorOptions& options) {
  VanishingReport report;
  if (size == 0) {
    report.all_zero = false;
    return report;
  }
  if (size > a.rows() || size > a.cols()) return report;
  report.minors_total = minor_count(a.rows(), a.cols(), size);
  check_minor_budget(report.minors_total, options);
  const auto row_sets = combinations(a.rows(), size);
  const auto col_sets = combinations(a.cols(), size);
  std::atomic<std::size_t> checked{0};
  std::atomic<bool> nonzero{false};
  parallel_indices(report.minors_total, worker_count(options, report.minors_total), [&](std::size_t i) {
    checked.fetch_add(1, std::memory_order_relaxed);
    if (!minor_det(a, row_sets[i / col_sets.size()], col_sets[i % col_sets.size()]).is_zero()) {
      nonzero = true;
      return false;
    }
    return true;
  });
  report.all_zero = !nonzero;
  report.minors_checked = checked;
  return report;
}

namespace {

void require_wirtinger_shape(const Presentation& pres) {
  if (pres.relator_count() != pres.generator_count()) {
    throw DomainError("expected a Wirtinger presentation (" + std::to_string(pres.generator_count()) +
                      " generators but " + std::to_string(pres.relator_count()) + " relators)");
  }
  for (const auto& r : pres.relators()) {
    if (r.length() > 4 || total_exponent(r) != 0) {
      throw DomainError("expected a Wirtinger presentation (relator " + render_word(r, pres.generator_names()) +
                        " is not a conjugation relation)");
    }
  }
}

}  // namespace

LaurentPoly alexander_polynomial(const Presentation& pres) {
  require_wirtinger_shape(pres);
  const std::size_t l = pres.generator_count();
  if (l == 1) return LaurentPoly(1);
  const PolyMatrix a = alexander_matrix(pres, WeightAssignment::uniform(l, 1));
  const Ideal e1 = elementary_ideal(a, 1);
  if (e1.is_zero()) return {};
  return e1.gcd();
}

Integer knot_determinant(const Presentation& pres) { return abs(evaluate_at_unit(alexander_polynomial(pres), -1)); }

Ideal e2_generators(const Presentation& pres) {
  require_wirtinger_shape(pres);
  const std::size_t l = pres.generator_count();
  return elementary_ideal(alexander_matrix(pres, WeightAssignment::uniform(l, 1)), 2);
}

namespace {

void check_permutation(const std::vector<std::size_t>& perm, std::size_t n, const char* what) {
  if (perm.size() != n) throw DomainError(std::string(what) + ": permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto i : perm) {
    if (i >= n || seen[i]) throw DomainError(std::string(what) + ": not a permutation");
    seen[i] = true;
  }
}

void check_combination(const equivalence::Combination& term, std::size_t target, std::size_t n, const char* what) {
  if (term.source >= n) throw DomainError(std::string(what) + ": source index out of range");
  if (term.source == target) throw DomainError(std::string(what) + ": a line cannot be combined with itself");
}

}  // namespace

PolyMatrix apply_equivalence(const PolyMatrix& a, const EquivalenceOp& op) {
  using namespace equivalence;
  return std::visit(
      [&](const auto& o) -> PolyMatrix {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, PermuteRows>) {
          check_permutation(o.permutation, a.rows(), "permute_rows");
          PolyMatrix out(a.rows(), a.cols());
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(o.permutation[r], c);
          }
          return out;
        } else if constexpr (std::is_same_v<T, PermuteCols>) {
          check_permutation(o.permutation, a.cols(), "permute_cols");
          PolyMatrix out(a.rows(), a.cols());
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, o.permutation[c]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, AddRowCombination>) {
          if (o.target >= a.rows()) throw DomainError("add_row_combination: target out of range");
          PolyMatrix out = a;
          for (const auto& term : o.terms) {
            check_combination(term, o.target, a.rows(), "add_row_combination");
            for (std::size_t c = 0; c < a.cols(); ++c) out(o.target, c) += term.coefficient * a(term.source, c);
          }
          return out;
        } else if constexpr (std::is_same_v<T, AddColCombination>) {
          if (o.target >= a.cols()) throw DomainError("add_col_combination: target out of range");
          PolyMatrix out = a;
          for (const auto& term : o.terms) {
            check_combination(term, o.target, a.cols(), "add_col_combination");
            for (std::size_t r = 0; r < a.rows(); ++r) out(r, o.target) += term.coefficient * a(r, term.source);
          }
          return out;
        } else if constexpr (std::is_same_v<T, AdjoinZeroRow>) {
          PolyMatrix out(a.rows() + 1, a.cols());
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
          }
          return out;
        } else {
          PolyMatrix out(a.rows() + 1, a.cols() + 1);
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
          }
          out(a.rows(), a.cols()) = LaurentPoly(1);
          return out;
        }
      },
      op);
}

std::vector<Integer> ideal_eval_fingerprint(const Ideal& ideal, std::span<const long> points) {
  std::vector<Integer> out;
  out.reserve(points.size());
  for (long t0 : points) {
    if (t0 == 0) throw DomainError("ideal_eval_fingerprint: evaluation points must be nonzero");
    Integer g = 0;
    for (const auto& p : ideal.generators()) {
      Integer v = abs(evaluate_cleared(p, t0));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 0) {
      const Integer base = abs(Integer(t0));
      Integer common;
      while (true) {
        mpz_gcd(common.get_mpz_t(), g.get_mpz_t(), base.get_mpz_t());
        if (common == 1) break;
        mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), common.get_mpz_t());
      }
    }
    out.push_back(g);
  }
  return out;
}

bool ideals_compatible(const Ideal& i, const Ideal& j, std::span<const long> points) {
  if (ideal_eval_fingerprint(i, points) != ideal_eval_fingerprint(j, points)) return false;
  return i.gcd() == j.gcd();
}

}  // namespace twistspin
