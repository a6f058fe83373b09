#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "twistspin/alexander.hpp"
#include "twistspin/errors.hpp"
#include "twistspin/fox.hpp"
#include "twistspin/knot_codec.hpp"

using namespace twistspin;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

const std::vector<std::pair<const char*, const char*>> kKnots{
    {"PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]", "1 - t + t^2"},
    {"PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]", "1 - 3t + t^2"},
    {"PD[X(1,6,2,7),X(3,8,4,9),X(5,10,6,1),X(7,2,8,3),X(9,4,10,5)]", "1 - t + t^2 - t^3 + t^4"},
    {"PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]", "2 - 3t + 2t^2"},
};

std::vector<Integer> fp(const PolyMatrix& a, std::size_t k) { return ideal_eval_fingerprint(elementary_ideal(a, k)); }
}  // namespace

TEST_SUITE("alexander") {
  TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
      const PolyMatrix a = oracle::random_matrix(rng, n, n);
      std::vector<std::size_t> idx(n);
      for (std::size_t j = 0; j < n; ++j) idx[j] = j;
      CHECK(determinant(a) == oracle::cofactor_minor(a, idx, idx));
    }
  }

  TEST_CASE("Bareiss handles zero pivots") {
    const PolyMatrix a{{0, P("1 + t")}, {P("t"), 0}};
    CHECK(determinant(a) == P("-t - t^2"));
    const PolyMatrix b{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(determinant(b) == LaurentPoly(-1));
    CHECK(determinant(PolyMatrix{{1, 2}, {2, 4}}).is_zero());
  }

  TEST_CASE("minor selection") {
    const PolyMatrix a{{1, 2, 3}, {4, 5, 6}};
    const std::vector<std::size_t> rows{0, 1}, cols{0, 2};
    CHECK(minor_det(a, rows, cols) == LaurentPoly(-6));
    CHECK(minor_det(a, {}, {}) == LaurentPoly(1));
    const std::vector<std::size_t> bad{0, 5};
    CHECK_THROWS_AS(minor_det(a, rows, bad), DomainError);
    CHECK(minor_count(7, 4, 4) == 35);
    CHECK(minor_count(3, 2, 3) == 0);
  }

  TEST_CASE("elementary ideal boundary cases") {
    const PolyMatrix a{{P("1 - t"), P("t")}, {P("2"), P("1 + t")}};
    CHECK(elementary_ideal(a, 2).is_unit());
    CHECK(elementary_ideal(a, 5).is_unit());
    const PolyMatrix wide(1, 3);
    CHECK(elementary_ideal(wide, 0).is_zero());
    CHECK(elementary_ideal(a, 1).is_unit());
    const PolyMatrix diag{{P("1 - t"), 0}, {0, P("2")}};
    const Ideal e1 = elementary_ideal(diag, 1);
    CHECK(e1.generators() == std::vector<LaurentPoly>{P("2"), P("1 - t")});
    CHECK(render_ideal(1, e1) == "E_1 = < 2 ; 1 - t >");
    CHECK(render_ideal(0, Ideal::zero()) == "E_0 = 0");
    CHECK(render_ideal(3, Ideal::unit()) == "E_3 = (1)");
  }

  TEST_CASE("ideal canonical form") {
    const Ideal i = Ideal::generated_by({P("-t + t^2"), P("1 - t"), 0, P("t^3 - t^4")});
    CHECK(i.generators().size() == 1);
    CHECK(Ideal::generated_by({P("2 + 2t"), P("-t^5")}).is_unit());
    CHECK(Ideal::generated_by({0, 0}).is_zero());
    CHECK(Ideal::generated_by({P("2"), P("1 + t")}).gcd() == LaurentPoly(1));
  }

  TEST_CASE("minor enumeration respects the ceiling and thread count") {
    std::mt19937_64 rng(42);
    const PolyMatrix a = oracle::random_matrix(rng, 6, 5);
    CHECK_THROWS_AS(elementary_ideal(a, 2, {10, 1}), ResourceLimitError);
    CHECK(elementary_ideal(a, 2, {1000, 1}) == elementary_ideal(a, 2, {1000, 8}));
    const VanishingReport r = minors_vanish(PolyMatrix(3, 3), 2);
    CHECK(r.all_zero);
    CHECK(r.minors_total == 9);
  }

  TEST_CASE("Alexander polynomials of the bundled knots") {
    for (const auto& [code, expected] : kKnots) {
      const KnotDiagram d = parse_knot(code);
      const LaurentPoly delta = alexander_polynomial(wirtinger(d));
      CHECK(delta == P(expected));
      CHECK(delta == oracle::alexander_polynomial(d));
      CHECK(abs(evaluate_at_unit(delta, 1)) == 1);
      CHECK(knot_determinant(wirtinger(d)) % 2 == 1);
    }
  }

  TEST_CASE("Fox matrix equals the crossing-data matrix") {
    for (const auto& [code, expected] : kKnots) {
      const KnotDiagram d = parse_knot(code);
      const PolyMatrix fox = alexander_matrix(wirtinger(d), WeightAssignment::uniform(d.arc_count, 1));
      CHECK(fox == oracle::direct_alexander_matrix(d));
    }
  }

  TEST_CASE("non-Wirtinger input is rejected, degenerate input gives 0") {
    const auto p = Presentation::with_numbered_generators(2, {Word({{0, 1}, {0, 1}})});
    CHECK_THROWS_AS(alexander_polynomial(p), DomainError);
    const auto trivial = Presentation::with_numbered_generators(2, {Word(), Word()});
    CHECK(alexander_polynomial(trivial).is_zero());
  }

  TEST_CASE("E_2 of two-bridge knots is the unit ideal") {
    for (const auto& [code, expected] : kKnots) CHECK(e2_generators(wirtinger(parse_knot(code))).is_unit());
  }

  TEST_CASE("elementary ideals are monotone: fingerprints of E_k+1 divide those of E_k") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) {
      const PolyMatrix a = oracle::random_matrix(rng, 4, 4);
      for (std::size_t k = 0; k < 3; ++k) {
        const auto lo = fp(a, k), hi = fp(a, k + 1);
        for (std::size_t j = 0; j < lo.size(); ++j) {
          if (hi[j] != 0) CHECK(lo[j] % hi[j] == 0);
          else CHECK(lo[j] == 0);
        }
      }
    }
  }

  TEST_CASE("E_k gcd matches the bitmask oracle") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 30; ++i) {
      const PolyMatrix a = oracle::random_matrix(rng, 3, 4, 2);
      for (std::size_t k = 1; k < 4; ++k) CHECK(elementary_ideal(a, k).gcd() == oracle::minor_gcd(a, 4 - k));
    }
  }

  TEST_CASE("equivalence operations preserve fingerprints") {
    using namespace equivalence;
    std::mt19937_64 rng(45);
    for (int i = 0; i < 15; ++i) {
      const PolyMatrix a = oracle::random_matrix(rng, 3, 4, 2);
      const std::vector<EquivalenceOp> ops{
          PermuteRows{{2, 0, 1}},
          PermuteCols{{3, 1, 0, 2}},
          AddRowCombination{0, {{1, P("t - 2")}, {2, P("3")}}},
          AddColCombination{2, {{0, P("1 + t^-1")}}},
          AdjoinZeroRow{},
          StabilizeUnit{},
      };
      for (const auto& op : ops) {
        const PolyMatrix b = apply_equivalence(a, op);
        for (std::size_t k = 0; k < 3; ++k) CHECK(fp(a, k) == fp(b, k));
      }
    }
  }

  TEST_CASE("invalid equivalence operations") {
    using namespace equivalence;
    const PolyMatrix a{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(apply_equivalence(a, PermuteRows{{0, 0}}), DomainError);
    CHECK_THROWS_AS(apply_equivalence(a, AddRowCombination{0, {{0, 1}}}), DomainError);
    CHECK(apply_equivalence(a, StabilizeUnit{}).rows() == 3);
    CHECK(apply_equivalence(a, AdjoinZeroRow{}).cols() == 2);
  }

  TEST_CASE("fingerprints") {
    const Ideal i = Ideal::generated_by({P("1 - t + t^2")});
    CHECK(ideal_eval_fingerprint(i) == std::vector<Integer>{3, 3, 7, 21});
    const std::array<long, 1> minus_one{-1};
    CHECK(ideal_eval_fingerprint(Ideal::generated_by({P("1 - t^2")}), minus_one) == std::vector<Integer>{0});
    CHECK(ideal_eval_fingerprint(Ideal::generated_by({P("t^2 - t + 1"), P("1 - t")}), minus_one) ==
          std::vector<Integer>{1});
    const std::array<long, 3> three{-1, 2, 3};
    CHECK(ideal_eval_fingerprint(Ideal::unit(), three) == std::vector<Integer>{1, 1, 1});
    CHECK(ideal_eval_fingerprint(Ideal::zero()) == std::vector<Integer>{0, 0, 0, 0});
    CHECK(ideals_compatible(i, Ideal::generated_by({P("t^-1 - 1 + t")})));
    CHECK_FALSE(ideals_compatible(i, Ideal::unit()));
  }
}
