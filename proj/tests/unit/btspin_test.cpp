#include <numeric>
#include <random>

#include <doctest.h>

#include "twistspin/btspin.hpp"
#include "twistspin/errors.hpp"
#include "twistspin/knot_codec.hpp"

using namespace twistspin;

namespace {
Presentation trefoil() { return wirtinger(parse_knot("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]")); }
Presentation figure_eight() { return wirtinger(parse_knot("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]")); }
}  // namespace

TEST_SUITE("btspin") {
  TEST_CASE("beta and alpha for small cases") {
    const BtSpinParams p = solve_beta_alpha(2, 1);
    CHECK(p.beta == 1);
    CHECK(p.alpha == 0);
    CHECK(p.epsilon == 1);
    const BtSpinParams q = solve_beta_alpha(-3, 2);
    CHECK(q.epsilon == -1);
    CHECK(q.beta == 1);
    CHECK(q.alpha == 1);
    CHECK(solve_beta_alpha(3, 2, ParityPreference::prefer_even).beta == 2);
    CHECK(solve_beta_alpha(3, 2, ParityPreference::prefer_odd).beta == 5);
    CHECK(solve_beta_alpha(1, 7).beta == 1);
    CHECK(spun_knot_params() == BtSpinParams{0, 1, 1, 1, 0});
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(solve_beta_alpha(0, 1), DomainError);
    CHECK_THROWS_AS(solve_beta_alpha(4, 2), DomainError);
    CHECK_THROWS_AS(solve_beta_alpha(3, 0), DomainError);
    CHECK_THROWS_AS(validate(BtSpinParams{2, 1, 1, 3, 0}), DomainError);
  }

  TEST_CASE("Bezout and meridian identities on random pairs") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<std::int64_t> m_dist(-50, 50), n_dist(1, 60);
    int checked = 0;
    while (checked < 300) {
      const std::int64_t m = m_dist(rng), n = n_dist(rng);
      if (m == 0 || std::gcd(m < 0 ? -m : m, n) != 1) continue;
      for (auto pref : {ParityPreference::any, ParityPreference::prefer_even, ParityPreference::prefer_odd}) {
        const BtSpinParams p = solve_beta_alpha(m, n, pref);
        CHECK(m * p.alpha + n * p.beta == p.epsilon);
        CHECK(p.epsilon * n * p.beta + p.alpha * p.abs_m() == 1);
        CHECK(p.beta > 0);
        if (p.abs_m() % 2 == 1 && pref != ParityPreference::any) {
          CHECK((p.beta % 2 == 0) == (pref == ParityPreference::prefer_even));
        }
      }
      ++checked;
    }
  }

  TEST_CASE("presentation") {
    const BtSpinParams p = solve_beta_alpha(2, 1);
    const Presentation g = btspin_presentation(trefoil(), p);
    CHECK(g.generator_count() == 4);
    CHECK(g.relator_count() == 7);
    CHECK(g.generator_names().back() == "h");
    CHECK(render_word(g.relators().back(), g.generator_names()) == "x1^2 h");
    CHECK(render_word(g.relators()[3], g.generator_names()) == "x1 h x1^-1 h^-1");
    CHECK(g.meridian() == meridian_word(p, 3));
    const Presentation spun = btspin_presentation(trefoil(), spun_knot_params());
    CHECK(render_word(spun.relators().back(), spun.generator_names()) == "h");
  }

  TEST_CASE("meridian abelianizes to t") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {-3, 2}, {5, 3}, {-4, 7}}) {
      const BtSpinParams p = solve_beta_alpha(m, n);
      CHECK(abelianize_exponent(meridian_word(p, 3), btspin_weights(p, 3)) == 1);
    }
  }

  TEST_CASE("relators abelianize to 1") {
    const BtSpinParams p = solve_beta_alpha(5, 2);
    const Presentation g = btspin_presentation(figure_eight(), p);
    const WeightAssignment w = btspin_weights(p, 4);
    for (const Word& r : g.relators()) CHECK(abelianize_exponent(r, w) == 0);
  }

  TEST_CASE("matrix shape and x-column row sums") {
    const BtSpinParams p = solve_beta_alpha(3, 2);
    const PolyMatrix a = btspin_alexander_matrix(figure_eight(), p);
    CHECK(a.rows() == 9);
    CHECK(a.cols() == 5);
    for (std::size_t r = 0; r < 4; ++r) {
      LaurentPoly sum;
      for (std::size_t c = 0; c < 4; ++c) sum += a(r, c);
      CHECK(sum.is_zero());
      CHECK(a(r, 4).is_zero());
    }
  }

  TEST_CASE("E0 vanishes and E1 closed form matches brute force") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {-3, 2}}) {
      const BtSpinParams p = solve_beta_alpha(m, n);
      for (const Presentation& k : {trefoil(), figure_eight()}) {
        const VanishingReport r = e0_check(k, p);
        CHECK(r.all_zero);
        CHECK(r.minors_checked == r.minors_total);
        const Ideal closed = e1_closed_form(k, p);
        CHECK_FALSE(closed.is_zero());
        CHECK(ideals_compatible(closed, e1_brute_force(k, p)));
      }
    }
  }

  TEST_CASE("the ideal does not depend on which beta is chosen") {
    for (auto [m, n] : {std::pair{3, 2}, {5, 2}, {-3, 1}}) {
      for (const Presentation& k : {trefoil(), figure_eight()}) {
        const Ideal any = e1_closed_form(k, solve_beta_alpha(m, n, ParityPreference::any));
        const Ideal even = e1_closed_form(k, solve_beta_alpha(m, n, ParityPreference::prefer_even));
        const Ideal odd = e1_closed_form(k, solve_beta_alpha(m, n, ParityPreference::prefer_odd));
        CHECK(ideals_compatible(any, even));
        CHECK(ideals_compatible(any, odd));
        CHECK(ideals_compatible(even, e1_brute_force(k, solve_beta_alpha(m, n, ParityPreference::prefer_even))));
      }
    }
  }

  TEST_CASE("kink unknot") {
    const Presentation kink = wirtinger(parse_knot("PD[X(1,1,2,2)]"));
    for (auto [m, n] : {std::pair{2, 1}, {5, 2}}) {
      const BtSpinParams p = solve_beta_alpha(m, n);
      CHECK(ideals_compatible(e1_closed_form(kink, p), e1_brute_force(kink, p)));
      CHECK(e0_check(kink, p).all_zero);
    }
  }

  TEST_CASE("E0 minor count for the trefoil") { CHECK(e0_check(trefoil(), solve_beta_alpha(2, 1)).minors_total == 35); }

  TEST_CASE("closed-form generator list has 4(1 + |E_2 generators| + 1) entries") {
    const BtSpinParams p = solve_beta_alpha(3, 1);
    CHECK(e1_closed_form_generators(trefoil(), p).size() == 12);
  }

  TEST_CASE("E1 evaluated at -1 is generated by the determinant when m is even") {
    const BtSpinParams p = solve_beta_alpha(2, 1);
    CHECK(ideal_eval_fingerprint(e1_closed_form(figure_eight(), p))[0] == 5);
  }

  TEST_CASE("m = 0 is rejected by the ideal computations") {
    CHECK_THROWS_AS(e1_closed_form(trefoil(), spun_knot_params()), DomainError);
    CHECK_THROWS_AS(e0_check(trefoil(), spun_knot_params()), DomainError);
  }

  TEST_CASE("brute force honours the minor ceiling") {
    CHECK_THROWS_AS(e1_brute_force(figure_eight(), solve_beta_alpha(2, 1), {10, 1}), ResourceLimitError);
  }
}
