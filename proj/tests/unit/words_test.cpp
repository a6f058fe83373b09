#include <random>

#include <doctest.h>

#include "twistspin/errors.hpp"
#include "twistspin/words.hpp"

using namespace twistspin;

namespace {
std::vector<Letter> random_letters(std::mt19937_64& rng, int generators, int length) {
  std::uniform_int_distribution<int> gen(0, generators - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> out;
  for (int i = 0; i < length; ++i) {
    out.push_back({static_cast<Generator>(gen(rng)), static_cast<std::int8_t>(positive(rng) ? 1 : -1)});
  }
  return out;
}

bool is_reduced(const Word& w) {
  const auto& l = w.letters();
  for (std::size_t i = 1; i < l.size(); ++i) {
    if (l[i].generator == l[i - 1].generator && l[i].sign == -l[i - 1].sign) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("free reduction") {
    const Word w({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}});
    CHECK(w == Word::letter(2));
    CHECK(Word({{0, 1}, {0, -1}}).empty());
    CHECK(word_power(1, 3).length() == 3);
    CHECK(word_power(1, 0).empty());
  }

  TEST_CASE("reduction is confluent") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
      const auto letters = random_letters(rng, 2, 30);
      const Word whole(letters);
      CHECK(is_reduced(whole));
      const std::size_t cut = letters.size() / 3;
      const Word left(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<long>(cut)));
      const Word right(std::vector<Letter>(letters.begin() + static_cast<long>(cut), letters.end()));
      CHECK(left * right == whole);
      Word pushed;
      for (auto l : letters) pushed.push_back(l);
      CHECK(pushed == whole);
    }
  }

  TEST_CASE("inverse and exponent sums") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
      const Word w(random_letters(rng, 3, 12));
      CHECK((w * word_invert(w)).empty());
      CHECK((word_invert(w) * w).empty());
      CHECK(total_exponent(w) == exponent_sum(w, 0) + exponent_sum(w, 1) + exponent_sum(w, 2));
      CHECK(exponent_sum(word_invert(w), 1) == -exponent_sum(w, 1));
    }
  }

  TEST_CASE("group ring arithmetic") {
    const Word x = Word::letter(0), y = Word::letter(1);
    GroupRingElement a(x, 2);
    a.add_term(y, -1);
    GroupRingElement b(y);
    const GroupRingElement ab = a * b;
    CHECK(ab.coefficient(x * y) == 2);
    CHECK(ab.coefficient(y * y) == -1);
    CHECK((a - a).is_zero());
    CHECK((x * b).coefficient(x * y) == 1);
  }

  TEST_CASE("rendering and parsing") {
    const std::vector<std::string> names{"x1", "x2", "h"};
    const Word w({{0, 1}, {0, 1}, {2, -1}, {1, 1}});
    CHECK(render_word(w, names) == "x1^2 h^-1 x2");
    CHECK(render_word(Word()) == "1");
    CHECK(parse_word("x1^2 h^-1 x2", names) == w);
    CHECK(parse_word("1", names).empty());
    CHECK_THROWS_AS(parse_word("x9", names), ParseError);
    const auto p = Presentation::with_numbered_generators(2, {Word({{0, 1}, {1, -1}})});
    CHECK(render_presentation(p) == "<x1, x2 | x1 x2^-1>");
    CHECK(p.meridian() == Word::letter(0));
  }

  TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(Presentation({"a"}, {Word::letter(3)}, Word::letter(0)), DomainError);
    CHECK_THROWS_AS(Presentation({"a"}, {}, Word()), DomainError);
  }
}
