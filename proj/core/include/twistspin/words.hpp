#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/laurent.hpp"

namespace twistspin {

using Generator = std::uint32_t;

struct Letter {
  Generator generator;
  std::int8_t sign;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Element of a free group, always kept freely reduced. The empty word is the identity.
class Word {
 public:
  Word() = default;
  // Reduces the given letter sequence.
  explicit Word(const std::vector<Letter>& letters);

  static Word letter(Generator g, int sign = +1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Appends one letter with free cancellation.
  void push_back(Letter l);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word word_concat(const Word& u, const Word& v);
Word word_invert(const Word& u);
// g^k; the empty word for k == 0.
Word word_power(Generator g, std::int64_t k);
std::int64_t exponent_sum(const Word& u, Generator g);
// Sum of all exponents; the image under every generator |-> 1.
std::int64_t total_exponent(const Word& u);

inline Word operator*(const Word& u, const Word& v) { return word_concat(u, v); }

// Finite Z-linear combination of words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, const Integer& coefficient = 1);

  const std::map<Word, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Word& w) const;

  void add_term(const Word& w, const Integer& coefficient);

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  // Left multiplication by a group element.
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& e);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, Integer> terms_;
};

// <generator_names | relators>, with a distinguished meridian element.
//
// For Wirtinger presentations the meridian is the single generator x1; for
// branched twist spins it is a word in x1 and h.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators, Word meridian);

  // Generators named x1..xn, meridian x1.
  static Presentation with_numbered_generators(std::size_t count, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const Word& meridian() const noexcept { return meridian_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  Word meridian_;
};

// "x1 x2^-1 h", runs collapsed to powers ("x1^2 h"); the identity renders as "1".
std::string render_word(const Word& w, const std::vector<std::string>& names);
// "x1" etc. when no names are supplied.
std::string render_word(const Word& w);
// "<x1, x2, h | r1, r2>"
std::string render_presentation(const Presentation& p);

// Inverse of render_word against the given generator names. Throws ParseError.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace twistspin
