#include "twistspin/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "twistspin/errors.hpp"

namespace twistspin {

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push_back(l);
}

Word Word::letter(Generator g, int sign) {
  Word w;
  w.letters_.push_back({g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
  return w;
}

void Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().sign == -l.sign) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word word_concat(const Word& u, const Word& v) {
  Word out = u;
  for (const auto& l : v.letters()) out.push_back(l);
  return out;
}

Word word_invert(const Word& u) {
  Word out;
  const auto& letters = u.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back({it->generator, static_cast<std::int8_t>(-it->sign)});
  }
  return out;
}

Word word_power(Generator g, std::int64_t k) {
  Word out;
  const std::int8_t sign = k < 0 ? -1 : 1;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out.push_back({g, sign});
  return out;
}

std::int64_t exponent_sum(const Word& u, Generator g) {
  std::int64_t sum = 0;
  for (const auto& l : u.letters()) {
    if (l.generator == g) sum += l.sign;
  }
  return sum;
}

std::int64_t total_exponent(const Word& u) {
  std::int64_t sum = 0;
  for (const auto& l : u.letters()) sum += l.sign;
  return sum;
}

GroupRingElement::GroupRingElement(const Word& w, const Integer& coefficient) { add_term(w, coefficient); }

Integer GroupRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Word& w, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  }
  return out;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [v, c] : e.terms_) out.add_term(w * v, c);
  return out;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators, Word meridian)
    : names_(std::move(generator_names)), relators_(std::move(relators)), meridian_(std::move(meridian)) {
  if (names_.empty()) throw DomainError("presentation needs at least one generator");
  auto check = [&](const Word& w, const char* what) {
    for (const auto& l : w.letters()) {
      if (l.generator >= names_.size()) {
        throw DomainError(std::string(what) + " references generator index " + std::to_string(l.generator) +
                          " but only " + std::to_string(names_.size()) + " generators exist");
      }
    }
  };
  for (const auto& r : relators_) check(r, "relator");
  check(meridian_, "meridian");
  if (meridian_.empty()) throw DomainError("meridian must be a nontrivial word");
}

Presentation Presentation::with_numbered_generators(std::size_t count, std::vector<Word> relators) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return Presentation(std::move(names), std::move(relators), Word::letter(0));
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& letters = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!first) os << ' ';
    first = false;
    const Generator g = letters[i].generator;
    os << (g < names.size() ? names[g] : "x" + std::to_string(g + 1));
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

std::string render_word(const Word& w) { return render_word(w, {}); }

std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  const auto& names = p.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    os << (i ? ", " : " ") << render_word(p.relators()[i], names);
  }
  os << '>';
  return os.str();
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "1") return out;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    const std::string_view name = text.substr(start, pos - start);
    if (name.empty()) throw ParseError("expected a generator name", start);
    Generator g = 0;
    bool found = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        g = static_cast<Generator>(i);
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown generator '" + std::string(name) + "'", start);
    std::int64_t power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t num_start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string digits(text.substr(num_start, pos - num_start));
      if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected exponent", num_start);
      power = std::stoll(digits);
    }
    out = out * word_power(g, power);
  }
  return out;
}

}  // namespace twistspin
