#include "twistspin/fox.hpp"

#include "twistspin/errors.hpp"

namespace twistspin {

WeightAssignment::WeightAssignment(std::vector<Exponent> weights) {
  weights_.reserve(weights.size());
  for (auto w : weights) weights_.emplace_back(w);
}

WeightAssignment WeightAssignment::uniform(std::size_t count, Exponent weight) {
  return WeightAssignment(std::vector<Exponent>(count, weight));
}

void WeightAssignment::set(Generator g, Exponent weight) {
  if (g >= weights_.size()) weights_.resize(g + 1);
  weights_[g] = weight;
}

std::optional<Exponent> WeightAssignment::get(Generator g) const {
  return g < weights_.size() ? weights_[g] : std::nullopt;
}

Exponent WeightAssignment::at(Generator g) const {
  auto w = get(g);
  if (!w) throw DomainError("no abelianization weight for generator index " + std::to_string(g));
  return *w;
}

GroupRingElement fox_derivative(const Word& w, Generator g) {
  GroupRingElement result;
  Word prefix;
  for (const auto& letter : w.letters()) {
    if (letter.generator == g) {
      if (letter.sign > 0) {
        result.add_term(prefix, 1);
        prefix.push_back(letter);
      } else {
        prefix.push_back(letter);
        result.add_term(prefix, -1);
      }
    } else {
      prefix.push_back(letter);
    }
  }
  return result;
}

Exponent abelianize_exponent(const Word& w, const WeightAssignment& weights) {
  Exponent e = 0;
  for (const auto& letter : w.letters()) e += letter.sign * weights.at(letter.generator);
  return e;
}

LaurentPoly abelianize(const GroupRingElement& e, const WeightAssignment& weights) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& [word, coeff] : e.terms()) terms.push_back({abelianize_exponent(word, weights), coeff});
  return LaurentPoly::from_terms(std::move(terms));
}

PolyMatrix alexander_matrix(const Presentation& p, const WeightAssignment& weights) {
  PolyMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t g = 0; g < p.generator_count(); ++g) weights.at(static_cast<Generator>(g));
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (std::size_t j = 0; j < p.generator_count(); ++j) {
      m(i, j) = abelianize(fox_derivative(p.relators()[i], static_cast<Generator>(j)), weights);
    }
  }
  return m;
}

}  // namespace twistspin
