#include "rwdist/generator_system.hpp"

#include "rwdist/errors.hpp"

namespace rwdist {

GeneratorSystem::GeneratorSystem(int n, std::vector<Generator> generators)
    : n_(n), gens_(std::move(generators)) {
  if (n_ < 1) throw Error(Errc::BadSize, "degree must be positive");
  if (gens_.empty()) throw Error(Errc::BadSize, "generator list is empty");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (g.perm.degree() != n_)
      throw Error(Errc::SizeMismatch, "generator '" + g.label + "' has wrong degree");
    if (g.perm.is_identity())
      throw Error(Errc::BadRule, "generator '" + g.label + "' is the identity");
    if (!g.perm.is_involution())
      throw Error(Errc::BadRule, "generator '" + g.label + "' is not an involution");
    if (g.weight <= Rational(0))
      throw Error(Errc::NonpositiveWeight, "generator '" + g.label + "' has nonpositive weight");
    auto [it, inserted] = by_label_.emplace(g.label, static_cast<Letter>(i));
    if (!inserted)
      throw Error(Errc::DuplicateLabel, "generator label '" + g.label + "' repeated");
  }
}

std::optional<Letter> GeneratorSystem::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Letter GeneratorSystem::require_index(const std::string& label) const {
  auto idx = find(label);
  if (!idx) throw Error(Errc::ParseError, "unknown generator label '" + label + "'");
  return *idx;
}

std::optional<Letter> GeneratorSystem::find_adjacent(int i) const {
  const Permutation t = Permutation::transposition(n_, i, i + 1);
  for (std::size_t k = 0; k < gens_.size(); ++k)
    if (gens_[k].perm == t) return static_cast<Letter>(k);
  return std::nullopt;
}

Permutation GeneratorSystem::evaluate(const Word& w) const {
  Permutation acc = Permutation::identity(n_);
  for (Letter a : w) {
    if (a < 0 || a >= size())
      throw Error(Errc::OutOfRange, "word letter " + std::to_string(a) + " out of range");
    acc = compose(acc, gens_[a].perm);
  }
  return acc;
}

std::string GeneratorSystem::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gens_[w[i]].label;
  }
  return out;
}

Word adjacent_word(const Permutation& g, const GeneratorSystem& gens) {
  const int n = gens.degree();
  if (g.degree() != n)
    throw Error(Errc::SizeMismatch, "element degree does not match the system");
  std::vector<Letter> adjacent(n);
  for (int i = 1; i < n; ++i) {
    const auto idx = gens.find_adjacent(i);
    if (!idx)
      throw Error(Errc::NoAdjacentGenerators,
                  "system lacks the adjacent inversion (" + std::to_string(i) + "," +
                      std::to_string(i + 1) + ")");
    adjacent[i] = *idx;
  }
  // each recorded swap right-multiplies by an adjacent transposition, so the
  // swap sequence evaluates to g
  std::vector<int> a = g.images();
  Word w;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i < n; ++i) {
      if (a[i - 1] > a[i]) {
        std::swap(a[i - 1], a[i]);
        w.push_back(adjacent[i]);
        swapped = true;
      }
    }
  }
  return w;
}

}  // namespace rwdist
