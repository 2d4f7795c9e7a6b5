#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rwdist/permutation.hpp"
#include "rwdist/rational.hpp"
#include "rwdist/word.hpp"

namespace rwdist {

struct Generator {
  std::string label;
  Permutation perm;
  Rational weight;
};

// An ordered list of weighted generators. The list order doubles as the
// precedence: a later index is greater. Generators must be non-identity
// involutions with positive weights and unique labels.
class GeneratorSystem {
 public:
  GeneratorSystem(int n, std::vector<Generator> generators);

  int degree() const { return n_; }
  int size() const { return static_cast<int>(gens_.size()); }

  const Generator& operator[](Letter i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }

  std::optional<Letter> find(const std::string& label) const;
  Letter require_index(const std::string& label) const;  // throws ParseError

  // Index of the generator equal to the transposition (i, i+1), if any.
  std::optional<Letter> find_adjacent(int i) const;

  // Left fold of the word under the "a then b" composition convention.
  Permutation evaluate(const Word& w) const;

  // Labels joined with single spaces; empty word gives "".
  std::string format_word(const Word& w) const;

 private:
  int n_ = 0;
  std::vector<Generator> gens_;
  std::unordered_map<std::string, Letter> by_label_;
};

// A word over the system's adjacent transpositions (i, i+1) evaluating to g,
// found by bubble-sorting g's one-line form; its length is g's inversion
// count. Throws NoAdjacentGenerators when some (i, i+1) is missing.
Word adjacent_word(const Permutation& g, const GeneratorSystem& gens);

}  // namespace rwdist
