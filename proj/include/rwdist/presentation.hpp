#pragma once

#include <functional>
#include <vector>

#include "rwdist/generator_system.hpp"
#include "rwdist/rational.hpp"
#include "rwdist/word.hpp"

namespace rwdist {

// An equation lhs = rhs between words. A relator is a Relation with empty rhs.
struct Relation {
  Word lhs;
  Word rhs;
};

// Generators plus defining relations. Every relation is balance-checked at
// construction: both sides must evaluate to the same permutation.
class Presentation {
 public:
  Presentation(GeneratorSystem gens, std::vector<Relation> relations);

  const GeneratorSystem& gens() const { return gens_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  GeneratorSystem gens_;
  std::vector<Relation> relations_;
};

// Generator precedence for the all-inversions model: lightest first (sorted
// by weight, then by segment endpoints) or by segment endpoints alone.
enum class LinearPrecedence { WeightFirst, IndexOnly };

// Symmetric group on n with adjacent transpositions s_i = (i, i+1), unit
// weights, and the classical relations (squares, far commutations, braids).
Presentation coxeter_presentation(int n);

// All segment reversals t_{i,j}, 1 <= i < j <= n, with weight(t_{i,j}) = j-i.
// Relations are the squared generators, one pair-order relator (ab)^m per
// unordered generator pair (m from product_order), and one relation per wide
// reversal expressing it through adjacent transpositions. The last family is
// required: the pair-order relators alone present an infinite reflection
// group rather than S_n, already at n = 3.
Presentation linear_inversions_presentation(
    int n, LinearPrecedence prec = LinearPrecedence::WeightFirst);

// Same model with a caller-supplied weight for each pair (i, j).
Presentation linear_inversions_presentation(
    int n, const std::function<Rational(int, int)>& weight_fn,
    LinearPrecedence prec = LinearPrecedence::WeightFirst);

// Circular model: adjacent transpositions s_1..s_{n-1} plus s_n = (1, n),
// all unit weight; squares, non-adjacent commutations, braids, and the long
// relation expressing s_n through the others.
Presentation circular_presentation(int n);

// Squared relators plus one pair-order relator per unordered pair; used when
// a custom model file supplies no relations.
std::vector<Relation> pair_order_relations(const GeneratorSystem& gens);

}  // namespace rwdist
