#pragma once

#include <string>
#include <vector>

#include "rwdist/permutation.hpp"
#include "rwdist/phylo.hpp"
#include "rwdist/rational.hpp"
#include "rwdist/rewrite.hpp"

namespace rwdist {

// A word over `model` evaluating to g, built by bubble-sort factorization
// into adjacent transpositions; its length is g's inversion count. Throws
// NoAdjacentGenerators when the model lacks some (i, i+1).
Word initial_word(const Permutation& g, const GeneratorSystem& model);

struct DistanceResult {
  Rational distance;
  Word witness;  // minimal-weight word for the difference element
};

// Weighted rearrangement distance between two genomes: reduces an initial
// word for the difference element target*source^-1 to its normal form, whose
// weight is the minimal weighted length. Requires a Confluent system.
DistanceResult weighted_distance(const Permutation& source,
                                 const Permutation& target,
                                 const RewritingSystem& sys);

struct CircularDistanceResult {
  Rational distance;
  Word witness;
  Permutation symmetry;  // the position symmetry achieving the minimum
};

// Minimum of weighted_distance over the 2n dihedral conjugates d g d^-1 of
// the difference element (conjugation re-expresses the rearrangement in a
// rotated or reflected coordinate frame).
CircularDistanceResult circular_distance(const Permutation& source,
                                         const Permutation& target,
                                         const RewritingSystem& sys);

// Pairwise distances between labeled genomes; entries computed once per
// unordered pair and mirrored.
DistanceMatrix distance_matrix(const std::vector<std::string>& labels,
                               const std::vector<Permutation>& genomes,
                               const RewritingSystem& sys, bool circular);

}  // namespace rwdist
