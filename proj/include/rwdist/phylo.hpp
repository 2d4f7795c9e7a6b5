#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rwdist/rational.hpp"

namespace rwdist {

// Symmetric matrix of pairwise distances with a zero diagonal.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> entries;

  int size() const { return static_cast<int>(labels.size()); }
  void validate() const;  // symmetry, zero diagonal, label/dimension match
};

// Unrooted tree with labeled leaves and rational edge lengths. `root` is the
// node used as the display root when serializing; it does not affect the
// topology. Internal nodes have empty labels.
struct PhyloTree {
  struct Node {
    std::string label;
    std::vector<std::pair<int, Rational>> adj;  // (neighbor, edge length)
  };
  std::vector<Node> nodes;
  int root = -1;
  bool negative_branch_clamped = false;
};

// PHYLIP square distance format: taxon count line, then one row per taxon
// with the label padded/truncated to 10 characters and entries rendered with
// 6 decimals. Throws DuplicateLabel if truncation collides.
std::string write_phylip(const DistanceMatrix& m);
DistanceMatrix parse_phylip(std::string_view text);

// Standard neighbor joining; exact on additive matrices. Q-ties are broken
// by the lowest index pair; negative branch lengths are clamped to zero and
// flagged on the tree. Requires at least 3 taxa.
PhyloTree neighbor_joining(const DistanceMatrix& m);

// Newick with 6-decimal branch lengths. Children are ordered by their
// smallest descendant label, so output is deterministic.
std::string write_newick(const PhyloTree& t);

// A nontrivial leaf bipartition; the side holding the overall smallest label
// comes first and both sides are sorted.
struct Bipartition {
  std::vector<std::string> side_a;
  std::vector<std::string> side_b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// The bipartitions induced by internal edges (edges between two internal
// nodes). A quartet tree has exactly one; a 3-leaf star has none.
std::set<Bipartition> topology_split(const PhyloTree& t);

// "A,C|B,D"
std::string format_split(const Bipartition& b);

}  // namespace rwdist
