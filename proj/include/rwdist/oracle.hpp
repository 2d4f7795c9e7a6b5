#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rwdist/generator_system.hpp"
#include "rwdist/permutation.hpp"
#include "rwdist/rational.hpp"

namespace rwdist {

// Independent ground truth for distances: exhaustive searches over the
// Cayley graph, sharing no code with the rewriting path beyond perm-core.

inline constexpr int kDefaultOracleDegreeLimit = 8;

// Dense ranking of S_n via the Lehmer code; ranks run over 0..n!-1.
class PermIndexer {
 public:
  explicit PermIndexer(int n, int degree_limit = kDefaultOracleDegreeLimit);

  std::uint64_t size() const { return size_; }
  std::uint64_t rank(const Permutation& p) const;
  Permutation unrank(std::uint64_t r) const;

 private:
  int n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> fact_;
};

// Minimal total weight over all generator sequences evaluating to g;
// uniform-cost search from the identity with ties broken by rank.
Rational dijkstra_distance(const Permutation& g, const GeneratorSystem& gens,
                           int degree_limit = kDefaultOracleDegreeLimit);

// Distances for every group element, indexed by PermIndexer rank.
// Throws NotGenerated if the generators do not reach the whole group.
std::vector<Rational> dijkstra_all(const GeneratorSystem& gens,
                                   int degree_limit = kDefaultOracleDegreeLimit);

// Minimal number of unsigned segment reversals t_{i,j} (all of them, unit
// weight) transforming the identity into g.
int bfs_unit_distance(const Permutation& g,
                      int degree_limit = kDefaultOracleDegreeLimit);
std::vector<std::int32_t> bfs_unit_all(int n,
                                       int degree_limit = kDefaultOracleDegreeLimit);

// Exact adjacent-transposition word length: the number of discordant pairs
// of g's one-line form. Closed form, no search.
long coxeter_distance(const Permutation& g);

// Minimum of distance_fn over the 2n dihedral conjugates of g.
Rational dihedral_min_distance(
    const Permutation& g,
    const std::function<Rational(const Permutation&)>& distance_fn);

}  // namespace rwdist
