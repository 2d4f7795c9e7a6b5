#include <doctest.h>

#include <random>
#include <set>

#include "rwdist/errors.hpp"
#include "rwdist/oracle.hpp"
#include "rwdist/presentation.hpp"
#include "test_support.hpp"

using namespace rwdist;
using rwdist::testing::random_perm;

TEST_CASE("permutation ranking is a bijection") {
  for (int n = 1; n <= 6; ++n) {
    const PermIndexer ix(n);
    std::set<std::uint64_t> seen;
    for (std::uint64_t r = 0; r < ix.size(); ++r) {
      const Permutation p = ix.unrank(r);
      CHECK(ix.rank(p) == r);
      seen.insert(r);
    }
    CHECK(seen.size() == ix.size());
  }
  CHECK(PermIndexer(5).size() == 120);
  CHECK_THROWS_AS(PermIndexer(9), Error);
  CHECK_NOTHROW(PermIndexer(9, 10));
}

TEST_CASE("uniform-cost search distances") {
  const Presentation lin3 = linear_inversions_presentation(3);
  const GeneratorSystem& gens = lin3.gens();

  CHECK(dijkstra_distance(Permutation::identity(3), gens) == Rational(0));
  CHECK(dijkstra_distance(parse_permutation("(1,2)", 3), gens) == Rational(1));
  CHECK(dijkstra_distance(parse_permutation("(1,3)", 3), gens) == Rational(2));

  // full table, frozen against an independent computation
  const PermIndexer ix(3);
  const auto dist = dijkstra_all(gens);
  CHECK(dist[ix.rank(parse_permutation("(2,3)", 3))] == Rational(1));
  CHECK(dist[ix.rank(parse_permutation("(1,2,3)", 3))] == Rational(2));
  CHECK(dist[ix.rank(parse_permutation("(1,3,2)", 3))] == Rational(2));
}

TEST_CASE("adjacent generators cost their own weight") {
  const Presentation lin5 = linear_inversions_presentation(5);
  const auto dist = dijkstra_all(lin5.gens());
  const PermIndexer ix(5);
  for (int i = 1; i < 5; ++i)
    CHECK(dist[ix.rank(Permutation::transposition(5, i, i + 1))] == Rational(1));
}

TEST_CASE("unit-weight reversal search") {
  CHECK(bfs_unit_distance(Permutation::identity(4)) == 0);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(bfs_unit_distance(inversion_generator(i, j, 4)) == 1);

  // never more steps than the adjacent-only factorization
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation p = random_perm(5, rng);
    CHECK(bfs_unit_distance(p) <= coxeter_distance(p));
  }
}

TEST_CASE("adjacent-inversion distance closed form") {
  CHECK(coxeter_distance(Permutation::identity(4)) == 0);
  CHECK(coxeter_distance(Permutation::transposition(4, 2, 3)) == 1);
  CHECK(coxeter_distance(parse_permutation("4 3 2 1", 4)) == 6);

  // matches exhaustive search over the adjacent-only model
  for (int n = 3; n <= 5; ++n) {
    const Presentation cox = coxeter_presentation(n);
    const auto dist = dijkstra_all(cox.gens());
    const PermIndexer ix(n);
    for (std::uint64_t r = 0; r < ix.size(); ++r)
      CHECK(Rational(coxeter_distance(ix.unrank(r))) == dist[r]);
  }
}

TEST_CASE("dihedral minimization") {
  const Presentation circ4 = circular_presentation(4);
  const auto dist = dijkstra_all(circ4.gens());
  const PermIndexer ix(4);
  auto lookup = [&](const Permutation& g) { return dist[ix.rank(g)]; };

  CHECK(dihedral_min_distance(Permutation::identity(4), lookup) == Rational(0));
  for (Letter i = 0; i < circ4.gens().size(); ++i)
    CHECK(dihedral_min_distance(circ4.gens()[i].perm, lookup) == Rational(1));

  // invariant under replacing the element by any dihedral conjugate
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation g = random_perm(4, rng);
    const Rational base = dihedral_min_distance(g, lookup);
    for (const Permutation& d : dihedral_symmetries(4))
      CHECK(dihedral_min_distance(conjugate(d, g), lookup) == base);
  }

  // the circular generators are closed under conjugation, so the minimum
  // agrees with the plain distance; the pure rotation stays positive
  const Permutation rot = parse_permutation("(1,2,3,4)", 4);
  CHECK(dihedral_min_distance(rot, lookup) == lookup(rot));
  CHECK(dihedral_min_distance(rot, lookup) > Rational(0));
}

TEST_CASE("search degree limits") {
  const Presentation lin3 = linear_inversions_presentation(3);
  CHECK_NOTHROW(dijkstra_all(lin3.gens(), 3));
  CHECK_THROWS_AS(dijkstra_all(lin3.gens(), 2), Error);
  CHECK_THROWS_AS(bfs_unit_all(9), Error);
}

TEST_CASE("a non-generating set is reported") {
  // a single transposition does not generate S4
  GeneratorSystem gens(4, {{"a", Permutation::transposition(4, 1, 2), Rational(1)}});
  CHECK_THROWS_AS(dijkstra_all(gens), Error);
}
