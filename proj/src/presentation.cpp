#include "rwdist/presentation.hpp"

#include <algorithm>
#include <tuple>

#include "rwdist/errors.hpp"

namespace rwdist {

Presentation::Presentation(GeneratorSystem gens, std::vector<Relation> relations)
    : gens_(std::move(gens)), relations_(std::move(relations)) {
  for (const Relation& rel : relations_) {
    if (gens_.evaluate(rel.lhs) != gens_.evaluate(rel.rhs))
      throw Error(Errc::BadRule, "unbalanced relation: " + gens_.format_word(rel.lhs) +
                                     " = " + gens_.format_word(rel.rhs));
  }
}

Presentation coxeter_presentation(int n) {
  if (n < 2) throw Error(Errc::BadSize, "coxeter model needs n >= 2");
  std::vector<Generator> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back({"s" + std::to_string(i), Permutation::transposition(n, i, i + 1), Rational(1)});
  GeneratorSystem sys(n, std::move(gens));

  std::vector<Relation> rels;
  for (Letter i = 0; i < sys.size(); ++i) rels.push_back({{i, i}, {}});
  for (Letter i = 0; i < sys.size(); ++i)
    for (Letter j = i + 2; j < sys.size(); ++j)
      rels.push_back({{i, j}, {j, i}});
  for (Letter i = 0; i + 1 < sys.size(); ++i)
    rels.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
  return Presentation(std::move(sys), std::move(rels));
}

std::vector<Relation> pair_order_relations(const GeneratorSystem& gens) {
  std::vector<Relation> rels;
  for (Letter i = 0; i < gens.size(); ++i) rels.push_back({{i, i}, {}});
  for (Letter a = 0; a < gens.size(); ++a) {
    for (Letter b = a + 1; b < gens.size(); ++b) {
      const int m = product_order(gens[a].perm, gens[b].perm);
      Word relator;
      relator.reserve(2 * m);
      for (int k = 0; k < m; ++k) {
        relator.push_back(a);
        relator.push_back(b);
      }
      rels.push_back({std::move(relator), {}});
    }
  }
  return rels;
}

Presentation linear_inversions_presentation(int n, LinearPrecedence prec) {
  return linear_inversions_presentation(
      n, [](int i, int j) { return Rational(j - i); }, prec);
}

Presentation linear_inversions_presentation(
    int n, const std::function<Rational(int, int)>& weight_fn, LinearPrecedence prec) {
  if (n < 2) throw Error(Errc::BadSize, "linear model needs n >= 2");
  struct Entry {
    int i, j;
    Rational w;
  };
  std::vector<Entry> entries;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Rational w = weight_fn(i, j);
      if (w <= Rational(0)) throw Error(Errc::NonpositiveWeight, "weight must be positive");
      entries.push_back({i, j, w});
    }
  if (prec == LinearPrecedence::WeightFirst) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.w, a.i, a.j) < std::tie(b.w, b.i, b.j);
    });
  }
  std::vector<Generator> gens;
  gens.reserve(entries.size());
  for (const Entry& e : entries) {
    gens.push_back({"t" + std::to_string(e.i) + "_" + std::to_string(e.j),
                    inversion_generator(e.i, e.j, n), e.w});
  }
  GeneratorSystem sys(n, std::move(gens));
  std::vector<Relation> rels = pair_order_relations(sys);
  // The pair-order relators alone present a larger group than the symmetric
  // group (already at n = 3 they give an infinite triangle reflection group),
  // which would make normal-form weights overestimate distances. Pin every
  // wide reversal to its adjacent-transposition factorization; these are true
  // relations and force the presented group down to S_n.
  for (Letter g = 0; g < sys.size(); ++g) {
    Word rhs = adjacent_word(sys[g].perm, sys);
    if (rhs.size() > 1) rels.push_back({{g}, std::move(rhs)});
  }
  return Presentation(std::move(sys), std::move(rels));
}

Presentation circular_presentation(int n) {
  if (n < 3) throw Error(Errc::BadSize, "circular model needs n >= 3");
  std::vector<Generator> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back({"s" + std::to_string(i), Permutation::transposition(n, i, i + 1), Rational(1)});
  gens.push_back({"s" + std::to_string(n), Permutation::transposition(n, 1, n), Rational(1)});
  GeneratorSystem sys(n, std::move(gens));

  std::vector<Relation> rels;
  for (Letter i = 0; i < sys.size(); ++i) rels.push_back({{i, i}, {}});
  // commutations for pairs non-adjacent on the circle
  for (Letter i = 0; i < sys.size(); ++i) {
    for (Letter j = i + 1; j < sys.size(); ++j) {
      const int diff = (j - i) % n;
      if (diff != 1 && diff != n - 1) rels.push_back({{i, j}, {j, i}});
    }
  }
  for (Letter i = 0; i + 1 < sys.size(); ++i)
    rels.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
  // s_n = s_{n-1} ... s_2 s_1 s_2 ... s_{n-1}
  Word long_rhs;
  for (int i = n - 1; i >= 1; --i) long_rhs.push_back(i - 1);
  for (int i = 2; i <= n - 1; ++i) long_rhs.push_back(i - 1);
  rels.push_back({{static_cast<Letter>(n - 1)}, std::move(long_rhs)});
  return Presentation(std::move(sys), std::move(rels));
}

}  // namespace rwdist
