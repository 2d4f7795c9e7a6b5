#include "rwdist/order.hpp"

namespace rwdist {

ReductionOrder ReductionOrder::from(const GeneratorSystem& gens) {
  ReductionOrder ord;
  ord.weights.reserve(gens.size());
  ord.rank.resize(gens.size());
  for (Letter i = 0; i < gens.size(); ++i) {
    ord.weights.push_back(gens[i].weight);
    ord.rank[i] = i;  // list order is the precedence
  }
  return ord;
}

Rational word_weight(const Word& w, const ReductionOrder& ord) {
  Rational sum(0);
  for (Letter a : w) sum += ord.weights[a];
  return sum;
}

std::strong_ordering compare_words(const Word& u, const Word& v,
                                   const ReductionOrder& ord) {
  const Rational wu = word_weight(u, ord);
  const Rational wv = word_weight(v, ord);
  if (wu != wv) return wu < wv ? std::strong_ordering::less : std::strong_ordering::greater;
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] != v[i]) {
      return ord.rank[u[i]] < ord.rank[v[i]] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
  }
  // Equal weight with one word a proper prefix of the other: longer is
  // greater. Unreachable with positive weights, but keeps the order total.
  return u.size() <=> v.size();
}

}  // namespace rwdist
