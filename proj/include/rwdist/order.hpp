#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rwdist/generator_system.hpp"
#include "rwdist/rational.hpp"
#include "rwdist/word.hpp"

namespace rwdist {

// The weighted lexicographic reduction order on words: compare total weight
// first; on equal weight compare precedence at the first differing letter.
// When the weights are equal and one word is a proper prefix of the other
// (unreachable with strictly positive weights, but kept well-defined), the
// longer word is greater.
struct ReductionOrder {
  std::vector<Rational> weights;    // per generator index
  std::vector<std::int32_t> rank;   // rank[g] = precedence position of g

  static ReductionOrder from(const GeneratorSystem& gens);
};

Rational word_weight(const Word& w, const ReductionOrder& ord);

std::strong_ordering compare_words(const Word& u, const Word& v,
                                   const ReductionOrder& ord);

}  // namespace rwdist
