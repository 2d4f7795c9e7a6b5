#pragma once

#include <cstdint>
#include <vector>

namespace rwdist {

// A word is a finite sequence of generator indices into a GeneratorSystem.
// The empty word denotes the identity element.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

}  // namespace rwdist
