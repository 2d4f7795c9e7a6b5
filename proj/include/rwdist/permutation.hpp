#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rwdist {

// A bijection on positions {1..n}. All interfaces are 1-based; storage is
// 0-based. Values are immutable after construction.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  // `images_1based[i]` is the image of position i+1; validated as a bijection.
  static Permutation from_images(const std::vector<int>& images_1based);

  // Swap of positions a and b, fixing everything else.
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int image_of(int pos) const { return img_[pos - 1] + 1; }

  bool is_identity() const;
  bool is_involution() const;

  // One-line images, 1-based.
  std::vector<int> images() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int32_t> img_;
};

// "a then b": the result maps x to b(a(x)).
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

// d g d^-1 under the composition convention above.
Permutation conjugate(const Permutation& d, const Permutation& g);

// Reversal of the segment of positions [i..j]: maps i+k to j-k.
Permutation inversion_generator(int i, int j, int n);

// Least m >= 1 with (ab)^m = identity.
int product_order(const Permutation& a, const Permutation& b);

// Cycle notation "(1,4)(3,7,6)" (fixed points omitted, "()" = identity) or
// one-line notation "4 2 7 1 5 3 6".
Permutation parse_permutation(std::string_view text, int n);

// Canonical cycle notation: cycles sorted by minimum element, each cycle
// starting at its minimum; identity prints "()".
std::string to_cycle_string(const Permutation& p);

// The 2n symmetries of the position circle: n rotations (identity first),
// then n reflections. Deterministic order.
std::vector<Permutation> dihedral_symmetries(int n);

}  // namespace rwdist
