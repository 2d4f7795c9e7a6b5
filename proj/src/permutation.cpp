#include "rwdist/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "rwdist/errors.hpp"

namespace rwdist {

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(Errc::BadSize, "degree must be positive");
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) p.img_[i] = i;
  return p;
}

Permutation Permutation::from_images(const std::vector<int>& images_1based) {
  const int n = static_cast<int>(images_1based.size());
  if (n < 1) throw Error(Errc::BadSize, "degree must be positive");
  Permutation p;
  p.img_.resize(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = images_1based[i];
    if (v < 1 || v > n)
      throw Error(Errc::OutOfRange, "image " + std::to_string(v) + " out of 1.." + std::to_string(n));
    if (seen[v - 1])
      throw Error(Errc::Duplicate, "image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw Error(Errc::BadIndices, "bad transposition indices");
  Permutation p = identity(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[img_[i]] != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree());
  for (int i = 0; i < degree(); ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(Errc::SizeMismatch, "composing permutations of different degree");
  std::vector<int> img(a.degree());
  for (int x = 1; x <= a.degree(); ++x) img[x - 1] = b.image_of(a.image_of(x));
  return Permutation::from_images(img);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[p.image_of(x) - 1] = x;
  return Permutation::from_images(img);
}

Permutation conjugate(const Permutation& d, const Permutation& g) {
  return compose(compose(d, g), inverse(d));
}

Permutation inversion_generator(int i, int j, int n) {
  if (i < 1 || i >= j || j > n)
    throw Error(Errc::BadIndices, "need 1 <= i < j <= n");
  std::vector<int> img(n);
  for (int x = 1; x <= n; ++x) img[x - 1] = x;
  for (int k = 0; k <= j - i; ++k) img[i + k - 1] = j - k;
  return Permutation::from_images(img);
}

int product_order(const Permutation& a, const Permutation& b) {
  Permutation ab = compose(a, b);
  Permutation acc = ab;
  int m = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, ab);
    ++m;
  }
  return m;
}

namespace {

// "(1,4)(3,7,6)" -> product of the cycles, applied left to right.
Permutation parse_cycles(std::string_view text, int n) {
  Permutation result = Permutation::identity(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw Error(Errc::ParseError, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw Error(Errc::ParseError, "expected number in cycle");
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (v < 1 || v > n)
        throw Error(Errc::OutOfRange, "symbol " + std::to_string(v) + " out of 1.." + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw Error(Errc::Duplicate, "symbol " + std::to_string(v) + " repeated in cycle");
      cycle.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw Error(Errc::ParseError, "unterminated cycle");
    ++i;  // ')'
    skip_ws();
    any = true;
    if (cycle.size() >= 2) {
      std::vector<int> img(n);
      for (int x = 1; x <= n; ++x) img[x - 1] = x;
      for (std::size_t k = 0; k < cycle.size(); ++k)
        img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      result = compose(result, Permutation::from_images(img));
    }
  }
  if (!any) throw Error(Errc::ParseError, "empty permutation text");
  return result;
}

Permutation parse_one_line(std::string_view text, int n) {
  std::vector<int> img;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw Error(Errc::ParseError, "expected number in one-line notation");
    img.push_back(std::stoi(std::string(text.substr(start, i - start))));
  }
  if (static_cast<int>(img.size()) != n)
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " images, got " +
                                      std::to_string(img.size()));
  for (int v : img)
    if (v < 1 || v > n)
      throw Error(Errc::OutOfRange, "symbol " + std::to_string(v) + " out of 1.." + std::to_string(n));
  return Permutation::from_images(img);  // reports duplicates
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  if (n < 1) throw Error(Errc::BadSize, "degree must be positive");
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size()) throw Error(Errc::ParseError, "empty permutation text");
  return text[i] == '(' ? parse_cycles(text, n) : parse_one_line(text, n);
}

std::string to_cycle_string(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(n, false);
  std::string out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1] || p.image_of(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x);
      seen[x - 1] = true;
      x = p.image_of(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> dihedral_symmetries(int n) {
  if (n < 3) throw Error(Errc::BadSize, "dihedral symmetries need n >= 3");
  std::vector<Permutation> out;
  out.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = (x - 1 + k) % n + 1;
    out.push_back(Permutation::from_images(img));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = ((k - (x - 1)) % n + n) % n + 1;
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

}  // namespace rwdist
