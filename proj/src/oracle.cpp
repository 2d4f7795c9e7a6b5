#include "rwdist/oracle.hpp"

#include <algorithm>
#include <queue>

#include "rwdist/errors.hpp"

namespace rwdist {

PermIndexer::PermIndexer(int n, int degree_limit) : n_(n) {
  if (n < 1) throw Error(Errc::BadSize, "degree must be positive");
  if (n > degree_limit)
    throw Error(Errc::TooLarge, "degree " + std::to_string(n) +
                                    " exceeds the search limit " + std::to_string(degree_limit));
  fact_.resize(n + 1);
  fact_[0] = 1;
  for (int i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * i;
  size_ = fact_[n];
}

std::uint64_t PermIndexer::rank(const Permutation& p) const {
  std::uint64_t r = 0;
  std::vector<int> items(n_);
  for (int i = 0; i < n_; ++i) items[i] = i + 1;
  for (int i = 1; i <= n_; ++i) {
    const int v = p.image_of(i);
    const auto it = std::find(items.begin(), items.end(), v);
    r += static_cast<std::uint64_t>(it - items.begin()) * fact_[n_ - i];
    items.erase(it);
  }
  return r;
}

Permutation PermIndexer::unrank(std::uint64_t r) const {
  std::vector<int> items(n_);
  for (int i = 0; i < n_; ++i) items[i] = i + 1;
  std::vector<int> img(n_);
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t f = fact_[n_ - 1 - i];
    const std::size_t k = r / f;
    r %= f;
    img[i] = items[k];
    items.erase(items.begin() + k);
  }
  return Permutation::from_images(img);
}

std::vector<Rational> dijkstra_all(const GeneratorSystem& gens, int degree_limit) {
  const int n = gens.degree();
  const PermIndexer ix(n, degree_limit);
  const std::uint64_t size = ix.size();

  std::vector<Rational> dist(size, Rational(0));
  std::vector<char> reached(size, 0);

  // ties broken by rank for a deterministic traversal
  using Entry = std::pair<Rational, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;

  const std::uint64_t start = ix.rank(Permutation::identity(n));
  dist[start] = Rational(0);
  reached[start] = 1;
  pq.push({Rational(0), start});

  while (!pq.empty()) {
    const auto [d, r] = pq.top();
    pq.pop();
    if (d > dist[r]) continue;
    const Permutation p = ix.unrank(r);
    for (const Generator& g : gens.generators()) {
      const std::uint64_t rq = ix.rank(compose(p, g.perm));
      const Rational nd = d + g.weight;
      if (!reached[rq] || nd < dist[rq]) {
        reached[rq] = 1;
        dist[rq] = nd;
        pq.push({nd, rq});
      }
    }
  }
  for (std::uint64_t r = 0; r < size; ++r) {
    if (!reached[r])
      throw Error(Errc::NotGenerated, "generators do not reach the whole group");
  }
  return dist;
}

Rational dijkstra_distance(const Permutation& g, const GeneratorSystem& gens,
                           int degree_limit) {
  if (g.degree() != gens.degree())
    throw Error(Errc::SizeMismatch, "element degree does not match the generators");
  const PermIndexer ix(gens.degree(), degree_limit);
  return dijkstra_all(gens, degree_limit)[ix.rank(g)];
}

std::vector<std::int32_t> bfs_unit_all(int n, int degree_limit) {
  const PermIndexer ix(n, degree_limit);
  std::vector<Permutation> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(inversion_generator(i, j, n));

  std::vector<std::int32_t> dist(ix.size(), -1);
  std::queue<std::uint64_t> q;
  const std::uint64_t start = ix.rank(Permutation::identity(n));
  dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    const std::uint64_t r = q.front();
    q.pop();
    const Permutation p = ix.unrank(r);
    for (const Permutation& g : gens) {
      const std::uint64_t rq = ix.rank(compose(p, g));
      if (dist[rq] < 0) {
        dist[rq] = dist[r] + 1;
        q.push(rq);
      }
    }
  }
  return dist;
}

int bfs_unit_distance(const Permutation& g, int degree_limit) {
  const PermIndexer ix(g.degree(), degree_limit);
  return bfs_unit_all(g.degree(), degree_limit)[ix.rank(g)];
}

long coxeter_distance(const Permutation& g) {
  long count = 0;
  const int n = g.degree();
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      if (g.image_of(x) > g.image_of(y)) ++count;
  return count;
}

Rational dihedral_min_distance(
    const Permutation& g,
    const std::function<Rational(const Permutation&)>& distance_fn) {
  bool have = false;
  Rational best(0);
  for (const Permutation& d : dihedral_symmetries(g.degree())) {
    const Rational v = distance_fn(conjugate(d, g));
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

}  // namespace rwdist
