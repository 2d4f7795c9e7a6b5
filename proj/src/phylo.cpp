#include "rwdist/phylo.hpp"

#include <algorithm>
#include <map>

#include "rwdist/errors.hpp"

namespace rwdist {

void DistanceMatrix::validate() const {
  const int k = size();
  if (static_cast<int>(entries.size()) != k)
    throw Error(Errc::SizeMismatch, "matrix dimension does not match label count");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(entries[i].size()) != k)
      throw Error(Errc::SizeMismatch, "matrix row has wrong length");
    if (entries[i][i] != Rational(0))
      throw Error(Errc::BadRule, "matrix diagonal is not zero");
    for (int j = 0; j < k; ++j)
      if (entries[i][j] != entries[j][i])
        throw Error(Errc::BadRule, "matrix is not symmetric");
  }
}

std::string write_phylip(const DistanceMatrix& m) {
  m.validate();
  std::vector<std::string> names;
  for (const std::string& label : m.labels) {
    std::string name = label.substr(0, 10);
    name.resize(10, ' ');
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw Error(Errc::DuplicateLabel, "labels collide after truncation to 10 characters");
    names.push_back(name);
  }
  std::string out = std::to_string(m.size()) + "\n";
  for (int i = 0; i < m.size(); ++i) {
    out += names[i];
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ' ';
      out += format_decimal(m.entries[i][j], 6);
    }
    out += '\n';
  }
  return out;
}

DistanceMatrix parse_phylip(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string_view {
    if (pos >= text.size()) throw Error(Errc::ParseError, "unexpected end of matrix file");
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    return line;
  };

  std::string_view head = next_line();
  int count = 0;
  try {
    count = std::stoi(std::string(head));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad taxon count line");
  }
  if (count < 1) throw Error(Errc::ParseError, "bad taxon count");

  DistanceMatrix m;
  for (int i = 0; i < count; ++i) {
    std::string_view line = next_line();
    if (line.size() < 10) throw Error(Errc::ParseError, "matrix row too short");
    std::string label(line.substr(0, 10));
    while (!label.empty() && label.back() == ' ') label.pop_back();
    m.labels.push_back(label);

    std::vector<Rational> row;
    std::size_t i2 = 10;
    while (i2 < line.size()) {
      while (i2 < line.size() && line[i2] == ' ') ++i2;
      if (i2 >= line.size()) break;
      std::size_t start = i2;
      while (i2 < line.size() && line[i2] != ' ') ++i2;
      row.push_back(parse_rational(line.substr(start, i2 - start)));
    }
    if (static_cast<int>(row.size()) != count)
      throw Error(Errc::ParseError, "matrix row has wrong entry count");
    m.entries.push_back(std::move(row));
  }
  m.validate();
  return m;
}

PhyloTree neighbor_joining(const DistanceMatrix& m) {
  m.validate();
  const int k = m.size();
  if (k < 3) throw Error(Errc::TooFew, "neighbor joining needs at least 3 taxa");

  PhyloTree tree;
  for (const std::string& label : m.labels) tree.nodes.push_back({label, {}});

  std::vector<int> active(k);
  for (int i = 0; i < k; ++i) active[i] = i;
  std::vector<std::vector<Rational>> D = m.entries;

  auto clamp = [&](Rational v) {
    if (v < Rational(0)) {
      tree.negative_branch_clamped = true;
      return Rational(0);
    }
    return v;
  };

  auto join = [&](int u, int v, Rational bu, Rational bv) {
    const int c = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({"", {}});
    tree.nodes[c].adj.push_back({u, bu});
    tree.nodes[u].adj.push_back({c, bu});
    tree.nodes[c].adj.push_back({v, bv});
    tree.nodes[v].adj.push_back({c, bv});
    return c;
  };

  while (active.size() > 3) {
    const int a = static_cast<int>(active.size());
    std::vector<Rational> rowsum(a, Rational(0));
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) rowsum[i] += D[active[i]][active[j]];

    // minimize Q; ties go to the lexicographically first index pair
    int bi = -1, bj = -1;
    Rational bestq(0);
    for (int i = 0; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        const Rational q =
            Rational(a - 2) * D[active[i]][active[j]] - rowsum[i] - rowsum[j];
        if (bi < 0 || q < bestq) {
          bestq = q;
          bi = i;
          bj = j;
        }
      }
    }

    const int u = active[bi], v = active[bj];
    const Rational duv = D[u][v];
    const Rational bu =
        clamp(duv / Rational(2) + (rowsum[bi] - rowsum[bj]) / Rational(2 * (a - 2)));
    const Rational bv = clamp(duv - (duv / Rational(2) +
                                     (rowsum[bi] - rowsum[bj]) / Rational(2 * (a - 2))));
    const int c = join(u, v, bu, bv);

    // distances from the new node to every remaining active node
    std::vector<Rational> newrow(tree.nodes.size(), Rational(0));
    for (int t : active) {
      if (t == u || t == v) continue;
      newrow[t] = (D[u][t] + D[v][t] - duv) / Rational(2);
    }
    for (auto& row : D) row.push_back(Rational(0));
    D.push_back(std::vector<Rational>(tree.nodes.size(), Rational(0)));
    for (int t : active) {
      if (t == u || t == v) continue;
      D[c][t] = newrow[t];
      D[t][c] = newrow[t];
    }

    active.erase(active.begin() + bj);
    active.erase(active.begin() + bi);
    active.push_back(c);
    std::sort(active.begin(), active.end());
  }

  // join the last three around one internal node
  const int x = active[0], y = active[1], z = active[2];
  const Rational bx = clamp((D[x][y] + D[x][z] - D[y][z]) / Rational(2));
  const Rational by = clamp((D[x][y] + D[y][z] - D[x][z]) / Rational(2));
  const Rational bz = clamp((D[x][z] + D[y][z] - D[x][y]) / Rational(2));
  const int c = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({"", {}});
  for (auto [node, len] : {std::pair{x, bx}, {y, by}, {z, bz}}) {
    tree.nodes[c].adj.push_back({node, len});
    tree.nodes[node].adj.push_back({c, len});
  }
  tree.root = c;
  return tree;
}

namespace {

// smallest leaf label in the subtree seen from `node` arriving from `from`
std::string min_leaf_label(const PhyloTree& t, int node, int from) {
  if (!t.nodes[node].label.empty()) return t.nodes[node].label;
  std::string best;
  for (const auto& [nb, len] : t.nodes[node].adj) {
    if (nb == from) continue;
    std::string v = min_leaf_label(t, nb, node);
    if (best.empty() || v < best) best = std::move(v);
  }
  return best;
}

std::string newick_subtree(const PhyloTree& t, int node, int from) {
  if (!t.nodes[node].label.empty()) return t.nodes[node].label;
  std::vector<std::pair<std::string, std::string>> children;  // (sort key, text)
  for (const auto& [nb, len] : t.nodes[node].adj) {
    if (nb == from) continue;
    children.push_back({min_leaf_label(t, nb, node),
                        newick_subtree(t, nb, node) + ":" + format_decimal(len, 6)});
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ',';
    out += children[i].second;
  }
  out += ')';
  return out;
}

void collect_leaves(const PhyloTree& t, int node, int from, std::vector<std::string>& out) {
  if (!t.nodes[node].label.empty()) {
    out.push_back(t.nodes[node].label);
    return;
  }
  for (const auto& [nb, len] : t.nodes[node].adj)
    if (nb != from) collect_leaves(t, nb, node, out);
}

}  // namespace

std::string write_newick(const PhyloTree& t) {
  if (t.root < 0) throw Error(Errc::BadRule, "tree has no display root");
  return newick_subtree(t, t.root, -1) + ";";
}

std::set<Bipartition> topology_split(const PhyloTree& t) {
  std::set<Bipartition> out;
  std::vector<std::string> all;
  collect_leaves(t, t.root, -1, all);
  std::sort(all.begin(), all.end());

  for (int u = 0; u < static_cast<int>(t.nodes.size()); ++u) {
    if (!t.nodes[u].label.empty()) continue;
    for (const auto& [v, len] : t.nodes[u].adj) {
      if (v < u || !t.nodes[v].label.empty()) continue;  // internal edges once
      std::vector<std::string> side;
      collect_leaves(t, u, v, side);
      std::sort(side.begin(), side.end());
      std::vector<std::string> other;
      std::set_difference(all.begin(), all.end(), side.begin(), side.end(),
                          std::back_inserter(other));
      if (side.empty() || other.empty()) continue;
      Bipartition b;
      if (side.front() == all.front())
        b = Bipartition{std::move(side), std::move(other)};
      else
        b = Bipartition{std::move(other), std::move(side)};
      out.insert(std::move(b));
    }
  }
  return out;
}

std::string format_split(const Bipartition& b) {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += v[i];
    }
    return out;
  };
  return join(b.side_a) + "|" + join(b.side_b);
}

}  // namespace rwdist
