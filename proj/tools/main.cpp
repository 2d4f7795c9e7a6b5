// Command-line surface: complete a model into a confluent rewriting system,
// compute distances and distance matrices, build trees, and cross-check the
// rewriting path against the exhaustive-search oracle.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwdist/distance.hpp"
#include "rwdist/errors.hpp"
#include "rwdist/model_io.hpp"
#include "rwdist/oracle.hpp"
#include "rwdist/phylo.hpp"
#include "rwdist/presentation.hpp"
#include "rwdist/rewrite.hpp"

namespace {

using namespace rwdist;

struct ModelOptions {
  std::string model = "linear";  // coxeter | linear | circular | path to JSON
  int n = 0;
  std::string weights = "length";  // length | unit (linear model only)
  std::string precedence = "weight-ij";

  void attach(CLI::App* cmd) {
    cmd->add_option("--model", model,
                    "builtin model (coxeter|linear|circular) or a model JSON file");
    cmd->add_option("--n", n, "number of regions for a builtin model");
    cmd->add_option("--weights", weights, "linear model weights: length|unit");
    cmd->add_option("--precedence", precedence,
                    "linear generator precedence: weight-ij|ij");
  }

  Presentation build() const {
    if (model == "coxeter" || model == "linear" || model == "circular") {
      if (n < 2) throw Error(Errc::BadSize, "builtin models need --n");
      if (model == "coxeter") return coxeter_presentation(n);
      if (model == "circular") return circular_presentation(n);
      const LinearPrecedence prec = precedence == "ij" ? LinearPrecedence::IndexOnly
                                                       : LinearPrecedence::WeightFirst;
      if (precedence != "ij" && precedence != "weight-ij")
        throw Error(Errc::ParseError, "unknown precedence '" + precedence + "'");
      if (weights == "unit")
        return linear_inversions_presentation(
            n, [](int, int) { return Rational(1); }, prec);
      if (weights != "length")
        throw Error(Errc::ParseError, "unknown weights '" + weights + "'");
      return linear_inversions_presentation(n, prec);
    }
    return load_model(model);
  }

  bool is_circular() const { return model == "circular"; }
};

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
}

int cmd_complete(const ModelOptions& mopts, const Limits& limits,
                 const std::string& out_path) {
  const Presentation pres = mopts.build();
  const ReductionOrder ord = ReductionOrder::from(pres.gens());
  const CompletionResult result = knuth_bendix(pres, ord, limits);

  std::cerr << "iterations: " << result.stats.iterations
            << "  pairs: " << result.stats.pairs_examined
            << "  elapsed: " << result.stats.elapsed.count() << " ms\n";
  if (!out_path.empty()) save_rules(result.system, out_path);
  if (result.limit) {
    std::cout << "status: raw (limit " << result.limit->which << " hit)\n";
    std::cout << "rules: " << result.system.rules().size() << "\n";
    return 1;
  }
  std::cout << "status: confluent\n";
  std::cout << "rules: " << result.system.rules().size() << "\n";
  return 0;
}

int cmd_dist(const std::string& rules_path, const std::string& from_text,
             const std::string& to_text, bool circular) {
  const RewritingSystem sys = load_rules(rules_path);
  const int n = sys.gens().degree();
  const Permutation source = parse_permutation(from_text, n);
  const Permutation target = parse_permutation(to_text, n);

  if (circular) {
    const CircularDistanceResult r = circular_distance(source, target, sys);
    std::cout << "distance: " << format_rational(r.distance) << " ("
              << format_decimal(r.distance, 6) << ")\n";
    std::cout << "witness: " << sys.gens().format_word(r.witness) << "\n";
    std::cout << "symmetry: " << to_cycle_string(r.symmetry) << "\n";
  } else {
    const DistanceResult r = weighted_distance(source, target, sys);
    std::cout << "distance: " << format_rational(r.distance) << " ("
              << format_decimal(r.distance, 6) << ")\n";
    std::cout << "witness: " << sys.gens().format_word(r.witness) << "\n";
  }
  return 0;
}

DistanceMatrix oracle_matrix(const std::string& engine, const ModelOptions& mopts,
                             const std::vector<std::string>& labels,
                             const std::vector<Permutation>& genomes, bool circular,
                             int max_degree) {
  const int k = static_cast<int>(genomes.size());
  DistanceMatrix m;
  m.labels = labels;
  m.entries.assign(k, std::vector<Rational>(k, Rational(0)));

  std::function<Rational(const Permutation&)> dist_fn;
  std::vector<Rational> table;
  if (engine == "dijkstra") {
    const Presentation pres = mopts.build();
    table = dijkstra_all(pres.gens(), max_degree);
    const PermIndexer ix(pres.gens().degree(), max_degree);
    dist_fn = [table, ix](const Permutation& g) { return table[ix.rank(g)]; };
  } else if (engine == "bfs-unit") {
    const auto bfs = bfs_unit_all(genomes[0].degree(), max_degree);
    const PermIndexer ix(genomes[0].degree(), max_degree);
    dist_fn = [bfs, ix](const Permutation& g) { return Rational(bfs[ix.rank(g)]); };
  } else if (engine == "coxeter") {
    dist_fn = [](const Permutation& g) { return Rational(coxeter_distance(g)); };
  } else {
    throw Error(Errc::ParseError, "unknown engine '" + engine + "'");
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Permutation g = compose(genomes[j], inverse(genomes[i]));
      const Rational d = circular ? dihedral_min_distance(g, dist_fn) : dist_fn(g);
      m.entries[i][j] = d;
      m.entries[j][i] = d;
    }
  }
  return m;
}

int cmd_matrix(const std::string& engine, const std::string& rules_path,
               const ModelOptions& mopts, const std::string& genomes_path,
               const std::string& out_path, const std::string& tree_path, bool circular,
               int max_degree) {
  DistanceMatrix m;
  if (engine == "rules") {
    const RewritingSystem sys = load_rules(rules_path);
    const auto entries = load_genomes(genomes_path, sys.gens().degree());
    std::vector<std::string> labels;
    std::vector<Permutation> genomes;
    for (const auto& [label, perm] : entries) {
      labels.push_back(label);
      genomes.push_back(perm);
    }
    m = distance_matrix(labels, genomes, sys, circular);
  } else {
    if (mopts.n < 2) throw Error(Errc::BadSize, "oracle engines need --n");
    const auto entries = load_genomes(genomes_path, mopts.n);
    std::vector<std::string> labels;
    std::vector<Permutation> genomes;
    for (const auto& [label, perm] : entries) {
      labels.push_back(label);
      genomes.push_back(perm);
    }
    m = oracle_matrix(engine, mopts, labels, genomes, circular, max_degree);
  }

  const std::string phylip = write_phylip(m);
  if (out_path.empty())
    std::cout << phylip;
  else
    write_text_file(out_path, phylip);

  if (!tree_path.empty()) {
    const PhyloTree tree = neighbor_joining(m);
    write_text_file(tree_path, write_newick(tree) + "\n");
    for (const Bipartition& b : topology_split(tree))
      std::cout << "split: " << format_split(b) << "\n";
  }
  return 0;
}

int cmd_tree(const std::string& matrix_path, const std::string& out_path) {
  std::ifstream in(matrix_path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + matrix_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const DistanceMatrix m = parse_phylip(text);
  const PhyloTree tree = neighbor_joining(m);
  const std::string newick = write_newick(tree) + "\n";
  if (out_path.empty())
    std::cout << newick;
  else
    write_text_file(out_path, newick);
  for (const Bipartition& b : topology_split(tree))
    std::cout << "split: " << format_split(b) << "\n";
  return 0;
}

int cmd_oracle(const ModelOptions& mopts, const std::string& rules_path, bool verify_all,
               std::int64_t sample, std::uint64_t seed, int max_degree,
               const Limits& limits) {
  const Presentation pres = mopts.build();
  RewritingSystem sys = [&] {
    if (!rules_path.empty()) return load_rules(rules_path);
    const CompletionResult result = knuth_bendix(pres, ReductionOrder::from(pres.gens()), limits);
    if (result.limit)
      throw Error(Errc::NotConfluent, "completion hit limit " + result.limit->which);
    return result.system;
  }();

  const int n = sys.gens().degree();
  const PermIndexer ix(n, max_degree);
  const std::vector<Rational> oracle = dijkstra_all(sys.gens(), max_degree);
  const bool circular = mopts.is_circular();
  const Permutation id = Permutation::identity(n);

  auto oracle_dist = [&](const Permutation& g) {
    if (!circular) return oracle[ix.rank(g)];
    return dihedral_min_distance(g, [&](const Permutation& h) { return oracle[ix.rank(h)]; });
  };
  auto rewrite_dist = [&](const Permutation& g) {
    return circular ? circular_distance(id, g, sys).distance
                    : weighted_distance(id, g, sys).distance;
  };

  std::uint64_t checked = 0, matched = 0;
  std::vector<std::string> mismatches;
  auto check = [&](const Permutation& g) {
    ++checked;
    const Rational expect = oracle_dist(g);
    const Rational got = rewrite_dist(g);
    if (expect == got) {
      ++matched;
    } else if (mismatches.size() < 10) {
      mismatches.push_back(to_cycle_string(g) + ": rewrite " + format_rational(got) +
                           " oracle " + format_rational(expect));
    }
  };

  if (verify_all) {
    for (std::uint64_t r = 0; r < ix.size(); ++r) check(ix.unrank(r));
  } else {
    std::mt19937_64 rng(seed);
    for (std::int64_t k = 0; k < sample; ++k) check(ix.unrank(rng() % ix.size()));
  }

  std::cout << "match: " << matched << "/" << checked << "\n";
  for (const std::string& line : mismatches) std::cout << "mismatch: " << line << "\n";
  return matched == checked ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted rearrangement distances via confluent rewriting systems"};
  app.require_subcommand(1);

  ModelOptions mopts;
  Limits limits;
  std::string out_path, rules_path, genomes_path, tree_path, matrix_path;
  std::string from_text, to_text, engine = "rules";
  bool circular = false, verify_all = false;
  std::int64_t sample = 0;
  std::uint64_t seed = 0;
  int max_degree = kDefaultOracleDegreeLimit;

  CLI::App* complete = app.add_subcommand("complete", "run completion on a model");
  mopts.attach(complete);
  complete->add_option("--out", out_path, "rule-set JSON output path");
  complete->add_option("--max-rules", limits.max_rules);
  complete->add_option("--max-word-length", limits.max_word_length);
  complete->add_option("--max-iterations", limits.max_iterations);

  CLI::App* dist = app.add_subcommand("dist", "distance between two genomes");
  dist->add_option("--rules", rules_path, "confluent rule-set JSON")->required();
  dist->add_option("--from", from_text, "source genome")->required();
  dist->add_option("--to", to_text, "target genome")->required();
  dist->add_flag("--circular", circular, "minimize over dihedral symmetries");

  CLI::App* matrix = app.add_subcommand("matrix", "pairwise distance matrix");
  matrix->add_option("--rules", rules_path, "confluent rule-set JSON");
  matrix->add_option("--genomes", genomes_path, "genome list file")->required();
  matrix->add_option("--out", out_path, "PHYLIP output path (stdout if omitted)");
  matrix->add_option("--tree", tree_path, "also write a neighbor-joining Newick tree");
  matrix->add_option("--engine", engine, "rules|dijkstra|bfs-unit|coxeter");
  matrix->add_flag("--circular", circular, "minimize over dihedral symmetries");
  matrix->add_option("--max-degree", max_degree, "search limit for oracle engines");
  mopts.attach(matrix);

  CLI::App* tree = app.add_subcommand("tree", "neighbor-joining tree from a PHYLIP matrix");
  tree->add_option("--matrix", matrix_path, "PHYLIP distance matrix")->required();
  tree->add_option("--out", out_path, "Newick output path (stdout if omitted)");

  CLI::App* oracle = app.add_subcommand("oracle", "compare rewriting distances to search");
  mopts.attach(oracle);
  oracle->add_option("--rules", rules_path, "reuse a completed rule set");
  oracle->add_flag("--verify-all", verify_all, "check every group element");
  oracle->add_option("--sample", sample, "check this many random elements");
  oracle->add_option("--seed", seed, "sample seed");
  oracle->add_option("--max-degree", max_degree, "search limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (complete->parsed()) return cmd_complete(mopts, limits, out_path);
    if (dist->parsed()) return cmd_dist(rules_path, from_text, to_text, circular);
    if (matrix->parsed())
      return cmd_matrix(engine, rules_path, mopts, genomes_path, out_path, tree_path,
                        circular, max_degree);
    if (tree->parsed()) return cmd_tree(matrix_path, out_path);
    if (oracle->parsed()) {
      if (!verify_all && sample <= 0)
        throw Error(Errc::ParseError, "oracle needs --verify-all or --sample K");
      return cmd_oracle(mopts, rules_path, verify_all, sample, seed, max_degree, limits);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
