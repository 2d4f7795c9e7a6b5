#include "rwdist/distance.hpp"

#include <stdexcept>

#include "rwdist/errors.hpp"

namespace rwdist {

Word initial_word(const Permutation& g, const GeneratorSystem& model) {
  return adjacent_word(g, model);
}

namespace {

void require_confluent(const RewritingSystem& sys) {
  if (sys.status() != SystemStatus::Confluent)
    throw Error(Errc::NotConfluent, "distance requires a confluent rewriting system");
}

}  // namespace

DistanceResult weighted_distance(const Permutation& source, const Permutation& target,
                                 const RewritingSystem& sys) {
  require_confluent(sys);
  if (source.degree() != target.degree() || source.degree() != sys.gens().degree())
    throw Error(Errc::SizeMismatch, "genome sizes do not match the model");

  const Permutation g = compose(target, inverse(source));
  Word witness = reduce(initial_word(g, sys.gens()), sys);
  // guard against convention drift: applying the witness to the source must
  // recover the target
  if (compose(sys.gens().evaluate(witness), source) != target)
    throw std::logic_error("witness does not transform source into target");
  Rational d = word_weight(witness, sys.order());
  return DistanceResult{std::move(d), std::move(witness)};
}

CircularDistanceResult circular_distance(const Permutation& source,
                                         const Permutation& target,
                                         const RewritingSystem& sys) {
  require_confluent(sys);
  if (source.degree() != target.degree() || source.degree() != sys.gens().degree())
    throw Error(Errc::SizeMismatch, "genome sizes do not match the model");

  const Permutation g = compose(target, inverse(source));
  CircularDistanceResult best;
  bool have = false;
  for (const Permutation& d : dihedral_symmetries(sys.gens().degree())) {
    const Permutation adjusted = conjugate(d, g);
    Word witness = reduce(initial_word(adjusted, sys.gens()), sys);
    Rational dist = word_weight(witness, sys.order());
    if (!have || dist < best.distance) {
      best = CircularDistanceResult{std::move(dist), std::move(witness), d};
      have = true;
    }
  }
  return best;
}

DistanceMatrix distance_matrix(const std::vector<std::string>& labels,
                               const std::vector<Permutation>& genomes,
                               const RewritingSystem& sys, bool circular) {
  if (labels.size() != genomes.size())
    throw Error(Errc::SizeMismatch, "label count does not match genome count");
  if (genomes.size() < 2) throw Error(Errc::TooFew, "need at least 2 genomes");

  const int k = static_cast<int>(genomes.size());
  DistanceMatrix m;
  m.labels = labels;
  m.entries.assign(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Rational d = circular ? circular_distance(genomes[i], genomes[j], sys).distance
                            : weighted_distance(genomes[i], genomes[j], sys).distance;
      m.entries[i][j] = d;
      m.entries[j][i] = d;
    }
  }
  return m;
}

}  // namespace rwdist
