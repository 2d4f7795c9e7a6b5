#include "rwdist/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rwdist/errors.hpp"

namespace rwdist {

namespace {

using Json = nlohmann::ordered_json;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << text;
}

Rational weight_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw Error(Errc::ParseError, "weight must be an integer or a string");
}

Json weight_to_json(const Rational& w) {
  if (w.denominator() == 1) return Json(w.numerator());
  return Json(format_rational(w));
}

Word word_from_labels(const Json& arr, const GeneratorSystem& gens) {
  if (!arr.is_array()) throw Error(Errc::ParseError, "word must be an array of labels");
  Word w;
  for (const Json& item : arr) w.push_back(gens.require_index(item.get<std::string>()));
  return w;
}

Json word_to_labels(const Word& w, const GeneratorSystem& gens) {
  Json arr = Json::array();
  for (Letter a : w) arr.push_back(gens[a].label);
  return arr;
}

GeneratorSystem system_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Generator> gens;
  for (const Json& jg : j.at("generators")) {
    gens.push_back({jg.at("label").get<std::string>(),
                    parse_permutation(jg.at("cycles").get<std::string>(), n),
                    weight_from_json(jg.at("weight"))});
  }
  return GeneratorSystem(n, std::move(gens));
}

Json system_to_json(const GeneratorSystem& gens) {
  Json j;
  j["n"] = gens.degree();
  Json arr = Json::array();
  for (const Generator& g : gens.generators()) {
    Json jg;
    jg["label"] = g.label;
    jg["cycles"] = to_cycle_string(g.perm);
    jg["weight"] = weight_to_json(g.weight);
    arr.push_back(std::move(jg));
  }
  j["generators"] = std::move(arr);
  return j;
}

}  // namespace

Presentation model_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad model JSON: ") + e.what());
  }
  try {
    GeneratorSystem gens = system_from_json(j);
    std::vector<Relation> rels;
    if (j.contains("relations")) {
      for (const Json& jr : j.at("relations"))
        rels.push_back({word_from_labels(jr.at("lhs"), gens),
                        word_from_labels(jr.at("rhs"), gens)});
    } else {
      rels = pair_order_relations(gens);
    }
    return Presentation(std::move(gens), std::move(rels));
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad model JSON: ") + e.what());
  }
}

Presentation load_model(const std::filesystem::path& path) {
  return model_from_json_text(slurp(path));
}

std::string rules_to_json_text(const RewritingSystem& sys) {
  const GeneratorSystem& gens = sys.gens();
  Json j;
  j["model"] = system_to_json(gens);

  Json order;
  Json weights = Json::array();
  for (const Rational& w : sys.order().weights) weights.push_back(weight_to_json(w));
  order["weights"] = std::move(weights);
  std::vector<Letter> by_rank(gens.size());
  for (Letter g = 0; g < gens.size(); ++g) by_rank[sys.order().rank[g]] = g;
  Json prec = Json::array();
  for (Letter g : by_rank) prec.push_back(gens[g].label);
  order["precedence"] = std::move(prec);
  j["order"] = std::move(order);

  j["status"] = sys.status() == SystemStatus::Confluent ? "confluent" : "raw";

  // canonical rule order: ascending lhs under the reduction order
  std::vector<const Rule*> sorted;
  for (const Rule& r : sys.rules()) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [&](const Rule* a, const Rule* b) {
    return compare_words(a->lhs, b->lhs, sys.order()) == std::strong_ordering::less;
  });
  Json rules = Json::array();
  for (const Rule* r : sorted) {
    Json jr;
    jr["lhs"] = word_to_labels(r->lhs, gens);
    jr["rhs"] = word_to_labels(r->rhs, gens);
    rules.push_back(std::move(jr));
  }
  j["rules"] = std::move(rules);
  return j.dump(2) + "\n";
}

void save_rules(const RewritingSystem& sys, const std::filesystem::path& path) {
  spit(path, rules_to_json_text(sys));
}

RewritingSystem rules_from_json_text(std::string_view text, bool check_confluence) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad rule-set JSON: ") + e.what());
  }
  try {
    GeneratorSystem gens = system_from_json(j.at("model"));

    ReductionOrder ord;
    for (const Json& jw : j.at("order").at("weights")) ord.weights.push_back(weight_from_json(jw));
    if (static_cast<int>(ord.weights.size()) != gens.size())
      throw Error(Errc::ParseError, "order weight count does not match generators");
    ord.rank.assign(gens.size(), -1);
    std::int32_t pos = 0;
    for (const Json& jl : j.at("order").at("precedence"))
      ord.rank[gens.require_index(jl.get<std::string>())] = pos++;
    if (pos != gens.size() ||
        std::find(ord.rank.begin(), ord.rank.end(), -1) != ord.rank.end())
      throw Error(Errc::ParseError, "precedence must list every generator once");

    const std::string status_text = j.at("status").get<std::string>();
    if (status_text != "confluent" && status_text != "raw")
      throw Error(Errc::ParseError, "status must be 'confluent' or 'raw'");
    const SystemStatus status =
        status_text == "confluent" ? SystemStatus::Confluent : SystemStatus::Raw;

    std::vector<Rule> rules;
    for (const Json& jr : j.at("rules")) {
      rules.push_back(Rule{word_from_labels(jr.at("lhs"), gens),
                           word_from_labels(jr.at("rhs"), gens), -1});
    }
    // the constructor re-verifies lhs > rhs for every rule
    RewritingSystem sys(std::move(gens), std::move(ord), std::move(rules), status);
    if (check_confluence && status == SystemStatus::Confluent) {
      if (!is_confluent(sys).confluent)
        throw Error(Errc::NotConfluent, "rule set marked confluent has unresolved pairs");
    }
    return sys;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad rule-set JSON: ") + e.what());
  }
}

RewritingSystem load_rules(const std::filesystem::path& path, bool check_confluence) {
  return rules_from_json_text(slurp(path), check_confluence);
}

std::vector<std::pair<std::string, Permutation>> genomes_from_text(std::string_view text,
                                                                   int n) {
  std::vector<std::pair<std::string, Permutation>> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lineno) + ": expected label<TAB>permutation");
    std::string label(line.substr(0, tab));
    if (label.empty())
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": empty label");
    out.emplace_back(std::move(label), parse_permutation(line.substr(tab + 1), n));
  }
  return out;
}

std::vector<std::pair<std::string, Permutation>> load_genomes(
    const std::filesystem::path& path, int n) {
  return genomes_from_text(slurp(path), n);
}

bool is_usage_error(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError:
    case Errc::OutOfRange:
    case Errc::Duplicate:
    case Errc::BadSize:
    case Errc::BadIndices:
    case Errc::TooFew:
    case Errc::DuplicateLabel:
    case Errc::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace rwdist
