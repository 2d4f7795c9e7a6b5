#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rwdist/presentation.hpp"
#include "rwdist/rewrite.hpp"

namespace rwdist {

// Model file (JSON):
//   {"n": int,
//    "generators": [{"label": str, "cycles": str, "weight": num|str}, ...],
//    "relations": [{"lhs": [labels], "rhs": [labels]}, ...]}   // optional
// Weights may be integers, "p/q" strings or decimal strings. When relations
// are omitted, squared and pair-order relators are generated automatically.
Presentation load_model(const std::filesystem::path& path);
Presentation model_from_json_text(std::string_view text);

// Rule-set file (JSON): the model echo, the reduction order (weights aligned
// with the generator list, precedence as labels in ascending order), the
// status, and the rules as label words sorted by the order on their lhs.
void save_rules(const RewritingSystem& sys, const std::filesystem::path& path);
std::string rules_to_json_text(const RewritingSystem& sys);

// Loading verifies lhs > rhs for every rule; with check_confluence it also
// re-checks every critical pair (expensive).
RewritingSystem load_rules(const std::filesystem::path& path,
                           bool check_confluence = false);
RewritingSystem rules_from_json_text(std::string_view text,
                                     bool check_confluence = false);

// Genome list: one "label<TAB>permutation" per line, permutation in either
// notation accepted by parse_permutation. Blank lines and '#' comments are
// skipped.
std::vector<std::pair<std::string, Permutation>> load_genomes(
    const std::filesystem::path& path, int n);
std::vector<std::pair<std::string, Permutation>> genomes_from_text(
    std::string_view text, int n);

}  // namespace rwdist
