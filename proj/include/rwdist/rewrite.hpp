#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rwdist/order.hpp"
#include "rwdist/presentation.hpp"
#include "rwdist/word.hpp"

namespace rwdist {

// An oriented rewrite rule. Invariant: lhs > rhs under the system's order
// and lhs is nonempty.
struct Rule {
  Word lhs;
  Word rhs;
  std::int32_t id = -1;
};

enum class SystemStatus { Raw, Confluent };

namespace detail {

// Multi-pattern index over rule left-hand sides: a trie keyed on successive
// letters. match_at returns the lowest-id rule whose lhs starts at a given
// position, which is exactly the tie-break reduce() promises.
class RuleTrie {
 public:
  explicit RuleTrie(int alphabet);

  void insert(const Word& lhs, std::int32_t id);
  void erase(const Word& lhs);

  struct Match {
    std::int32_t rule;
    std::int32_t length;
  };
  std::optional<Match> match_at(std::span<const Letter> w, std::size_t pos) const;

  int max_depth() const { return max_depth_; }

 private:
  std::int32_t new_node();

  int alpha_;
  int max_depth_ = 0;
  std::vector<std::int32_t> next_;      // node * alpha_ + letter -> node
  std::vector<std::int32_t> terminal_;  // rule id or -1
};

}  // namespace detail

// An indexed collection of oriented rules over a generator system. Immutable
// once constructed; reduce() is reentrant and safe to call from several
// threads on the same system.
class RewritingSystem {
 public:
  // Validates every rule (nonempty lhs, lhs > rhs); assigns ids in list order
  // to rules that carry id -1.
  RewritingSystem(GeneratorSystem gens, ReductionOrder order,
                  std::vector<Rule> rules, SystemStatus status);

  const GeneratorSystem& gens() const { return gens_; }
  const ReductionOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  SystemStatus status() const { return status_; }

  const Rule& rule_by_id(std::int32_t id) const { return rules_[slot_of_id_[id]]; }
  const detail::RuleTrie& index() const { return index_; }

 private:
  GeneratorSystem gens_;
  ReductionOrder order_;
  std::vector<Rule> rules_;
  std::vector<std::int32_t> slot_of_id_;
  SystemStatus status_;
  detail::RuleTrie index_;
};

// Orients a relation: the greater side under `ord` becomes the lhs.
// Throws EqualSides when the two sides are the same word.
Rule orient(const Relation& rel, const ReductionOrder& ord);

// Repeatedly rewrites the leftmost match (lowest rule id among rules matching
// there) until no left-hand side occurs. For a Confluent system the result is
// the unique normal form of w's group element.
Word reduce(Word w, const RewritingSystem& sys);

// Like reduce, but records the word after every step (first entry = input).
std::vector<Word> reduce_trace(const Word& w, const RewritingSystem& sys);

// Critical pairs of r1 against r2: one pair per proper overlap (a nonempty
// proper suffix of r1.lhs equal to a proper prefix of r2.lhs) and one per
// occurrence of r2.lhs as a factor of r1.lhs. Call with both argument orders
// to get all pairs of the two rules.
std::vector<std::pair<Word, Word>> critical_pairs(const Rule& r1, const Rule& r2);

// Reduces both components; nullopt when they meet (pair resolved), otherwise
// the oriented rule their normal forms give rise to.
std::optional<Rule> resolve(const std::pair<Word, Word>& pair,
                            const RewritingSystem& sys);

struct Limits {
  std::int64_t max_rules = 100000;
  int max_word_length = 64;
  std::int64_t max_iterations = 10'000'000;
  std::optional<std::chrono::milliseconds> time_budget;  // wall clock
};

struct LimitHit {
  std::string which;
  std::int64_t live_rules = 0;
  std::int64_t iterations = 0;
};

struct CompletionStats {
  std::int64_t iterations = 0;
  std::int64_t rules_created = 0;
  std::int64_t pairs_examined = 0;
  std::chrono::milliseconds elapsed{0};
};

struct CompletionResult {
  RewritingSystem system;
  CompletionStats stats;
  std::optional<LimitHit> limit;  // set => system.status() == Raw
};

// Knuth-Bendix completion with eager interreduction. Rules are kept reduced
// throughout: inserting a rule removes every rule whose lhs it reduces (the
// removed equation is re-derived) and renormalizes affected right-hand
// sides. Unprocessed rules are superposed lightest-lhs-first, so runs are
// deterministic; the final reduced confluent system is unique for the order
// regardless of strategy.
CompletionResult knuth_bendix(const Presentation& pres, const ReductionOrder& ord,
                              const Limits& limits = {});

// Fixpoint interreduction: removes rules whose lhs another rule reduces
// (re-deriving their consequences) and fully reduces every rhs. Leaves the
// generated congruence unchanged.
RewritingSystem interreduce(const RewritingSystem& sys);

struct ConfluenceReport {
  bool confluent = false;
  std::vector<std::pair<Word, Word>> unresolved;
};

// Checks every critical pair among all ordered rule pairs.
ConfluenceReport is_confluent(const RewritingSystem& sys);

}  // namespace rwdist
