#include "rwdist/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>

#include "rwdist/errors.hpp"

namespace rwdist {

namespace detail {

RuleTrie::RuleTrie(int alphabet) : alpha_(alphabet) { new_node(); }

std::int32_t RuleTrie::new_node() {
  next_.insert(next_.end(), alpha_, -1);
  terminal_.push_back(-1);
  return static_cast<std::int32_t>(terminal_.size()) - 1;
}

void RuleTrie::insert(const Word& lhs, std::int32_t id) {
  std::int32_t node = 0;
  for (Letter a : lhs) {
    const std::size_t idx = static_cast<std::size_t>(node) * alpha_ + a;
    if (next_[idx] < 0) {
      const std::int32_t child = new_node();  // may reallocate next_
      next_[idx] = child;
    }
    node = next_[idx];
  }
  terminal_[node] = id;
  max_depth_ = std::max(max_depth_, static_cast<int>(lhs.size()));
}

void RuleTrie::erase(const Word& lhs) {
  std::int32_t node = 0;
  for (Letter a : lhs) {
    node = next_[static_cast<std::size_t>(node) * alpha_ + a];
    if (node < 0) return;
  }
  terminal_[node] = -1;
}

std::optional<RuleTrie::Match> RuleTrie::match_at(std::span<const Letter> w,
                                                  std::size_t pos) const {
  std::int32_t node = 0;
  std::optional<Match> best;
  for (std::size_t k = pos; k < w.size(); ++k) {
    node = next_[static_cast<std::size_t>(node) * alpha_ + w[k]];
    if (node < 0) break;
    const std::int32_t t = terminal_[node];
    if (t >= 0 && (!best || t < best->rule))
      best = Match{t, static_cast<std::int32_t>(k - pos + 1)};
  }
  return best;
}

namespace {

// Leftmost-match reduction loop shared by the public reduce and the
// completion engine. rhs_of(id) must stay valid across calls.
template <class RhsOf>
void reduce_in_place(Word& w, const RuleTrie& trie, RhsOf&& rhs_of) {
  const std::size_t back = trie.max_depth() > 0 ? trie.max_depth() - 1 : 0;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const auto m = trie.match_at(w, pos);
    if (!m) {
      ++pos;
      continue;
    }
    const Word& rhs = rhs_of(m->rule);
    const std::size_t len = m->length;
    if (rhs.size() == len) {
      std::copy(rhs.begin(), rhs.end(), w.begin() + pos);
    } else {
      w.erase(w.begin() + pos, w.begin() + pos + len);
      w.insert(w.begin() + pos, rhs.begin(), rhs.end());
    }
    pos = pos > back ? pos - back : 0;
  }
}

bool contains_factor(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

}  // namespace
}  // namespace detail

RewritingSystem::RewritingSystem(GeneratorSystem gens, ReductionOrder order,
                                 std::vector<Rule> rules, SystemStatus status)
    : gens_(std::move(gens)),
      order_(std::move(order)),
      rules_(std::move(rules)),
      status_(status),
      index_(gens_.size()) {
  std::int32_t next_id = 0;
  for (Rule& r : rules_) next_id = std::max(next_id, r.id + 1);
  for (std::size_t slot = 0; slot < rules_.size(); ++slot) {
    Rule& r = rules_[slot];
    if (r.lhs.empty()) throw Error(Errc::BadRule, "rule with empty lhs");
    if (compare_words(r.lhs, r.rhs, order_) != std::strong_ordering::greater)
      throw Error(Errc::BadRule, "rule lhs does not exceed rhs: " +
                                     gens_.format_word(r.lhs) + " -> " +
                                     gens_.format_word(r.rhs));
    if (r.id < 0) r.id = next_id++;
    if (r.id >= static_cast<std::int32_t>(slot_of_id_.size()))
      slot_of_id_.resize(r.id + 1, -1);
    if (slot_of_id_[r.id] != -1) throw Error(Errc::BadRule, "duplicate rule id");
    slot_of_id_[r.id] = static_cast<std::int32_t>(slot);
    index_.insert(r.lhs, r.id);
  }
}

Rule orient(const Relation& rel, const ReductionOrder& ord) {
  const auto cmp = compare_words(rel.lhs, rel.rhs, ord);
  if (cmp == std::strong_ordering::equal)
    throw Error(Errc::EqualSides, "relation sides are the same word");
  if (cmp == std::strong_ordering::greater) return Rule{rel.lhs, rel.rhs, -1};
  return Rule{rel.rhs, rel.lhs, -1};
}

Word reduce(Word w, const RewritingSystem& sys) {
  detail::reduce_in_place(w, sys.index(),
                          [&](std::int32_t id) -> const Word& { return sys.rule_by_id(id).rhs; });
  return w;
}

std::vector<Word> reduce_trace(const Word& w, const RewritingSystem& sys) {
  std::vector<Word> out{w};
  Word cur = w;
  const auto& trie = sys.index();
  const std::size_t back = trie.max_depth() > 0 ? trie.max_depth() - 1 : 0;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const auto m = trie.match_at(cur, pos);
    if (!m) {
      ++pos;
      continue;
    }
    const Word& rhs = sys.rule_by_id(m->rule).rhs;
    cur.erase(cur.begin() + pos, cur.begin() + pos + m->length);
    cur.insert(cur.begin() + pos, rhs.begin(), rhs.end());
    out.push_back(cur);
    pos = pos > back ? pos - back : 0;
  }
  return out;
}

std::vector<std::pair<Word, Word>> critical_pairs(const Rule& r1, const Rule& r2) {
  std::vector<std::pair<Word, Word>> out;
  const Word& l1 = r1.lhs;
  const Word& l2 = r2.lhs;

  // proper overlaps: suffix of l1 = prefix of l2, shorter than both
  const std::size_t max_a = std::min(l1.size(), l2.size());
  for (std::size_t a = 1; a < max_a; ++a) {
    if (!std::equal(l1.end() - a, l1.end(), l2.begin())) continue;
    Word left = r1.rhs;                               // v1 u2
    left.insert(left.end(), l2.begin() + a, l2.end());
    Word right(l1.begin(), l1.end() - a);             // u1 v2
    right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
    out.emplace_back(std::move(left), std::move(right));
  }

  // containment: l2 a factor of l1; the full-word occurrence counts only for
  // distinct rules sharing a lhs (possible in raw systems)
  if (l2.size() < l1.size() || (&r1 != &r2 && l1 == l2)) {
    for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
      if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
      Word right(l1.begin(), l1.begin() + pos);
      right.insert(right.end(), r2.rhs.begin(), r2.rhs.end());
      right.insert(right.end(), l1.begin() + pos + l2.size(), l1.end());
      out.emplace_back(r1.rhs, std::move(right));
    }
  }
  return out;
}

std::optional<Rule> resolve(const std::pair<Word, Word>& pair,
                            const RewritingSystem& sys) {
  Word x = reduce(pair.first, sys);
  Word y = reduce(pair.second, sys);
  if (x == y) return std::nullopt;
  return orient(Relation{std::move(x), std::move(y)}, sys.order());
}

namespace {

struct KbRule {
  Word lhs;
  Word rhs;
  Rational lhs_weight;
  bool alive = true;
  bool processed = false;
};

class KbEngine {
 public:
  KbEngine(const Presentation& pres, const ReductionOrder& ord, const Limits& limits)
      : gens_(pres.gens()), ord_(ord), limits_(limits), trie_(gens_.size()) {}

  CompletionResult run(const Presentation& pres) {
    const auto t0 = std::chrono::steady_clock::now();

    // Seed with the involution rules, then the presentation's relations.
    for (Letter g = 0; g < gens_.size(); ++g) pending_.push_back({Word{g, g}, Word{}});
    for (const Relation& rel : pres.relations()) pending_.push_back({rel.lhs, rel.rhs});

    while (!limit_) {
      if (limits_.time_budget && (stats_.iterations & 0x3ff) == 0) {
        const auto elapsed = std::chrono::steady_clock::now() - t0;
        if (elapsed > *limits_.time_budget) {
          hit("time_budget");
          break;
        }
      }
      if (!pending_.empty()) {
        auto [u, v] = std::move(pending_.front());
        pending_.pop_front();
        process_equation(std::move(u), std::move(v));
        continue;
      }
      const std::int32_t rid = select_unprocessed();
      if (rid < 0) break;  // nothing pending, nothing unprocessed: confluent
      superpose(rid);
    }

    CompletionStats stats = stats_;
    stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);

    std::vector<Rule> out;
    out.reserve(live_);
    for (std::size_t id = 0; id < rules_.size(); ++id) {
      if (rules_[id].alive)
        out.push_back(Rule{rules_[id].lhs, rules_[id].rhs, static_cast<std::int32_t>(id)});
    }
    const SystemStatus status = limit_ ? SystemStatus::Raw : SystemStatus::Confluent;
    RewritingSystem sys(gens_, ord_, std::move(out), status);
    return CompletionResult{std::move(sys), stats, limit_};
  }

 private:
  void hit(const std::string& which) {
    if (!limit_) limit_ = LimitHit{which, live_, stats_.iterations};
  }

  Word reduce_word(Word w) const {
    detail::reduce_in_place(
        w, trie_, [this](std::int32_t id) -> const Word& { return rules_[id].rhs; });
    return w;
  }

  void process_equation(Word u, Word v) {
    ++stats_.iterations;
    if (stats_.iterations > limits_.max_iterations) {
      hit("max_iterations");
      return;
    }
    u = reduce_word(std::move(u));
    v = reduce_word(std::move(v));
    if (u == v) return;

    const auto cmp = compare_words(u, v, ord_);
    Word lhs = cmp == std::strong_ordering::greater ? std::move(u) : std::move(v);
    Word rhs = cmp == std::strong_ordering::greater ? std::move(v) : std::move(u);
    if (static_cast<int>(lhs.size()) > limits_.max_word_length) {
      hit("max_word_length");
      return;
    }
    if (live_ + 1 > limits_.max_rules) {
      hit("max_rules");
      return;
    }

    const auto id = static_cast<std::int32_t>(rules_.size());
    Rational w = word_weight(lhs, ord_);
    rules_.push_back(KbRule{std::move(lhs), std::move(rhs), std::move(w)});
    trie_.insert(rules_[id].lhs, id);
    ++live_;
    ++stats_.rules_created;
    selection_.push({rules_[id].lhs_weight, id});

    // Eager interreduction against every earlier rule.
    const Word& pattern = rules_[id].lhs;
    for (std::int32_t j = 0; j < id; ++j) {
      KbRule& rj = rules_[j];
      if (!rj.alive) continue;
      if (detail::contains_factor(rj.lhs, pattern)) {
        rj.alive = false;
        --live_;
        trie_.erase(rj.lhs);
        pending_.emplace_back(std::move(rj.lhs), std::move(rj.rhs));
        rj.lhs.clear();
        rj.rhs.clear();
      } else if (detail::contains_factor(rj.rhs, pattern)) {
        rj.rhs = reduce_word(std::move(rj.rhs));
      }
    }
  }

  std::int32_t select_unprocessed() {
    while (!selection_.empty()) {
      const auto [w, id] = selection_.top();
      selection_.pop();
      if (rules_[id].alive && !rules_[id].processed) return id;
    }
    return -1;
  }

  // Superpose the selected rule with every active rule (itself included) and
  // queue the resulting critical pairs. No rule mutates during the harvest.
  void superpose(std::int32_t rid) {
    rules_[rid].processed = true;
    active_.push_back(rid);
    for (std::int32_t other : active_) {
      if (!rules_[other].alive || !rules_[rid].alive) continue;
      ++stats_.pairs_examined;
      harvest(rid, other);
      if (other != rid) harvest(other, rid);
    }
  }

  // Critical pairs with `a` as the left rule and `b` as the right rule.
  void harvest(std::int32_t a, std::int32_t b) {
    const Word& l1 = rules_[a].lhs;
    const Word& l2 = rules_[b].lhs;
    const Word& r1 = rules_[a].rhs;
    const Word& r2 = rules_[b].rhs;

    const std::size_t max_ov = std::min(l1.size(), l2.size());
    for (std::size_t ov = 1; ov < max_ov; ++ov) {
      if (!std::equal(l1.end() - ov, l1.end(), l2.begin())) continue;
      Word left = r1;
      left.insert(left.end(), l2.begin() + ov, l2.end());
      Word right(l1.begin(), l1.end() - ov);
      right.insert(right.end(), r2.begin(), r2.end());
      pending_.emplace_back(std::move(left), std::move(right));
    }
    // Factor containments cannot occur between live rules here: insertion
    // removes any rule whose lhs contains the new lhs, and a new lhs is
    // irreducible, so it contains no live lhs either.
  }

  const GeneratorSystem& gens_;
  const ReductionOrder& ord_;
  Limits limits_;

  std::vector<KbRule> rules_;
  detail::RuleTrie trie_;
  std::int64_t live_ = 0;
  std::deque<std::pair<Word, Word>> pending_;
  std::vector<std::int32_t> active_;

  using Sel = std::pair<Rational, std::int32_t>;
  std::priority_queue<Sel, std::vector<Sel>, std::greater<Sel>> selection_;

  CompletionStats stats_;
  std::optional<LimitHit> limit_;
};

}  // namespace

CompletionResult knuth_bendix(const Presentation& pres, const ReductionOrder& ord,
                              const Limits& limits) {
  if (static_cast<int>(ord.weights.size()) != pres.gens().size() ||
      static_cast<int>(ord.rank.size()) != pres.gens().size())
    throw Error(Errc::SizeMismatch, "order does not match generator count");
  KbEngine engine(pres, ord, limits);
  return engine.run(pres);
}

RewritingSystem interreduce(const RewritingSystem& sys) {
  struct Entry {
    Word lhs, rhs;
    std::int32_t id;
    bool alive = true;
  };
  std::vector<Entry> entries;
  std::int32_t next_id = 0;
  for (const Rule& r : sys.rules()) {
    entries.push_back({r.lhs, r.rhs, r.id});
    next_id = std::max(next_id, r.id + 1);
  }
  const ReductionOrder& ord = sys.order();

  // Reduce a word with every live rule except `skip`; leftmost, lowest id.
  auto reduce_excluding = [&](Word w, std::int32_t skip) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        const Entry* best = nullptr;
        for (const Entry& e : entries) {
          if (!e.alive || e.id == skip || e.lhs.size() > w.size() - pos) continue;
          if (!std::equal(e.lhs.begin(), e.lhs.end(), w.begin() + pos)) continue;
          if (!best || e.id < best->id) best = &e;
        }
        if (best) {
          Word out(w.begin(), w.begin() + pos);
          out.insert(out.end(), best->rhs.begin(), best->rhs.end());
          out.insert(out.end(), w.begin() + pos + best->lhs.size(), w.end());
          w = std::move(out);
          changed = true;
        }
      }
    }
    return w;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!entries[k].alive) continue;
      Word reduced_lhs = reduce_excluding(entries[k].lhs, entries[k].id);
      if (reduced_lhs != entries[k].lhs) {
        // another rule rewrites this lhs: drop the rule, keep its consequence
        entries[k].alive = false;
        Word u = reduced_lhs;
        Word v = reduce_excluding(entries[k].rhs, entries[k].id);
        if (u != v) {
          Rule r = orient(Relation{std::move(u), std::move(v)}, ord);
          entries.push_back({std::move(r.lhs), std::move(r.rhs), next_id++});
        }
        changed = true;
        continue;
      }
      Word reduced_rhs = reduce_excluding(entries[k].rhs, -1);
      if (reduced_rhs != entries[k].rhs) {
        entries[k].rhs = std::move(reduced_rhs);
        changed = true;
      }
    }
  }

  std::vector<Rule> out;
  for (Entry& e : entries)
    if (e.alive) out.push_back(Rule{std::move(e.lhs), std::move(e.rhs), e.id});
  return RewritingSystem(sys.gens(), sys.order(), std::move(out), sys.status());
}

ConfluenceReport is_confluent(const RewritingSystem& sys) {
  ConfluenceReport report;
  for (const Rule& r1 : sys.rules()) {
    for (const Rule& r2 : sys.rules()) {
      for (const auto& cp : critical_pairs(r1, r2)) {
        if (reduce(cp.first, sys) != reduce(cp.second, sys))
          report.unresolved.push_back(cp);
      }
    }
  }
  report.confluent = report.unresolved.empty();
  return report;
}

}  // namespace rwdist
