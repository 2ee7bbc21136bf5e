#include "mcor/miner.hpp"

#include <algorithm>
#include <map>

namespace mcor {

namespace {

bool pattern_less(const std::pair<Pattern, long long>& lhs,
                  const std::pair<Pattern, long long>& rhs) {
  return lhs.first.items < rhs.first.items;
}

std::vector<Rule> rules_from_maximal(
    const std::vector<std::pair<Pattern, long long>>& maximal,
    const Pattern& p, long long sup_p) {
  std::vector<Rule> rules;
  for (const auto& [pattern, support] : maximal) {
    if (pattern.size() <= p.size()) continue;
    Rule rule;
    rule.antecedent = p;
    rule.consequent.assign(pattern.items.begin() + p.size(), pattern.items.end());
    rule.support = support;
    rule.confidence = static_cast<double>(support) / static_cast<double>(sup_p);
    rules.push_back(std::move(rule));
  }
  std::sort(rules.begin(), rules.end(),
            [](const Rule& lhs, const Rule& rhs) { return lhs.consequent < rhs.consequent; });
  return rules;
}

}  // namespace

MiningReport mine_mcor(const SequenceDatabase& db, const Pattern& p,
                       double mincf, const MinerOptions& options) {
  validate_mincf(mincf);
  if (p.size() < 1) throw ParamError("prefix pattern must be nonempty");
  p.gap.validate();

  MiningReport report;
  IndexedDatabase indexed = index_database(db);

  // Preparation stage: sup_p and minsup are always computed; the filtering
  // toggle only controls whether zero-support sequences are dropped.
  PrepResult prep = sdb_filt(indexed, p, mincf);
  report.sup_p = prep.sup_p;
  report.minsup = prep.minsup;
  report.counters.filtered_sequences = options.filtering ? prep.filtered_sequences : 0;
  report.counters.kept_sequences =
      options.filtering ? prep.kept_sequences : static_cast<long long>(db.size());
  if (prep.sup_p == 0) {
    report.zero_support = true;
    return report;
  }
  const IndexedDatabase& working = options.filtering ? prep.shrunk : indexed;

  report.counters.all_items = static_cast<long long>(working.alphabet.size());
  FrequentItems f1 = frequent_items(working, prep.minsup, options.jobs);
  report.counters.frequent_items = static_cast<long long>(f1.items.size());
  FrequentPairs f2;
  if (options.strategy == Strategy::BET) {
    f2 = frequent_pairs(working, f1, p.gap, prep.minsup, options.jobs);
    report.counters.bet_pairs = static_cast<long long>(f2.pairs.size());
  }

  std::vector<std::pair<Pattern, long long>> stack{{p, prep.sup_p}};
  std::vector<std::pair<Pattern, long long>> maximal;
  std::map<std::vector<Item>, long long> frequent_seen;  // screening=false path
  if (!options.screening) frequent_seen[p.items] = prep.sup_p;

  while (!stack.empty()) {
    auto [q, q_support] = std::move(stack.back());
    stack.pop_back();

    bool is_maximal = true;
    if (options.max_len == 0 || static_cast<int>(q.size()) < options.max_len) {
      const std::vector<Item>& source =
          options.strategy == Strategy::AET ? working.alphabet : f1.items;
      for (const auto& y : source) {
        if (options.strategy == Strategy::BET && !f2.contains(q.last(), y)) {
          ++report.counters.candidates_pruned_by_bet;
          continue;
        }
        ++report.counters.candidates_not_pruned;
        Pattern r = q.extended(y);
        long long support = db_support(working, r, options.jobs);
        ++report.counters.support_calls;
        if (static_cast<double>(support) >= prep.minsup) {
          is_maximal = false;
          ++report.cor_count;
          if (!options.screening) frequent_seen[r.items] = support;
          stack.emplace_back(std::move(r), support);
        }
      }
    }
    if (options.screening && is_maximal) maximal.emplace_back(std::move(q), q_support);
  }

  if (!options.screening) {
    // Post-filter: a frequent pattern is maximal iff none of its single-item
    // extensions is frequent.
    for (const auto& [items, support] : frequent_seen) {
      bool has_frequent_extension = false;
      for (const auto& y : working.alphabet) {
        std::vector<Item> extended = items;
        extended.push_back(y);
        if (frequent_seen.count(extended)) {
          has_frequent_extension = true;
          break;
        }
      }
      if (!has_frequent_extension)
        maximal.emplace_back(Pattern{items, p.gap}, support);
    }
  }

  std::sort(maximal.begin(), maximal.end(), pattern_less);
  report.antecedent_is_maximal =
      maximal.size() == 1 && maximal.front().first.items == p.items;
  report.rules = rules_from_maximal(maximal, p, prep.sup_p);
  report.maximal_patterns = std::move(maximal);
  return report;
}

std::vector<std::pair<Pattern, long long>> mine_cop(
    const SequenceDatabase& db, const Pattern& p, double minsup,
    const MinerOptions& options) {
  if (p.size() < 1) throw ParamError("prefix pattern must be nonempty");
  p.gap.validate();

  IndexedDatabase indexed = index_database(db);
  PrepResult prep = sdb_filt(indexed, p, 1.0);
  const IndexedDatabase& working = options.filtering ? prep.shrunk : indexed;

  std::vector<std::pair<Pattern, long long>> result;
  if (static_cast<double>(prep.sup_p) < minsup) return result;

  FrequentItems f1 = frequent_items(working, minsup, options.jobs);
  FrequentPairs f2;
  if (options.strategy == Strategy::BET)
    f2 = frequent_pairs(working, f1, p.gap, minsup, options.jobs);

  std::vector<std::pair<Pattern, long long>> stack{{p, prep.sup_p}};
  while (!stack.empty()) {
    auto [q, q_support] = std::move(stack.back());
    stack.pop_back();
    result.emplace_back(q, q_support);
    if (options.max_len != 0 && static_cast<int>(q.size()) >= options.max_len)
      continue;
    const std::vector<Item>& source =
        options.strategy == Strategy::AET ? working.alphabet : f1.items;
    for (const auto& y : source) {
      if (options.strategy == Strategy::BET && !f2.contains(q.last(), y)) continue;
      Pattern r = q.extended(y);
      long long support = db_support(working, r, options.jobs);
      if (static_cast<double>(support) >= minsup) stack.emplace_back(std::move(r), support);
    }
  }
  std::sort(result.begin(), result.end(), pattern_less);
  return result;
}

long long oracle_db_support(const SequenceDatabase& db, const Pattern& p) {
  long long total = 0;
  for (const auto& seq : db.sequences)
    total += oracle_max_nonoverlapping(oracle_all_occurrences(seq, p));
  return total;
}

OracleMiningResult oracle_mine_mcor(const SequenceDatabase& db, const Pattern& p,
                                    double mincf, int max_len) {
  validate_mincf(mincf);
  if (max_len < static_cast<int>(p.size()))
    throw ParamError("max_len must be at least the prefix length");

  OracleMiningResult result;
  result.sup_p = oracle_db_support(db, p);
  if (result.sup_p == 0) return result;
  const double minsup = static_cast<double>(result.sup_p) * mincf;

  // Anti-monotonicity justifies extending frequent patterns only.
  std::vector<std::pair<Pattern, long long>> frequent{{p, result.sup_p}};
  std::vector<std::pair<Pattern, long long>> frontier = frequent;
  while (!frontier.empty()) {
    std::vector<std::pair<Pattern, long long>> next;
    for (const auto& [q, q_support] : frontier) {
      if (static_cast<int>(q.size()) >= max_len) {
        result.truncated = true;
        continue;
      }
      for (const auto& y : db.alphabet) {
        Pattern r = q.extended(y);
        long long support = oracle_db_support(db, r);
        if (static_cast<double>(support) >= minsup) next.emplace_back(std::move(r), support);
      }
    }
    frequent.insert(frequent.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::map<std::vector<Item>, long long> by_items;
  for (const auto& [q, support] : frequent) by_items[q.items] = support;

  for (const auto& [items, support] : by_items) {
    if (items.size() > p.size())
      result.cors.emplace_back(Pattern{items, p.gap}, support);
    bool has_frequent_extension = false;
    for (const auto& y : db.alphabet) {
      std::vector<Item> extended = items;
      extended.push_back(y);
      if (by_items.count(extended)) {
        has_frequent_extension = true;
        break;
      }
    }
    if (!has_frequent_extension)
      result.mcors.emplace_back(Pattern{items, p.gap}, support);
  }
  return result;
}

}  // namespace mcor
