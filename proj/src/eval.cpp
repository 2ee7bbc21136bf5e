#include "mcor/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mcor {

std::pair<SequenceDatabase, SequenceDatabase> split_db(const SequenceDatabase& db,
                                                       double train_fraction) {
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
    throw ParamError("train fraction must lie in (0,1)");

  const std::size_t k = db.size();
  const auto cut = static_cast<std::size_t>(
      std::floor(static_cast<double>(k) * train_fraction));

  SequenceDatabase train, test;
  train.sequences.assign(db.sequences.begin(), db.sequences.begin() + cut);
  test.sequences.assign(db.sequences.begin() + cut, db.sequences.end());
  train.alphabet = alphabet_of(train);
  test.alphabet = alphabet_of(test);
  return {std::move(train), std::move(test)};
}

std::vector<Item> recommend_items(const MiningReport& report) {
  std::set<Item> items;
  for (const auto& rule : report.rules) items.insert(rule.consequent.front());
  return {items.begin(), items.end()};
}

std::vector<Item> recommend_items_from_patterns(
    const std::vector<std::pair<Pattern, long long>>& patterns, const Pattern& p) {
  std::set<Item> items;
  for (const auto& [pattern, support] : patterns)
    if (pattern.size() > p.size()) items.insert(pattern.items[p.size()]);
  return {items.begin(), items.end()};
}

RecommendationScore score_recommendations(const std::vector<Item>& recommended,
                                          const SequenceDatabase& test,
                                          const Pattern& p, GapConstraint gap) {
  RecommendationScore score;
  IndexedDatabase indexed = index_database(test);

  for (const auto& y : test.alphabet) {
    Pattern next{p.items, gap};
    next.items.push_back(y);
    long long support = db_support(indexed, next);
    bool is_recommended =
        std::find(recommended.begin(), recommended.end(), y) != recommended.end();
    if (is_recommended)
      score.tp += support;
    else if (support > 0)
      score.fn += support;
  }
  // FP is a recommendation count, not a support sum.
  for (const auto& y : recommended) {
    Pattern next{p.items, gap};
    next.items.push_back(y);
    if (db_support(indexed, next) == 0) ++score.fp;
  }

  if (score.tp + score.fp > 0) {
    score.precision_defined = true;
    score.precision = static_cast<double>(score.tp) / static_cast<double>(score.tp + score.fp);
  }
  if (score.tp + score.fn > 0) {
    score.recall_defined = true;
    score.recall = static_cast<double>(score.tp) / static_cast<double>(score.tp + score.fn);
  }
  if (score.precision_defined && score.recall_defined &&
      score.precision + score.recall > 0.0) {
    score.f1_defined = true;
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

}  // namespace mcor
