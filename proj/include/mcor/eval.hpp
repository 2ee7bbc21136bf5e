#ifndef MCOR_EVAL_HPP
#define MCOR_EVAL_HPP

#include <utility>
#include <vector>

#include "mcor/miner.hpp"
#include "mcor/seqdb.hpp"

namespace mcor {

struct RecommendationScore {
  long long tp = 0;  // sum of test supports of recommended next-items
  long long fp = 0;  // count of recommended items with zero test support
  long long fn = 0;  // sum of test supports of non-recommended next-items
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_defined = false;
  bool recall_defined = false;
  bool f1_defined = false;
};

// First floor(k * train_fraction) sequences train, remainder test.
std::pair<SequenceDatabase, SequenceDatabase> split_db(const SequenceDatabase& db,
                                                       double train_fraction);

// First item of each rule's consequent, deduplicated, alphabet order.
std::vector<Item> recommend_items(const MiningReport& report);

// Same derivation from a CoP-Miner pattern list (patterns extending p).
std::vector<Item> recommend_items_from_patterns(
    const std::vector<std::pair<Pattern, long long>>& patterns, const Pattern& p);

RecommendationScore score_recommendations(const std::vector<Item>& recommended,
                                          const SequenceDatabase& test,
                                          const Pattern& p, GapConstraint gap);

}  // namespace mcor

#endif
