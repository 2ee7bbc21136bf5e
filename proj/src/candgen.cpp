#include "mcor/candgen.hpp"

#include <algorithm>

namespace mcor {

bool FrequentItems::contains(const Item& item) const {
  return std::binary_search(items.begin(), items.end(), item);
}

FrequentItems frequent_items(const IndexedDatabase& db1, double minsup, int jobs) {
  FrequentItems f1;
  for (const auto& item : db1.alphabet) {
    Pattern single{{item}, {}};
    if (static_cast<double>(db_support(db1, single, jobs)) >= minsup)
      f1.items.push_back(item);
  }
  return f1;
}

FrequentPairs frequent_pairs(const IndexedDatabase& db1, const FrequentItems& f1,
                             GapConstraint gap, double minsup, int jobs) {
  FrequentPairs f2;
  for (const auto& x : f1.items) {
    for (const auto& y : f1.items) {
      Pattern pair{{x, y}, gap};
      if (static_cast<double>(db_support(db1, pair, jobs)) >= minsup)
        f2.pairs.insert({x, y});
    }
  }
  return f2;
}

std::vector<Pattern> extend(const Pattern& q, const FrequentItems& f1,
                            const FrequentPairs& f2, Strategy strategy,
                            const std::vector<Item>& alphabet) {
  std::vector<Pattern> out;
  const std::vector<Item>& source =
      strategy == Strategy::AET ? alphabet : f1.items;
  for (const auto& y : source) {
    if (strategy == Strategy::BET && !f2.contains(q.last(), y)) continue;
    out.push_back(q.extended(y));
  }
  return out;
}

}  // namespace mcor
