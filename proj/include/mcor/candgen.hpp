#ifndef MCOR_CANDGEN_HPP
#define MCOR_CANDGEN_HPP

#include <set>
#include <utility>
#include <vector>

#include "mcor/matcher.hpp"
#include "mcor/seqdb.hpp"

namespace mcor {

enum class Strategy { AET, FET, BET };

struct FrequentItems {
  std::vector<Item> items;  // alphabet order

  bool contains(const Item& item) const;
};

struct FrequentPairs {
  std::set<std::pair<Item, Item>> pairs;

  bool contains(const Item& x, const Item& y) const {
    return pairs.count({x, y}) != 0;
  }
};

FrequentItems frequent_items(const IndexedDatabase& db1, double minsup, int jobs = 1);

// Candidates are F1 x F1 (pattern join over frequent items), kept when
// db_support(x gap y) >= minsup.
FrequentPairs frequent_pairs(const IndexedDatabase& db1, const FrequentItems& f1,
                             GapConstraint gap, double minsup, int jobs = 1);

// AET: extend q with every alphabet item. FET: with every frequent item.
// BET: with every frequent item y such that (last(q), y) is a frequent pair.
// Output in alphabet order.
std::vector<Pattern> extend(const Pattern& q, const FrequentItems& f1,
                            const FrequentPairs& f2, Strategy strategy,
                            const std::vector<Item>& alphabet);

}  // namespace mcor

#endif
