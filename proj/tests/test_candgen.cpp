#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mcor/candgen.hpp"
#include "mcor/miner.hpp"
#include "mcor/randgen.hpp"

using namespace mcor;
using namespace mcor::testing;

namespace {

const SequenceDatabase kDb = make_database({kRunningExample});
const IndexedDatabase kIdx = index_database(kDb);

std::vector<std::string> last_items(const std::vector<Pattern>& patterns) {
  std::vector<std::string> out;
  for (const auto& p : patterns) out.push_back(p.last());
  return out;
}

}  // namespace

TEST_CASE("frequent_items on the running example") {
  CHECK(frequent_items(kIdx, 3.0).items == std::vector<Item>{"a", "c", "d"});
  CHECK(frequent_items(kIdx, 0.0).items == std::vector<Item>{"a", "b", "c", "d"});
  CHECK(frequent_items(kIdx, 7.0).items.empty());
}

TEST_CASE("frequent_pairs agrees with the exhaustive oracle") {
  // The worked trace lists ca as frequent at minsup 3, but only two of its
  // occurrences can be pairwise nonoverlapping (a occurs just twice after the
  // first c); the exhaustive oracle confirms sup(ca)=2 here.
  FrequentItems f1 = frequent_items(kIdx, 3.0);
  GapConstraint gap{0, 3};

  std::set<std::pair<Item, Item>> expected;
  for (const auto& x : f1.items) {
    for (const auto& y : f1.items) {
      Pattern pair{{x, y}, gap};
      if (oracle_db_support(kDb, pair) >= 3) expected.insert({x, y});
    }
  }
  CHECK(expected == std::set<std::pair<Item, Item>>{
                        {"a", "d"}, {"c", "d"}, {"d", "c"}, {"d", "d"}});
  CHECK(frequent_pairs(kIdx, f1, gap, 3.0).pairs == expected);
}

TEST_CASE("frequent_pairs at minsup 4 and with empty F1") {
  FrequentItems f1 = frequent_items(kIdx, 3.0);
  GapConstraint gap{0, 3};

  std::set<std::pair<Item, Item>> expected;
  for (const auto& x : f1.items)
    for (const auto& y : f1.items)
      if (oracle_db_support(kDb, Pattern{{x, y}, gap}) >= 4) expected.insert({x, y});
  CHECK(frequent_pairs(kIdx, f1, gap, 4.0).pairs == expected);

  CHECK(frequent_pairs(kIdx, FrequentItems{}, gap, 3.0).pairs.empty());
}

TEST_CASE("extend under FET and BET matches the worked trace") {
  Pattern q = make_pattern("adc", 0, 3);
  FrequentItems f1{{"a", "c", "d"}};
  // F2 exactly as the worked trace gives it.
  FrequentPairs f2{{{"a", "d"}, {"c", "a"}, {"c", "d"}, {"d", "c"}, {"d", "d"}}};
  std::vector<Item> alphabet{"a", "b", "c", "d"};

  CHECK(last_items(extend(q, f1, f2, Strategy::FET, alphabet)) ==
        std::vector<std::string>{"a", "c", "d"});
  CHECK(last_items(extend(q, f1, f2, Strategy::BET, alphabet)) ==
        std::vector<std::string>{"a", "d"});
  CHECK(last_items(extend(q, f1, f2, Strategy::AET, alphabet)) ==
        std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(extend(q, FrequentItems{}, f2, Strategy::FET, alphabet).empty());
}

TEST_CASE("BET output is contained in FET output is contained in AET output") {
  InstanceGen gen(31);
  for (int t = 0; t < 100; ++t) {
    auto alpha = gen.alphabet(2 + gen.below(3));
    SequenceDatabase db = gen.database(alpha, 4, 15);
    IndexedDatabase idx = index_database(db);
    Pattern q = gen.pattern(alpha, 3, 2);
    double minsup = 1 + gen.below(4);

    FrequentItems f1 = frequent_items(idx, minsup);
    FrequentPairs f2 = frequent_pairs(idx, f1, q.gap, minsup);
    auto bet = extend(q, f1, f2, Strategy::BET, alpha);
    auto fet = extend(q, f1, f2, Strategy::FET, alpha);
    auto aet = extend(q, f1, f2, Strategy::AET, alpha);

    auto contained = [](const std::vector<Pattern>& inner, const std::vector<Pattern>& outer) {
      return std::all_of(inner.begin(), inner.end(), [&](const Pattern& p) {
        return std::find(outer.begin(), outer.end(), p) != outer.end();
      });
    };
    CHECK(contained(bet, fet));
    CHECK(contained(fet, aet));

    // Completeness: every frequent extension survives BET pruning.
    for (const auto& candidate : aet) {
      if (static_cast<double>(db_support(idx, candidate)) >= minsup)
        CHECK(std::find(bet.begin(), bet.end(), candidate) != bet.end());
    }
  }
}
