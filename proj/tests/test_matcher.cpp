#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "mcor/matcher.hpp"
#include "mcor/randgen.hpp"

using namespace mcor;
using namespace mcor::testing;

namespace {

const Sequence kSeq = make_sequence(kRunningExample);
const IndexedSequence kIdx = build_index(kSeq);

}  // namespace

TEST_CASE("dbi_support on the worked examples") {
  CHECK(dbi_support(kIdx, make_pattern("ad", 0, 3)) == 4);
  CHECK(dbi_support(kIdx, make_pattern("adc", 0, 3)) == 3);
  CHECK(dbi_support(build_index(make_sequence("aabbaaba")), make_pattern("aba", 0, 1)) == 3);
}

TEST_CASE("dbi_support with a single-item pattern counts positions") {
  CHECK(dbi_support(kIdx, make_pattern("a", 0, 3)) == 4);
  CHECK(dbi_support(kIdx, make_pattern("b", 0, 3)) == 2);
  CHECK(dbi_support(kIdx, make_pattern("c", 0, 3)) == 4);
  CHECK(dbi_support(kIdx, make_pattern("d", 0, 3)) == 6);
  CHECK(dbi_support(kIdx, make_pattern("x", 0, 3)) == 0);
}

TEST_CASE("dbi_occurrences returns the worked witnesses in root order") {
  CHECK(dbi_occurrences(kIdx, make_pattern("adc", 0, 3)) ==
        std::vector<Occurrence>{{1, 4, 7}, {5, 6, 9}, {11, 14, 15}});
  CHECK(dbi_occurrences(kIdx, make_pattern("ad", 0, 3)) ==
        std::vector<Occurrence>{{1, 2}, {5, 6}, {11, 14}, {13, 16}});
  CHECK(dbi_occurrences(kIdx, make_pattern("xa", 0, 3)).empty());
}

TEST_CASE("oracle_all_occurrences enumerates every tuple lexicographically") {
  CHECK(oracle_all_occurrences(kSeq, make_pattern("ad", 0, 3)) ==
        std::vector<Occurrence>{{1, 2}, {1, 4}, {5, 6}, {5, 8}, {11, 14}, {13, 14}, {13, 16}});

  auto ex2 = oracle_all_occurrences(make_sequence("aabbaaba"), make_pattern("aba", 0, 1));
  std::set<Occurrence> as_set(ex2.begin(), ex2.end());
  CHECK(as_set.count({1, 3, 5}));
  CHECK(as_set.count({2, 4, 6}));
  CHECK(as_set.count({6, 7, 8}));

  CHECK(oracle_all_occurrences(make_sequence("ab"), make_pattern("aba", 0, 1)).empty());
}

TEST_CASE("oracle_max_nonoverlapping on the worked occurrence sets") {
  CHECK(oracle_max_nonoverlapping(
            oracle_all_occurrences(kSeq, make_pattern("ad", 0, 3))) == 4);
  CHECK(oracle_max_nonoverlapping({}) == 0);
  CHECK(oracle_max_nonoverlapping(oracle_all_occurrences(
            make_sequence("aabbaaba"), make_pattern("aba", 0, 1))) == 3);
}

TEST_CASE("db_support sums over sequences") {
  Pattern p = make_pattern("ad", 0, 3);
  CHECK(db_support(index_database(make_database({kRunningExample})), p) == 4);
  CHECK(db_support(index_database(make_database({})), p) == 0);
  CHECK(db_support(index_database(make_database({kRunningExample, kRunningExample})), p) == 8);
}

TEST_CASE("db_support is independent of the job count") {
  SequenceDatabase db = make_database(
      {kRunningExample, "bbbb", "adadad", kRunningExample, "aabbaaba"});
  IndexedDatabase idx = index_database(db);
  Pattern p = make_pattern("ad", 0, 3);
  long long serial = db_support(idx, p, 1);
  CHECK(db_support(idx, p, 2) == serial);
  CHECK(db_support(idx, p, 8) == serial);
}

TEST_CASE("dbi_support equals the exhaustive oracle on random instances") {
  InstanceGen gen(42);
  for (int t = 0; t < 300; ++t) {
    auto alpha = gen.alphabet(2 + gen.below(3));
    Sequence seq = gen.sequence(alpha, 20);
    Pattern p = gen.pattern(alpha, 4, 3);
    int dbi = dbi_support(build_index(seq), p);
    int oracle = oracle_max_nonoverlapping(oracle_all_occurrences(seq, p));
    REQUIRE_MESSAGE(dbi == oracle, "pattern of length ", p.size(), " in sequence of length ",
                    seq.size());
  }
}

TEST_CASE("dbi witnesses are valid, pairwise nonoverlapping, and level-disjoint") {
  InstanceGen gen(99);
  for (int t = 0; t < 200; ++t) {
    auto alpha = gen.alphabet(2 + gen.below(3));
    Sequence seq = gen.sequence(alpha, 20);
    Pattern p = gen.pattern(alpha, 4, 3);
    auto occs = dbi_occurrences(build_index(seq), p);
    CHECK(static_cast<int>(occs.size()) == dbi_support(build_index(seq), p));

    std::vector<std::set<int>> used_per_level(p.size());
    for (const auto& occ : occs) {
      REQUIRE(occ.size() == p.size());
      for (std::size_t j = 0; j < p.size(); ++j) {
        CHECK(seq.items[occ[j] - 1] == p.items[j]);
        if (j) {
          int gap = occ[j] - occ[j - 1] - 1;
          CHECK(gap >= p.gap.min_gap);
          CHECK(gap <= p.gap.max_gap);
        }
        // Each sequence position appears at most once per pattern level.
        CHECK(used_per_level[j].insert(occ[j]).second);
      }
    }
  }
}

TEST_CASE("extension support never exceeds the parent's support") {
  InstanceGen gen(1234);
  for (int t = 0; t < 200; ++t) {
    auto alpha = gen.alphabet(2 + gen.below(3));
    SequenceDatabase db = gen.database(alpha, 4, 15);
    IndexedDatabase idx = index_database(db);
    Pattern q = gen.pattern(alpha, 3, 3);
    long long base = db_support(idx, q);
    for (const auto& y : alpha)
      CHECK(db_support(idx, q.extended(y)) <= base);
  }
}

TEST_CASE("dbi element visits stay within the per-level consumption budget") {
  InstanceGen gen(555);
  for (int t = 0; t < 200; ++t) {
    auto alpha = gen.alphabet(2 + gen.below(3));
    Sequence seq = gen.sequence(alpha, 20);
    Pattern p = gen.pattern(alpha, 4, 3);
    DbiStats stats;
    dbi_support(build_index(seq), p, &stats);
    CHECK(stats.element_visits <=
          static_cast<long long>(p.size() * seq.size()) + stats.backtracks);
  }
}
