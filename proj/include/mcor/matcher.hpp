#ifndef MCOR_MATCHER_HPP
#define MCOR_MATCHER_HPP

#include <vector>

#include "mcor/seqdb.hpp"

namespace mcor {

// 1-based, strictly increasing position tuple witnessing one pattern match.
using Occurrence = std::vector<int>;

// Filled by the DBI search when requested; used by the complexity smoke tests.
struct DbiStats {
  long long element_visits = 0;   // cursor reads, consumed or peeked
  long long backtracks = 0;
};

// Number of minimal nonoverlapping occurrences found by depth-first search
// with per-level index-array cursors. Each cursor only moves forward: an
// element that was descended into stays consumed even if its subtree fails,
// while a too-far element (gap > b) is peeked but left for later roots.
int dbi_support(const IndexedSequence& idx, const Pattern& p, DbiStats* stats = nullptr);

// Same search, returning the witness tuples in root (ascending l1) order.
std::vector<Occurrence> dbi_occurrences(const IndexedSequence& idx, const Pattern& p);

// Exhaustive enumeration of every occurrence, lexicographic order.
// Verification oracle; intended for small inputs.
std::vector<Occurrence> oracle_all_occurrences(const Sequence& seq, const Pattern& p);

// Maximum cardinality of a pairwise nonoverlapping subset (two occurrences
// conflict iff they share a position at the same pattern index).
// Branch-and-bound over the lexicographically sorted occurrence list.
int oracle_max_nonoverlapping(const std::vector<Occurrence>& occs);

// Sum of dbi_support over all sequences; jobs > 1 splits sequences across
// threads (integer sum, order-independent).
long long db_support(const IndexedDatabase& db, const Pattern& p, int jobs = 1);

}  // namespace mcor

#endif
