#ifndef MCOR_ORACLE_CHECK_HPP
#define MCOR_ORACLE_CHECK_HPP

#include <cstdint>
#include <string>

namespace mcor {

struct EquivalenceReport {
  int trials = 0;
  int failures = 0;
  std::string first_counterexample;  // verbatim instance dump, empty if none
};

// dbi_support vs. exhaustive max-nonoverlapping selection on random
// single-sequence instances (|alphabet| in {2,3,4}, n <= 20, m <= 4, b <= 3).
EquivalenceReport check_matcher_equivalence(int trials, std::uint64_t seed);

// mine_mcor vs. oracle_mine_mcor (CoRs and MCoRs, patterns and supports) on
// random databases (|alphabet| <= 4, k <= 5, n <= 15, b <= 2).
EquivalenceReport check_mining_equivalence(int trials, std::uint64_t seed);

// All strategy/filtering/screening toggles must yield identical rule sets;
// under BET, pruned + nonpruned candidates must sum to generated extensions.
EquivalenceReport check_strategy_invariance(int trials, std::uint64_t seed);

}  // namespace mcor

#endif
