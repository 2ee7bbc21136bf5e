#ifndef MCOR_MINER_HPP
#define MCOR_MINER_HPP

#include <utility>
#include <vector>

#include "mcor/candgen.hpp"
#include "mcor/prep.hpp"
#include "mcor/seqdb.hpp"

namespace mcor {

struct Rule {
  Pattern antecedent;
  std::vector<Item> consequent;  // nonempty
  long long support = 0;         // sup(antecedent . consequent, D)
  double confidence = 0.0;       // support / sup_p
};

struct MiningCounters {
  long long filtered_sequences = 0;
  long long kept_sequences = 0;
  long long all_items = 0;
  long long frequent_items = 0;
  long long bet_pairs = 0;
  long long candidates_pruned_by_bet = 0;
  long long candidates_not_pruned = 0;
  long long support_calls = 0;
};

struct MiningReport {
  std::vector<Rule> rules;                                   // M_r
  std::vector<std::pair<Pattern, long long>> maximal_patterns;  // M_p
  long long cor_count = 0;   // frequent proper extensions of p encountered
  MiningCounters counters;
  bool antecedent_is_maximal = false;
  bool zero_support = false;
  long long sup_p = 0;
  double minsup = 0.0;
};

struct MinerOptions {
  Strategy strategy = Strategy::BET;
  bool filtering = true;
  bool screening = true;
  int jobs = 1;
  int max_len = 0;  // 0 = unlimited; otherwise do not extend past this length
};

// MCoR-Miner: stack-driven depth-first extension of the prefix pattern with
// filtering, minimum-support, FET/BET, and screening strategies; every
// strategy toggle yields the same rule set and differs only in work done.
MiningReport mine_mcor(const SequenceDatabase& db, const Pattern& p,
                       double mincf, const MinerOptions& options = {});

// CoP-Miner baseline: all frequent patterns with prefix p (including p when
// frequent), against an explicit minsup.
std::vector<std::pair<Pattern, long long>> mine_cop(
    const SequenceDatabase& db, const Pattern& p, double minsup,
    const MinerOptions& options = {});

struct OracleMiningResult {
  std::vector<std::pair<Pattern, long long>> cors;   // frequent proper extensions
  std::vector<std::pair<Pattern, long long>> mcors;  // maximal among frequent
  long long sup_p = 0;
  bool truncated = false;  // some frequent pattern reached max_len
};

// Brute-force reference: enumerate every alphabet extension of p up to
// max_len, score each with the exhaustive occurrence oracle.
OracleMiningResult oracle_mine_mcor(const SequenceDatabase& db, const Pattern& p,
                                    double mincf, int max_len);

long long oracle_db_support(const SequenceDatabase& db, const Pattern& p);

}  // namespace mcor

#endif
