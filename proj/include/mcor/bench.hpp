#ifndef MCOR_BENCH_HPP
#define MCOR_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "mcor/miner.hpp"
#include "mcor/seqdb.hpp"

namespace mcor {

enum class Variant {
  McorMiner,
  McorNoFilt,
  McorAet,
  McorFet,
  McorNoScr,
  CopMiner,
  Oracle,
};

const char* variant_name(Variant variant);
std::optional<Variant> variant_from_name(const std::string& name);

// CoP-Miner takes minsup, everything else mincf.
bool variant_takes_minsup(Variant variant);
MinerOptions options_for_variant(Variant variant);

struct RunConfig {
  std::string dataset_path;
  Format format = Format::CharsPerLine;
  char delimiter = ',';
  std::vector<Item> prefix;
  GapConstraint gap;
  std::optional<double> mincf;
  std::optional<double> minsup;
  Variant variant = Variant::McorMiner;
  int max_len = 0;  // required for Variant::Oracle
  int jobs = 1;
};

struct RunResult {
  RunConfig config;
  bool ok = false;
  std::string error;
  long long cor_count = 0;
  long long mcor_count = 0;
  long long sup_p = 0;
  MiningCounters counters;
  double wall_time_ms = 0.0;
  std::vector<Rule> rules;
};

RunResult run_one(const RunConfig& config);

// Sequential execution for stable timing; per-config errors are recorded in
// the result rather than aborting the matrix.
std::vector<RunResult> run_matrix(const std::vector<RunConfig>& configs);

}  // namespace mcor

#endif
