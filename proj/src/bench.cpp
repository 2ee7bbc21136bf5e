#include "mcor/bench.hpp"

#include <chrono>

namespace mcor {

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::McorMiner: return "mcor-miner";
    case Variant::McorNoFilt: return "mcor-nofilt";
    case Variant::McorAet: return "mcor-aet";
    case Variant::McorFet: return "mcor-fet";
    case Variant::McorNoScr: return "mcor-noscr";
    case Variant::CopMiner: return "cop-miner";
    case Variant::Oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : {Variant::McorMiner, Variant::McorNoFilt, Variant::McorAet,
                    Variant::McorFet, Variant::McorNoScr, Variant::CopMiner,
                    Variant::Oracle})
    if (name == variant_name(v)) return v;
  return std::nullopt;
}

bool variant_takes_minsup(Variant variant) { return variant == Variant::CopMiner; }

MinerOptions options_for_variant(Variant variant) {
  MinerOptions options;
  switch (variant) {
    case Variant::McorMiner: break;
    case Variant::McorNoFilt: options.filtering = false; break;
    case Variant::McorAet: options.strategy = Strategy::AET; break;
    case Variant::McorFet: options.strategy = Strategy::FET; break;
    case Variant::McorNoScr: options.screening = false; break;
    case Variant::CopMiner: break;
    case Variant::Oracle: break;
  }
  return options;
}

RunResult run_one(const RunConfig& config) {
  RunResult result;
  result.config = config;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.mincf.has_value() == config.minsup.has_value())
      throw ParamError("exactly one of mincf/minsup must be set");
    if (variant_takes_minsup(config.variant) != config.minsup.has_value())
      throw ParamError(std::string("variant ") + variant_name(config.variant) +
                       (variant_takes_minsup(config.variant) ? " takes minsup"
                                                             : " takes mincf"));
    config.gap.validate();
    if (config.prefix.empty()) throw ParamError("prefix must be nonempty");

    SequenceDatabase db =
        load_database(config.dataset_path, config.format, config.delimiter);
    Pattern p{config.prefix, config.gap};

    switch (config.variant) {
      case Variant::CopMiner: {
        MinerOptions options = options_for_variant(config.variant);
        options.jobs = config.jobs;
        options.max_len = config.max_len;
        auto patterns = mine_cop(db, p, *config.minsup, options);
        for (const auto& [pattern, support] : patterns) {
          if (pattern.size() > p.size()) ++result.cor_count;
          else result.sup_p = support;
        }
        break;
      }
      case Variant::Oracle: {
        if (config.max_len <= 0)
          throw ParamError("oracle variant requires max_len");
        auto oracle = oracle_mine_mcor(db, p, *config.mincf, config.max_len);
        result.cor_count = static_cast<long long>(oracle.cors.size());
        result.mcor_count = static_cast<long long>(oracle.mcors.size());
        result.sup_p = oracle.sup_p;
        break;
      }
      default: {
        MinerOptions options = options_for_variant(config.variant);
        options.jobs = config.jobs;
        options.max_len = config.max_len;
        MiningReport report = mine_mcor(db, p, *config.mincf, options);
        result.cor_count = report.cor_count;
        result.mcor_count = static_cast<long long>(report.rules.size());
        result.sup_p = report.sup_p;
        result.counters = report.counters;
        result.rules = report.rules;
        break;
      }
    }
    result.ok = true;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  const auto end = std::chrono::steady_clock::now();
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  return result;
}

std::vector<RunResult> run_matrix(const std::vector<RunConfig>& configs) {
  std::vector<RunResult> results;
  results.reserve(configs.size());
  for (const auto& config : configs) results.push_back(run_one(config));
  return results;
}

}  // namespace mcor
