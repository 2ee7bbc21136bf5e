#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcor/bench.hpp"
#include "mcor/eval.hpp"
#include "mcor/miner.hpp"
#include "mcor/oracle_check.hpp"
#include "mcor/seqdb.hpp"

namespace {

using namespace mcor;

std::string fixed4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

Format parse_format(const std::string& name) {
  if (name == "chars") return Format::CharsPerLine;
  if (name == "tokens") return Format::TokenSeparated;
  if (name == "fasta") return Format::FastaLike;
  throw ParamError("unknown format: " + name);
}

GapConstraint parse_gap(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParamError("gap must be given as A,B");
  GapConstraint gap;
  try {
    gap.min_gap = std::stoi(text.substr(0, comma));
    gap.max_gap = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw ParamError("gap must be given as A,B with integers");
  }
  gap.validate();
  return gap;
}

std::vector<Item> parse_prefix(const std::string& text, Format format, char delimiter) {
  std::vector<Item> items;
  if (format == Format::TokenSeparated) {
    std::string token;
    for (char c : text) {
      if (c == delimiter) {
        if (token.empty()) throw ParamError("empty token in prefix");
        items.push_back(token);
        token.clear();
      } else {
        token += c;
      }
    }
    if (token.empty()) throw ParamError("empty token in prefix");
    items.push_back(token);
  } else {
    for (char c : text) items.emplace_back(1, c);
  }
  if (items.empty()) throw ParamError("prefix must be nonempty");
  return items;
}

struct CommonFlags {
  std::string input;
  std::string format = "chars";
  std::string prefix;
  std::string gap;
  std::string delimiter = ",";
  int jobs = 1;
  int max_len = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--input", flags.input, "input sequence file")->required();
  cmd->add_option("--format", flags.format, "chars|tokens|fasta")
      ->check(CLI::IsMember({"chars", "tokens", "fasta"}))
      ->required();
  cmd->add_option("--prefix", flags.prefix, "prefix pattern (rule antecedent)")->required();
  cmd->add_option("--gap", flags.gap, "gap constraint A,B")->required();
  cmd->add_option("--delimiter", flags.delimiter, "token delimiter (tokens format)");
  cmd->add_option("--jobs", flags.jobs, "per-sequence support parallelism");
  cmd->add_option("--max-len", flags.max_len, "bound on pattern length (0 = unlimited)");
}

char delimiter_of(const CommonFlags& flags) {
  if (flags.delimiter.size() != 1) throw ParamError("delimiter must be one character");
  return flags.delimiter[0];
}

void print_rules(const std::vector<Rule>& rules, char delimiter) {
  for (const auto& rule : rules) {
    std::cout << "rule antecedent=" << join_items(rule.antecedent.items, delimiter)
              << " consequent=" << join_items(rule.consequent, delimiter)
              << " support=" << rule.support
              << " confidence=" << fixed4(rule.confidence) << "\n";
  }
}

void print_report_stats(const MiningReport& report) {
  std::cout << "stat sup_p=" << report.sup_p << "\n"
            << "stat minsup=" << fixed4(report.minsup) << "\n"
            << "stat cor_count=" << report.cor_count << "\n"
            << "stat mcor_count=" << report.rules.size() << "\n"
            << "stat antecedent_is_maximal=" << (report.antecedent_is_maximal ? 1 : 0) << "\n"
            << "stat zero_support=" << (report.zero_support ? 1 : 0) << "\n"
            << "stat filtered_sequences=" << report.counters.filtered_sequences << "\n"
            << "stat kept_sequences=" << report.counters.kept_sequences << "\n"
            << "stat all_items=" << report.counters.all_items << "\n"
            << "stat frequent_items=" << report.counters.frequent_items << "\n"
            << "stat bet_pairs=" << report.counters.bet_pairs << "\n"
            << "stat candidates_pruned_by_bet=" << report.counters.candidates_pruned_by_bet << "\n"
            << "stat candidates_not_pruned=" << report.counters.candidates_not_pruned << "\n"
            << "stat support_calls=" << report.counters.support_calls << "\n";
}

int cmd_mine(const CommonFlags& flags, double mincf, const std::string& variant_name_arg) {
  auto variant = variant_from_name(variant_name_arg);
  if (!variant || *variant == Variant::CopMiner || *variant == Variant::Oracle)
    throw ParamError("mine supports variants mcor-miner/mcor-nofilt/mcor-aet/mcor-fet/mcor-noscr");
  char delimiter = delimiter_of(flags);
  Format format = parse_format(flags.format);
  SequenceDatabase db = load_database(flags.input, format, delimiter);
  Pattern p{parse_prefix(flags.prefix, format, delimiter), parse_gap(flags.gap)};

  MinerOptions options = options_for_variant(*variant);
  options.jobs = flags.jobs;
  options.max_len = flags.max_len;
  MiningReport report = mine_mcor(db, p, mincf, options);
  print_rules(report.rules, delimiter);
  print_report_stats(report);
  return 0;
}

int cmd_cop(const CommonFlags& flags, double minsup) {
  char delimiter = delimiter_of(flags);
  Format format = parse_format(flags.format);
  SequenceDatabase db = load_database(flags.input, format, delimiter);
  Pattern p{parse_prefix(flags.prefix, format, delimiter), parse_gap(flags.gap)};

  MinerOptions options;
  options.jobs = flags.jobs;
  options.max_len = flags.max_len;
  auto patterns = mine_cop(db, p, minsup, options);
  for (const auto& [pattern, support] : patterns)
    std::cout << "pattern items=" << join_items(pattern.items, delimiter)
              << " support=" << support << "\n";
  std::cout << "stat pattern_count=" << patterns.size() << "\n";
  return 0;
}

int cmd_eval(const CommonFlags& flags, double mincf, double train_fraction,
             const std::string& variant_name_arg) {
  char delimiter = delimiter_of(flags);
  Format format = parse_format(flags.format);
  SequenceDatabase db = load_database(flags.input, format, delimiter);
  Pattern p{parse_prefix(flags.prefix, format, delimiter), parse_gap(flags.gap)};

  auto [train, test] = split_db(db, train_fraction);
  if (train.size() == 0) throw ParamError("training set is empty");

  std::vector<Item> recommended;
  auto variant = variant_from_name(variant_name_arg);
  if (!variant || *variant == Variant::Oracle)
    throw ParamError("unsupported eval variant: " + variant_name_arg);
  if (*variant == Variant::CopMiner) {
    // CoP comparison run: recommend from all frequent extensions at the
    // MCoR-derived minsup.
    MiningReport report = mine_mcor(train, p, mincf, MinerOptions{});
    auto patterns = mine_cop(train, p, report.minsup, MinerOptions{});
    recommended = recommend_items_from_patterns(patterns, p);
  } else {
    MinerOptions options = options_for_variant(*variant);
    options.jobs = flags.jobs;
    options.max_len = flags.max_len;
    MiningReport report = mine_mcor(train, p, mincf, options);
    print_rules(report.rules, delimiter);
    recommended = recommend_items(report);
  }

  RecommendationScore score = score_recommendations(recommended, test, p, parse_gap(flags.gap));
  std::cout << "metric tp=" << score.tp << " fp=" << score.fp << " fn=" << score.fn
            << " precision=" << (score.precision_defined ? fixed4(score.precision) : "undef")
            << " recall=" << (score.recall_defined ? fixed4(score.recall) : "undef")
            << " f1=" << (score.f1_defined ? fixed4(score.f1) : "undef") << "\n";
  return 0;
}

int cmd_bench(const CommonFlags& flags, const std::vector<std::string>& gaps,
              const std::vector<double>& mincfs, const std::vector<double>& minsups,
              const std::vector<std::string>& variants) {
  char delimiter = delimiter_of(flags);
  Format format = parse_format(flags.format);
  std::vector<Item> prefix = parse_prefix(flags.prefix, format, delimiter);

  std::vector<std::string> all_gaps{flags.gap};
  all_gaps.insert(all_gaps.end(), gaps.begin(), gaps.end());

  std::vector<RunConfig> configs;
  for (const auto& variant_name_arg : variants) {
    auto variant = variant_from_name(variant_name_arg);
    if (!variant) throw ParamError("unknown variant: " + variant_name_arg);
    const std::vector<double>& thresholds =
        variant_takes_minsup(*variant) ? minsups : mincfs;
    if (thresholds.empty())
      throw ParamError(std::string("variant ") + variant_name(*variant) +
                       " needs " + (variant_takes_minsup(*variant) ? "--minsup" : "--mincf"));
    for (const auto& gap_text : all_gaps) {
      for (double threshold : thresholds) {
        RunConfig config;
        config.dataset_path = flags.input;
        config.format = format;
        config.delimiter = delimiter;
        config.prefix = prefix;
        config.gap = parse_gap(gap_text);
        if (variant_takes_minsup(*variant)) config.minsup = threshold;
        else config.mincf = threshold;
        config.variant = *variant;
        config.max_len = flags.max_len;
        config.jobs = flags.jobs;
        configs.push_back(std::move(config));
      }
    }
  }

  for (const auto& result : run_matrix(configs)) {
    std::cout << "run variant=" << variant_name(result.config.variant)
              << " gap=" << result.config.gap.min_gap << "," << result.config.gap.max_gap;
    if (result.config.mincf) std::cout << " mincf=" << fixed4(*result.config.mincf);
    if (result.config.minsup) std::cout << " minsup=" << fixed4(*result.config.minsup);
    std::cout << " ok=" << (result.ok ? 1 : 0);
    if (!result.ok) {
      std::cout << " error=\"" << result.error << "\"\n";
      continue;
    }
    std::cout << " sup_p=" << result.sup_p << " cors=" << result.cor_count
              << " mcors=" << result.mcor_count
              << " support_calls=" << result.counters.support_calls
              << " wall_time_ms=" << fixed4(result.wall_time_ms) << "\n";
  }
  return 0;
}

int cmd_oracle_check(int trials, int mining_trials, std::uint64_t seed) {
  EquivalenceReport matcher = check_matcher_equivalence(trials, seed);
  std::cout << "oracle-check matcher trials=" << matcher.trials
            << " failures=" << matcher.failures << "\n";
  if (!matcher.first_counterexample.empty())
    std::cout << matcher.first_counterexample << "\n";

  EquivalenceReport mining = check_mining_equivalence(mining_trials, seed + 1);
  std::cout << "oracle-check mining trials=" << mining.trials
            << " failures=" << mining.failures << "\n";
  if (!mining.first_counterexample.empty())
    std::cout << mining.first_counterexample << "\n";

  return (matcher.failures == 0 && mining.failures == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap-constrained nonoverlapping co-occurrence rule miner"};
  app.require_subcommand(1);

  CommonFlags mine_flags, cop_flags, eval_flags, bench_flags;
  double mincf = 0.0, cop_minsup = 0.0, eval_mincf = 0.0, train_fraction = 0.8;
  std::string mine_variant = "mcor-miner", eval_variant = "mcor-miner";
  std::vector<std::string> bench_gaps, bench_variants{"mcor-miner"};
  std::vector<double> bench_mincfs, bench_minsups;
  int trials = 1000, mining_trials = 200;
  std::uint64_t seed = 42;

  CLI::App* mine = app.add_subcommand("mine", "mine maximal co-occurrence rules");
  add_common_flags(mine, mine_flags);
  mine->add_option("--mincf", mincf, "minimum confidence in (0,1]")->required();
  mine->add_option("--variant", mine_variant,
                   "mcor-miner|mcor-nofilt|mcor-aet|mcor-fet|mcor-noscr");

  CLI::App* cop = app.add_subcommand("cop", "mine all frequent co-occurrence patterns");
  add_common_flags(cop, cop_flags);
  cop->add_option("--minsup", cop_minsup, "minimum support")->required();

  CLI::App* eval = app.add_subcommand("eval", "train/test recommendation evaluation");
  add_common_flags(eval, eval_flags);
  eval->add_option("--mincf", eval_mincf, "minimum confidence in (0,1]")->required();
  eval->add_option("--train-fraction", train_fraction, "leading train share, default 0.8");
  eval->add_option("--variant", eval_variant, "mining variant or cop-miner");

  CLI::App* bench = app.add_subcommand("bench", "run a configuration matrix");
  add_common_flags(bench, bench_flags);
  bench->add_option("--sweep-gap", bench_gaps, "gap A,B (repeatable)");
  bench->add_option("--mincf", bench_mincfs, "mincf value (repeatable)");
  bench->add_option("--minsup", bench_minsups, "minsup value for cop-miner (repeatable)");
  bench->add_option("--variant", bench_variants, "variant name (repeatable)");

  CLI::App* oracle = app.add_subcommand("oracle-check", "randomized oracle equivalence");
  oracle->add_option("--trials", trials, "matcher-equivalence trials");
  oracle->add_option("--mining-trials", mining_trials, "mining-equivalence trials");
  oracle->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mine->parsed()) return cmd_mine(mine_flags, mincf, mine_variant);
    if (cop->parsed()) return cmd_cop(cop_flags, cop_minsup);
    if (eval->parsed())
      return cmd_eval(eval_flags, eval_mincf, train_fraction, eval_variant);
    if (bench->parsed())
      return cmd_bench(bench_flags, bench_gaps, bench_mincfs, bench_minsups, bench_variants);
    if (oracle->parsed()) return cmd_oracle_check(trials, mining_trials, seed);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
