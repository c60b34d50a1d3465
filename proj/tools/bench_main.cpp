// Experiment CLI: buffered-rate runs, parameter sweeps, the completeness
// baseline comparison, and audit dumps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isatx/bench.hpp"
#include "isatx/rules.hpp"
#include "isatx/tpcc.hpp"

namespace {

struct CommonOptions {
  std::string si = "5";
  std::string ri = "inf";
  std::uint64_t n = 1000;
  std::uint32_t trials = 20;
  std::uint64_t seed = 1;
  std::string completeness = "complete";
  std::string strategy = "suspicious";
  double review_fraction = 0.8;
  double accept_fraction = 0.0;
  std::uint32_t warehouses = 1;
  std::uint32_t districts = 10;
  bool serial = false;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--si", opts.si, "suspicious interval (positive integer or 'inf')");
  cmd->add_option("--ri", opts.ri, "review interval (positive integer or 'inf')");
  cmd->add_option("--n", opts.n, "transactions per trial");
  cmd->add_option("--trials", opts.trials, "independent trials");
  cmd->add_option("--seed", opts.seed, "base seed");
  cmd->add_option("--completeness", opts.completeness, "complete|partial|none");
  cmd->add_option("--strategy", opts.strategy, "suspicious|compensating");
  cmd->add_option("--review-fraction", opts.review_fraction,
                  "share of reviewable entries removed per review event");
  cmd->add_option("--accept-fraction", opts.accept_fraction,
                  "share of reviewable entries accepted per review event");
  cmd->add_option("--warehouses", opts.warehouses, "warehouse count");
  cmd->add_option("--districts", opts.districts, "districts per warehouse");
  cmd->add_flag("--serial", opts.serial, "run trials and dependency scans serially");
  cmd->add_option("--out", opts.out, "CSV output file (stdout when omitted)");
}

isatx::bench::ExperimentConfig to_config(const CommonOptions& opts) {
  isatx::bench::ExperimentConfig config;
  auto si = isatx::bench::parse_interval(opts.si);
  if (!si) throw CLI::ValidationError("--si", "expected positive integer or 'inf'");
  auto ri = isatx::bench::parse_interval(opts.ri);
  if (!ri) throw CLI::ValidationError("--ri", "expected positive integer or 'inf'");
  auto level = isatx::parse_level_token(opts.completeness);
  if (!level) throw CLI::ValidationError("--completeness", "expected complete|partial|none");
  auto strategy = isatx::bench::parse_strategy(opts.strategy);
  if (!strategy) throw CLI::ValidationError("--strategy", "expected suspicious|compensating");
  config.workload.si = *si;
  config.workload.ri = *ri;
  config.workload.n_transactions = opts.n;
  config.workload.seed = opts.seed;
  config.workload.review_fraction = opts.review_fraction;
  config.workload.accept_fraction = opts.accept_fraction;
  config.workload.warehouses = opts.warehouses;
  config.workload.districts = opts.districts;
  config.trials = opts.trials;
  config.completeness = *level;
  config.strategy = *strategy;
  config.parallel_trials = !opts.serial;
  config.parallel_scan = !opts.serial;
  return config;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << content;
}

void print_summary(const isatx::bench::ExperimentConfig& config,
                   const isatx::bench::ExperimentResult& result) {
  std::fprintf(stderr,
               "si=%s ri=%s n=%llu %s/%s trials=%u: mean_rate=%.4f stddev=%.4f mean_count=%.1f\n",
               isatx::bench::interval_token(config.workload.si).c_str(),
               isatx::bench::interval_token(config.workload.ri).c_str(),
               static_cast<unsigned long long>(config.workload.n_transactions),
               std::string(isatx::level_token(config.completeness)).c_str(),
               std::string(isatx::bench::strategy_token(config.strategy)).c_str(), config.trials,
               result.mean_rate, result.stddev_rate, result.mean_count);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"buffered-rate benchmark for the transaction-buffering middleware"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "run one experiment configuration");
  add_common(run_cmd, run_opts);

  CommonOptions sweep_opts;
  std::string axis = "si";
  std::string values;
  auto* sweep_cmd = app.add_subcommand("sweep", "run one experiment per axis value");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--axis", axis, "si|ri|n|completeness")->required();
  sweep_cmd->add_option("--values", values, "comma-separated axis values")->required();

  CommonOptions baseline_opts;
  auto* baseline_cmd =
      app.add_subcommand("baseline", "identical workload at complete vs no invariant info");
  add_common(baseline_cmd, baseline_opts);

  auto* rules_cmd = app.add_subcommand("rules-dump", "print the dependency rule table");

  CommonOptions workload_opts;
  auto* workload_cmd =
      app.add_subcommand("workload-dump", "print the generated stream, one transaction per line");
  add_common(workload_cmd, workload_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      auto config = to_config(run_opts);
      auto result = isatx::bench::run_experiment(config);
      emit(run_opts.out, isatx::bench::csv_header() + isatx::bench::csv_rows(config, result));
      print_summary(config, result);
    } else if (sweep_cmd->parsed()) {
      auto config = to_config(sweep_opts);
      auto parsed_axis = isatx::bench::parse_axis(axis);
      if (!parsed_axis) throw CLI::ValidationError("--axis", "expected si|ri|n|completeness");
      std::vector<std::string> value_list;
      std::string current;
      for (char c : values) {
        if (c == ',') {
          if (!current.empty()) value_list.push_back(current);
          current.clear();
        } else {
          current += c;
        }
      }
      if (!current.empty()) value_list.push_back(current);
      emit(sweep_opts.out, isatx::bench::csv_header() +
                               isatx::bench::run_sweep(*parsed_axis, value_list, config));
    } else if (baseline_cmd->parsed()) {
      auto config = to_config(baseline_opts);
      auto cmp = isatx::bench::baseline_compare(config);
      isatx::bench::ExperimentConfig complete = config;
      complete.completeness = isatx::CompletenessLevel::CompleteQuery;
      isatx::bench::ExperimentConfig none = config;
      none.completeness = isatx::CompletenessLevel::NoInvariantInfo;
      emit(baseline_opts.out, isatx::bench::csv_header() +
                                  isatx::bench::csv_rows(complete, cmp.complete_info) +
                                  isatx::bench::csv_rows(none, cmp.no_invariant_info));
      std::fprintf(stderr, "complete=%.4f none=%.4f ratio=%.3f\n", cmp.complete_info.mean_rate,
                   cmp.no_invariant_info.mean_rate, cmp.rate_ratio);
    } else if (rules_cmd->parsed()) {
      for (const auto& line : isatx::RuleTable::instance().dump_lines()) {
        std::cout << line << '\n';
      }
    } else if (workload_cmd->parsed()) {
      auto config = to_config(workload_opts);
      auto stream = isatx::tpcc::generate(config.workload);
      std::string out;
      for (std::size_t i = 0; i < stream.size(); ++i) {
        out += isatx::tpcc::dump_line(i + 1, stream[i]);
        out += '\n';
      }
      emit(workload_opts.out, out);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
