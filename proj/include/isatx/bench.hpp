#ifndef ISATX_BENCH_HPP
#define ISATX_BENCH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isatx/manager.hpp"
#include "isatx/tpcc.hpp"

namespace isatx::bench {

struct ExperimentConfig {
  tpcc::WorkloadConfig workload;
  CompletenessLevel completeness = CompletenessLevel::CompleteQuery;
  StrategyMode strategy = StrategyMode::BufferSuspicious;
  std::uint32_t trials = 20;
  // Trials are independent; the loop runs under OpenMP unless disabled. The
  // serial path produces byte-identical output and is kept as the reference.
  bool parallel_trials = true;
  bool parallel_scan = true;
  std::uint32_t series_every = 50;  // buffered-count sampling cadence

  void validate() const;
};

struct TrialOutcome {
  std::uint64_t buffered_count = 0;
  double buffered_rate = 0.0;
  std::vector<std::uint64_t> series;  // buffered_count every series_every transactions
};

struct ExperimentResult {
  std::vector<TrialOutcome> trials;
  double mean_rate = 0.0;
  double stddev_rate = 0.0;
  double mean_count = 0.0;         // final buffered count, averaged over trials
  double mean_series_count = 0.0;  // run-averaged buffered count, averaged over trials
};

struct BaselineComparison {
  ExperimentResult complete_info;
  ExperimentResult no_invariant_info;
  double rate_ratio = 0.0;  // no-info mean rate / complete mean rate
};

enum class SweepAxis { Si, Ri, N, Completeness };

std::optional<SweepAxis> parse_axis(std::string_view token);

// "inf" -> nullopt (infinite), otherwise a positive integer.
std::optional<std::optional<std::uint32_t>> parse_interval(std::string_view token);

std::string interval_token(const std::optional<std::uint32_t>& v);
std::string_view strategy_token(StrategyMode s);
std::optional<StrategyMode> parse_strategy(std::string_view token);

// Applies one review event: removes round(fraction * reviewable) entries
// sampled uniformly with `rng` (plus an accepted share, when configured).
// Callers run a materialization pass afterwards.
void apply_review_event(TransactionManager& manager, const tpcc::ReviewEvent& event,
                        double accept_fraction, std::mt19937_64& rng);

// Runs `trials` independent seeded trials: fresh manager, generated stream,
// review events interleaved at their positions, final metrics recorded.
ExperimentResult run_experiment(const ExperimentConfig& config);

// One experiment per value; returns the rows (no header).
std::string run_sweep(SweepAxis axis, const std::vector<std::string>& values,
                      const ExperimentConfig& base);

// Identical seeded workload at CompleteQuery and NoInvariantInfo.
BaselineComparison baseline_compare(const ExperimentConfig& base);

// Exact schema:
// trial,n,si,ri,completeness,strategy,review_fraction,seed,buffered_count,buffered_rate
std::string csv_header();
std::string csv_rows(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace isatx::bench

#endif  // ISATX_BENCH_HPP
