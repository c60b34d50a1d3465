#include "isatx/bench.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

namespace isatx::bench {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 round over seed+salt: independent per-trial streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void apply_review_event(TransactionManager& manager, const tpcc::ReviewEvent& event,
                        double accept_fraction, std::mt19937_64& rng) {
  auto ids = manager.reviewable_ids();
  if (ids.empty()) return;
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto removals = static_cast<std::size_t>(std::llround(event.fraction * double(ids.size())));
  auto accepts = static_cast<std::size_t>(std::llround(accept_fraction * double(ids.size())));
  std::size_t picked = std::min(ids.size(), removals + accepts);
  for (std::size_t j = 0; j < picked; ++j) {
    std::size_t swap_with = j + static_cast<std::size_t>(rng() % (order.size() - j));
    std::swap(order[j], order[swap_with]);
  }
  for (std::size_t j = 0; j < picked; ++j) {
    auto verdict = j < removals ? ReviewVerdict::Remove : ReviewVerdict::Accept;
    manager.apply_review(ids[order[j]], verdict);
  }
}

namespace {

TrialOutcome run_trial(const ExperimentConfig& config, const TemplateRegistry& templates,
                       const SchemaRegistry& schema, std::uint32_t trial) {
  tpcc::WorkloadConfig workload = config.workload;
  workload.seed = mix_seed(config.workload.seed, trial);

  auto stream = tpcc::generate(workload);
  auto events = tpcc::review_schedule(workload);

  ManagerConfig mc;
  mc.strategy = config.strategy;
  mc.level = config.completeness;
  mc.parallel_scan = config.parallel_scan;
  mc.record_events = false;
  TransactionManager manager(templates, schema, tpcc::invariants(), mc);

  std::mt19937_64 review_rng(mix_seed(workload.seed, 0x7265766965ULL));
  TrialOutcome out;
  std::size_t next_event = 0;
  for (std::uint64_t i = 1; i <= stream.size(); ++i) {
    manager.process_transaction(std::move(stream[i - 1]));
    // Sample the series before a same-position review lands: the series
    // tracks buffer occupancy as the workload progresses, reviews included
    // only once they have drained at the next position.
    if (config.series_every != 0 && i % config.series_every == 0) {
      out.series.push_back(manager.metrics_snapshot().buffered_count);
    }
    if (next_event < events.size() && events[next_event].position == i) {
      apply_review_event(manager, events[next_event], workload.accept_fraction, review_rng);
      manager.check_for_materialization();
      ++next_event;
    }
  }
  auto snapshot = manager.metrics_snapshot();
  out.buffered_count = snapshot.buffered_count;
  out.buffered_rate =
      static_cast<double>(snapshot.buffered_count) / static_cast<double>(workload.n_transactions);
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  workload.validate();
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
}

std::optional<SweepAxis> parse_axis(std::string_view token) {
  if (token == "si") return SweepAxis::Si;
  if (token == "ri") return SweepAxis::Ri;
  if (token == "n") return SweepAxis::N;
  if (token == "completeness") return SweepAxis::Completeness;
  return std::nullopt;
}

std::optional<std::optional<std::uint32_t>> parse_interval(std::string_view token) {
  if (token == "inf" || token == "INF" || token == "infinite") {
    return std::optional<std::uint32_t>{};
  }
  if (token.empty() || token.size() > 9) return std::nullopt;
  std::uint32_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint32_t>(c - '0');
  }
  if (value == 0) return std::nullopt;
  return std::optional<std::uint32_t>{value};
}

std::string interval_token(const std::optional<std::uint32_t>& v) {
  return v.has_value() ? std::to_string(*v) : "inf";
}

std::string_view strategy_token(StrategyMode s) {
  return s == StrategyMode::BufferSuspicious ? "suspicious" : "compensating";
}

std::optional<StrategyMode> parse_strategy(std::string_view token) {
  if (token == "suspicious") return StrategyMode::BufferSuspicious;
  if (token == "compensating") return StrategyMode::BufferCompensating;
  return std::nullopt;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  TemplateRegistry templates;
  tpcc::register_templates(templates);
  SchemaRegistry schema = tpcc::make_schema();

  ExperimentResult result;
  result.trials.resize(config.trials);
  const auto n = static_cast<std::ptrdiff_t>(config.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (config.parallel_trials)
#endif
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    result.trials[static_cast<std::size_t>(t)] =
        run_trial(config, templates, schema, static_cast<std::uint32_t>(t));
  }

  double sum = 0.0;
  double count_sum = 0.0;
  double series_sum = 0.0;
  for (const auto& trial : result.trials) {
    sum += trial.buffered_rate;
    count_sum += static_cast<double>(trial.buffered_count);
    if (!trial.series.empty()) {
      double per_trial = 0.0;
      for (auto c : trial.series) per_trial += static_cast<double>(c);
      series_sum += per_trial / static_cast<double>(trial.series.size());
    }
  }
  result.mean_rate = sum / config.trials;
  result.mean_count = count_sum / config.trials;
  result.mean_series_count = series_sum / config.trials;
  if (config.trials > 1) {
    double sq = 0.0;
    for (const auto& trial : result.trials) {
      double d = trial.buffered_rate - result.mean_rate;
      sq += d * d;
    }
    result.stddev_rate = std::sqrt(sq / (config.trials - 1));
  }
  return result;
}

std::string run_sweep(SweepAxis axis, const std::vector<std::string>& values,
                      const ExperimentConfig& base) {
  if (values.empty()) throw std::invalid_argument("sweep values must be non-empty");
  std::string out;
  for (const auto& value : values) {
    ExperimentConfig config = base;
    switch (axis) {
      case SweepAxis::Si: {
        auto parsed = parse_interval(value);
        if (!parsed) throw std::invalid_argument("invalid si value: " + value);
        config.workload.si = *parsed;
        break;
      }
      case SweepAxis::Ri: {
        auto parsed = parse_interval(value);
        if (!parsed) throw std::invalid_argument("invalid ri value: " + value);
        config.workload.ri = *parsed;
        break;
      }
      case SweepAxis::N: {
        auto parsed = parse_interval(value);
        if (!parsed || !parsed->has_value()) throw std::invalid_argument("invalid n value: " + value);
        config.workload.n_transactions = **parsed;
        break;
      }
      case SweepAxis::Completeness: {
        auto parsed = parse_level_token(value);
        if (!parsed) throw std::invalid_argument("invalid completeness value: " + value);
        config.completeness = *parsed;
        break;
      }
    }
    out += csv_rows(config, run_experiment(config));
  }
  return out;
}

BaselineComparison baseline_compare(const ExperimentConfig& base) {
  BaselineComparison cmp;
  ExperimentConfig complete = base;
  complete.completeness = CompletenessLevel::CompleteQuery;
  ExperimentConfig none = base;
  none.completeness = CompletenessLevel::NoInvariantInfo;
  cmp.complete_info = run_experiment(complete);
  cmp.no_invariant_info = run_experiment(none);
  cmp.rate_ratio = cmp.complete_info.mean_rate > 0.0
                       ? cmp.no_invariant_info.mean_rate / cmp.complete_info.mean_rate
                       : 0.0;
  return cmp;
}

std::string csv_header() {
  return "trial,n,si,ri,completeness,strategy,review_fraction,seed,buffered_count,"
         "buffered_rate\n";
}

std::string csv_rows(const ExperimentConfig& config, const ExperimentResult& result) {
  std::string out;
  for (std::size_t t = 0; t < result.trials.size(); ++t) {
    const auto& trial = result.trials[t];
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%zu,%llu,%s,%s,%s,%s,%g,%llu,%llu,%.6f\n", t,
                  static_cast<unsigned long long>(config.workload.n_transactions),
                  interval_token(config.workload.si).c_str(),
                  interval_token(config.workload.ri).c_str(),
                  std::string(level_token(config.completeness)).c_str(),
                  std::string(strategy_token(config.strategy)).c_str(),
                  config.workload.review_fraction,
                  static_cast<unsigned long long>(config.workload.seed),
                  static_cast<unsigned long long>(trial.buffered_count), trial.buffered_rate);
    out += buf;
  }
  return out;
}

}  // namespace isatx::bench
