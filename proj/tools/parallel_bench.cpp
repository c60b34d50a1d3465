// Compares the serial reference paths against the OpenMP ones on the two
// data-parallel kernels: the per-arrival dependency scan over the live buffer
// and the independent-trials loop. Results must match exactly; only the wall
// time may differ.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "isatx/bench.hpp"
#include "isatx/manager.hpp"
#include "isatx/tpcc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Feeds a review-free stream so the live buffer keeps growing; every arrival
// then scans the whole buffer.
double time_scan(bool parallel, std::uint64_t n, isatx::MetricsSnapshot& out) {
  isatx::TemplateRegistry templates;
  isatx::tpcc::register_templates(templates);
  auto schema = isatx::tpcc::make_schema();

  isatx::ManagerConfig config;
  config.parallel_scan = parallel;
  config.parallel_scan_min_entries = 16;
  config.record_events = false;
  isatx::TransactionManager manager(templates, schema, isatx::tpcc::invariants(), config);

  isatx::tpcc::WorkloadConfig workload;
  workload.n_transactions = n;
  workload.si = 2;
  workload.seed = 42;
  auto stream = isatx::tpcc::generate(workload);

  auto start = Clock::now();
  for (auto& txn : stream) manager.process_transaction(std::move(txn));
  double elapsed = seconds_since(start);
  out = manager.metrics_snapshot();
  return elapsed;
}

double time_trials(bool parallel, isatx::bench::ExperimentResult& out) {
  isatx::bench::ExperimentConfig config;
  config.workload.n_transactions = 600;
  config.workload.si = 5;
  config.workload.seed = 42;
  config.trials = 12;
  config.parallel_trials = parallel;
  config.parallel_scan = false;

  auto start = Clock::now();
  out = isatx::bench::run_experiment(config);
  return seconds_since(start);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1500;

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (both paths run serially)\n");
#endif

  isatx::MetricsSnapshot serial_scan, parallel_scan;
  double t_scan_serial = time_scan(false, n, serial_scan);
  double t_scan_parallel = time_scan(true, n, parallel_scan);
  bool scan_match = serial_scan.buffered_count == parallel_scan.buffered_count &&
                    serial_scan.held_count == parallel_scan.held_count &&
                    serial_scan.committed_count == parallel_scan.committed_count;
  std::printf("dependency scan (n=%llu): serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
              static_cast<unsigned long long>(n), t_scan_serial, t_scan_parallel,
              t_scan_parallel > 0 ? t_scan_serial / t_scan_parallel : 0.0,
              scan_match ? "results match" : "RESULTS DIFFER");

  isatx::bench::ExperimentResult serial_trials, parallel_trials;
  double t_trials_serial = time_trials(false, serial_trials);
  double t_trials_parallel = time_trials(true, parallel_trials);
  bool trials_match = serial_trials.mean_rate == parallel_trials.mean_rate &&
                      serial_trials.mean_count == parallel_trials.mean_count;
  std::printf("trial loop (12 trials): serial %.3fs, parallel %.3fs, speedup %.2fx, %s\n",
              t_trials_serial, t_trials_parallel,
              t_trials_parallel > 0 ? t_trials_serial / t_trials_parallel : 0.0,
              trials_match ? "results match" : "RESULTS DIFFER");

  return scan_match && trials_match ? 0 : 1;
}
