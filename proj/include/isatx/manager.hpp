#ifndef ISATX_MANAGER_HPP
#define ISATX_MANAGER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isatx/checker.hpp"
#include "isatx/matrix.hpp"
#include "isatx/schema.hpp"
#include "isatx/template_registry.hpp"
#include "isatx/types.hpp"

namespace isatx {

enum class StrategyMode {
  BufferSuspicious,
  BufferCompensating,
};

enum class DependencyCheckMode {
  Generic,        // rule-matrix checker over the declared invariants
  RegistryFirst,  // template-pair registry when present, generic otherwise
  RegistryOnly,   // template-pair registry exclusively
};

enum class ReviewVerdict { Accept, Remove };

struct CommitOutcome {
  bool accepted = true;
  std::string reason;
};

// Physical constraint validation lives behind this callback; the default sink
// accepts everything and completes immediately.
using CommitSink = std::function<CommitOutcome(const Transaction&)>;

struct ManagerConfig {
  StrategyMode strategy = StrategyMode::BufferSuspicious;
  CompletenessLevel level = CompletenessLevel::CompleteQuery;
  DependencyCheckMode check_mode = DependencyCheckMode::Generic;
  // Dependency-scan kernel: verdicts against the live buffer are independent,
  // so they can be computed in parallel. The serial path is the reference.
  bool parallel_scan = false;
  std::size_t parallel_scan_min_entries = 64;
  bool record_events = true;
};

struct MetricsSnapshot {
  std::uint64_t buffered_count = 0;  // statuses in {Buffered, Held}
  std::uint64_t held_count = 0;
  std::uint64_t committed_count = 0;
  std::uint64_t removed_count = 0;
  std::uint64_t discarded_count = 0;
  std::uint64_t total_seen = 0;
};

struct TransitionEvent {
  std::uint64_t seq = 0;
  std::string txn_id;
  TransactionStatus from = TransactionStatus::Submitted;
  TransactionStatus to = TransactionStatus::Submitted;
  std::string matched_rule;  // set when the transition was caused by a dependency
};

std::string format_event(const TransitionEvent& e);

struct PassChange {
  std::string txn_id;
  TransactionStatus status = TransactionStatus::Submitted;
};

// Serial coordinator owning the buffer, dependency matrix and status table.
// All mutating calls must come from one logical execution context; concurrent
// callers interact through queues (see MiddlewareService) and snapshots.
class TransactionManager {
 public:
  TransactionManager(const TemplateRegistry& templates, const SchemaRegistry& schema,
                     std::vector<InvariantDecl> invariants, ManagerConfig config = {},
                     CommitSink sink = nullptr, const PairDependencyRegistry* pairs = nullptr);

  // Intake of one submitted transaction. Assigns the arrival sequence, decides
  // buffer/hold/commit per the strategy, and returns the resulting status.
  TransactionStatus process_transaction(Transaction txn);

  // Runs the release loop to a fixed point: every entry that is resolved
  // (approved, rejected, or non-suspicious) and no longer waits on anyone is
  // materialized, releasing its dependents within the same pass. Returns every
  // state change in commit order.
  std::vector<PassChange> check_for_materialization();

  // Records a verdict for a live suspicious buffered entry; the effect is
  // applied by the next materialization pass. Returns false (and changes
  // nothing) for unknown, non-suspicious, already-decided or terminal ids.
  bool apply_review(const std::string& id, ReviewVerdict verdict);

  std::optional<TransactionStatus> status_of(const std::string& id) const;

  MetricsSnapshot metrics_snapshot() const;

  // Live suspicious entries still awaiting a verdict, in insertion order.
  std::vector<std::string> reviewable_ids() const;

  const DependencyMatrix& matrix() const { return matrix_; }
  const std::vector<TransitionEvent>& event_log() const { return events_; }
  const ManagerConfig& config() const { return config_; }

 private:
  std::vector<DependencyVerdict> scan_dependencies(const Transaction& txn) const;
  DependencyVerdict check_pair(const Transaction& earlier, const Transaction& later) const;
  void transition(const std::string& id, TransactionStatus to, const std::string& rule = {});
  CommitOutcome commit_to_sink(const Transaction& txn);
  void release_and_remove(std::size_t idx);

  const TemplateRegistry& templates_;
  std::vector<InvariantDecl> invariants_;
  ManagerConfig config_;
  CommitSink sink_;
  const PairDependencyRegistry* pairs_;

  DependencyMatrix matrix_;
  std::unordered_map<std::string, TransactionStatus> status_table_;
  std::vector<TransitionEvent> events_;
  std::uint64_t arrival_counter_ = 0;
  std::uint64_t event_counter_ = 0;
  std::uint64_t total_seen_ = 0;
  std::uint64_t committed_ = 0;
  std::uint64_t removed_ = 0;
  std::uint64_t discarded_ = 0;
};

}  // namespace isatx

#endif  // ISATX_MANAGER_HPP
