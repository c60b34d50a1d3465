#ifndef ISATX_SERVICE_HPP
#define ISATX_SERVICE_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "isatx/manager.hpp"

namespace httplib {
class Server;
}

namespace isatx {

enum class Endpoint { TransactionRequest, TransactionReview, TransactionStatus };

struct RequestEnvelope {
  Endpoint endpoint = Endpoint::TransactionRequest;
  std::uint64_t received_seq = 0;
  Transaction txn;             // TransactionRequest payload
  std::string transaction_id;  // TransactionReview payload
  ReviewVerdict decision = ReviewVerdict::Accept;
};

struct TickConfig {
  std::chrono::milliseconds tick_interval{100};
  std::optional<std::size_t> max_intake_per_tick;  // unset = unbounded

  void validate() const;
};

struct TickReport {
  std::size_t decisions_applied = 0;
  std::vector<std::string> decisions_without_effect;  // unknown/ineligible/duplicate
  std::vector<PassChange> materialized;
  std::size_t requests_processed = 0;
  std::vector<std::string> intake_failures;

  bool empty() const {
    return decisions_applied == 0 && decisions_without_effect.empty() && materialized.empty() &&
           requests_processed == 0 && intake_failures.empty();
  }
};

// HTTP-facing facade around the manager: request queue, decision buffer and
// the periodic tick. Handlers never touch manager state; every state change
// happens inside manager_tick, which drains decisions, materializes, then
// takes intake — strictly in that order.
class MiddlewareService {
 public:
  MiddlewareService(const TemplateRegistry& templates, const SchemaRegistry& schema,
                    std::vector<InvariantDecl> invariants, ManagerConfig manager_config = {},
                    TickConfig tick_config = {}, CommitSink sink = nullptr,
                    const PairDependencyRegistry* pairs = nullptr);
  ~MiddlewareService();

  MiddlewareService(const MiddlewareService&) = delete;
  MiddlewareService& operator=(const MiddlewareService&) = delete;

  // Builds the transaction via the registry, assigns an id, records it as
  // submitted and enqueues it. Returns the id immediately; commit status is
  // polled via transaction_status. Throws std::invalid_argument for unknown
  // templates or malformed parameters.
  std::string handle_transaction_request(const std::string& transaction_name,
                                         const TemplateParams& transaction_parameters);

  // Appends the decision to the decision buffer; effect is visible after the
  // next tick. Unknown ids surface through the status table, not here.
  std::string handle_transaction_review(const std::string& transaction_id, ReviewVerdict decision);

  // Status token, or "not_found".
  std::string handle_transaction_status(const std::string& transaction_id) const;

  TickReport manager_tick();

  // Background ticking at tick_interval (the serve tool uses this; tests tick
  // manually). At most one tick runs at a time either way.
  void start_ticker();
  void stop_ticker();

  std::size_t queued_requests() const;
  std::size_t queued_decisions() const;
  MetricsSnapshot metrics() const;
  std::vector<TransitionEvent> event_log_snapshot() const;
  std::uint64_t last_received_seq() const;

 private:
  mutable std::mutex mutex_;
  const TemplateRegistry& templates_;
  TransactionManager manager_;
  TickConfig tick_config_;
  std::deque<RequestEnvelope> request_queue_;
  std::deque<RequestEnvelope> decision_buffer_;
  std::unordered_map<std::string, TransactionStatus> overlay_;  // queued / intake-failed ids
  std::uint64_t received_seq_ = 0;
  std::uint64_t id_counter_ = 0;

  std::thread ticker_;
  std::atomic<bool> ticking_{false};
};

// Binds the three POST endpoints onto an httplib server. Field names are
// fixed: transaction_request {"transaction_name","transaction_parameters"} ->
// {"transaction_id"}; transaction_review {"transaction_id","decision"} ->
// {"status"}; transaction_status {"transaction_id"} -> {"transaction_status"}.
void attach_routes(httplib::Server& server, MiddlewareService& service);

}  // namespace isatx

#endif  // ISATX_SERVICE_HPP
