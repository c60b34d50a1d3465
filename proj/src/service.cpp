#include "isatx/service.hpp"

#include <limits>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

namespace isatx {

void TickConfig::validate() const {
  if (tick_interval.count() <= 0) throw std::invalid_argument("tick_interval must be > 0");
}

MiddlewareService::MiddlewareService(const TemplateRegistry& templates,
                                     const SchemaRegistry& schema,
                                     std::vector<InvariantDecl> invariants,
                                     ManagerConfig manager_config, TickConfig tick_config,
                                     CommitSink sink, const PairDependencyRegistry* pairs)
    : templates_(templates),
      manager_(templates, schema, std::move(invariants), manager_config, std::move(sink), pairs),
      tick_config_(tick_config) {
  tick_config_.validate();
}

MiddlewareService::~MiddlewareService() { stop_ticker(); }

std::string MiddlewareService::handle_transaction_request(
    const std::string& transaction_name, const TemplateParams& transaction_parameters) {
  std::lock_guard lock(mutex_);
  RequestEnvelope env;
  env.endpoint = Endpoint::TransactionRequest;
  env.received_seq = ++received_seq_;
  env.txn.id = format_txn_id(++id_counter_);
  env.txn.template_name = transaction_name;
  env.txn.params = transaction_parameters;
  // "suspicious" is caller metadata (the gateway knows which requests came
  // from an LLM), not a template parameter.
  if (auto it = env.txn.params.find("suspicious"); it != env.txn.params.end()) {
    env.txn.suspicious = it->second == "true" || it->second == "1";
    env.txn.params.erase(it);
  }
  // Built here so unknown templates and malformed parameters fail the request
  // synchronously; the manager sees a fully-formed transaction at tick time.
  env.txn.actions = templates_.build_actions(transaction_name, env.txn.params);
  std::string id = env.txn.id;
  overlay_[id] = TransactionStatus::Submitted;
  request_queue_.push_back(std::move(env));
  return id;
}

std::string MiddlewareService::handle_transaction_review(const std::string& transaction_id,
                                                         ReviewVerdict decision) {
  std::lock_guard lock(mutex_);
  RequestEnvelope env;
  env.endpoint = Endpoint::TransactionReview;
  env.received_seq = ++received_seq_;
  env.transaction_id = transaction_id;
  env.decision = decision;
  decision_buffer_.push_back(std::move(env));
  return "acknowledged";
}

std::string MiddlewareService::handle_transaction_status(const std::string& transaction_id) const {
  std::lock_guard lock(mutex_);
  if (auto status = manager_.status_of(transaction_id); status.has_value()) {
    return std::string(to_string(*status));
  }
  if (auto it = overlay_.find(transaction_id); it != overlay_.end()) {
    return std::string(to_string(it->second));
  }
  return "not_found";
}

TickReport MiddlewareService::manager_tick() {
  std::lock_guard lock(mutex_);
  TickReport report;

  // Decisions first: a verdict submitted before a dependent request must take
  // effect before that request is admitted.
  std::deque<RequestEnvelope> decisions;
  decisions.swap(decision_buffer_);
  for (const auto& env : decisions) {
    if (manager_.apply_review(env.transaction_id, env.decision)) {
      ++report.decisions_applied;
    } else {
      report.decisions_without_effect.push_back(env.transaction_id);
    }
  }

  report.materialized = manager_.check_for_materialization();

  std::size_t limit = tick_config_.max_intake_per_tick.value_or(
      std::numeric_limits<std::size_t>::max());
  while (!request_queue_.empty() && report.requests_processed < limit) {
    RequestEnvelope env = std::move(request_queue_.front());
    request_queue_.pop_front();
    std::string id = env.txn.id;
    try {
      manager_.process_transaction(std::move(env.txn));
      overlay_.erase(id);
    } catch (const std::exception&) {
      overlay_[id] = TransactionStatus::Discarded;
      report.intake_failures.push_back(id);
    }
    ++report.requests_processed;
  }
  return report;
}

void MiddlewareService::start_ticker() {
  bool expected = false;
  if (!ticking_.compare_exchange_strong(expected, true)) return;
  ticker_ = std::thread([this] {
    while (ticking_.load()) {
      manager_tick();
      std::this_thread::sleep_for(tick_config_.tick_interval);
    }
  });
}

void MiddlewareService::stop_ticker() {
  bool expected = true;
  if (!ticking_.compare_exchange_strong(expected, false)) return;
  if (ticker_.joinable()) ticker_.join();
}

std::size_t MiddlewareService::queued_requests() const {
  std::lock_guard lock(mutex_);
  return request_queue_.size();
}

std::size_t MiddlewareService::queued_decisions() const {
  std::lock_guard lock(mutex_);
  return decision_buffer_.size();
}

MetricsSnapshot MiddlewareService::metrics() const {
  std::lock_guard lock(mutex_);
  return manager_.metrics_snapshot();
}

std::vector<TransitionEvent> MiddlewareService::event_log_snapshot() const {
  std::lock_guard lock(mutex_);
  return manager_.event_log();
}

std::uint64_t MiddlewareService::last_received_seq() const {
  std::lock_guard lock(mutex_);
  return received_seq_;
}

namespace {

using nlohmann::json;

std::optional<json> parse_body(const std::string& body, httplib::Response& res) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    res.status = 400;
    res.set_content(R"({"error":"body must be a JSON object"})", "application/json");
    return std::nullopt;
  }
  return parsed;
}

std::optional<std::string> require_string(const json& body, const char* field,
                                          httplib::Response& res) {
  if (!body.contains(field) || !body[field].is_string()) {
    res.status = 400;
    res.set_content(std::string(R"({"error":"missing string field: )") + field + "\"}",
                    "application/json");
    return std::nullopt;
  }
  return body[field].get<std::string>();
}

}  // namespace

void attach_routes(httplib::Server& server, MiddlewareService& service) {
  server.Post("/transaction_request", [&service](const httplib::Request& req,
                                                 httplib::Response& res) {
    auto body = parse_body(req.body, res);
    if (!body) return;
    auto name = require_string(*body, "transaction_name", res);
    if (!name) return;
    if (!body->contains("transaction_parameters") || !(*body)["transaction_parameters"].is_object()) {
      res.status = 400;
      res.set_content(R"({"error":"missing object field: transaction_parameters"})",
                      "application/json");
      return;
    }
    TemplateParams params;
    for (const auto& [key, value] : (*body)["transaction_parameters"].items()) {
      if (value.is_string()) {
        params[key] = value.get<std::string>();
      } else {
        params[key] = value.dump();
      }
    }
    try {
      std::string id = service.handle_transaction_request(*name, params);
      res.set_content(json{{"transaction_id", id}}.dump(), "application/json");
    } catch (const std::exception& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });

  server.Post("/transaction_review", [&service](const httplib::Request& req,
                                                httplib::Response& res) {
    auto body = parse_body(req.body, res);
    if (!body) return;
    auto id = require_string(*body, "transaction_id", res);
    if (!id) return;
    auto decision = require_string(*body, "decision", res);
    if (!decision) return;
    ReviewVerdict verdict;
    if (*decision == "accept") {
      verdict = ReviewVerdict::Accept;
    } else if (*decision == "remove") {
      verdict = ReviewVerdict::Remove;
    } else {
      res.status = 400;
      res.set_content(R"({"error":"decision must be \"accept\" or \"remove\""})",
                      "application/json");
      return;
    }
    std::string status = service.handle_transaction_review(*id, verdict);
    res.set_content(json{{"status", status}}.dump(), "application/json");
  });

  server.Post("/transaction_status", [&service](const httplib::Request& req,
                                                httplib::Response& res) {
    auto body = parse_body(req.body, res);
    if (!body) return;
    auto id = require_string(*body, "transaction_id", res);
    if (!id) return;
    std::string status = service.handle_transaction_status(*id);
    if (status == "not_found") res.status = 404;
    res.set_content(json{{"transaction_status", status}}.dump(), "application/json");
  });
}

}  // namespace isatx
