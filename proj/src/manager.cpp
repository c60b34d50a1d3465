#include "isatx/manager.hpp"

#include <stdexcept>

namespace isatx {

std::string format_event(const TransitionEvent& e) {
  std::string line = "seq=" + std::to_string(e.seq) + " txn=" + e.txn_id + " " +
                     std::string(to_string(e.from)) + "->" + std::string(to_string(e.to));
  if (!e.matched_rule.empty()) {
    line += " rule=";
    line += e.matched_rule;
  }
  return line;
}

TransactionManager::TransactionManager(const TemplateRegistry& templates,
                                       const SchemaRegistry& schema,
                                       std::vector<InvariantDecl> invariants,
                                       ManagerConfig config, CommitSink sink,
                                       const PairDependencyRegistry* pairs)
    : templates_(templates),
      invariants_(std::move(invariants)),
      config_(config),
      sink_(std::move(sink)),
      pairs_(pairs) {
  validate_invariants(schema, invariants_);
  if (!sink_) {
    sink_ = [](const Transaction&) { return CommitOutcome{}; };
  }
  if (config_.check_mode != DependencyCheckMode::Generic && pairs_ == nullptr) {
    throw std::invalid_argument("registry check mode requires a pair-dependency registry");
  }
}

DependencyVerdict TransactionManager::check_pair(const Transaction& earlier,
                                                 const Transaction& later) const {
  if (config_.check_mode != DependencyCheckMode::Generic && pairs_ != nullptr) {
    auto registered = pairs_->check(earlier, later, config_.level);
    if (registered.has_value()) {
      DependencyVerdict v;
      v.depends = *registered;
      if (v.depends) {
        v.explanation =
            "registered pair: " + earlier.template_name + " -> " + later.template_name;
      }
      return v;
    }
    if (config_.check_mode == DependencyCheckMode::RegistryOnly) return {};
  }
  return pair_depends(earlier, later, invariants_, config_.level);
}

std::vector<DependencyVerdict> TransactionManager::scan_dependencies(
    const Transaction& txn) const {
  std::vector<DependencyVerdict> verdicts(matrix_.size());
  const auto n = static_cast<std::ptrdiff_t>(matrix_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    if (config_.parallel_scan && matrix_.size() >= config_.parallel_scan_min_entries)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    verdicts[static_cast<std::size_t>(i)] =
        check_pair(matrix_.entry(static_cast<std::size_t>(i)).txn, txn);
  }
  return verdicts;
}

void TransactionManager::transition(const std::string& id, TransactionStatus to,
                                    const std::string& rule) {
  auto it = status_table_.find(id);
  TransactionStatus from = it == status_table_.end() ? TransactionStatus::Submitted : it->second;
  status_table_[id] = to;
  if (config_.record_events && to != from) {
    events_.push_back(TransitionEvent{++event_counter_, id, from, to, rule});
  }
}

CommitOutcome TransactionManager::commit_to_sink(const Transaction& txn) { return sink_(txn); }

TransactionStatus TransactionManager::process_transaction(Transaction txn) {
  if (txn.status != TransactionStatus::Submitted) {
    throw std::invalid_argument("transaction must be submitted: " + txn.id);
  }
  if (status_table_.count(txn.id) != 0) {
    throw std::invalid_argument("duplicate transaction id: " + txn.id);
  }
  if (config_.level == CompletenessLevel::CompleteQuery && !fully_bound(txn)) {
    throw std::invalid_argument("unbound action fields under a complete-query manager: " +
                                txn.id);
  }
  txn.arrival_seq = ++arrival_counter_;
  ++total_seen_;
  status_table_.emplace(txn.id, TransactionStatus::Submitted);

  if (config_.strategy == StrategyMode::BufferCompensating && txn.suspicious) {
    // Commit on receipt; what waits for review is the undo, not the original.
    auto comp = templates_.build_compensation(txn);
    if (!comp.has_value()) {
      transition(txn.id, TransactionStatus::Discarded, "uncompensatable");
      ++discarded_;
      return TransactionStatus::Discarded;
    }
    auto outcome = commit_to_sink(txn);
    if (!outcome.accepted) {
      transition(txn.id, TransactionStatus::Discarded, "sink rejected: " + outcome.reason);
      ++discarded_;
      return TransactionStatus::Discarded;
    }
    Transaction comp_txn;
    comp_txn.id = txn.id;
    comp_txn.template_name = txn.template_name + "#undo";
    comp_txn.params = txn.params;
    comp_txn.actions = std::move(comp->actions);
    comp_txn.suspicious = true;
    comp_txn.arrival_seq = txn.arrival_seq;
    comp_txn.status = TransactionStatus::Buffered;

    auto verdicts = scan_dependencies(comp_txn);
    std::string first_rule;
    std::size_t idx = matrix_.add_entry(DependencyMatrix::Entry{
        comp_txn.id, comp_txn.arrival_seq, true, false, false, comp_txn});
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].depends) {
        matrix_.set_dependency(i, idx);
        if (first_rule.empty()) first_rule = verdicts[i].explanation;
      }
    }
    transition(txn.id, TransactionStatus::Buffered, first_rule);
    return TransactionStatus::Buffered;
  }

  auto verdicts = scan_dependencies(txn);
  bool any = false;
  std::string first_rule;
  for (const auto& v : verdicts) {
    if (v.depends) {
      any = true;
      if (first_rule.empty()) first_rule = v.explanation;
    }
  }

  if (txn.suspicious) {
    // Buffered regardless of dependencies; edges record what it waits on.
    txn.status = TransactionStatus::Buffered;
    std::size_t idx = matrix_.add_entry(
        DependencyMatrix::Entry{txn.id, txn.arrival_seq, true, false, false, txn});
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].depends) matrix_.set_dependency(i, idx);
    }
    transition(txn.id, TransactionStatus::Buffered, first_rule);
    return TransactionStatus::Buffered;
  }

  if (any) {
    txn.status = TransactionStatus::Held;
    std::size_t idx = matrix_.add_entry(
        DependencyMatrix::Entry{txn.id, txn.arrival_seq, false, false, false, txn});
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].depends) matrix_.set_dependency(i, idx);
    }
    transition(txn.id, TransactionStatus::Held, first_rule);
    return TransactionStatus::Held;
  }

  auto outcome = commit_to_sink(txn);
  if (!outcome.accepted) {
    transition(txn.id, TransactionStatus::Discarded, "sink rejected: " + outcome.reason);
    ++discarded_;
    return TransactionStatus::Discarded;
  }
  transition(txn.id, TransactionStatus::Committed);
  ++committed_;
  return TransactionStatus::Committed;
}

void TransactionManager::release_and_remove(std::size_t idx) {
  matrix_.clear_row(idx);
  matrix_.remove_entry(idx);
}

std::vector<PassChange> TransactionManager::check_for_materialization() {
  std::vector<PassChange> changes;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      const auto& e = matrix_.entry(i);

      if (e.rejected) {
        if (config_.strategy == StrategyMode::BufferSuspicious) {
          // Never executed, so nothing can be violated by dropping it now;
          // dependents are released, not discarded.
          std::string id = e.id;
          release_and_remove(i);
          transition(id, TransactionStatus::Removed);
          ++removed_;
          changes.push_back({id, TransactionStatus::Removed});
          progress = true;
          break;
        }
        // Compensating mode: removal means executing the undo, which must
        // wait until nothing it depends on is still pending.
        if (matrix_.column_empty(i)) {
          std::string id = e.id;
          Transaction comp_txn = e.txn;
          release_and_remove(i);
          auto outcome = commit_to_sink(comp_txn);
          if (outcome.accepted) {
            transition(id, TransactionStatus::Removed);
            ++removed_;
            changes.push_back({id, TransactionStatus::Removed});
          } else {
            transition(id, TransactionStatus::Discarded, "sink rejected: " + outcome.reason);
            ++discarded_;
            changes.push_back({id, TransactionStatus::Discarded});
          }
          progress = true;
          break;
        }
        continue;
      }

      if ((e.approved || !e.suspicious) && matrix_.column_empty(i)) {
        std::string id = e.id;
        bool already_committed =
            config_.strategy == StrategyMode::BufferCompensating && e.suspicious;
        Transaction txn = e.txn;
        release_and_remove(i);
        if (already_committed) {
          // Accepting keeps the original commit; the buffered undo is dropped.
          transition(id, TransactionStatus::Committed);
          ++committed_;
          changes.push_back({id, TransactionStatus::Committed});
        } else {
          auto outcome = commit_to_sink(txn);
          if (outcome.accepted) {
            transition(id, TransactionStatus::Committed);
            ++committed_;
            changes.push_back({id, TransactionStatus::Committed});
          } else {
            transition(id, TransactionStatus::Discarded, "sink rejected: " + outcome.reason);
            ++discarded_;
            changes.push_back({id, TransactionStatus::Discarded});
          }
        }
        progress = true;
        break;
      }
    }
  }
  return changes;
}

bool TransactionManager::apply_review(const std::string& id, ReviewVerdict verdict) {
  auto idx = matrix_.index_of(id);
  if (!idx.has_value()) return false;
  auto& e = matrix_.entry(*idx);
  if (!e.suspicious) return false;
  if (e.approved || e.rejected) return false;  // first verdict sticks
  if (verdict == ReviewVerdict::Accept) {
    e.approved = true;
  } else {
    e.rejected = true;
  }
  return true;
}

std::optional<TransactionStatus> TransactionManager::status_of(const std::string& id) const {
  auto it = status_table_.find(id);
  if (it == status_table_.end()) return std::nullopt;
  return it->second;
}

MetricsSnapshot TransactionManager::metrics_snapshot() const {
  MetricsSnapshot m;
  m.total_seen = total_seen_;
  m.committed_count = committed_;
  m.removed_count = removed_;
  m.discarded_count = discarded_;
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    const auto& e = matrix_.entry(i);
    auto it = status_table_.find(e.id);
    if (it != status_table_.end() && it->second == TransactionStatus::Held) ++m.held_count;
  }
  // "Buffered" for the availability metric means anything still parked in the
  // buffer, held or awaiting review.
  m.buffered_count = matrix_.size();
  return m;
}

std::vector<std::string> TransactionManager::reviewable_ids() const {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    const auto& e = matrix_.entry(i);
    if (e.suspicious && !e.approved && !e.rejected) ids.push_back(e.id);
  }
  return ids;
}

}  // namespace isatx
