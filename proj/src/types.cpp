#include "isatx/types.hpp"

#include <cstdio>

namespace isatx {

InvariantDecl make_uniqueness(std::string table, std::vector<std::string> columns) {
  InvariantDecl d;
  d.kind = InvariantKind::Uniqueness;
  d.scope.table = std::move(table);
  d.scope.columns = std::move(columns);
  return d;
}

InvariantDecl make_foreign_key(std::string referenced_table, std::string referencing_table) {
  InvariantDecl d;
  d.kind = InvariantKind::ForeignKey;
  d.scope.table = referenced_table;
  d.params.table_a = std::move(referenced_table);
  d.params.table_b = std::move(referencing_table);
  return d;
}

InvariantDecl make_auto_increment(std::string table) {
  InvariantDecl d;
  d.kind = InvariantKind::AutoIncrement;
  d.scope.table = std::move(table);
  return d;
}

InvariantDecl make_check_bound(InvariantKind kind, std::string table, std::string column) {
  InvariantDecl d;
  d.kind = kind;
  d.scope.table = std::move(table);
  d.scope.columns = {std::move(column)};
  return d;
}

InvariantDecl make_collection_size(std::string table) {
  InvariantDecl d;
  d.kind = InvariantKind::CollectionSize;
  d.scope.table = std::move(table);
  return d;
}

InvariantDecl make_tree_parent(std::string table) {
  InvariantDecl d;
  d.kind = InvariantKind::TreeParent;
  d.scope.table = std::move(table);
  return d;
}

InvariantDecl make_graph_acyclic(std::string table, std::string reference_column) {
  InvariantDecl d;
  d.kind = InvariantKind::GraphAcyclic;
  d.scope.table = std::move(table);
  d.scope.columns = {std::move(reference_column)};
  return d;
}

InvariantDecl make_sequential_order(std::string table, std::string first_column,
                                    std::string second_column) {
  InvariantDecl d;
  d.kind = InvariantKind::SequentialOrder;
  d.scope.table = std::move(table);
  d.scope.columns = {first_column, second_column};
  d.params.column_a = std::move(first_column);
  d.params.column_b = std::move(second_column);
  return d;
}

InvariantDecl make_conditional_value(std::string constraining_table,
                                     std::string constrained_table) {
  InvariantDecl d;
  d.kind = InvariantKind::ConditionalValue;
  d.scope.table = constraining_table;
  d.params.table_a = std::move(constraining_table);
  d.params.table_b = std::move(constrained_table);
  return d;
}

InvariantDecl make_session_consistency(std::string table) {
  InvariantDecl d;
  d.kind = InvariantKind::SessionConsistency;
  d.scope.table = std::move(table);
  return d;
}

InvariantDecl make_sequence_requirement(std::string first_table, std::string second_table) {
  InvariantDecl d;
  d.kind = InvariantKind::SequenceRequirement;
  d.scope.table = first_table;
  d.params.table_a = std::move(first_table);
  d.params.table_b = std::move(second_table);
  return d;
}

InvariantDecl make_grouped_actions(std::string table_a, std::string table_b) {
  InvariantDecl d;
  d.kind = InvariantKind::GroupedActions;
  d.scope.table = table_a;
  d.params.table_a = std::move(table_a);
  d.params.table_b = std::move(table_b);
  return d;
}

InvariantDecl make_branching_logic(std::string table) {
  InvariantDecl d;
  d.kind = InvariantKind::BranchingLogic;
  d.scope.table = std::move(table);
  return d;
}

bool fully_bound(const Transaction& txn) {
  for (const auto& a : txn.actions) {
    if (is_unknown(a.column) || is_unknown(a.row)) return false;
  }
  return true;
}

std::string format_txn_id(std::uint64_t seq) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "txn-%06llu", static_cast<unsigned long long>(seq));
  return buf;
}

std::string_view to_string(ActionKind k) {
  switch (k) {
    case ActionKind::Insert: return "Insert";
    case ActionKind::Update: return "Update";
    case ActionKind::Delete: return "Delete";
    case ActionKind::Increment: return "Increment";
    case ActionKind::Decrement: return "Decrement";
    case ActionKind::Mutate: return "Mutate";
    case ActionKind::Read: return "Read";
  }
  return "?";
}

std::string_view to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Uniqueness: return "Uniqueness";
    case InvariantKind::ForeignKey: return "ForeignKey";
    case InvariantKind::AutoIncrement: return "AutoIncrement";
    case InvariantKind::CheckLess: return "CheckLess";
    case InvariantKind::CheckMore: return "CheckMore";
    case InvariantKind::CounterLess: return "CounterLess";
    case InvariantKind::CounterMore: return "CounterMore";
    case InvariantKind::CollectionSize: return "CollectionSize";
    case InvariantKind::TreeParent: return "TreeParent";
    case InvariantKind::GraphAcyclic: return "GraphAcyclic";
    case InvariantKind::SequentialOrder: return "SequentialOrder";
    case InvariantKind::ConditionalValue: return "ConditionalValue";
    case InvariantKind::SessionConsistency: return "SessionConsistency";
    case InvariantKind::SequenceRequirement: return "SequenceRequirement";
    case InvariantKind::GroupedActions: return "GroupedActions";
    case InvariantKind::BranchingLogic: return "BranchingLogic";
  }
  return "?";
}

std::string_view to_string(CompletenessLevel l) {
  switch (l) {
    case CompletenessLevel::CompleteQuery: return "CompleteQuery";
    case CompletenessLevel::PartialQuery: return "PartialQuery";
    case CompletenessLevel::NoInvariantInfo: return "NoInvariantInfo";
  }
  return "?";
}

std::string_view to_string(TransactionStatus s) {
  switch (s) {
    case TransactionStatus::Submitted: return "submitted";
    case TransactionStatus::Buffered: return "buffered";
    case TransactionStatus::Held: return "held";
    case TransactionStatus::Committed: return "committed";
    case TransactionStatus::Removed: return "removed";
    case TransactionStatus::Discarded: return "discarded";
  }
  return "?";
}

std::string_view level_token(CompletenessLevel l) {
  switch (l) {
    case CompletenessLevel::CompleteQuery: return "complete";
    case CompletenessLevel::PartialQuery: return "partial";
    case CompletenessLevel::NoInvariantInfo: return "none";
  }
  return "?";
}

std::optional<CompletenessLevel> parse_level_token(std::string_view token) {
  if (token == "complete") return CompletenessLevel::CompleteQuery;
  if (token == "partial") return CompletenessLevel::PartialQuery;
  if (token == "none") return CompletenessLevel::NoInvariantInfo;
  return std::nullopt;
}

std::optional<TransactionStatus> parse_status(std::string_view s) {
  if (s == "submitted") return TransactionStatus::Submitted;
  if (s == "buffered") return TransactionStatus::Buffered;
  if (s == "held") return TransactionStatus::Held;
  if (s == "committed") return TransactionStatus::Committed;
  if (s == "removed") return TransactionStatus::Removed;
  if (s == "discarded") return TransactionStatus::Discarded;
  return std::nullopt;
}

std::string describe(const ActionDescriptor& a) {
  std::string out;
  out += to_string(a.kind);
  out += '(';
  out += a.table;
  out += '.';
  out += a.column;
  out += '@';
  out += a.row;
  out += ')';
  return out;
}

}  // namespace isatx
