#ifndef ISATX_TYPES_HPP
#define ISATX_TYPES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isatx {

// Sentinel for a row/column identifier that is not yet bound (partial query).
// It is an explicit value, not an absence: completeness is checkable per
// transaction by scanning for it.
inline constexpr std::string_view kUnknownField{"?"};

inline bool is_unknown(std::string_view v) { return v == kUnknownField; }

// Increment/Decrement target a numeric column; Mutate targets a
// collection-typed table.
enum class ActionKind {
  Insert,
  Update,
  Delete,
  Increment,
  Decrement,
  Mutate,
  Read,
};

// Reference metadata an action may carry. Which fields are meaningful depends
// on the invariant being checked: referenced_{table,key} for foreign-key and
// corresponds-to style scopes, parent_row for tree edges, edge_{from,to} for
// graph edges, user_id for session checks, group_id for grouped actions,
// condition_source for branching logic (the transaction whose result this
// action consumes).
struct LinkInfo {
  std::string referenced_table;
  std::string referenced_key;
  std::string parent_row;
  std::string edge_from;
  std::string edge_to;
  std::string user_id;
  std::string group_id;
  std::string condition_source;
};

// One logical database action: the unit the dependency checker reasons over.
struct ActionDescriptor {
  ActionKind kind = ActionKind::Read;
  std::string table;
  std::string column{kUnknownField};
  std::string row{kUnknownField};
  std::optional<LinkInfo> link;
};

// The sixteen declarable constraint kinds, one per rule-matrix row.
enum class InvariantKind {
  Uniqueness,
  ForeignKey,
  AutoIncrement,
  CheckLess,
  CheckMore,
  CounterLess,
  CounterMore,
  CollectionSize,
  TreeParent,
  GraphAcyclic,
  SequentialOrder,
  ConditionalValue,
  SessionConsistency,
  SequenceRequirement,
  GroupedActions,
  BranchingLogic,
};

inline constexpr int kInvariantKindCount = 16;

// Ordered by information content: CompleteQuery > PartialQuery > NoInvariantInfo.
enum class CompletenessLevel {
  CompleteQuery,
  PartialQuery,
  NoInvariantInfo,
};

inline constexpr int kCompletenessLevelCount = 3;

struct InvariantScope {
  std::string table;
  std::vector<std::string> columns;  // empty = whole table
  std::vector<std::string> rows;     // empty = all rows
};

// Kind-specific parameters. The generic pair covers every kind that relates
// two tables or two columns:
//   table_a/table_b  — ForeignKey referenced/referencing, SequenceRequirement
//                      first/second stage, GroupedActions member pair,
//                      ConditionalValue constraining/constrained tables
//   column_a/column_b — SequentialOrder ordered column pair
struct InvariantParams {
  std::string table_a;
  std::string table_b;
  std::string column_a;
  std::string column_b;
};

struct InvariantDecl {
  InvariantKind kind = InvariantKind::Uniqueness;
  InvariantScope scope;
  InvariantParams params;
};

// Factory helpers so fixtures read like declarations.
InvariantDecl make_uniqueness(std::string table, std::vector<std::string> columns);
InvariantDecl make_foreign_key(std::string referenced_table, std::string referencing_table);
InvariantDecl make_auto_increment(std::string table);
InvariantDecl make_check_bound(InvariantKind kind, std::string table, std::string column);
InvariantDecl make_collection_size(std::string table);
InvariantDecl make_tree_parent(std::string table);
InvariantDecl make_graph_acyclic(std::string table, std::string reference_column);
InvariantDecl make_sequential_order(std::string table, std::string first_column,
                                    std::string second_column);
InvariantDecl make_conditional_value(std::string constraining_table, std::string constrained_table);
InvariantDecl make_session_consistency(std::string table);
InvariantDecl make_sequence_requirement(std::string first_table, std::string second_table);
InvariantDecl make_grouped_actions(std::string table_a, std::string table_b);
InvariantDecl make_branching_logic(std::string table);

enum class TransactionStatus {
  Submitted,
  Buffered,
  Held,
  Committed,
  Removed,
  Discarded,
};

inline bool is_terminal(TransactionStatus s) {
  return s == TransactionStatus::Committed || s == TransactionStatus::Removed ||
         s == TransactionStatus::Discarded;
}

using TemplateParams = std::map<std::string, std::string>;

struct Transaction {
  std::string id;
  std::string template_name;
  TemplateParams params;
  std::vector<ActionDescriptor> actions;
  bool suspicious = false;
  std::uint64_t arrival_seq = 0;
  TransactionStatus status = TransactionStatus::Submitted;
};

struct CompensatingTransaction {
  std::string for_txn;
  std::vector<ActionDescriptor> actions;
};

// True iff every action's row and column are bound (CompleteQuery requirement).
bool fully_bound(const Transaction& txn);

// Canonical transaction id format, e.g. format_txn_id(7) == "txn-000007".
std::string format_txn_id(std::uint64_t seq);

std::string_view to_string(ActionKind k);
std::string_view to_string(InvariantKind k);
std::string_view to_string(CompletenessLevel l);
std::string_view to_string(TransactionStatus s);

// CLI/config tokens: complete | partial | none.
std::string_view level_token(CompletenessLevel l);
std::optional<CompletenessLevel> parse_level_token(std::string_view token);

std::optional<TransactionStatus> parse_status(std::string_view s);

// One-line rendering used by explanations and the event log.
std::string describe(const ActionDescriptor& a);

}  // namespace isatx

#endif  // ISATX_TYPES_HPP
