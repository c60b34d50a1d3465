#include "isatx/checker.hpp"

#include <algorithm>
#include <stdexcept>

namespace isatx {

namespace {

// Unknown-tolerant equality: a missing identifier could be anything, so it is
// treated as inside whatever scope is being tested.
bool loose_eq(std::string_view a, std::string_view b) {
  return is_unknown(a) || is_unknown(b) || a == b;
}

bool in_table_scope(const ActionDescriptor& a, const InvariantDecl& inv) {
  return a.table == inv.scope.table;
}

// Column/row attachment filters apply only to sub-table scopes; the coarse
// cells of the rule matrix deliberately drop row/column conditions.
bool in_column_scope(const ActionDescriptor& a, const InvariantDecl& inv) {
  if (inv.scope.columns.empty() || is_unknown(a.column)) return true;
  return std::find(inv.scope.columns.begin(), inv.scope.columns.end(), a.column) !=
         inv.scope.columns.end();
}

bool in_row_scope(const ActionDescriptor& a, const InvariantDecl& inv) {
  if (inv.scope.rows.empty() || is_unknown(a.row)) return true;
  return std::find(inv.scope.rows.begin(), inv.scope.rows.end(), a.row) != inv.scope.rows.end();
}

bool fine_scope(const ActionDescriptor& a, const InvariantDecl& inv) {
  return in_table_scope(a, inv) && in_column_scope(a, inv) && in_row_scope(a, inv);
}

// The invariant's declared table pair, falling back to the attachment table
// when a side is undeclared (conservative).
bool table_pair_holds(const ActionDescriptor& a1, const ActionDescriptor& a2,
                      const InvariantDecl& inv) {
  const std::string& first = inv.params.table_a.empty() ? inv.scope.table : inv.params.table_a;
  if (a1.table != first) return false;
  if (!inv.params.table_b.empty() && a2.table != inv.params.table_b) return false;
  return true;
}

// a2 carries a reference; does it point at the row a1 touched?
bool references_row(const ActionDescriptor& a1, const ActionDescriptor& a2) {
  if (!a2.link) return true;  // no metadata: assume the worst
  if (!a2.link->referenced_table.empty() && a2.link->referenced_table != a1.table) return false;
  if (a2.link->referenced_key.empty()) return true;
  return loose_eq(a2.link->referenced_key, a1.row);
}

bool references_table(const ActionDescriptor& a1, const ActionDescriptor& a2) {
  if (!a2.link || a2.link->referenced_table.empty()) return true;
  return a2.link->referenced_table == a1.table;
}

}  // namespace

bool scope_matches(MatchScope scope, const ActionDescriptor& a1, const ActionDescriptor& a2,
                   const InvariantDecl& inv, std::string_view t1_id) {
  switch (scope) {
    case MatchScope::SameField:
      return a1.table == a2.table && loose_eq(a1.column, a2.column) && loose_eq(a1.row, a2.row) &&
             fine_scope(a1, inv) && fine_scope(a2, inv);

    case MatchScope::SameRow:
      return a1.table == a2.table && loose_eq(a1.row, a2.row) && fine_scope(a1, inv) &&
             fine_scope(a2, inv);

    case MatchScope::SameColumn:
      return a1.table == a2.table && loose_eq(a1.column, a2.column) && fine_scope(a1, inv) &&
             fine_scope(a2, inv);

    case MatchScope::SameTable:
      return a1.table == a2.table && in_table_scope(a1, inv);

    case MatchScope::ReferencesDeletedRow:
      return table_pair_holds(a1, a2, inv) && references_row(a1, a2);

    case MatchScope::ReferencesAnyKeyInReferencedTable:
      return table_pair_holds(a1, a2, inv) && references_table(a1, a2);

    case MatchScope::ChildOfDeletedRow:
      // A row is a node: the inserted child names its parent row.
      return a1.table == a2.table && in_table_scope(a1, inv) &&
             (!a2.link || a2.link->parent_row.empty() || loose_eq(a2.link->parent_row, a1.row));

    case MatchScope::SameReferenceColumn:
      return a1.table == a2.table && loose_eq(a1.column, a2.column) && fine_scope(a1, inv) &&
             fine_scope(a2, inv);

    case MatchScope::ConstrainedByRow:
      if (inv.kind == InvariantKind::BranchingLogic) {
        // The second update consumes the first transaction's result.
        if (a1.table != a2.table || !in_table_scope(a1, inv)) return false;
        if (!a2.link || a2.link->condition_source.empty() || t1_id.empty()) return true;
        return a2.link->condition_source == t1_id;
      }
      // Conditional value: a2's row is constrained by the specific row a1
      // touched in the constraining table.
      return table_pair_holds(a1, a2, inv) && references_row(a1, a2);

    case MatchScope::ConstrainedByAnyRowInTable:
      return table_pair_holds(a1, a2, inv) && references_table(a1, a2);

    case MatchScope::SameTableDifferentUsers: {
      if (a1.table != a2.table || !in_table_scope(a1, inv)) return false;
      // Equal users never conflict with themselves; missing ids are
      // conservative.
      if (a1.link && a2.link && !a1.link->user_id.empty() && !a2.link->user_id.empty()) {
        return a1.link->user_id != a2.link->user_id;
      }
      return true;
    }

    case MatchScope::CorrespondsToSpecificInsert:
      return table_pair_holds(a1, a2, inv) && references_row(a1, a2);

    case MatchScope::CorrespondsToAnyInsertInTable:
      return table_pair_holds(a1, a2, inv) && references_table(a1, a2);

    case MatchScope::AlwaysWait: {
      // Grouped actions: both halves live in the declared table pair.
      const std::string& ta = inv.params.table_a.empty() ? inv.scope.table : inv.params.table_a;
      const std::string& tb = inv.params.table_b.empty() ? ta : inv.params.table_b;
      auto member = [&](const ActionDescriptor& a) { return a.table == ta || a.table == tb; };
      return member(a1) && member(a2);
    }
  }
  return false;
}

DependencyVerdict pair_depends(const Transaction& t1, const Transaction& t2,
                               const std::vector<InvariantDecl>& invariants,
                               CompletenessLevel level) {
  DependencyVerdict verdict;
  const RuleTable& rules = RuleTable::instance();
  for (const auto& inv : invariants) {
    for (const auto& a1 : t1.actions) {
      for (const auto& a2 : t2.actions) {
        auto scope = rules.lookup(inv.kind, a1.kind, a2.kind, level);
        if (!scope) continue;
        if (!scope_matches(*scope, a1, a2, inv, t1.id)) continue;
        verdict.depends = true;
        verdict.matched_rule = {inv.kind, *scope};
        verdict.explanation = std::string(to_string(inv.kind)) + "/" +
                              std::string(to_string(*scope)) + ": " + describe(a1) + " ~ " +
                              describe(a2);
        return verdict;
      }
    }
  }
  return verdict;
}

void PairDependencyRegistry::register_pair(const std::string& first_template,
                                           const std::string& second_template,
                                           PairPredicate predicate) {
  if (!templates_.has_template(first_template)) {
    throw std::invalid_argument("unknown template: " + first_template);
  }
  if (!templates_.has_template(second_template)) {
    throw std::invalid_argument("unknown template: " + second_template);
  }
  pairs_[{first_template, second_template}] = std::move(predicate);
}

bool PairDependencyRegistry::has_pair(const std::string& first_template,
                                      const std::string& second_template) const {
  return pairs_.count({first_template, second_template}) != 0;
}

std::optional<bool> PairDependencyRegistry::check(const Transaction& t1, const Transaction& t2,
                                                  CompletenessLevel level) const {
  auto it = pairs_.find({t1.template_name, t2.template_name});
  if (it == pairs_.end()) return std::nullopt;
  return it->second(t1.params, t2.params, level);
}

std::vector<std::pair<std::string, std::string>> PairDependencyRegistry::registered_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(pairs_.size());
  for (const auto& [key, pred] : pairs_) out.push_back(key);
  return out;
}

}  // namespace isatx
