#ifndef ISATX_RULES_HPP
#define ISATX_RULES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "isatx/types.hpp"

namespace isatx {

// How far a conflict between two actions reaches, given how much is known
// about the queries and the constraint. Coarser scopes lock more.
enum class MatchScope {
  SameField,
  SameRow,
  SameColumn,
  SameTable,
  ReferencesDeletedRow,
  ReferencesAnyKeyInReferencedTable,
  ChildOfDeletedRow,
  SameReferenceColumn,
  ConstrainedByRow,
  ConstrainedByAnyRowInTable,
  SameTableDifferentUsers,
  CorrespondsToSpecificInsert,
  CorrespondsToAnyInsertInTable,
  AlwaysWait,
};

std::string_view to_string(MatchScope s);

// The full rule matrix: which (invariant kind, first action, second action)
// combinations can conflict at all, and at which granularity per completeness
// level. An absent cell means that action pair can never conflict under that
// invariant kind. Lookup is total and O(1).
class RuleTable {
 public:
  // Builds the complete sixteen-row table. Cheap enough to construct freely;
  // callers normally share the instance() singleton.
  RuleTable();

  static const RuleTable& instance();

  std::optional<MatchScope> lookup(InvariantKind kind, ActionKind first, ActionKind second,
                                   CompletenessLevel level) const;

  // One audit line per registered cell: "Kind,Action1,Action2,level -> Scope".
  // Deterministic order: kind, first action, second action, level.
  std::vector<std::string> dump_lines() const;

 private:
  void set(InvariantKind kind, ActionKind a1, ActionKind a2, MatchScope complete,
           MatchScope partial, MatchScope no_info);
  static std::size_t cell(InvariantKind kind, ActionKind a1, ActionKind a2,
                          CompletenessLevel level);

  static constexpr std::size_t kActionKinds = 7;
  static constexpr std::size_t kCells =
      kInvariantKindCount * kActionKinds * kActionKinds * kCompletenessLevelCount;
  std::array<std::optional<MatchScope>, kCells> cells_;
};

inline std::optional<MatchScope> rule_lookup(InvariantKind kind, ActionKind first,
                                             ActionKind second, CompletenessLevel level) {
  return RuleTable::instance().lookup(kind, first, second, level);
}

}  // namespace isatx

#endif  // ISATX_RULES_HPP
