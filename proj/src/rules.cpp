#include "isatx/rules.hpp"

namespace isatx {

namespace {

constexpr ActionKind kWriteKinds[] = {
    ActionKind::Insert,    ActionKind::Update,    ActionKind::Delete,
    ActionKind::Increment, ActionKind::Decrement, ActionKind::Mutate,
};

constexpr ActionKind kUpsertKinds[] = {ActionKind::Insert, ActionKind::Update};

}  // namespace

std::string_view to_string(MatchScope s) {
  switch (s) {
    case MatchScope::SameField: return "SameField";
    case MatchScope::SameRow: return "SameRow";
    case MatchScope::SameColumn: return "SameColumn";
    case MatchScope::SameTable: return "SameTable";
    case MatchScope::ReferencesDeletedRow: return "ReferencesDeletedRow";
    case MatchScope::ReferencesAnyKeyInReferencedTable:
      return "ReferencesAnyKeyInReferencedTable";
    case MatchScope::ChildOfDeletedRow: return "ChildOfDeletedRow";
    case MatchScope::SameReferenceColumn: return "SameReferenceColumn";
    case MatchScope::ConstrainedByRow: return "ConstrainedByRow";
    case MatchScope::ConstrainedByAnyRowInTable: return "ConstrainedByAnyRowInTable";
    case MatchScope::SameTableDifferentUsers: return "SameTableDifferentUsers";
    case MatchScope::CorrespondsToSpecificInsert: return "CorrespondsToSpecificInsert";
    case MatchScope::CorrespondsToAnyInsertInTable: return "CorrespondsToAnyInsertInTable";
    case MatchScope::AlwaysWait: return "AlwaysWait";
  }
  return "?";
}

std::size_t RuleTable::cell(InvariantKind kind, ActionKind a1, ActionKind a2,
                            CompletenessLevel level) {
  auto k = static_cast<std::size_t>(kind);
  auto x = static_cast<std::size_t>(a1);
  auto y = static_cast<std::size_t>(a2);
  auto l = static_cast<std::size_t>(level);
  return ((k * kActionKinds + x) * kActionKinds + y) * kCompletenessLevelCount + l;
}

void RuleTable::set(InvariantKind kind, ActionKind a1, ActionKind a2, MatchScope complete,
                    MatchScope partial, MatchScope no_info) {
  cells_[cell(kind, a1, a2, CompletenessLevel::CompleteQuery)] = complete;
  cells_[cell(kind, a1, a2, CompletenessLevel::PartialQuery)] = partial;
  cells_[cell(kind, a1, a2, CompletenessLevel::NoInvariantInfo)] = no_info;
}

RuleTable::RuleTable() {
  using K = InvariantKind;
  using A = ActionKind;
  using S = MatchScope;

  // Database constraints.
  for (A a1 : kUpsertKinds) {
    for (A a2 : kUpsertKinds) {
      set(K::Uniqueness, a1, a2, S::SameColumn, S::SameTable, S::SameTable);
    }
  }
  // First transaction deletes a key in the referenced table (no cascading
  // delete); second inserts into the referencing table.
  set(K::ForeignKey, A::Delete, A::Insert, S::ReferencesDeletedRow,
      S::ReferencesAnyKeyInReferencedTable, S::ReferencesAnyKeyInReferencedTable);
  set(K::AutoIncrement, A::Insert, A::Insert, S::SameTable, S::SameTable, S::SameTable);
  set(K::CheckLess, A::Increment, A::Increment, S::SameField, S::SameColumn, S::SameTable);
  // A lower bound is threatened by decrements on both sides; the coarser
  // levels widen the reach, not the action vocabulary.
  set(K::CheckMore, A::Decrement, A::Decrement, S::SameField, S::SameColumn, S::SameTable);

  // Abstract data type constraints.
  set(K::CounterLess, A::Increment, A::Increment, S::SameField, S::SameColumn, S::SameTable);
  set(K::CounterMore, A::Decrement, A::Decrement, S::SameField, S::SameColumn, S::SameTable);
  set(K::CollectionSize, A::Mutate, A::Mutate, S::SameTable, S::SameTable, S::SameTable);
  set(K::TreeParent, A::Delete, A::Insert, S::ChildOfDeletedRow, S::SameTable, S::SameTable);
  set(K::GraphAcyclic, A::Insert, A::Insert, S::SameReferenceColumn, S::SameReferenceColumn,
      S::SameTable);

  // Application data constraints.
  for (A a1 : kUpsertKinds) {
    for (A a2 : kUpsertKinds) {
      set(K::SequentialOrder, a1, a2, S::SameRow, S::SameTable, S::SameTable);
      set(K::ConditionalValue, a1, a2, S::ConstrainedByRow, S::ConstrainedByAnyRowInTable,
          S::ConstrainedByAnyRowInTable);
    }
  }
  // Session consistency covers any state-changing action pair; reads never
  // conflict.
  for (A a1 : kWriteKinds) {
    for (A a2 : kWriteKinds) {
      set(K::SessionConsistency, a1, a2, S::SameTableDifferentUsers, S::SameTableDifferentUsers,
          S::SameTableDifferentUsers);
    }
  }

  // Application process constraints.
  set(K::SequenceRequirement, A::Insert, A::Insert, S::CorrespondsToSpecificInsert,
      S::CorrespondsToAnyInsertInTable, S::CorrespondsToAnyInsertInTable);
  set(K::GroupedActions, A::Insert, A::Insert, S::AlwaysWait, S::AlwaysWait, S::AlwaysWait);
  set(K::BranchingLogic, A::Update, A::Update, S::ConstrainedByRow, S::SameTable, S::SameTable);
}

const RuleTable& RuleTable::instance() {
  static const RuleTable table;
  return table;
}

std::optional<MatchScope> RuleTable::lookup(InvariantKind kind, ActionKind first,
                                            ActionKind second, CompletenessLevel level) const {
  return cells_[cell(kind, first, second, level)];
}

std::vector<std::string> RuleTable::dump_lines() const {
  std::vector<std::string> lines;
  for (int k = 0; k < kInvariantKindCount; ++k) {
    for (std::size_t x = 0; x < kActionKinds; ++x) {
      for (std::size_t y = 0; y < kActionKinds; ++y) {
        for (int l = 0; l < kCompletenessLevelCount; ++l) {
          auto kind = static_cast<InvariantKind>(k);
          auto a1 = static_cast<ActionKind>(x);
          auto a2 = static_cast<ActionKind>(y);
          auto level = static_cast<CompletenessLevel>(l);
          auto scope = lookup(kind, a1, a2, level);
          if (!scope) continue;
          std::string line;
          line += to_string(kind);
          line += ',';
          line += to_string(a1);
          line += ',';
          line += to_string(a2);
          line += ',';
          line += level_token(level);
          line += " -> ";
          line += to_string(*scope);
          lines.push_back(std::move(line));
        }
      }
    }
  }
  return lines;
}

}  // namespace isatx
