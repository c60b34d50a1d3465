#ifndef ISATX_TESTS_TOY_ORACLE_HPP
#define ISATX_TESTS_TOY_ORACLE_HPP

// Brute-force dependency oracle for bound (check/counter) invariants over a
// toy numeric store. Independent of the rule-table path: it decides
// dependency by enumerating states, not by scope matching.
//
// Model: every (table, column, row) cell holds an integer in [min_value,
// max_value]. An Increment/Decrement applies an amount from `amounts` to one
// cell; an UNKNOWN row or column ranges over the whole domain. A cell is
// constrained iff it falls under the invariant's attachment; CheckMore /
// CounterMore demand value > 0, CheckLess / CounterLess demand value <
// max_value + 1 after start from a valid state.
//
// Two actions conflict iff some binding, amounts and valid initial state
// exist where each action alone lands in a valid state but applying both
// breaches the bound — exactly the situation where committing the second
// while the first is pending (or removing the first after both committed)
// violates the constraint.

#include <algorithm>
#include <string>
#include <vector>

#include "isatx/types.hpp"

namespace isatx::testsupport {

struct ToyDomain {
  std::vector<std::string> tables{"acct", "other"};
  std::vector<std::string> columns{"bal", "pts"};
  std::vector<std::string> rows{"r1", "r2", "r3"};
  int min_value = 0;
  int max_value = 5;
  std::vector<int> amounts{1, 2};
};

inline bool is_bound_kind(InvariantKind kind) {
  return kind == InvariantKind::CheckMore || kind == InvariantKind::CheckLess ||
         kind == InvariantKind::CounterMore || kind == InvariantKind::CounterLess;
}

namespace detail {

struct Cell {
  std::string table, column, row;
  bool operator==(const Cell&) const = default;
};

inline bool constrained(const Cell& cell, const InvariantDecl& inv) {
  if (cell.table != inv.scope.table) return false;
  if (!inv.scope.columns.empty() &&
      std::find(inv.scope.columns.begin(), inv.scope.columns.end(), cell.column) ==
          inv.scope.columns.end()) {
    return false;
  }
  if (!inv.scope.rows.empty() &&
      std::find(inv.scope.rows.begin(), inv.scope.rows.end(), cell.row) == inv.scope.rows.end()) {
    return false;
  }
  return true;
}

inline bool valid_value(int v, const InvariantDecl& inv, const ToyDomain& dom) {
  bool lower_bound =
      inv.kind == InvariantKind::CheckMore || inv.kind == InvariantKind::CounterMore;
  return lower_bound ? v > 0 : v <= dom.max_value;
}

inline int apply(int v, ActionKind kind, int amount) {
  return kind == ActionKind::Increment ? v + amount : v - amount;
}

inline std::vector<Cell> bindings(const ActionDescriptor& a, const ToyDomain& dom) {
  std::vector<std::string> cols =
      is_unknown(a.column) ? dom.columns : std::vector<std::string>{a.column};
  std::vector<std::string> rows = is_unknown(a.row) ? dom.rows : std::vector<std::string>{a.row};
  std::vector<Cell> out;
  for (const auto& c : cols) {
    for (const auto& r : rows) out.push_back(Cell{a.table, c, r});
  }
  return out;
}

// Each action alone keeps the cell valid, both together breach. Disjoint
// cells can never jointly breach: each cell changes exactly once, so the
// merged state per cell equals the single-action state.
inline bool breach_exists(const Cell& c1, ActionKind k1, const Cell& c2, ActionKind k2,
                          const InvariantDecl& inv, const ToyDomain& dom) {
  if (!(c1 == c2)) return false;
  if (!constrained(c1, inv)) return false;
  for (int amount1 : dom.amounts) {
    for (int amount2 : dom.amounts) {
      for (int v = dom.min_value; v <= dom.max_value; ++v) {
        if (!valid_value(v, inv, dom)) continue;  // start from a valid state
        int after1 = apply(v, k1, amount1);
        int after2 = apply(v, k2, amount2);
        int both = apply(after1, k2, amount2);
        if (valid_value(after1, inv, dom) && valid_value(after2, inv, dom) &&
            !valid_value(both, inv, dom)) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

// True iff committing both actions can strand the first one: some binding of
// unknown fields, some amounts and some valid initial state make each action
// individually safe while the merged effect breaks the bound.
inline bool oracle_depends(const ActionDescriptor& a1, const ActionDescriptor& a2,
                           const InvariantDecl& inv, const ToyDomain& dom = {}) {
  if (!is_bound_kind(inv.kind)) return false;
  bool numeric1 = a1.kind == ActionKind::Increment || a1.kind == ActionKind::Decrement;
  bool numeric2 = a2.kind == ActionKind::Increment || a2.kind == ActionKind::Decrement;
  if (!numeric1 || !numeric2) return false;
  for (const auto& c1 : detail::bindings(a1, dom)) {
    for (const auto& c2 : detail::bindings(a2, dom)) {
      if (detail::breach_exists(c1, a1.kind, c2, a2.kind, inv, dom)) return true;
    }
  }
  return false;
}

}  // namespace isatx::testsupport

#endif  // ISATX_TESTS_TOY_ORACLE_HPP
