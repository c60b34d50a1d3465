#ifndef ISATX_TESTS_BUILDERS_HPP
#define ISATX_TESTS_BUILDERS_HPP

#include <string>
#include <vector>

#include "isatx/types.hpp"

namespace isatx::testsupport {

inline ActionDescriptor action(ActionKind kind, std::string table, std::string column,
                               std::string row) {
  ActionDescriptor a;
  a.kind = kind;
  a.table = std::move(table);
  a.column = std::move(column);
  a.row = std::move(row);
  return a;
}

inline Transaction txn(std::string id, std::uint64_t arrival_seq,
                       std::vector<ActionDescriptor> actions, bool suspicious = false) {
  Transaction t;
  t.id = std::move(id);
  t.arrival_seq = arrival_seq;
  t.actions = std::move(actions);
  t.suspicious = suspicious;
  return t;
}

}  // namespace isatx::testsupport

#endif  // ISATX_TESTS_BUILDERS_HPP
