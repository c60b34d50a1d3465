#ifndef ISATX_SCHEMA_HPP
#define ISATX_SCHEMA_HPP

#include <set>
#include <string>
#include <vector>

#include "isatx/types.hpp"

namespace isatx {

// Write-once table catalog. The checker is purely logical, so a table is just
// a name; invariant declarations and incoming actions are validated against it.
class SchemaRegistry {
 public:
  SchemaRegistry() = default;
  explicit SchemaRegistry(std::initializer_list<std::string> tables) {
    for (const auto& t : tables) register_table(t);
  }

  void register_table(std::string name) { tables_.insert(std::move(name)); }
  bool has_table(const std::string& name) const { return tables_.count(name) != 0; }
  const std::set<std::string>& tables() const { return tables_; }

 private:
  std::set<std::string> tables_;
};

// Throws std::invalid_argument naming the first declaration whose attachment
// (or table-pair parameters) references an unknown table.
void validate_invariants(const SchemaRegistry& schema, const std::vector<InvariantDecl>& decls);

}  // namespace isatx

#endif  // ISATX_SCHEMA_HPP
