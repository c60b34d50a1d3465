#include "isatx/template_registry.hpp"

#include <stdexcept>

#include "isatx/schema.hpp"

namespace isatx {

void TemplateRegistry::register_template(const std::string& name, ActionBuilder builder,
                                         std::optional<ActionBuilder> compensator) {
  if (templates_.count(name) != 0) {
    throw std::invalid_argument("template already registered: " + name);
  }
  if (!builder) {
    throw std::invalid_argument("template builder must be callable: " + name);
  }
  templates_.emplace(name, Entry{std::move(builder), std::move(compensator)});
}

bool TemplateRegistry::has_template(const std::string& name) const {
  return templates_.count(name) != 0;
}

std::vector<ActionDescriptor> TemplateRegistry::build_actions(const std::string& name,
                                                              const TemplateParams& params) const {
  auto it = templates_.find(name);
  if (it == templates_.end()) {
    throw std::invalid_argument("unknown template: " + name);
  }
  return it->second.builder(params);
}

bool TemplateRegistry::has_compensator(const std::string& name) const {
  auto it = templates_.find(name);
  return it != templates_.end() && it->second.compensator.has_value();
}

std::optional<CompensatingTransaction> TemplateRegistry::build_compensation(
    const Transaction& txn) const {
  auto it = templates_.find(txn.template_name);
  if (it == templates_.end()) {
    throw std::invalid_argument("unknown template: " + txn.template_name);
  }
  if (!it->second.compensator) return std::nullopt;
  CompensatingTransaction comp;
  comp.for_txn = txn.id;
  comp.actions = (*it->second.compensator)(txn.params);
  return comp;
}

std::vector<std::string> TemplateRegistry::template_names() const {
  std::vector<std::string> names;
  names.reserve(templates_.size());
  for (const auto& [name, entry] : templates_) names.push_back(name);
  return names;
}

void validate_invariants(const SchemaRegistry& schema, const std::vector<InvariantDecl>& decls) {
  auto require = [&](const std::string& table, const InvariantDecl& d) {
    if (!table.empty() && !schema.has_table(table)) {
      throw std::invalid_argument(std::string(to_string(d.kind)) +
                                  " invariant references unknown table: " + table);
    }
  };
  for (const auto& d : decls) {
    if (d.scope.table.empty()) {
      throw std::invalid_argument(std::string(to_string(d.kind)) +
                                  " invariant must attach to a table");
    }
    require(d.scope.table, d);
    require(d.params.table_a, d);
    require(d.params.table_b, d);
    if (d.kind == InvariantKind::ForeignKey &&
        (d.params.table_a.empty() || d.params.table_b.empty())) {
      throw std::invalid_argument("ForeignKey invariant must declare both tables");
    }
  }
}

}  // namespace isatx
