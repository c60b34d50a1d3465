#ifndef ISATX_TEMPLATE_REGISTRY_HPP
#define ISATX_TEMPLATE_REGISTRY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isatx/types.hpp"

namespace isatx {

using ActionBuilder = std::function<std::vector<ActionDescriptor>(const TemplateParams&)>;

// Transaction templates declare their logical actions directly (no SQL parsing).
// A template may also declare how to undo itself; absence means "no
// compensation exists" and the compensating strategy must refuse it.
// Write-once at startup, read-many afterward.
class TemplateRegistry {
 public:
  void register_template(const std::string& name, ActionBuilder builder,
                         std::optional<ActionBuilder> compensator = std::nullopt);

  bool has_template(const std::string& name) const;

  // Throws std::invalid_argument for an unknown name; the builder itself may
  // throw on incomplete parameters.
  std::vector<ActionDescriptor> build_actions(const std::string& name,
                                              const TemplateParams& params) const;

  bool has_compensator(const std::string& name) const;

  // nullopt when the template declares no compensation.
  std::optional<CompensatingTransaction> build_compensation(const Transaction& txn) const;

  std::vector<std::string> template_names() const;

 private:
  struct Entry {
    ActionBuilder builder;
    std::optional<ActionBuilder> compensator;
  };
  std::map<std::string, Entry> templates_;
};

}  // namespace isatx

#endif  // ISATX_TEMPLATE_REGISTRY_HPP
