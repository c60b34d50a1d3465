#ifndef ISATX_CHECKER_HPP
#define ISATX_CHECKER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isatx/rules.hpp"
#include "isatx/template_registry.hpp"
#include "isatx/types.hpp"

namespace isatx {

struct DependencyVerdict {
  bool depends = false;
  std::optional<std::pair<InvariantKind, MatchScope>> matched_rule;
  std::string explanation;
};

// True iff the two descriptors fall inside `scope` relative to the invariant's
// attachment. Unknown fields under a scope that needs them match conservatively
// (missing information widens the lock, it never errors). `t1_id` is only
// consulted by the branching-logic condition-source check; when empty the
// check is conservative.
bool scope_matches(MatchScope scope, const ActionDescriptor& a1, const ActionDescriptor& a2,
                   const InvariantDecl& inv, std::string_view t1_id = {});

// Pure rule-matrix walk over all (invariant, action-of-t1, action-of-t2)
// triples in declaration order; the verdict reports the first match.
// Precondition: t1 arrived before t2.
DependencyVerdict pair_depends(const Transaction& t1, const Transaction& t2,
                               const std::vector<InvariantDecl>& invariants,
                               CompletenessLevel level);

using PairPredicate =
    std::function<bool(const TemplateParams&, const TemplateParams&, CompletenessLevel)>;

// Developer-registered template-pair dependencies, consulted by the manager
// before (or instead of) the generic checker. Write-once before first check.
class PairDependencyRegistry {
 public:
  explicit PairDependencyRegistry(const TemplateRegistry& templates) : templates_(templates) {}

  // Both template names must already be registered.
  void register_pair(const std::string& first_template, const std::string& second_template,
                     PairPredicate predicate);

  bool has_pair(const std::string& first_template, const std::string& second_template) const;

  // nullopt when no predicate is registered for the ordered pair.
  std::optional<bool> check(const Transaction& t1, const Transaction& t2,
                            CompletenessLevel level) const;

  std::vector<std::pair<std::string, std::string>> registered_pairs() const;

 private:
  const TemplateRegistry& templates_;
  std::map<std::pair<std::string, std::string>, PairPredicate> pairs_;
};

}  // namespace isatx

#endif  // ISATX_CHECKER_HPP
