#ifndef ISATX_TPCC_HPP
#define ISATX_TPCC_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isatx/checker.hpp"
#include "isatx/schema.hpp"
#include "isatx/template_registry.hpp"
#include "isatx/types.hpp"

namespace isatx::tpcc {

enum class TxnType { NewOrder, Payment, OrderStatus, Delivery, StockLevel };

inline constexpr int kTxnTypeCount = 5;

// Standard order-entry mix, percent per type (sums to 100).
inline constexpr int kMixPercent[kTxnTypeCount] = {45, 43, 4, 4, 4};

std::string_view template_name(TxnType type);
std::optional<TxnType> parse_template_name(std::string_view name);

// Deterministic stream parameters. si / ri unset means INFINITE: no suspicious
// tags / no review events.
struct WorkloadConfig {
  std::uint64_t n_transactions = 1000;
  std::optional<std::uint32_t> si = 5;
  std::optional<std::uint32_t> ri;
  double review_fraction = 0.8;   // share of reviewable entries removed per event
  double accept_fraction = 0.0;   // share accepted instead (sensitivity runs)
  std::uint64_t seed = 1;
  std::uint32_t warehouses = 1;
  std::uint32_t districts = 10;
  std::uint32_t customers_per_district = 3000;
  std::uint32_t items = 100;

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct ReviewEvent {
  std::uint64_t position = 0;  // transaction index at which the review fires
  double fraction = 0.0;       // share of reviewable buffered entries to remove
};

SchemaRegistry make_schema();

// Registers the five transaction templates (with compensators) into `registry`.
void register_templates(TemplateRegistry& registry);

// The fixture's declared constraints: an auto-increment order counter, the
// order entry-before-delivery ordering, and customer id uniqueness.
std::vector<InvariantDecl> invariants();

// Hand-analyzed template-pair dependencies for the pair registry.
void register_pair_dependencies(PairDependencyRegistry& pairs);

std::vector<ActionDescriptor> template_actions(TxnType type, const TemplateParams& params);

// Static analysis: instantiate every ordered template pair with colliding
// parameters and run the checker. At CompleteQuery this yields exactly
// {(new_order,new_order), (delivery,delivery)}.
std::set<std::pair<std::string, std::string>> dependency_table(CompletenessLevel level);

// Exactly n transactions; every si-th (1-indexed 1, si+1, 2si+1, ...) tagged
// suspicious; types drawn from the fixed mix with the seeded generator.
std::vector<Transaction> generate(const WorkloadConfig& config);

// Events at ri, 2*ri, ... up to n.
std::vector<ReviewEvent> review_schedule(const WorkloadConfig& config);

// One transaction per line: index, template, suspicious flag, key=value params.
std::string dump_line(std::uint64_t index, const Transaction& txn);

}  // namespace isatx::tpcc

#endif  // ISATX_TPCC_HPP
