#include "isatx/tpcc.hpp"

#include <random>
#include <stdexcept>

namespace isatx::tpcc {

namespace {

const std::string& require_param(const TemplateParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("missing template parameter: " + key);
  }
  return it->second;
}

std::string warehouse_row(const TemplateParams& p) { return "w" + require_param(p, "w"); }

std::string district_row(const TemplateParams& p) {
  return "w" + require_param(p, "w") + ".d" + require_param(p, "d");
}

std::string customer_row(const TemplateParams& p) {
  return district_row(p) + ".c" + require_param(p, "c");
}

std::string stock_row(const TemplateParams& p) {
  return "w" + require_param(p, "w") + ".i" + require_param(p, "i");
}

ActionDescriptor act(ActionKind kind, std::string table, std::string column, std::string row) {
  ActionDescriptor a;
  a.kind = kind;
  a.table = std::move(table);
  a.column = std::move(column);
  a.row = std::move(row);
  return a;
}

// A new order claims the district's next order id; two new orders in the same
// district contend for the same slot, so they share the @next-row token.
std::vector<ActionDescriptor> new_order_actions(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Read, "item", "i_price", "i" + require_param(p, "i")),
      act(ActionKind::Read, "warehouse", "w_tax", warehouse_row(p)),
      act(ActionKind::Read, "customer", "c_discount", customer_row(p)),
      act(ActionKind::Increment, "district", "d_next_o_id", d),
      act(ActionKind::Insert, "orders", "o_id", d + ".o@next"),
      act(ActionKind::Insert, "new_order", "no_o_id", d + ".no@tail"),
      act(ActionKind::Insert, "order_line", "ol_number", d + ".o@next#1"),
      act(ActionKind::Decrement, "stock", "s_quantity", stock_row(p)),
  };
}

std::vector<ActionDescriptor> new_order_compensation(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Decrement, "district", "d_next_o_id", d),
      act(ActionKind::Delete, "orders", "o_id", d + ".o@next"),
      act(ActionKind::Delete, "new_order", "no_o_id", d + ".no@tail"),
      act(ActionKind::Delete, "order_line", "ol_number", d + ".o@next#1"),
      act(ActionKind::Increment, "stock", "s_quantity", stock_row(p)),
  };
}

std::vector<ActionDescriptor> payment_actions(const TemplateParams& p) {
  return {
      act(ActionKind::Increment, "warehouse", "w_ytd", warehouse_row(p)),
      act(ActionKind::Increment, "district", "d_ytd", district_row(p)),
      act(ActionKind::Update, "customer", "c_balance", customer_row(p)),
      act(ActionKind::Insert, "history", "h_amount", customer_row(p) + ".h@next"),
  };
}

std::vector<ActionDescriptor> payment_compensation(const TemplateParams& p) {
  return {
      act(ActionKind::Decrement, "warehouse", "w_ytd", warehouse_row(p)),
      act(ActionKind::Decrement, "district", "d_ytd", district_row(p)),
      act(ActionKind::Update, "customer", "c_balance", customer_row(p)),
      act(ActionKind::Delete, "history", "h_amount", customer_row(p) + ".h@next"),
  };
}

std::vector<ActionDescriptor> order_status_actions(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Read, "customer", "c_balance", customer_row(p)),
      act(ActionKind::Read, "orders", "o_carrier_id", d + ".o@last"),
      act(ActionKind::Read, "order_line", "ol_delivery_d", d + ".o@last#1"),
  };
}

// Delivery services the oldest pending order of the district; the shared
// @head-row token is what makes two same-district deliveries contend.
std::vector<ActionDescriptor> delivery_actions(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Delete, "new_order", "no_o_id", d + ".no@head"),
      act(ActionKind::Update, "orders", "o_delivery_d", d + ".o@head"),
      act(ActionKind::Update, "order_line", "ol_delivery_d", d + ".o@head#1"),
      act(ActionKind::Update, "customer", "c_balance", d + ".c@head"),
  };
}

std::vector<ActionDescriptor> delivery_compensation(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Insert, "new_order", "no_o_id", d + ".no@head"),
      act(ActionKind::Update, "orders", "o_delivery_d", d + ".o@head"),
      act(ActionKind::Update, "order_line", "ol_delivery_d", d + ".o@head#1"),
      act(ActionKind::Update, "customer", "c_balance", d + ".c@head"),
  };
}

std::vector<ActionDescriptor> stock_level_actions(const TemplateParams& p) {
  std::string d = district_row(p);
  return {
      act(ActionKind::Read, "district", "d_next_o_id", d),
      act(ActionKind::Read, "order_line", "ol_i_id", d + ".o@recent"),
      act(ActionKind::Read, "stock", "s_quantity", "w" + require_param(p, "w") + ".i@recent"),
  };
}

std::vector<ActionDescriptor> no_op(const TemplateParams&) { return {}; }

}  // namespace

std::string_view template_name(TxnType type) {
  switch (type) {
    case TxnType::NewOrder: return "new_order";
    case TxnType::Payment: return "payment";
    case TxnType::OrderStatus: return "order_status";
    case TxnType::Delivery: return "delivery";
    case TxnType::StockLevel: return "stock_level";
  }
  return "?";
}

std::optional<TxnType> parse_template_name(std::string_view name) {
  if (name == "new_order") return TxnType::NewOrder;
  if (name == "payment") return TxnType::Payment;
  if (name == "order_status") return TxnType::OrderStatus;
  if (name == "delivery") return TxnType::Delivery;
  if (name == "stock_level") return TxnType::StockLevel;
  return std::nullopt;
}

void WorkloadConfig::validate() const {
  if (n_transactions == 0) throw std::invalid_argument("n_transactions must be >= 1");
  if (si.has_value() && *si == 0) throw std::invalid_argument("si must be >= 1 or infinite");
  if (ri.has_value() && *ri == 0) throw std::invalid_argument("ri must be >= 1 or infinite");
  if (review_fraction < 0.0 || review_fraction > 1.0) {
    throw std::invalid_argument("review_fraction must be in [0,1]");
  }
  if (accept_fraction < 0.0 || accept_fraction > 1.0) {
    throw std::invalid_argument("accept_fraction must be in [0,1]");
  }
  if (warehouses == 0 || districts == 0 || customers_per_district == 0 || items == 0) {
    throw std::invalid_argument("scale counts must be >= 1");
  }
}

SchemaRegistry make_schema() {
  return SchemaRegistry{"warehouse", "district", "customer",   "history", "orders",
                        "new_order", "stock",    "order_line", "item"};
}

void register_templates(TemplateRegistry& registry) {
  registry.register_template("new_order", new_order_actions, new_order_compensation);
  registry.register_template("payment", payment_actions, payment_compensation);
  registry.register_template("order_status", order_status_actions, no_op);
  registry.register_template("delivery", delivery_actions, delivery_compensation);
  registry.register_template("stock_level", stock_level_actions, no_op);
}

std::vector<InvariantDecl> invariants() {
  return {
      // Per-district order ids come from a counter.
      make_auto_increment("orders"),
      // An order is entered before it is delivered.
      make_sequential_order("orders", "o_entry_d", "o_delivery_d"),
      make_uniqueness("customer", {"c_id"}),
  };
}

void register_pair_dependencies(PairDependencyRegistry& pairs) {
  pairs.register_pair("new_order", "new_order",
                      [](const TemplateParams&, const TemplateParams&, CompletenessLevel) {
                        return true;  // both claim an order-id slot
                      });
  pairs.register_pair(
      "delivery", "delivery",
      [](const TemplateParams& a, const TemplateParams& b, CompletenessLevel level) {
        if (level != CompletenessLevel::CompleteQuery) return true;
        return a.at("w") == b.at("w") && a.at("d") == b.at("d");
      });
}

std::vector<ActionDescriptor> template_actions(TxnType type, const TemplateParams& params) {
  switch (type) {
    case TxnType::NewOrder: return new_order_actions(params);
    case TxnType::Payment: return payment_actions(params);
    case TxnType::OrderStatus: return order_status_actions(params);
    case TxnType::Delivery: return delivery_actions(params);
    case TxnType::StockLevel: return stock_level_actions(params);
  }
  throw std::invalid_argument("unknown transaction type");
}

std::set<std::pair<std::string, std::string>> dependency_table(CompletenessLevel level) {
  const auto invs = invariants();
  const TemplateParams colliding{{"w", "1"}, {"d", "1"}, {"c", "1"}, {"i", "1"}};
  std::set<std::pair<std::string, std::string>> result;
  for (int first = 0; first < kTxnTypeCount; ++first) {
    for (int second = 0; second < kTxnTypeCount; ++second) {
      Transaction t1;
      t1.id = "probe-1";
      t1.template_name = std::string(template_name(static_cast<TxnType>(first)));
      t1.actions = template_actions(static_cast<TxnType>(first), colliding);
      t1.arrival_seq = 1;
      Transaction t2;
      t2.id = "probe-2";
      t2.template_name = std::string(template_name(static_cast<TxnType>(second)));
      t2.actions = template_actions(static_cast<TxnType>(second), colliding);
      t2.arrival_seq = 2;
      if (pair_depends(t1, t2, invs, level).depends) {
        result.emplace(t1.template_name, t2.template_name);
      }
    }
  }
  return result;
}

std::vector<Transaction> generate(const WorkloadConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  auto draw = [&rng](std::uint32_t upper) {
    return static_cast<std::uint32_t>(rng() % upper) + 1;  // 1..upper
  };

  std::vector<Transaction> stream;
  stream.reserve(config.n_transactions);
  for (std::uint64_t idx = 1; idx <= config.n_transactions; ++idx) {
    auto roll = static_cast<int>(rng() % 100);
    TxnType type;
    int cumulative = 0;
    int chosen = kTxnTypeCount - 1;
    for (int t = 0; t < kTxnTypeCount; ++t) {
      cumulative += kMixPercent[t];
      if (roll < cumulative) {
        chosen = t;
        break;
      }
    }
    type = static_cast<TxnType>(chosen);

    TemplateParams params;
    params["w"] = std::to_string(draw(config.warehouses));
    params["d"] = std::to_string(draw(config.districts));
    if (type == TxnType::NewOrder || type == TxnType::Payment || type == TxnType::OrderStatus) {
      params["c"] = std::to_string(draw(config.customers_per_district));
    }
    if (type == TxnType::NewOrder) {
      params["i"] = std::to_string(draw(config.items));
    }

    Transaction txn;
    txn.id = format_txn_id(idx);
    txn.template_name = std::string(template_name(type));
    txn.params = std::move(params);
    txn.actions = template_actions(type, txn.params);
    txn.suspicious = config.si.has_value() && ((idx - 1) % *config.si == 0);
    stream.push_back(std::move(txn));
  }
  return stream;
}

std::vector<ReviewEvent> review_schedule(const WorkloadConfig& config) {
  config.validate();
  std::vector<ReviewEvent> events;
  if (!config.ri.has_value()) return events;
  for (std::uint64_t pos = *config.ri; pos <= config.n_transactions; pos += *config.ri) {
    events.push_back(ReviewEvent{pos, config.review_fraction});
  }
  return events;
}

std::string dump_line(std::uint64_t index, const Transaction& txn) {
  std::string line = std::to_string(index);
  line += ' ';
  line += txn.template_name;
  line += txn.suspicious ? " true" : " false";
  for (const auto& [key, value] : txn.params) {
    line += ' ';
    line += key;
    line += '=';
    line += value;
  }
  return line;
}

}  // namespace isatx::tpcc
