#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "isatx/template_registry.hpp"
#include "isatx/tpcc.hpp"
#include "isatx/types.hpp"
#include "support/builders.hpp"

using namespace isatx;

TEST_CASE("template registration round-trip") {
  TemplateRegistry registry;
  registry.register_template("payment",
                             [](const TemplateParams&) {
                               return std::vector<ActionDescriptor>{testsupport::action(
                                   ActionKind::Update, "customer", "c_balance", "r1")};
                             },
                             [](const TemplateParams&) {
                               return std::vector<ActionDescriptor>{testsupport::action(
                                   ActionKind::Update, "customer", "c_balance", "r1")};
                             });
  CHECK(registry.has_template("payment"));
  CHECK(registry.has_compensator("payment"));
  CHECK(registry.build_actions("payment", {}).size() == 1);
}

TEST_CASE("duplicate template name is rejected") {
  TemplateRegistry registry;
  auto builder = [](const TemplateParams&) { return std::vector<ActionDescriptor>{}; };
  registry.register_template("payment", builder);
  CHECK_THROWS_AS(registry.register_template("payment", builder), std::invalid_argument);
}

TEST_CASE("unknown template and missing compensator") {
  TemplateRegistry registry;
  registry.register_template("irreversible",
                             [](const TemplateParams&) { return std::vector<ActionDescriptor>{}; });
  CHECK_THROWS_AS(registry.build_actions("ghost", {}), std::invalid_argument);
  CHECK_FALSE(registry.has_compensator("irreversible"));
  Transaction t;
  t.id = "txn-000001";
  t.template_name = "irreversible";
  CHECK_FALSE(registry.build_compensation(t).has_value());
}

TEST_CASE("new_order builder output matches the hand-written fixture") {
  TemplateRegistry registry;
  tpcc::register_templates(registry);
  TemplateParams params{{"w", "1"}, {"d", "2"}, {"c", "7"}, {"i", "42"}};
  auto actions = registry.build_actions("new_order", params);
  REQUIRE(actions.size() == 8);

  // Writes, in template order.
  CHECK(actions[3].kind == ActionKind::Increment);
  CHECK(actions[3].table == "district");
  CHECK(actions[3].column == "d_next_o_id");
  CHECK(actions[3].row == "w1.d2");
  CHECK(actions[4].kind == ActionKind::Insert);
  CHECK(actions[4].table == "orders");
  CHECK(actions[4].row == "w1.d2.o@next");
  CHECK(actions[5].kind == ActionKind::Insert);
  CHECK(actions[5].table == "new_order");
  CHECK(actions[5].row == "w1.d2.no@tail");
  CHECK(actions[6].kind == ActionKind::Insert);
  CHECK(actions[6].table == "order_line");
  CHECK(actions[7].kind == ActionKind::Decrement);
  CHECK(actions[7].table == "stock");
  CHECK(actions[7].row == "w1.i42");

  // Reads carry no write scope but still name their rows.
  CHECK(actions[0].kind == ActionKind::Read);
  CHECK(actions[0].table == "item");
  CHECK(actions[2].row == "w1.d2.c7");
}

TEST_CASE("builder rejects incomplete parameters") {
  TemplateRegistry registry;
  tpcc::register_templates(registry);
  CHECK_THROWS_AS(registry.build_actions("new_order", {{"w", "1"}}), std::invalid_argument);
}

TEST_CASE("txn id format is constant") {
  CHECK(format_txn_id(1) == "txn-000001");
  CHECK(format_txn_id(123456) == "txn-123456");
}

TEST_CASE("fully_bound flags unknown fields") {
  auto bound = testsupport::txn("a", 1, {testsupport::action(ActionKind::Update, "t", "c", "r")});
  CHECK(fully_bound(bound));
  auto unbound = testsupport::txn(
      "b", 2, {testsupport::action(ActionKind::Update, "t", "c", std::string(kUnknownField))});
  CHECK_FALSE(fully_bound(unbound));
}

TEST_CASE("terminal statuses") {
  CHECK(is_terminal(TransactionStatus::Committed));
  CHECK(is_terminal(TransactionStatus::Removed));
  CHECK(is_terminal(TransactionStatus::Discarded));
  CHECK_FALSE(is_terminal(TransactionStatus::Submitted));
  CHECK_FALSE(is_terminal(TransactionStatus::Buffered));
  CHECK_FALSE(is_terminal(TransactionStatus::Held));
}

TEST_CASE("status tokens round-trip") {
  for (auto s : {TransactionStatus::Submitted, TransactionStatus::Buffered,
                 TransactionStatus::Held, TransactionStatus::Committed,
                 TransactionStatus::Removed, TransactionStatus::Discarded}) {
    auto parsed = parse_status(to_string(s));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK_FALSE(parse_status("bogus").has_value());
}
