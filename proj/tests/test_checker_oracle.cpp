#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isatx/checker.hpp"
#include "support/builders.hpp"
#include "support/toy_oracle.hpp"

using namespace isatx;
using testsupport::action;
using testsupport::oracle_depends;
using testsupport::ToyDomain;
using testsupport::txn;

namespace {

const std::string kUnknown{kUnknownField};

// Exhaustive descriptor enumeration over the toy domain, including unknown
// rows and columns.
struct Enumeration {
  std::vector<ActionDescriptor> descriptors;
  Enumeration() {
    ToyDomain dom;
    std::vector<std::string> columns = dom.columns;
    columns.push_back(kUnknown);
    std::vector<std::string> rows = dom.rows;
    rows.push_back(kUnknown);
    for (const auto& table : dom.tables) {
      for (const auto& column : columns) {
        for (const auto& row : rows) {
          for (auto kind : {ActionKind::Increment, ActionKind::Decrement}) {
            descriptors.push_back(action(kind, table, column, row));
          }
        }
      }
    }
  }
};

}  // namespace

TEST_CASE("spot checks against the state-enumeration oracle") {
  auto inv = make_check_bound(InvariantKind::CheckMore, "acct", "bal");
  auto dec = action(ActionKind::Decrement, "acct", "bal", "r1");
  auto inc = action(ActionKind::Increment, "acct", "bal", "r1");
  CHECK(oracle_depends(dec, dec, inv));
  CHECK_FALSE(oracle_depends(inc, dec, inv));
  CHECK_FALSE(oracle_depends(dec, inc, inv));
  CHECK_FALSE(oracle_depends(inc, inc, inv));

  auto other_row = action(ActionKind::Decrement, "acct", "bal", "r2");
  CHECK_FALSE(oracle_depends(dec, other_row, inv));

  auto less_inv = make_check_bound(InvariantKind::CheckLess, "acct", "bal");
  CHECK(oracle_depends(inc, inc, less_inv));
  CHECK_FALSE(oracle_depends(dec, inc, less_inv));
}

TEST_CASE("a pending unknown-row decrement conflicts exactly when a binding collides") {
  // The buffered transaction's row comes from a read that has not completed;
  // enumerate its bindings over the 3-row table.
  auto inv = make_check_bound(InvariantKind::CheckMore, "acct", "bal");
  auto pending = action(ActionKind::Decrement, "acct", "bal", kUnknown);
  auto incoming = action(ActionKind::Decrement, "acct", "bal", "r1");
  CHECK(oracle_depends(pending, incoming, inv));

  auto t1 = txn("t1", 1, {pending});
  auto t2 = txn("t2", 2, {incoming});
  CHECK(pair_depends(t1, t2, {inv}, CompletenessLevel::PartialQuery).depends);
}

TEST_CASE("checker at complete query agrees exactly with the oracle") {
  Enumeration all;
  ToyDomain dom;
  int cases = 0;
  int dependencies = 0;
  for (auto kind : {InvariantKind::CheckMore, InvariantKind::CheckLess,
                    InvariantKind::CounterMore, InvariantKind::CounterLess}) {
    auto inv = make_check_bound(kind, "acct", "bal");
    for (const auto& a1 : all.descriptors) {
      for (const auto& a2 : all.descriptors) {
        auto t1 = txn("t1", 1, {a1});
        auto t2 = txn("t2", 2, {a2});
        bool checker = pair_depends(t1, t2, {inv}, CompletenessLevel::CompleteQuery).depends;
        bool oracle = oracle_depends(a1, a2, inv, dom);
        ++cases;
        dependencies += oracle ? 1 : 0;
        REQUIRE_MESSAGE(checker == oracle, "kind=", to_string(kind), " a1=", describe(a1),
                        " a2=", describe(a2), " checker=", checker, " oracle=", oracle);
      }
    }
  }
  CHECK(cases >= 500);
  CHECK(dependencies > 0);
  CHECK(dependencies < cases);
}
