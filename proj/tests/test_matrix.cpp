#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "isatx/matrix.hpp"

using namespace isatx;

namespace {

DependencyMatrix::Entry entry(std::uint64_t seq, bool suspicious = true) {
  DependencyMatrix::Entry e;
  e.id = "e" + std::to_string(seq);
  e.arrival_seq = seq;
  e.suspicious = suspicious;
  return e;
}

}  // namespace

TEST_CASE("basic relation bookkeeping") {
  DependencyMatrix m;
  CHECK(m.empty());
  auto a = m.add_entry(entry(1));
  auto b = m.add_entry(entry(2));
  auto c = m.add_entry(entry(3));
  m.set_dependency(a, b);
  m.set_dependency(a, c);
  m.set_dependency(b, c);

  CHECK(m.depends(a, b));
  CHECK_FALSE(m.depends(b, a));
  CHECK(m.column_empty(a));
  CHECK_FALSE(m.column_empty(c));
  CHECK(m.dependents_of(a) == std::vector<std::size_t>{b, c});
  CHECK(m.blockers_of(c) == std::vector<std::size_t>{a, b});

  m.clear_row(a);
  CHECK_FALSE(m.depends(a, b));
  CHECK(m.column_empty(b));
  CHECK_FALSE(m.column_empty(c));
}

TEST_CASE("duplicate ids are rejected") {
  DependencyMatrix m;
  m.add_entry(entry(1));
  CHECK_THROWS_AS(m.add_entry(entry(1)), std::invalid_argument);
}

TEST_CASE("removal compacts indices and the id map") {
  DependencyMatrix m;
  for (std::uint64_t i = 1; i <= 5; ++i) m.add_entry(entry(i));
  m.set_dependency(0, 2);
  m.set_dependency(1, 3);
  m.set_dependency(3, 4);

  m.remove_entry(2);
  REQUIRE(m.size() == 4);
  CHECK(m.entry(2).id == "e4");
  CHECK(m.index_of("e4") == 2);
  CHECK_FALSE(m.index_of("e3").has_value());
  // e2 -> e4 edge survived the shift, e1's edge vanished with its target.
  CHECK(m.depends(1, 2));
  CHECK(m.depends(2, 3));
  CHECK(m.dependents_of(0).empty());
}

TEST_CASE("column deletion is exact across word boundaries") {
  // Sizes straddling the 64-bit packing edge, removing at the boundary spots.
  for (std::size_t size : {63u, 64u, 65u, 66u, 130u}) {
    for (std::size_t victim : {std::size_t{0}, std::size_t{62}, std::size_t{63},
                               std::size_t{64} < size - 1 ? std::size_t{64} : std::size_t{1},
                               size - 1}) {
      if (victim >= size) continue;
      DependencyMatrix m;
      for (std::uint64_t i = 0; i < size; ++i) m.add_entry(entry(i + 1));
      // Edge pattern: i -> j iff j == i + 1 or j == i + 7.
      std::set<std::pair<std::string, std::string>> expected;
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j : {i + 1, i + 7}) {
          if (j >= size) continue;
          m.set_dependency(i, j);
          if (i != victim && j != victim) {
            expected.insert({m.entry(i).id, m.entry(j).id});
          }
        }
      }
      m.remove_entry(victim);
      std::set<std::pair<std::string, std::string>> got;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (m.depends(i, j)) got.insert({m.entry(i).id, m.entry(j).id});
        }
      }
      REQUIRE_MESSAGE(got == expected, "size=", size, " victim=", victim);
    }
  }
}

TEST_CASE("growth keeps earlier rows addressable past one word") {
  DependencyMatrix m;
  m.add_entry(entry(1));
  for (std::uint64_t i = 2; i <= 70; ++i) m.add_entry(entry(i));
  m.set_dependency(0, 69);
  CHECK(m.depends(0, 69));
  CHECK_FALSE(m.column_empty(69));
  CHECK(m.blockers_of(69) == std::vector<std::size_t>{0});
}
