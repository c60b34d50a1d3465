#ifndef ISATX_MATRIX_HPP
#define ISATX_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isatx/types.hpp"

namespace isatx {

// Square boolean relation over the live buffered transactions. Entry (i, j)
// true means "j depends on i": j must wait until i is resolved. Edges always
// point forward in arrival order, so the relation is a DAG by construction.
// Entries are kept in insertion order; removal compacts indices (live size is
// bounded by the buffer, not by history).
class DependencyMatrix {
 public:
  struct Entry {
    std::string id;
    std::uint64_t arrival_seq = 0;
    bool suspicious = false;
    bool approved = false;
    bool rejected = false;
    Transaction txn;  // in compensating mode this holds the compensating actions
  };

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Returns the new entry's index (always the last slot).
  std::size_t add_entry(Entry entry);

  const Entry& entry(std::size_t i) const { return entries_[i]; }
  Entry& entry(std::size_t i) { return entries_[i]; }

  std::optional<std::size_t> index_of(const std::string& id) const;

  void set_dependency(std::size_t i, std::size_t j);
  bool depends(std::size_t i, std::size_t j) const;

  // "Check the dependency table vertically": does entry j still wait on anyone?
  bool column_empty(std::size_t j) const;

  // "Remove its horizontal dependencies": releases everything waiting on i.
  void clear_row(std::size_t i);

  // Drops the entry and its bit column; later indices shift down by one.
  void remove_entry(std::size_t i);

  // Ids of live entries whose dependents include j=... / diagnostics.
  std::vector<std::size_t> dependents_of(std::size_t i) const;
  std::vector<std::size_t> blockers_of(std::size_t j) const;

 private:
  static constexpr std::size_t kBits = 64;
  std::size_t words() const { return (entries_.size() + kBits - 1) / kBits; }

  std::vector<Entry> entries_;
  std::vector<std::vector<std::uint64_t>> rows_;  // rows_[i] bit j == dep(i, j)
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace isatx

#endif  // ISATX_MATRIX_HPP
