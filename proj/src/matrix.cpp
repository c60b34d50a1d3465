#include "isatx/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace isatx {

std::size_t DependencyMatrix::add_entry(Entry entry) {
  if (index_.count(entry.id) != 0) {
    throw std::invalid_argument("duplicate matrix entry: " + entry.id);
  }
  std::size_t idx = entries_.size();
  index_.emplace(entry.id, idx);
  entries_.push_back(std::move(entry));
  std::size_t w = words();
  for (auto& row : rows_) row.resize(w, 0);
  rows_.emplace_back(w, 0);
  return idx;
}

std::optional<std::size_t> DependencyMatrix::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void DependencyMatrix::set_dependency(std::size_t i, std::size_t j) {
  assert(i != j);
  assert(entries_[i].arrival_seq < entries_[j].arrival_seq);
  rows_[i][j / kBits] |= (std::uint64_t{1} << (j % kBits));
}

bool DependencyMatrix::depends(std::size_t i, std::size_t j) const {
  return (rows_[i][j / kBits] >> (j % kBits)) & 1u;
}

bool DependencyMatrix::column_empty(std::size_t j) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (depends(i, j)) return false;
  }
  return true;
}

void DependencyMatrix::clear_row(std::size_t i) {
  for (auto& word : rows_[i]) word = 0;
}

void DependencyMatrix::remove_entry(std::size_t i) {
  index_.erase(entries_[i].id);
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
  rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
  // Delete bit column i from every remaining row: bits below i stay, bits
  // above shift down one, word by word.
  const std::size_t w0 = i / kBits;
  const std::size_t b0 = i % kBits;
  const std::uint64_t low_mask = (b0 == 0) ? 0 : ((std::uint64_t{1} << b0) - 1);
  const std::size_t new_words = words();
  for (auto& row : rows_) {
    for (std::size_t w = w0; w < row.size(); ++w) {
      std::uint64_t carry = (w + 1 < row.size()) ? (row[w + 1] << (kBits - 1)) : 0;
      if (w == w0) {
        std::uint64_t keep = row[w] & low_mask;
        std::uint64_t shifted = (b0 + 1 == kBits) ? 0 : ((row[w] >> (b0 + 1)) << b0);
        row[w] = keep | shifted | carry;
      } else {
        row[w] = (row[w] >> 1) | carry;
      }
    }
    row.resize(new_words);
  }
  for (auto& [id, idx] : index_) {
    if (idx > i) --idx;
  }
}

std::vector<std::size_t> DependencyMatrix::dependents_of(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (depends(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> DependencyMatrix::blockers_of(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (depends(i, j)) out.push_back(i);
  }
  return out;
}

}  // namespace isatx
