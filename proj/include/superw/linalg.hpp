#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "superw/rational.hpp"

namespace superw {

using SparseRow = std::map<int, Rational>;

/// Incremental exact row echelon form over Q.
class RowEchelon {
 public:
  /// Adds a row; returns false if it was already in the span.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseRow> pivots_;  // leading column → row normalized to leading 1
};

std::size_t rank(const std::vector<SparseRow>& rows);

/// Assigns dense column indices to arbitrary ordered keys.
template <class Key>
class ColumnIndex {
 public:
  int operator()(const Key& k) {
    auto [it, inserted] = index_.try_emplace(k, static_cast<int>(index_.size()));
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::map<Key, int> index_;
};

}  // namespace superw
