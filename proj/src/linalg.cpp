#include "superw/linalg.hpp"

namespace superw {

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto it = pivots_.find(lead->first);
    if (it == pivots_.end()) {
      Rational inv = Rational(1) / lead->second;
      for (auto& [col, v] : row) v *= inv;
      int key = lead->first;
      pivots_.emplace(key, std::move(row));
      return true;
    }
    Rational factor = lead->second;
    for (const auto& [col, v] : it->second) {
      Rational& cell = row[col];
      cell -= factor * v;
      if (cell.is_zero()) row.erase(col);
    }
  }
  return false;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace superw
