#pragma once

// Exact rank over Q by fraction-free elimination on sparse integer rows.
//
// Rows are inserted one at a time into an echelon basis keyed by leading
// column. Reducing a row r against a pivot row p with leading entries a, b
// replaces r by a·r − b·p, then divides out the content of r, so every
// intermediate stays integral and small.

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rackqm/number.hpp"

namespace rackqm {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column, no zeros

namespace detail {

inline void remove_content(SparseRow& r) {
  Integer g = 0;
  for (const auto& [c, v] : r) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) v /= g;
}

// a·r − b·p
inline SparseRow combine(const SparseRow& r, const Integer& a, const SparseRow& p, const Integer& b) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Integer v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

class EchelonBasis {
 public:
  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow r) {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        detail::remove_content(r);
        pivots_.emplace(r.front().first, std::move(r));
        return true;
      }
      const SparseRow& p = it->second;
      Integer a = p.front().second;
      Integer b = r.front().second;
      Integer g = gcd(a, b);
      r = detail::combine(r, a / g, p, b / g);
      detail::remove_content(r);
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

inline SparseRow to_sparse(const std::vector<Integer>& dense) {
  SparseRow r;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) r.emplace_back(c, dense[c]);
  return r;
}

/// Rank of a dense rational matrix; each row is scaled by the lcm of its
/// denominators first.
inline std::size_t exact_rank(const std::vector<std::vector<Rational>>& m) {
  EchelonBasis basis;
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& v : row) l = lcm(l, denominator(v));
    SparseRow r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) r.emplace_back(c, numerator(row[c]) * (l / denominator(row[c])));
    }
    basis.insert(std::move(r));
  }
  return basis.rank();
}

}  // namespace rackqm
