#pragma once

// Finite groups given by Cayley tables. Used to build conjugation racks and
// as factor groups for V0 dimension counts.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"

namespace rackqm {

using Table = std::vector<std::vector<std::size_t>>;

class FiniteGroup {
 public:
  /// table[i][j] is the index of element_i * element_j. Throws input_error
  /// unless the table is a group: closed, associative, with identity and
  /// two-sided inverses.
  explicit FiniteGroup(Table table, std::vector<std::string> labels = {}, std::string name = {})
      : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
    const std::size_t n = table_.size();
    if (n == 0) throw input_error("group table is empty");
    for (const auto& row : table_) {
      if (row.size() != n) throw input_error("group table is not square");
      for (auto v : row) {
        if (v >= n) throw input_error("group table entry out of range");
      }
    }
    if (labels_.empty()) {
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) throw input_error("group label count does not match table");

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw input_error("group table is not associative at (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(c) + ")");

    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw input_error("group table has no identity");

    inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        if (table_[g][h] == identity_ && table_[h][g] == identity_) {
          inverse_[g] = h;
          break;
        }
      }
      if (inverse_[g] == n) throw input_error("element " + std::to_string(g) + " has no inverse");
    }
  }

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const Table& table() const noexcept { return table_; }
  const std::vector<std::size_t>& inverses() const noexcept { return inverse_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

 private:
  Table table_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw input_error("cyclic group order must be positive");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t), {}, "Z" + std::to_string(n));
}

/// Symmetric group on k letters. Elements are permutations in
/// lexicographic order (index 0 is the identity); the product a*b applies
/// a first, then b.
inline FiniteGroup symmetric_group(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t n = perms.size();
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string label;
    for (auto v : perms[a]) label += std::to_string(v + 1);
    labels.push_back("p" + label);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = index_of(c);
    }
  }
  return FiniteGroup(std::move(t), std::move(labels), "S" + std::to_string(k));
}

}  // namespace rackqm
