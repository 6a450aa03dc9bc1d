#pragma once

// Racks and quandles on finite carriers, stored as dense operation tables.
//
// table[i][j] is the index of element_i ◁ element_j. All computation is on
// indices; labels are only carried for input and output.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/group_table.hpp"

namespace rackqm {

enum class rack_kind { rack, quandle };

class FiniteRack;
FiniteRack validate_rack(Table table, std::vector<std::string> labels = {}, std::string name = {},
                         rack_kind claim = rack_kind::rack);

class FiniteRack {
 public:
  std::size_t size() const noexcept { return table_.size(); }

  /// i ◁ j
  std::size_t op(std::size_t i, std::size_t j) const { return table_[i][j]; }
  /// i ◁⁻¹ j, the preimage of i under ψ_j.
  std::size_t op_inverse(std::size_t i, std::size_t j) const { return inverse_[i][j]; }
  std::size_t op(std::size_t i, std::size_t j, int eps) const {
    return eps >= 0 ? op(i, j) : op_inverse(i, j);
  }

  rack_kind kind() const noexcept { return kind_; }
  bool is_quandle() const noexcept { return kind_ == rack_kind::quandle; }

  const Table& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_trivial() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (table_[i][j] != i) return false;
    return true;
  }

  friend FiniteRack validate_rack(Table, std::vector<std::string>, std::string, rack_kind);

 private:
  FiniteRack() = default;

  Table table_;
  Table inverse_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string name_;
  rack_kind kind_ = rack_kind::rack;
};

/// Exhaustive check of the rack axioms, in order: rack identity, bijectivity
/// of every ψ_y, and (when claimed) idempotence. The kind is upgraded to
/// quandle whenever x◁x = x holds for all x.
inline FiniteRack validate_rack(Table table, std::vector<std::string> labels, std::string name,
                                rack_kind claim) {
  const std::size_t n = table.size();
  if (n == 0) throw input_error("rack table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw input_error("rack table is not square (row " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw input_error("rack table entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range");
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw input_error("rack label count does not match table");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[table[i][k]][table[j][k]]) {
          throw axiom_violation(rack_axiom::self_distributivity, {i, j, k},
                                "(" + std::to_string(i) + "◁" + std::to_string(j) + ")◁" +
                                    std::to_string(k) + " != (" + std::to_string(i) + "◁" +
                                    std::to_string(k) + ")◁(" + std::to_string(j) + "◁" +
                                    std::to_string(k) + ")");
        }

  Table inverse(n, std::vector<std::size_t>(n, n));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t image = table[x][y];
      if (inverse[image][y] != n) {
        std::size_t other = inverse[image][y];
        throw axiom_violation(rack_axiom::right_invertibility, {other, x, y},
                              std::to_string(other) + "◁" + std::to_string(y) + " = " +
                                  std::to_string(x) + "◁" + std::to_string(y));
      }
      inverse[image][y] = x;
    }
  }

  bool idempotent = true;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n && idempotent; ++i) {
    if (table[i][i] != i) {
      idempotent = false;
      bad = i;
    }
  }
  if (claim == rack_kind::quandle && !idempotent) {
    throw axiom_violation(rack_axiom::idempotence, {bad},
                          std::to_string(bad) + "◁" + std::to_string(bad) + " != " + std::to_string(bad));
  }

  FiniteRack r;
  r.table_ = std::move(table);
  r.inverse_ = std::move(inverse);
  r.labels_ = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.index_.emplace(r.labels_[i], i).second) {
      throw input_error("duplicate rack element label '" + r.labels_[i] + "'");
    }
  }
  r.name_ = std::move(name);
  r.kind_ = idempotent ? rack_kind::quandle : rack_kind::rack;
  return r;
}

// ---------------------------------------------------------------------------
// Built-in families

/// T_n: x◁y = x.
inline FiniteRack trivial_rack(std::size_t n) {
  if (n == 0) throw input_error("trivial rack needs at least one element");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i;
  return validate_rack(std::move(t), {}, "T" + std::to_string(n));
}

/// R_n: x◁y = 2y − x mod n.
inline FiniteRack dihedral_quandle(std::size_t n) {
  if (n == 0) throw input_error("dihedral quandle needs at least one element");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (2 * j + n - i) % n;
  return validate_rack(std::move(t), {}, "R" + std::to_string(n));
}

/// g◁h = h⁻¹gh.
inline FiniteRack conjugation_rack(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(g.inv(b), a), b);
  return validate_rack(std::move(t), g.labels(), "Conj(" + g.name() + ")");
}

/// Raw-table form: the supplied inverse map must agree with the table.
inline FiniteRack conjugation_rack(Table group_table, const std::vector<std::size_t>& inverse) {
  FiniteGroup g(std::move(group_table));
  if (inverse != g.inverses()) throw input_error("inverse map is inconsistent with the group table");
  return conjugation_rack(g);
}

// ---------------------------------------------------------------------------
// Components and generation

struct ComponentPartition {
  std::vector<std::size_t> component_of;
  std::size_t count = 0;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s(count, 0);
    for (auto c : component_of) ++s[c];
    return s;
  }
};

/// Orbits of the permutation group generated by all ψ_y. Component ids are
/// assigned in order of the smallest member.
inline ComponentPartition components(const FiniteRack& rack) {
  const std::size_t n = rack.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ComponentPartition p;
  p.component_of.assign(n, unset);
  for (std::size_t start = 0; start < n; ++start) {
    if (p.component_of[start] != unset) continue;
    const std::size_t id = p.count++;
    std::deque<std::size_t> queue{start};
    p.component_of[start] = id;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z : {rack.op(x, y), rack.op_inverse(x, y)}) {
          if (p.component_of[z] == unset) {
            p.component_of[z] = id;
            queue.push_back(z);
          }
        }
      }
    }
  }
  return p;
}

/// x = s0 ◁^{ε1} s1 ◁^{ε2} ··· ◁^{εn} sn, evaluated left to right.
struct GenerationPath {
  std::size_t start = 0;
  std::vector<std::pair<std::size_t, int>> steps;
};

struct GenerationResult {
  bool generates = false;
  std::vector<std::size_t> closure;  // sorted
  std::vector<std::optional<GenerationPath>> witness;  // indexed by element
};

/// Breadth-first closure of `subset` under right ◁^{±1} by subset members.
/// Each reached element keeps one shortest witness path.
inline GenerationResult is_generating(const FiniteRack& rack, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw input_error("generating subset must be nonempty");
  const std::size_t n = rack.size();
  GenerationResult res;
  res.witness.resize(n);
  std::deque<std::size_t> queue;
  for (auto s : subset) {
    if (s >= n) throw input_error("subset element " + std::to_string(s) + " out of range");
    if (!res.witness[s]) {
      res.witness[s] = GenerationPath{s, {}};
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (auto s : subset) {
      for (int eps : {1, -1}) {
        std::size_t z = rack.op(x, s, eps);
        if (res.witness[z]) continue;
        GenerationPath path = *res.witness[x];
        path.steps.emplace_back(s, eps);
        res.witness[z] = std::move(path);
        queue.push_back(z);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (res.witness[i]) res.closure.push_back(i);
  res.generates = res.closure.size() == n;
  return res;
}

inline std::size_t evaluate_path(const FiniteRack& rack, const GenerationPath& path) {
  std::size_t x = path.start;
  for (const auto& [s, eps] : path.steps) x = rack.op(x, s, eps);
  return x;
}

inline bool is_homomorphism(const std::vector<std::size_t>& f, const FiniteRack& source,
                            const FiniteRack& target) {
  if (f.size() != source.size()) throw input_error("map is not total on the source rack");
  for (auto v : f)
    if (v >= target.size()) throw input_error("map value out of range of the target rack");
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (f[source.op(x, y)] != target.op(f[x], f[y])) return false;
  return true;
}

}  // namespace rackqm
