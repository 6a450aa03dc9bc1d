#pragma once

// Rack and quandle cochain complexes of finite racks over Q, and cocycle
// checks for δ¹φ̂_λ on free products.
//
// C^n is the space of functions X^n → Q (C^0 = Q, C^n = 0 for n < 0). A
// tuple (x_1, ..., x_n) has index Σ x_i·|X|^{n−i}.
//
//   δ^n f(x_1..x_{n+1}) = Σ_{i=1}^{n+1} (−1)^i [ f(x_1..x̂_i..x_{n+1})
//                          − f(x_1◁x_i, .., x_{i−1}◁x_i, x_{i+1}, .., x_{n+1}) ]
//
// and δ^n = 0 for n ≤ 0. Quandle mode works on the subcomplex of cochains
// vanishing on tuples with x_i = x_{i+1}, i.e. on the coordinates of
// non-degenerate tuples.

#include <cstddef>
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/finite_rack.hpp"
#include "rackqm/free_product.hpp"
#include "rackqm/linalg.hpp"
#include "rackqm/number.hpp"
#include "rackqm/quasimorphism.hpp"
#include "rackqm/sampler.hpp"

namespace rackqm {

inline constexpr std::size_t default_cochain_cap = 10'000'000;

namespace detail {

inline std::size_t checked_pow(std::size_t base, long exp, std::size_t cap) {
  if (exp < 0) return 0;
  std::size_t v = 1;
  for (long i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) {
      throw input_error("degree too large for the configured cochain budget (" + std::to_string(cap) + ")");
    }
    v *= base;
  }
  return v;
}

inline std::vector<std::size_t> decode(std::size_t index, std::size_t base, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = index % base;
    index /= base;
  }
  return t;
}

inline std::size_t encode(const std::vector<std::size_t>& t, std::size_t base) {
  std::size_t idx = 0;
  for (auto x : t) idx = idx * base + x;
  return idx;
}

}  // namespace detail

inline bool is_degenerate(const std::vector<std::size_t>& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  return false;
}

struct Cochain {
  long degree = 0;
  std::vector<Rational> values;  // length |X|^degree

  Rational sup_norm() const {
    Rational m = 0;
    for (const auto& v : values) m = std::max(m, abs(v));
    return m;
  }
};

/// δ^n as a sparse integer matrix of shape |X|^{n+1} x |X|^n.
struct CoboundaryMatrix {
  long degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long>>> entries;  // per row, sorted, no zeros

  long at(std::size_t r, std::size_t c) const {
    for (const auto& [col, v] : entries[r])
      if (col == c) return v;
    return 0;
  }

  bool is_zero() const {
    for (const auto& r : entries)
      if (!r.empty()) return false;
    return true;
  }

  Cochain apply(const Cochain& f) const {
    if (f.values.size() != cols) throw input_error("cochain has the wrong length for this coboundary");
    Cochain out{degree + 1, std::vector<Rational>(rows, Rational(0))};
    for (std::size_t r = 0; r < rows; ++r)
      for (const auto& [c, v] : entries[r]) out.values[r] += Rational(v) * f.values[c];
    return out;
  }
};

inline CoboundaryMatrix coboundary(const FiniteRack& rack, long n, std::size_t cap = default_cochain_cap) {
  const std::size_t size = rack.size();
  CoboundaryMatrix m;
  m.degree = n;
  m.rows = detail::checked_pow(size, n + 1, cap);
  m.cols = detail::checked_pow(size, n, cap);
  m.entries.resize(m.rows);
  if (n <= 0) return m;

  const auto un = static_cast<std::size_t>(n);
  for (std::size_t r = 0; r < m.rows; ++r) {
    auto t = detail::decode(r, size, un + 1);
    std::vector<std::pair<std::size_t, long>> acc;
    std::vector<std::size_t> face(un);
    for (std::size_t i = 0; i <= un; ++i) {
      const long s = (i % 2 == 0) ? -1 : 1;  // (−1)^{i+1} for 0-based i
      // deleted coordinate
      for (std::size_t k = 0, j = 0; k <= un; ++k)
        if (k != i) face[j++] = t[k];
      acc.emplace_back(detail::encode(face, size), s);
      // acted coordinate
      for (std::size_t k = 0, j = 0; k <= un; ++k)
        if (k != i) face[j++] = k < i ? rack.op(t[k], t[i]) : t[k];
      acc.emplace_back(detail::encode(face, size), -s);
    }
    std::sort(acc.begin(), acc.end());
    auto& row = m.entries[r];
    for (const auto& [c, v] : acc) {
      if (!row.empty() && row.back().first == c) {
        row.back().second += v;
        if (row.back().second == 0) row.pop_back();
      } else {
        row.emplace_back(c, v);
      }
    }
  }
  return m;
}

/// Product δ^{n+1}·δ^n as sparse rows; zero for a cochain complex.
inline bool composes_to_zero(const CoboundaryMatrix& next, const CoboundaryMatrix& prev) {
  if (next.cols != prev.rows) throw input_error("coboundary shapes do not compose");
  std::vector<long> acc(prev.cols, 0);
  for (const auto& row : next.entries) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [mid, a] : row)
      for (const auto& [c, b] : prev.entries[mid]) acc[c] += a * b;
    for (auto v : acc)
      if (v != 0) return false;
  }
  return true;
}

/// δ^n sends cochains vanishing on degenerate tuples to cochains vanishing
/// on degenerate tuples: no entry at a degenerate row and non-degenerate
/// column.
inline bool preserves_nondegenerate_support(const FiniteRack& rack, const CoboundaryMatrix& d) {
  if (d.degree <= 0) return true;
  const auto n = static_cast<std::size_t>(d.degree);
  for (std::size_t r = 0; r < d.rows; ++r) {
    if (!is_degenerate(detail::decode(r, rack.size(), n + 1))) continue;
    for (const auto& [c, v] : d.entries[r])
      if (!is_degenerate(detail::decode(c, rack.size(), n))) return false;
  }
  return true;
}

namespace detail {

inline std::size_t coboundary_rank(const FiniteRack& rack, long n, bool quandle, std::size_t cap) {
  if (n <= 0) return 0;
  auto d = coboundary(rack, n, cap);
  const auto un = static_cast<std::size_t>(n);
  std::vector<SparseRow> rows;
  rows.reserve(d.rows);
  for (std::size_t r = 0; r < d.rows; ++r) {
    if (quandle && is_degenerate(decode(r, rack.size(), un + 1))) continue;
    SparseRow row;
    for (const auto& [c, v] : d.entries[r]) {
      if (quandle && is_degenerate(decode(c, rack.size(), un))) continue;
      row.emplace_back(c, Integer(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return exact_rank(rows);
}

inline std::size_t cochain_dim(const FiniteRack& rack, long n, bool quandle, std::size_t cap) {
  if (n < 0) return 0;
  const std::size_t total = checked_pow(rack.size(), n, cap);
  if (!quandle || n < 2) return total;
  std::size_t count = 0;
  for (std::size_t i = 0; i < total; ++i)
    if (!is_degenerate(decode(i, rack.size(), static_cast<std::size_t>(n)))) ++count;
  return count;
}

}  // namespace detail

/// dim H^k = dim C^k − rank δ^k − rank δ^{k−1} for k = 0..max_degree, by
/// exact elimination. Quandle mode uses the non-degenerate subcomplex.
inline std::vector<std::size_t> cohomology_dims(const FiniteRack& rack, long max_degree, bool quandle = false,
                                                std::size_t cap = default_cochain_cap) {
  if (max_degree < 0) throw input_error("max degree must be nonnegative");
  if (quandle && !rack.is_quandle()) throw input_error("quandle mode requires a quandle");
  detail::checked_pow(rack.size(), max_degree + 1, cap);
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;  // rank δ^{k−1}
  for (long k = 0; k <= max_degree; ++k) {
    std::size_t rk = detail::coboundary_rank(rack, k, quandle, cap);
    dims.push_back(detail::cochain_dim(rack, k, quandle, cap) - rk - prev_rank);
    prev_rank = rk;
  }
  return dims;
}

/// `# delta n rows cols`, then one dense row per line.
inline std::string dump_matrix(const CoboundaryMatrix& d) {
  std::string out = "# delta " + std::to_string(d.degree) + " " + std::to_string(d.rows) + " " + std::to_string(d.cols) + "\n";
  std::vector<long> dense(d.cols);
  for (const auto& row : d.entries) {
    std::fill(dense.begin(), dense.end(), 0);
    for (const auto& [c, v] : row) dense[c] = v;
    for (std::size_t c = 0; c < d.cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(dense[c]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cocycle checks on free products

struct DiagonalReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  FreeProductElement first_failure;
  bool ok() const { return failures == 0; }
};

/// δ¹φ̂_λ(p, p) = φ̂_λ(p) − φ̂_λ(p◁p) on seeded random p.
inline DiagonalReport check_cocycle_diag(const LambdaFamily& lambda, const FreeProductRack& parent,
                                         const SamplerConfig& cfg) {
  DiagonalReport rep;
  Rng rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    auto p = random_element(parent, rng, cfg);
    ++rep.checked;
    if (rack_qm(lambda, p) != rack_qm(lambda, parent.op(p, p))) {
      if (rep.failures++ == 0) rep.first_failure = p;
    }
  }
  return rep;
}

struct BoundedCocycleReport {
  Rational max_observed = 0;  // sup |δ¹φ̂_λ| over sampled pairs
  Rational bound = 0;         // 4‖λ‖∞
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t nonzero_second_coboundary = 0;
  bool ok() const { return max_observed <= bound && nonzero_second_coboundary == 0; }
};

/// Samples pairs for sup |δ¹φ̂_λ| and triples for δ²(δ¹φ̂_λ) = 0, with
///   δ²f(x, y, z) = f(x, z) − f(x, y) − f(x◁y, z) + f(x◁z, y◁z).
inline BoundedCocycleReport bounded_2cocycle_check(const LambdaFamily& lambda, const FreeProductRack& parent,
                                                   const SamplerConfig& cfg, std::size_t triples) {
  BoundedCocycleReport rep;
  rep.bound = 4 * lambda.bound();
  auto phi = [&](const FreeProductElement& p) { return rack_qm(lambda, p); };
  auto f = [&](const FreeProductElement& x, const FreeProductElement& y) { return phi(x) - phi(parent.op(x, y)); };

  Rng rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    auto p = random_element(parent, rng, cfg);
    auto q = random_element(parent, rng, cfg);
    rep.max_observed = std::max(rep.max_observed, abs(f(p, q)));
    ++rep.pairs;
  }
  for (std::size_t k = 0; k < triples; ++k) {
    auto x = random_element(parent, rng, cfg);
    auto y = random_element(parent, rng, cfg);
    auto z = random_element(parent, rng, cfg);
    Rational v = f(x, z) - f(x, y) - f(parent.op(x, y), z) + f(parent.op(x, z), parent.op(y, z));
    ++rep.triples;
    if (v != 0) ++rep.nonzero_second_coboundary;
  }
  return rep;
}

}  // namespace rackqm
