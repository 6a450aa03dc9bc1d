#pragma once

// Adjoint groups Ad(X) = < e_x | e_x e_y = e_y e_{x◁y} >.
//
// For a general finite rack only the presentation is produced. Decidable
// models with normal forms exist for two factor classes:
//   * trivial racks T_n, where Ad is free abelian of rank n and acts trivially;
//   * the free rack on one generator {s} x Z, where Ad = Z = <e_s> acts on the
//     carrier by shifting: (s, e_s^m) · e_s^k = (s, e_s^{m+k}).

#include <cstddef>
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/finite_rack.hpp"
#include "rackqm/number.hpp"
#include "rackqm/word.hpp"

namespace rackqm {

inline std::string generator_name(const std::string& prefix, const std::string& label) {
  return prefix + "." + label;
}

inline std::string default_prefix(const FiniteRack& rack) {
  return rack.name().empty() ? std::string("x") : rack.name();
}

// ---------------------------------------------------------------------------
// Presentation

struct AdjointPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;  // one per ordered pair (x, y), row-major
};

inline AdjointPresentation presentation(const FiniteRack& rack, const std::string& prefix) {
  AdjointPresentation p;
  const std::size_t n = rack.size();
  for (std::size_t x = 0; x < n; ++x) p.generators.push_back(generator_name(prefix, rack.labels()[x]));
  p.relators.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& gx = p.generators[x];
      const auto& gy = p.generators[y];
      const auto& gxy = p.generators[rack.op(x, y)];
      p.relators.push_back(GroupWord{{gx, 1}, {gy, 1}, {gxy, -1}, {gy, -1}});
    }
  }
  return p;
}

inline AdjointPresentation presentation(const FiniteRack& rack) {
  return presentation(rack, default_prefix(rack));
}

/// Header line `generators: g1 g2 ...`, then one relator per line. The
/// identity relator (from x◁y = x with y = x, say) is an empty line.
inline std::string export_presentation(const AdjointPresentation& p) {
  std::string out = "generators:";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += render(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Generator rewriting for finitely generated racks

/// Word in {e_s : s in gens} equal to e_x in Ad(X):
/// e_x = e_{sn}^{-εn} ··· e_{s1}^{-ε1} · e_{s0} · e_{s1}^{ε1} ··· e_{sn}^{εn}.
inline GroupWord express_generator(const FiniteRack& rack, const std::vector<std::size_t>& gens,
                                   std::size_t x, const std::string& prefix) {
  if (x >= rack.size()) throw input_error("element " + std::to_string(x) + " out of range");
  auto gen = is_generating(rack, gens);
  if (!gen.generates) throw input_error("subset does not generate the rack");
  const auto& path = *gen.witness[x];
  const auto& labels = rack.labels();
  std::vector<syllable<std::string>> raw;
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it)
    raw.push_back({generator_name(prefix, labels[it->first]), -it->second});
  raw.push_back({generator_name(prefix, labels[path.start]), 1});
  for (const auto& [s, eps] : path.steps) raw.push_back({generator_name(prefix, labels[s]), eps});
  return GroupWord(raw);
}

inline GroupWord express_generator(const FiniteRack& rack, const std::vector<std::size_t>& gens,
                                   std::size_t x) {
  return express_generator(rack, gens, x, default_prefix(rack));
}

namespace detail {

inline std::size_t element_of_generator(const FiniteRack& rack, const std::string& prefix,
                                        const std::string& name) {
  if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '.') {
    throw input_error("generator '" + name + "' is not of the form " + prefix + ".<element>");
  }
  auto idx = rack.index_of(name.substr(prefix.size() + 1));
  if (!idx) throw input_error("generator '" + name + "' names no rack element");
  return *idx;
}

}  // namespace detail

/// Right action of a word on a rack element: z · e_s^k = ψ_s^k(z).
inline std::size_t act_on(const FiniteRack& rack, std::size_t z, const GroupWord& w,
                          const std::string& prefix) {
  for (const auto& s : w.syllables()) {
    std::size_t y = detail::element_of_generator(rack, prefix, s.gen);
    int eps = s.exp > 0 ? 1 : -1;
    for (Integer k = abs(s.exp); k > 0; --k) z = rack.op(z, y, eps);
  }
  return z;
}

/// Sound-but-incomplete test of w = e_x in Ad(X): w and e_x must act
/// identically on every element and have equal images in the abelianization
/// Z^{components}. A false result is a proof of inequality; a true result is
/// not a proof of equality for general racks.
inline bool verify_expression(const FiniteRack& rack, std::size_t x, const GroupWord& w,
                              const std::string& prefix) {
  if (x >= rack.size()) throw input_error("element " + std::to_string(x) + " out of range");
  auto comp = components(rack);
  std::vector<Integer> weight(comp.count, 0);
  for (const auto& s : w.syllables())
    weight[comp.component_of[detail::element_of_generator(rack, prefix, s.gen)]] += s.exp;
  for (std::size_t c = 0; c < comp.count; ++c) {
    if (weight[c] != (c == comp.component_of[x] ? 1 : 0)) return false;
  }
  for (std::size_t z = 0; z < rack.size(); ++z) {
    if (act_on(rack, z, w, prefix) != rack.op(z, x)) return false;
  }
  return true;
}

inline bool verify_expression(const FiniteRack& rack, std::size_t x, const GroupWord& w) {
  return verify_expression(rack, x, w, default_prefix(rack));
}

/// As above, additionally requiring w to be a word over {e_s : s in gens}.
inline bool verify_expression(const FiniteRack& rack, const std::vector<std::size_t>& gens,
                              std::size_t x, const GroupWord& w, const std::string& prefix) {
  for (const auto& s : w.syllables()) {
    auto y = detail::element_of_generator(rack, prefix, s.gen);
    if (std::find(gens.begin(), gens.end(), y) == gens.end()) {
      throw input_error("generator '" + s.gen + "' is not in the generating set");
    }
  }
  return verify_expression(rack, x, w, prefix);
}

// ---------------------------------------------------------------------------
// Decidable models

/// Values of a factor adjoint group: exponent vectors over generator indices.
using FactorValue = basic_abelian_word<std::size_t>;

enum class model_kind { free_abelian, free_group };

class AdjointModel {
 public:
  /// Ad(T_n) = Z^n with e(x) = x-th basis vector and trivial action.
  static AdjointModel trivial_rack_model(std::size_t n, std::vector<std::string> labels = {}) {
    if (n == 0) throw input_error("trivial rack model needs n >= 1");
    if (labels.empty())
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    if (labels.size() != n) throw input_error("label count does not match rank");
    AdjointModel m;
    m.kind_ = model_kind::free_abelian;
    m.labels_ = std::move(labels);
    return m;
  }

  /// Free rack on one generator: carrier {s} x Z (element m is (s, e_s^m)),
  /// Ad = Z, e(m) = e_s for every m, and m · e_s^k = m + k.
  static AdjointModel free_rack_model() {
    AdjointModel m;
    m.kind_ = model_kind::free_group;
    m.labels_ = {"0"};
    return m;
  }

  model_kind kind() const noexcept { return kind_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  bool is_quandle() const noexcept { return kind_ == model_kind::free_abelian; }
  /// Carrier size; zero for the infinite carrier of the free rack model.
  std::size_t carrier_size() const noexcept { return kind_ == model_kind::free_abelian ? rank() : 0; }
  std::size_t component_count() const noexcept { return kind_ == model_kind::free_abelian ? rank() : 1; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  FactorValue identity() const { return {}; }
  bool is_identity(const FactorValue& g) const { return g.is_identity(); }
  FactorValue multiply(const FactorValue& g, const FactorValue& h) const { return g * h; }
  FactorValue invert(const FactorValue& g) const { return g.inverse(); }

  bool contains(const Integer& x) const {
    return kind_ == model_kind::free_group || (x >= 0 && x < Integer(rank()));
  }

  bool contains(const FactorValue& g) const {
    for (const auto& [i, k] : g.entries())
      if (i >= rank()) return false;
    return true;
  }

  FactorValue embed(const Integer& x) const {
    if (!contains(x)) throw input_error("element " + x.str() + " not in factor");
    if (kind_ == model_kind::free_group) return FactorValue::generator(0);
    return FactorValue::generator(static_cast<std::size_t>(x));
  }

  Integer act(const Integer& x, const FactorValue& g) const {
    if (kind_ == model_kind::free_group) return x + g.exponent(0);
    return x;
  }

  /// Canonical text over dotted generator names.
  std::string normal_form(const FactorValue& g, const std::string& prefix) const {
    std::string out;
    for (const auto& [i, k] : g.entries()) {
      if (!out.empty()) out += ' ';
      out += render_syllable(generator_name(prefix, labels_[i]), k);
    }
    return out;
  }

 private:
  AdjointModel() = default;

  model_kind kind_ = model_kind::free_abelian;
  std::vector<std::string> labels_;
};

inline AdjointModel trivial_rack_model(std::size_t n) { return AdjointModel::trivial_rack_model(n); }

/// Model for a finite factor rack; only trivial racks have one.
inline AdjointModel model_for(const FiniteRack& rack) {
  if (!rack.is_trivial()) {
    throw input_error("rack '" + rack.name() +
                      "' is not trivial; no decidable adjoint model is available");
  }
  return AdjointModel::trivial_rack_model(rack.size(), rack.labels());
}

}  // namespace rackqm
