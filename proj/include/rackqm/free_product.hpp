#pragma once

// Free products of racks over decidable adjoint models.
//
// An element is a pair (x, g) with x in a factor X_t and g in the free
// product of the factor adjoint groups, modulo (x, g w) ~ (x·g, w) for g in
// Ad(X_t). Orienting that relation as "absorb a leading syllable from the
// base factor into the base" gives a canonical form: the tail's first
// syllable lies in a factor different from t. Equality is syntactic
// equality of canonical forms.
//
// Text form: `factor.element | word`, the word written over dotted
// generator names `factor.element` (meaning e_element of that factor).

#include <atomic>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rackqm/adjoint.hpp"
#include "rackqm/error.hpp"
#include "rackqm/number.hpp"
#include "rackqm/word.hpp"

namespace rackqm {

struct Syllable {
  std::size_t factor = 0;
  FactorValue value;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.factor == b.factor && a.value == b.value;
  }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.value < b.value;
  }
};

/// Factorization normal form in a free product of groups: no identity
/// syllables, adjacent syllables from distinct factors.
class SyllableWord {
 public:
  SyllableWord() = default;

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  std::size_t size() const noexcept { return syl_.size(); }
  bool is_identity() const noexcept { return syl_.empty(); }
  const Syllable& front() const { return syl_.front(); }

  SyllableWord inverse() const {
    SyllableWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->factor, it->value.inverse()});
    return w;
  }

  SyllableWord& operator*=(const SyllableWord& rhs) {
    if (&rhs == this) return *this *= SyllableWord(rhs);
    for (const auto& s : rhs.syl_) push(s);
    return *this;
  }
  friend SyllableWord operator*(SyllableWord lhs, const SyllableWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Drops the first syllable.
  SyllableWord tail() const {
    SyllableWord w;
    w.syl_.assign(syl_.begin() + 1, syl_.end());
    return w;
  }

  friend bool operator==(const SyllableWord& a, const SyllableWord& b) { return a.syl_ == b.syl_; }
  friend bool operator<(const SyllableWord& a, const SyllableWord& b) { return a.syl_ < b.syl_; }

  // Stack merge: same-factor neighbours multiply, identities vanish, and the
  // result is in normal form after every push.
  void push(const Syllable& s) {
    if (s.value.is_identity()) return;
    if (!syl_.empty() && syl_.back().factor == s.factor) {
      syl_.back().value *= s.value;
      if (syl_.back().value.is_identity()) syl_.pop_back();
      return;
    }
    syl_.push_back(s);
  }

  /// Appends an already-normal sequence without merging. The caller
  /// guarantees alternation and non-identity values.
  static SyllableWord from_normal(std::vector<Syllable> syl) {
    SyllableWord w;
    w.syl_ = std::move(syl);
    return w;
  }

 private:
  std::vector<Syllable> syl_;
};

struct Factor {
  std::string name;
  AdjointModel model;
};

/// Reduced, canonical element (x, g): x lies in factor `factor`, and the
/// first syllable of `tail` (if any) lies in another factor.
struct FreeProductElement {
  std::size_t parent = 0;
  std::size_t factor = 0;
  Integer element;
  SyllableWord tail;

  friend bool operator==(const FreeProductElement& a, const FreeProductElement& b) {
    return a.parent == b.parent && a.factor == b.factor && a.element == b.element && a.tail == b.tail;
  }
};

class FreeProductRack {
 public:
  explicit FreeProductRack(std::vector<Factor> factors) : factors_(std::move(factors)), id_(next_id()) {
    if (factors_.size() < 2) throw input_error("a free product needs at least two factors");
    quandle_ = true;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& name = factors_[i].name;
      if (name.empty() || name.find('.') != std::string::npos || !is_generator_name(name)) {
        throw input_error("invalid factor name '" + name + "'");
      }
      if (!index_.emplace(name, i).second) throw input_error("duplicate factor name '" + name + "'");
      quandle_ = quandle_ && factors_[i].model.is_quandle();
    }
  }

  /// Free rack F^R(S): free product of free racks on one generator.
  static FreeProductRack free_rack(const std::vector<std::string>& names) {
    if (names.size() < 2) throw input_error("free rack needs at least two generators");
    std::vector<Factor> f;
    for (const auto& n : names) f.push_back({n, AdjointModel::free_rack_model()});
    return FreeProductRack(std::move(f));
  }

  /// Free quandle F^Q(S): free product of one-element trivial quandles, so
  /// leading powers of e_s are absorbed into a base s.
  static FreeProductRack free_quandle(const std::vector<std::string>& names) {
    if (names.size() < 2) throw input_error("free quandle needs at least two generators");
    std::vector<Factor> f;
    for (const auto& n : names) f.push_back({n, AdjointModel::trivial_rack_model(1)});
    return FreeProductRack(std::move(f));
  }

  /// Free product of trivial racks T_{n_1} * T_{n_2} * ...
  static FreeProductRack trivial_product(const std::vector<std::pair<std::string, std::size_t>>& sizes) {
    std::vector<Factor> f;
    for (const auto& [n, k] : sizes) f.push_back({n, AdjointModel::trivial_rack_model(k)});
    return FreeProductRack(std::move(f));
  }

  std::size_t id() const noexcept { return id_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  bool is_quandle() const noexcept { return quandle_; }

  bool is_free_quandle() const {
    for (const auto& f : factors_)
      if (f.model.kind() != model_kind::free_abelian || f.model.rank() != 1) return false;
    return true;
  }
  bool is_free_rack() const {
    for (const auto& f : factors_)
      if (f.model.kind() != model_kind::free_group) return false;
    return true;
  }
  /// Every factor group is infinite cyclic, so Ad is a free group on the
  /// factor names.
  bool has_cyclic_factors() const {
    for (const auto& f : factors_)
      if (f.model.rank() != 1) return false;
    return true;
  }

  std::size_t factor_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw input_error("unknown factor '" + name + "'");
    return it->second;
  }

  // -------------------------------------------------------------------------
  // Syllable words

  SyllableWord factorize(const std::vector<Syllable>& raw) const {
    SyllableWord w;
    for (const auto& s : raw) {
      check_value(s);
      w.push(s);
    }
    return w;
  }

  SyllableWord generator(std::size_t factor, const Integer& x, const Integer& power = 1) const {
    const auto& m = factors_.at(factor).model;
    return SyllableWord::from_normal(power == 0 ? std::vector<Syllable>{}
                                                : std::vector<Syllable>{{factor, m.embed(x).pow(power)}});
  }

  // -------------------------------------------------------------------------
  // Elements

  /// Canonical form of (x, g): absorb a leading base-factor syllable.
  FreeProductElement reduce_element(std::size_t factor, const Integer& x, SyllableWord g) const {
    const auto& m = factors_.at(factor).model;
    if (!m.contains(x)) throw input_error("element " + x.str() + " is not in factor '" + factors_[factor].name + "'");
    FreeProductElement p{id_, factor, x, {}};
    if (!g.is_identity() && g.front().factor == factor) {
      p.element = m.act(x, g.front().value);
      p.tail = g.tail();
    } else {
      p.tail = std::move(g);
    }
    return p;
  }

  FreeProductElement reduce_element(std::size_t factor, const Integer& x, const std::vector<Syllable>& raw) const {
    return reduce_element(factor, x, factorize(raw));
  }

  FreeProductElement element(std::size_t factor, const Integer& x) const { return reduce_element(factor, x, SyllableWord{}); }

  /// p ◁^{sign} q = (x, g h⁻¹ e_y^{sign} h) for p = (x, g), q = (y, h).
  FreeProductElement op(const FreeProductElement& p, const FreeProductElement& q, int sign = 1) const {
    check_parent(p);
    check_parent(q);
    SyllableWord t = p.tail;
    t *= q.tail.inverse();
    t *= generator(q.factor, q.element, sign >= 0 ? 1 : -1);
    t *= q.tail;
    return reduce_element(p.factor, p.element, std::move(t));
  }

  FreeProductElement op_inverse(const FreeProductElement& p, const FreeProductElement& q) const {
    return op(p, q, -1);
  }

  bool equal(const FreeProductElement& p, const FreeProductElement& q) const {
    check_parent(p);
    check_parent(q);
    return p == q;
  }

  // -------------------------------------------------------------------------
  // Free group views (cyclic factors only)

  /// Tail as a reduced word over the factor names, for parents whose factor
  /// groups are all infinite cyclic.
  GroupWord tail_word(const SyllableWord& g) const {
    if (!has_cyclic_factors()) throw input_error("factor adjoint groups are not all infinite cyclic");
    std::vector<syllable<std::string>> raw;
    raw.reserve(g.size());
    for (const auto& s : g.syllables()) raw.push_back({factors_[s.factor].name, s.value.exponent(0)});
    return GroupWord(raw);
  }

  /// Free rack view (s, g) in S x F(S): the base power e_s^m is put back in
  /// front of the tail.
  GroupWord free_rack_word(const FreeProductElement& p) const {
    check_parent(p);
    if (!is_free_rack()) throw input_error("parent is not a free rack");
    return GroupWord::generator(factors_[p.factor].name, p.element) * tail_word(p.tail);
  }

  /// g⁻¹ s g in the free group on S, for p = (s, g) in a free quandle.
  GroupWord conjugate_form(const FreeProductElement& p) const {
    check_parent(p);
    if (!is_free_quandle()) throw input_error("parent is not a free quandle");
    GroupWord g = tail_word(p.tail);
    return g.inverse() * GroupWord::generator(factors_[p.factor].name) * g;
  }

  // -------------------------------------------------------------------------
  // Text

  std::string render(const SyllableWord& g) const {
    std::string out;
    for (const auto& s : g.syllables()) {
      if (!out.empty()) out += ' ';
      out += factors_[s.factor].model.normal_form(s.value, factors_[s.factor].name);
    }
    return out;
  }

  std::string render(const FreeProductElement& p) const {
    check_parent(p);
    const auto& f = factors_[p.factor];
    std::string out;
    std::string tail = render(p.tail);
    if (f.model.kind() == model_kind::free_group) {
      out = generator_name(f.name, "0") + " |";
      if (p.element != 0) out += " " + render_syllable(generator_name(f.name, "0"), p.element);
    } else {
      out = generator_name(f.name, f.model.labels()[static_cast<std::size_t>(p.element)]) + " |";
    }
    if (!tail.empty()) out += " " + tail;
    return out;
  }

  std::vector<Syllable> parse_syllables(std::string_view text) const {
    std::vector<Syllable> raw;
    for (const auto& s : rackqm::parse_syllables(text)) {
      auto [factor, x] = parse_generator(s.gen);
      raw.push_back({factor, factors_[factor].model.embed(x).pow(s.exp)});
    }
    return raw;
  }

  SyllableWord parse_word(std::string_view text) const { return factorize(parse_syllables(text)); }

  FreeProductElement parse_element(std::string_view text) const {
    auto bar = text.find('|');
    std::string_view base = text.substr(0, bar);
    while (!base.empty() && std::isspace(static_cast<unsigned char>(base.front()))) base.remove_prefix(1);
    while (!base.empty() && std::isspace(static_cast<unsigned char>(base.back()))) base.remove_suffix(1);
    if (base.empty()) throw parse_error("missing base element", 0);
    auto [factor, x] = parse_generator(std::string(base));
    std::vector<Syllable> raw;
    if (bar != std::string_view::npos) {
      try {
        raw = parse_syllables(text.substr(bar + 1));
      } catch (const parse_error& e) {
        throw parse_error(e.what(), bar + 1 + e.position());
      }
    }
    return reduce_element(factor, x, raw);
  }

  void check_parent(const FreeProductElement& p) const {
    if (p.parent != id_) throw input_error("element belongs to a different free product");
  }

 private:
  static std::size_t next_id() {
    static std::atomic<std::size_t> counter{1};
    return counter++;
  }

  void check_value(const Syllable& s) const {
    if (s.factor >= factors_.size()) throw input_error("unknown factor index " + std::to_string(s.factor));
    if (!factors_[s.factor].model.contains(s.value)) {
      throw input_error("value is not in the adjoint group of factor '" + factors_[s.factor].name + "'");
    }
  }

  std::pair<std::size_t, Integer> parse_generator(const std::string& name) const {
    auto dot = name.find('.');
    if (dot == std::string::npos) throw parse_error("expected factor.element, got '" + name + "'", 0);
    std::size_t factor = factor_index(name.substr(0, dot));
    std::string label = name.substr(dot + 1);
    const auto& labels = factors_[factor].model.labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return {factor, Integer(i)};
    throw parse_error("unknown element '" + label + "' of factor '" + factors_[factor].name + "'", dot + 1);
  }

  std::vector<Factor> factors_;
  std::unordered_map<std::string, std::size_t> index_;
  bool quandle_ = false;
  std::size_t id_ = 0;
};

}  // namespace rackqm
