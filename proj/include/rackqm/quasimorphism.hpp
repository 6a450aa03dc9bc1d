#pragma once

// Quasimorphisms on free products of groups and the rack quasimorphisms
// they induce.
//
// A family λ = (λ_s) of odd bounded functions on the factor groups gives the
// Rolli quasimorphism φ_λ(g_1···g_n) = Σ λ_{s_i}(g_i) over the factorization,
// and the rack quasimorphism φ̂_λ(x, g) = φ_λ(g) on reduced elements. All
// values are exact rationals.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/free_product.hpp"
#include "rackqm/group_table.hpp"
#include "rackqm/linalg.hpp"
#include "rackqm/number.hpp"
#include "rackqm/sampler.hpp"
#include "rackqm/word.hpp"

namespace rackqm {

// ---------------------------------------------------------------------------
// Odd functions on Z

/// Odd function σ: Z → Q given by its values on 1..cutoff and a rule beyond
/// the cutoff: zero, or the constant c·sign(n). Oddness holds by
/// construction since only the positive side is stored.
class OddFunction {
 public:
  enum class tail_rule { zero, constant_sign };

  OddFunction() = default;

  OddFunction(std::map<Integer, Rational> positive, Integer cutoff, tail_rule rule = tail_rule::zero,
              Rational tail_value = 0)
      : table_(std::move(positive)), cutoff_(std::move(cutoff)), rule_(rule), tail_value_(std::move(tail_value)) {
    for (auto it = table_.begin(); it != table_.end();) {
      if (it->first <= 0 || it->first > cutoff_) {
        throw input_error("odd function table key " + it->first.str() + " outside 1.." + cutoff_.str());
      }
      it = it->second == 0 ? table_.erase(it) : std::next(it);
    }
    if (rule_ == tail_rule::zero) tail_value_ = 0;
  }

  /// σ(±k) = ±1, zero elsewhere.
  static OddFunction indicator(const Integer& k) {
    if (k <= 0) throw input_error("indicator index must be positive");
    return OddFunction({{k, Rational(1)}}, k);
  }

  /// σ(n) = c·sign(n).
  static OddFunction sign(const Rational& c = 1) { return OddFunction({}, 0, tail_rule::constant_sign, c); }

  Rational operator()(const Integer& n) const {
    if (n == 0) return 0;
    if (n < 0) return -(*this)(Integer(-n));
    if (n <= cutoff_) {
      auto it = table_.find(n);
      return it == table_.end() ? Rational(0) : it->second;
    }
    return tail_value_;
  }

  Rational bound() const {
    Rational b = abs(tail_value_);
    for (const auto& [k, v] : table_) b = std::max(b, abs(v));
    return b;
  }

  /// Positive arguments where σ may be nonzero.
  std::vector<Integer> support_probes() const {
    std::vector<Integer> out;
    for (const auto& [k, v] : table_) out.push_back(k);
    if (tail_value_ != 0) out.push_back(cutoff_ + 1);
    return out;
  }

  const std::map<Integer, Rational>& table() const noexcept { return table_; }
  const Integer& cutoff() const noexcept { return cutoff_; }
  tail_rule rule() const noexcept { return rule_; }
  const Rational& tail_value() const noexcept { return tail_value_; }

 private:
  std::map<Integer, Rational> table_;
  Integer cutoff_ = 0;
  tail_rule rule_ = tail_rule::zero;
  Rational tail_value_ = 0;
};

// ---------------------------------------------------------------------------
// λ families

/// One odd bounded function λ_s on a factor group.
class LambdaComponent {
 public:
  enum class kind { zero, sign, iota, table };

  LambdaComponent() = default;

  /// λ(g) = c·sign(exponent sum of g). On an infinite cyclic factor this is
  /// the sign of the exponent.
  static LambdaComponent sign(const Rational& scale = 1) {
    LambdaComponent c;
    c.kind_ = kind::sign;
    c.scale_ = scale;
    return c;
  }

  /// λ(e_x^n) = σ(n) for the generator e_x with index `generator`, zero on
  /// every value that is not a power of e_x.
  static LambdaComponent iota(std::size_t generator, OddFunction sigma) {
    LambdaComponent c;
    c.kind_ = kind::iota;
    c.generator_ = generator;
    c.sigma_ = std::move(sigma);
    return c;
  }

  /// Finitely supported λ. Keys may be given in either sign; each is stored
  /// under its positive representative (first nonzero exponent positive).
  static LambdaComponent table(const std::vector<std::pair<FactorValue, Rational>>& entries) {
    LambdaComponent c;
    c.kind_ = kind::table;
    for (const auto& [g, v] : entries) {
      if (g.is_identity()) {
        if (v != 0) throw input_error("odd function must vanish at the identity");
        continue;
      }
      auto [key, flip] = normalize(g);
      Rational value = flip ? Rational(-v) : v;
      auto [it, fresh] = c.entries_.emplace(key, value);
      if (!fresh && it->second != value) throw input_error("conflicting table values violate oddness");
    }
    for (auto it = c.entries_.begin(); it != c.entries_.end();) it = it->second == 0 ? c.entries_.erase(it) : std::next(it);
    return c;
  }

  kind type() const noexcept { return kind_; }
  const Rational& scale() const noexcept { return scale_; }
  std::size_t generator() const noexcept { return generator_; }
  const OddFunction& sigma() const noexcept { return sigma_; }
  const std::map<FactorValue, Rational>& entries() const noexcept { return entries_; }

  Rational operator()(const FactorValue& g) const {
    switch (kind_) {
      case kind::zero:
        return 0;
      case kind::sign: {
        int s = rackqm::sign(g.exponent_sum());
        return s == 0 ? Rational(0) : (s > 0 ? scale_ : Rational(-scale_));
      }
      case kind::iota: {
        auto p = g.as_generator_power();
        if (!p || p->first != generator_) return 0;
        return sigma_(p->second);
      }
      case kind::table: {
        if (g.is_identity()) return 0;
        auto [key, flip] = normalize(g);
        auto it = entries_.find(key);
        if (it == entries_.end()) return 0;
        return flip ? Rational(-it->second) : it->second;
      }
    }
    return 0;
  }

  Rational bound() const {
    switch (kind_) {
      case kind::zero: return 0;
      case kind::sign: return abs(scale_);
      case kind::iota: return sigma_.bound();
      case kind::table: {
        Rational b = 0;
        for (const auto& [k, v] : entries_) b = std::max(b, abs(v));
        return b;
      }
    }
    return 0;
  }

  /// Values where λ may be nonzero; λ vanishes wherever none of these (or
  /// their inverses) applies.
  std::vector<FactorValue> probes() const {
    std::vector<FactorValue> out;
    switch (kind_) {
      case kind::zero: break;
      case kind::sign:
        if (scale_ != 0) out.push_back(FactorValue::generator(0));
        break;
      case kind::iota:
        for (const auto& k : sigma_.support_probes()) out.push_back(FactorValue::generator(generator_, k));
        break;
      case kind::table:
        for (const auto& [k, v] : entries_) out.push_back(k);
        break;
    }
    return out;
  }

 private:
  static std::pair<FactorValue, bool> normalize(const FactorValue& g) {
    if (g.entries().front().second < 0) return {g.inverse(), true};
    return {g, false};
  }

  kind kind_ = kind::zero;
  Rational scale_ = 0;
  std::size_t generator_ = 0;
  OddFunction sigma_;
  std::map<FactorValue, Rational> entries_;
};

/// Uniformly bounded family (λ_s), one component per factor of a parent.
class LambdaFamily {
 public:
  explicit LambdaFamily(std::size_t factor_count) : comp_(factor_count) {}

  LambdaFamily& set(std::size_t factor, LambdaComponent c) {
    comp_.at(factor) = std::move(c);
    return *this;
  }

  /// Declared ‖λ‖∞; must dominate every component's sup.
  LambdaFamily& declare_bound(const Rational& b) {
    if (b < computed_bound()) {
      throw input_error("declared bound " + to_display(b) + " is below the family sup " +
                        to_display(computed_bound()));
    }
    declared_ = b;
    return *this;
  }

  std::size_t size() const noexcept { return comp_.size(); }
  const LambdaComponent& component(std::size_t s) const { return comp_.at(s); }

  Rational computed_bound() const {
    Rational b = 0;
    for (const auto& c : comp_) b = std::max(b, c.bound());
    return b;
  }
  Rational bound() const { return declared_ ? std::max(*declared_, computed_bound()) : computed_bound(); }

  Rational operator()(const Syllable& s) const { return comp_.at(s.factor)(s.value); }

  bool matches(const FreeProductRack& parent) const { return comp_.size() == parent.factor_count(); }

 private:
  std::vector<LambdaComponent> comp_;
  std::optional<Rational> declared_;
};

inline LambdaFamily zero_family(const FreeProductRack& parent) { return LambdaFamily(parent.factor_count()); }

/// λ_s = sign of the exponent sum on every factor; ‖λ‖∞ = 1.
inline LambdaFamily sign_family(const FreeProductRack& parent) {
  LambdaFamily f(parent.factor_count());
  for (std::size_t s = 0; s < parent.factor_count(); ++s) f.set(s, LambdaComponent::sign(1));
  return f;
}

/// ι(σ): σ on the powers of e_{x0} in factor s0, zero everywhere else.
inline LambdaFamily iota_family(const FreeProductRack& parent, std::size_t s0, const Integer& x0, OddFunction sigma) {
  const auto& m = parent.factor(s0).model;
  auto e = m.embed(x0).as_generator_power();
  LambdaFamily f(parent.factor_count());
  f.set(s0, LambdaComponent::iota(e->first, std::move(sigma)));
  return f;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

// Sums rationals, keeping integral terms in an integer accumulator.
class RationalSum {
 public:
  void add(const Rational& v) {
    if (denominator(v) == 1) {
      whole_ += numerator(v);
    } else {
      frac_ += v;
    }
  }
  Rational value() const { return frac_ + Rational(whole_); }

 private:
  Integer whole_ = 0;
  Rational frac_ = 0;
};

}  // namespace detail

/// φ_λ(g) = Σ λ_{s_i}(g_i) over the factorization of g.
inline Rational rolli_qm(const LambdaFamily& lambda, const SyllableWord& g) {
  detail::RationalSum sum;
  for (const auto& s : g.syllables()) {
    if (s.factor >= lambda.size()) throw input_error("factor missing from the λ family");
    sum.add(lambda(s));
  }
  return sum.value();
}

/// φ̂_λ(x, g) = φ_λ(g) for reduced (x, g).
inline Rational rack_qm(const LambdaFamily& lambda, const FreeProductElement& p) { return rolli_qm(lambda, p.tail); }

/// Exponent-sum homomorphism on the free product of free abelian factors.
inline Rational exponent_sum(const SyllableWord& g) {
  Integer n = 0;
  for (const auto& s : g.syllables()) n += s.value.exponent_sum();
  return Rational(n);
}

// ---------------------------------------------------------------------------
// Defect estimation

struct GroupDefectConfig {
  long max_letters = 6;    // exhaustive budget on Σ|exponents|
  long max_exponent = 3;   // per-entry exponent bound in the exhaustive part
  SamplerConfig sampling{0, 0, 12, 5};  // random pairs on top of the exhaustive part
};

struct GroupDefectReport {
  Rational max_defect = 0;
  SyllableWord g, h;
  std::size_t words = 0;
  std::size_t pairs = 0;
};

namespace detail {

inline void nonzero_vectors(std::size_t rank, long max_exp, long max_letters, std::size_t i, FactorValue& cur,
                            long used, std::vector<std::pair<FactorValue, long>>& out) {
  if (i == rank) {
    if (!cur.is_identity()) out.emplace_back(cur, used);
    return;
  }
  for (long k = -max_exp; k <= max_exp; ++k) {
    long cost = k < 0 ? -k : k;
    if (used + cost > max_letters) continue;
    FactorValue next = cur;
    next.add(i, k);
    nonzero_vectors(rank, max_exp, max_letters, i + 1, next, used + cost, out);
  }
}

inline void extend_words(const std::vector<std::vector<std::pair<FactorValue, long>>>& values, long budget,
                         std::size_t prev, std::vector<Syllable>& cur, std::vector<SyllableWord>& out) {
  out.push_back(SyllableWord::from_normal(cur));
  for (std::size_t f = 0; f < values.size(); ++f) {
    if (f == prev) continue;
    for (const auto& [v, cost] : values[f]) {
      if (cost > budget) continue;
      cur.push_back({f, v});
      extend_words(values, budget - cost, f, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace detail

/// Every normal-form word with Σ|exponents| ≤ max_letters and each exponent
/// in [−max_exp, max_exp].
inline std::vector<SyllableWord> enumerate_syllable_words(const FreeProductRack& parent, long max_letters, long max_exp) {
  std::vector<std::vector<std::pair<FactorValue, long>>> values(parent.factor_count());
  for (std::size_t f = 0; f < parent.factor_count(); ++f) {
    FactorValue cur;
    detail::nonzero_vectors(parent.factor(f).model.rank(), max_exp, max_letters, 0, cur, 0, values[f]);
  }
  std::vector<SyllableWord> out;
  std::vector<Syllable> cur;
  detail::extend_words(values, max_letters, static_cast<std::size_t>(-1), cur, out);
  return out;
}

/// Lower bound for D(φ) = sup |φ(g) + φ(h) − φ(gh)|: all pairs from the
/// exhaustive enumeration, then seeded random pairs.
template <class Phi>
GroupDefectReport group_defect_estimate(const Phi& phi, const FreeProductRack& parent, const GroupDefectConfig& cfg) {
  GroupDefectReport rep;
  auto words = enumerate_syllable_words(parent, cfg.max_letters, cfg.max_exponent);
  rep.words = words.size();
  std::vector<Rational> values;
  values.reserve(words.size());
  for (const auto& w : words) values.push_back(phi(w));

  auto consider = [&](const SyllableWord& g, const Rational& pg, const SyllableWord& h, const Rational& ph) {
    Rational d = abs(pg + ph - phi(g * h));
    ++rep.pairs;
    if (d > rep.max_defect || rep.pairs == 1) {
      rep.max_defect = d;
      rep.g = g;
      rep.h = h;
    }
  };
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) consider(words[i], values[i], words[j], values[j]);

  Rng rng(cfg.sampling.seed);
  for (std::size_t k = 0; k < cfg.sampling.samples; ++k) {
    auto g = random_syllable_word(parent, rng, cfg.sampling.max_syllables, cfg.sampling.max_exponent);
    auto h = random_syllable_word(parent, rng, cfg.sampling.max_syllables, cfg.sampling.max_exponent);
    consider(g, phi(g), h, phi(h));
  }
  return rep;
}

inline GroupDefectReport group_defect_estimate(const LambdaFamily& lambda, const FreeProductRack& parent,
                                               const GroupDefectConfig& cfg) {
  return group_defect_estimate([&](const SyllableWord& g) { return rolli_qm(lambda, g); }, parent, cfg);
}

struct RackDefectReport {
  Rational max_observed = 0;
  FreeProductElement p, q;
  std::size_t pairs = 0;
  Rational bound = 0;  // 4‖λ‖∞
  bool within_bound() const { return max_observed <= bound; }
};

/// max over seeded random pairs of |φ̂(p) − φ̂(p◁q)|, against 4‖λ‖∞.
inline RackDefectReport rack_defect_estimate(const LambdaFamily& lambda, const FreeProductRack& parent,
                                             const SamplerConfig& cfg) {
  if (!lambda.matches(parent)) throw input_error("λ family does not match the parent's factors");
  RackDefectReport rep;
  rep.bound = 4 * lambda.bound();
  Rng rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    auto p = random_element(parent, rng, cfg);
    auto q = random_element(parent, rng, cfg);
    Rational d = abs(rack_qm(lambda, p) - rack_qm(lambda, parent.op(p, q)));
    if (rep.pairs++ == 0 || d > rep.max_observed) {
      rep.max_observed = d;
      rep.p = p;
      rep.q = q;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Unboundedness

/// Data for the reduced family (x, (g0 e_x^ε)^n) on which
/// φ̂_λ = n·(λ_{s0}(g0) + λ_t(e_x^ε)).
struct UnboundednessWitness {
  std::size_t s0 = 0;
  FactorValue g0;
  std::size_t t = 0;
  Integer x;
  int eps = 1;
  Rational period_value = 0;  // λ_{s0}(g0) + λ_t(e_x^ε), nonzero
  Rational slope = 0;         // |period_value|

  FreeProductElement element(const FreeProductRack& parent, std::size_t n) const {
    FactorValue ex = parent.factor(t).model.embed(x).pow(eps);
    std::vector<Syllable> syl;
    syl.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      syl.push_back({s0, g0});
      syl.push_back({t, ex});
    }
    return parent.reduce_element(t, x, SyllableWord::from_normal(std::move(syl)));
  }
};

/// Finds s0, g0 with λ_{s0}(g0) ≠ 0 among the family's probes, takes the
/// first factor t ≠ s0 with its first element x, and picks ε = ±1 so that
/// λ_{s0}(g0) + λ_t(e_x^ε) ≠ 0 (one of the two works since λ_t is odd).
inline UnboundednessWitness unboundedness_witness(const LambdaFamily& lambda, const FreeProductRack& parent) {
  if (!lambda.matches(parent)) throw input_error("λ family does not match the parent's factors");
  for (std::size_t s0 = 0; s0 < lambda.size(); ++s0) {
    for (const auto& g0 : lambda.component(s0).probes()) {
      Rational v0 = lambda.component(s0)(g0);
      if (v0 == 0) continue;
      UnboundednessWitness w;
      w.s0 = s0;
      w.g0 = g0;
      w.t = s0 == 0 ? 1 : 0;
      w.x = 0;
      FactorValue ex = parent.factor(w.t).model.embed(w.x);
      for (int eps : {1, -1}) {
        Rational v = v0 + lambda.component(w.t)(ex.pow(eps));
        if (v != 0) {
          w.eps = eps;
          w.period_value = v;
          w.slope = abs(v);
          return w;
        }
      }
    }
  }
  throw input_error("λ vanishes on every probe; cannot certify unboundedness");
}

// ---------------------------------------------------------------------------
// Homogeneous quasimorphisms on free groups

/// Number of occurrences of w as a letter-level subword of g (overlaps
/// included) minus the occurrences of w⁻¹.
inline Integer brooks_qm(const GroupWord& w, const GroupWord& g) {
  if (w.is_identity()) throw input_error("Brooks quasimorphism needs a nonempty word");
  using Letter = std::pair<std::string, int>;
  auto letters = [](const GroupWord& u) {
    std::vector<Letter> out;
    for (const auto& s : u.syllables()) {
      if (abs(s.exp) > 10000000) throw input_error("word too long to expand into letters");
      int e = s.exp > 0 ? 1 : -1;
      for (Integer k = abs(s.exp); k > 0; --k) out.emplace_back(s.gen, e);
    }
    return out;
  };
  auto count = [](const std::vector<Letter>& pat, const std::vector<Letter>& text) {
    Integer c = 0;
    if (pat.size() > text.size()) return c;
    for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
      if (std::equal(pat.begin(), pat.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) ++c;
    return c;
  };
  auto text = letters(g);
  return count(letters(w), text) - count(letters(w.inverse()), text);
}

/// A quasimorphism on the free group over `alphabet`.
struct GroupQuasimorphism {
  std::string description;
  std::vector<std::string> alphabet;
  std::function<Rational(const GroupWord&)> eval;
  std::optional<Rational> exact_defect;  // known exactly, e.g. 0 for homomorphisms
  bool homogeneous = false;

  Rational operator()(const GroupWord& g) const { return eval(g); }
};

inline GroupQuasimorphism brooks(const GroupWord& w) {
  if (w.is_identity()) throw input_error("Brooks quasimorphism needs a nonempty word");
  std::set<std::string> gens;
  for (const auto& s : w.syllables()) gens.insert(s.gen);
  return {"brooks(" + render(w) + ")", {gens.begin(), gens.end()},
          [w](const GroupWord& g) { return Rational(brooks_qm(w, g)); }, std::nullopt, false};
}

/// g ↦ Σ exponents; a homomorphism, hence homogeneous with defect 0.
inline GroupQuasimorphism exponent_sum_hom(std::vector<std::string> alphabet) {
  return {"exponent-sum", std::move(alphabet),
          [](const GroupWord& g) {
            Integer n = 0;
            for (const auto& s : g.syllables()) n += s.exp;
            return Rational(n);
          },
          Rational(0), true};
}

struct FreeGroupDefectReport {
  Rational max_defect = 0;
  GroupWord g, h;
  std::size_t pairs = 0;
};

/// All reduced words of letter length ≤ max_length over the alphabet.
inline std::vector<GroupWord> enumerate_reduced_words(const std::vector<std::string>& alphabet, long max_length) {
  std::vector<GroupWord> out{GroupWord{}};
  std::vector<GroupWord> frontier{GroupWord{}};
  for (long len = 1; len <= max_length; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier) {
      for (const auto& a : alphabet) {
        for (int e : {1, -1}) {
          auto v = w * GroupWord::generator(a, e);
          if (v.letter_length() == len) next.push_back(std::move(v));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

inline FreeGroupDefectReport free_group_defect_estimate(const GroupQuasimorphism& phi,
                                                        const std::vector<std::string>& alphabet, long max_length) {
  FreeGroupDefectReport rep;
  auto words = enumerate_reduced_words(alphabet, max_length);
  std::vector<Rational> v;
  v.reserve(words.size());
  for (const auto& w : words) v.push_back(phi(w));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      Rational d = abs(v[i] + v[j] - phi(words[i] * words[j]));
      if (rep.pairs++ == 0 || d > rep.max_defect) {
        rep.max_defect = d;
        rep.g = words[i];
        rep.h = words[j];
      }
    }
  }
  return rep;
}

/// Interval [center − radius, center + radius] containing the
/// homogenization lim φ(g^n)/n, given D(φ) ≤ defect_bound.
struct HomogeneousEstimate {
  Rational center = 0;
  Rational radius = 0;
  Integer exponent = 1;
  Rational defect_bound = 0;

  Rational lower() const { return center - radius; }
  Rational upper() const { return center + radius; }
  bool contains(const Rational& v) const { return lower() <= v && v <= upper(); }
  bool intersects(const HomogeneousEstimate& o) const { return lower() <= o.upper() && o.lower() <= upper(); }
};

namespace detail {

inline std::vector<std::string> merged_alphabet(const GroupQuasimorphism& phi, const GroupWord& g) {
  std::set<std::string> gens(phi.alphabet.begin(), phi.alphabet.end());
  for (const auto& s : g.syllables()) gens.insert(s.gen);
  return {gens.begin(), gens.end()};
}

inline HomogeneousEstimate homogenize_unchecked(const GroupQuasimorphism& phi, const GroupWord& g,
                                                const Rational& defect_bound, const Integer& n) {
  HomogeneousEstimate e;
  e.exponent = n;
  e.defect_bound = defect_bound;
  e.center = phi(g.pow(n)) / Rational(n);
  e.radius = defect_bound / Rational(n);
  return e;
}

}  // namespace detail

/// Rejects a defect bound below what is already observable: the exact
/// defect when known, else the exhaustive estimate over words of length
/// ≤ check_length.
inline void check_defect_bound(const GroupQuasimorphism& phi, const GroupWord& g, const Rational& defect_bound,
                               long check_length = 4) {
  if (defect_bound < 0) throw input_error("defect bound must be nonnegative");
  Rational observed = phi.exact_defect
                          ? *phi.exact_defect
                          : free_group_defect_estimate(phi, detail::merged_alphabet(phi, g), check_length).max_defect;
  if (defect_bound < observed) {
    throw input_error("defect bound " + to_display(defect_bound) + " is below the observed defect " +
                      to_display(observed) + " of " + phi.description);
  }
}

/// center φ(g^N)/N, radius defect_bound/N.
inline HomogeneousEstimate homogenize(const GroupQuasimorphism& phi, const GroupWord& g, const Rational& defect_bound,
                                      const Integer& n) {
  if (n <= 0) throw input_error("homogenization exponent must be positive");
  check_defect_bound(phi, g, defect_bound);
  return detail::homogenize_unchecked(phi, g, defect_bound, n);
}

/// Estimates at N = 1, 2, 4, ... until the radius drops below `tolerance`
/// or N exceeds 2^max_doublings.
inline std::vector<HomogeneousEstimate> homogenize_doubling(const GroupQuasimorphism& phi, const GroupWord& g,
                                                            const Rational& defect_bound, const Rational& tolerance,
                                                            unsigned max_doublings = 20) {
  check_defect_bound(phi, g, defect_bound);
  std::vector<HomogeneousEstimate> out;
  Integer n = 1;
  for (unsigned k = 0; k <= max_doublings; ++k, n *= 2) {
    out.push_back(detail::homogenize_unchecked(phi, g, defect_bound, n));
    if (out.back().radius < tolerance) break;
  }
  return out;
}

/// φ̂(x, g) = φ(g) for reduced (x, g), with Ad identified with the free
/// group on the factor names.
inline Rational homogeneous_rack_qm(const GroupQuasimorphism& phi, const FreeProductRack& parent,
                                    const FreeProductElement& p) {
  parent.check_parent(p);
  return phi(parent.tail_word(p.tail));
}

inline HomogeneousEstimate homogeneous_rack_estimate(const GroupQuasimorphism& phi, const FreeProductRack& parent,
                                                     const FreeProductElement& p, const Rational& defect_bound,
                                                     const Integer& n) {
  parent.check_parent(p);
  return homogenize(phi, parent.tail_word(p.tail), defect_bound, n);
}

/// max |φ(e_y)| over the factor generators; the constant M in the bound
/// D(φ) + M for φ̂.
inline Rational generator_bound(const GroupQuasimorphism& phi, const FreeProductRack& parent) {
  Rational m = 0;
  for (const auto& f : parent.factors()) m = std::max(m, abs(phi(GroupWord::generator(f.name))));
  return m;
}

// ---------------------------------------------------------------------------
// V0 for finite factor groups

/// Σ_s |{g ∈ Γ_s : g ≠ 1, g² ≠ 1}| / 2: odd functions are free on one
/// representative of each pair {g, g⁻¹} with g ≠ g⁻¹.
inline std::size_t v0_dim(const std::vector<FiniteGroup>& groups) {
  std::size_t dim = 0;
  for (const auto& G : groups) {
    std::size_t count = 0;
    for (std::size_t g = 0; g < G.order(); ++g)
      if (g != G.identity() && G.mul(g, g) != G.identity()) ++count;
    dim += count / 2;
  }
  return dim;
}

/// Same dimension as the nullity of the constraint system
/// λ(g) + λ(g⁻¹) = 0 (all g), λ(1) = 0, by exact elimination.
inline std::size_t v0_dim_by_elimination(const std::vector<FiniteGroup>& groups) {
  std::size_t dim = 0;
  for (const auto& G : groups) {
    std::vector<SparseRow> rows;
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::vector<Integer> r(G.order(), 0);
      r[g] += 1;
      r[G.inv(g)] += 1;
      rows.push_back(to_sparse(r));
    }
    std::vector<Integer> unit(G.order(), 0);
    unit[G.identity()] = 1;
    rows.push_back(to_sparse(unit));
    dim += G.order() - exact_rank(rows);
  }
  return dim;
}

}  // namespace rackqm
