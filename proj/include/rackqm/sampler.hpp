#pragma once

// Seeded random elements of free products, for property checks and defect
// sampling. Deterministic for a given seed and standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rackqm/free_product.hpp"

namespace rackqm {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::size_t max_syllables = 12;
  long max_exponent = 5;
};

using Rng = std::mt19937_64;

namespace detail {

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long nonzero_exponent(Rng& rng, long max_exp) {
  long k = uniform(rng, 1, max_exp);
  return uniform(rng, 0, 1) == 0 ? k : -k;
}

}  // namespace detail

/// Random non-identity value of a factor group with every exponent in
/// [-max_exp, max_exp].
inline FactorValue random_factor_value(const AdjointModel& m, Rng& rng, long max_exp) {
  if (m.rank() == 1) return FactorValue::generator(0, detail::nonzero_exponent(rng, max_exp));
  for (;;) {
    FactorValue v;
    for (std::size_t i = 0; i < m.rank(); ++i) v.add(i, detail::uniform(rng, -max_exp, max_exp));
    if (!v.is_identity()) return v;
  }
}

/// Random normal-form word with up to max_syllables syllables. When
/// `avoid_first` names a factor, the first syllable comes from another one.
inline SyllableWord random_syllable_word(const FreeProductRack& parent, Rng& rng, std::size_t max_syllables,
                                         long max_exp, std::size_t avoid_first = static_cast<std::size_t>(-1)) {
  const std::size_t k = parent.factor_count();
  std::size_t len = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(max_syllables)));
  std::vector<Syllable> syl;
  syl.reserve(len);
  std::size_t prev = avoid_first;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t f;
    if (prev < k) {
      f = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(k) - 2));
      if (f >= prev) ++f;
    } else {
      f = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(k) - 1));
    }
    syl.push_back({f, random_factor_value(parent.factor(f).model, rng, max_exp)});
    prev = f;
  }
  return SyllableWord::from_normal(std::move(syl));
}

inline Integer random_base_element(const AdjointModel& m, Rng& rng, long max_exp) {
  if (m.kind() == model_kind::free_group) return detail::uniform(rng, -max_exp, max_exp);
  return detail::uniform(rng, 0, static_cast<long>(m.rank()) - 1);
}

/// Random reduced element (x, g).
inline FreeProductElement random_element(const FreeProductRack& parent, Rng& rng, std::size_t max_syllables,
                                         long max_exp) {
  auto t = static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<long>(parent.factor_count()) - 1));
  Integer x = random_base_element(parent.factor(t).model, rng, max_exp);
  return parent.reduce_element(t, x, random_syllable_word(parent, rng, max_syllables, max_exp, t));
}

inline FreeProductElement random_element(const FreeProductRack& parent, Rng& rng, const SamplerConfig& c) {
  return random_element(parent, rng, c.max_syllables, c.max_exponent);
}

}  // namespace rackqm
