#pragma once

// Finite-rank certificates for the injectivity of λ ↦ [δ¹φ̂_λ].
//
// For σ_i = odd indicator of ±i, the families λ⁽ⁱ⁾ = ι(σ_i) live on powers
// of e_{x0} in factor s0. On the reduced witnesses
//   w_j(n) = (x, (e_{x0}^j e_x)^n),  x in a factor t ≠ s0,
// one gets φ̂_{λ⁽ⁱ⁾}(w_j(n)) = n·σ_i(j) = n·δ_ij. The evaluation matrix is the
// identity, so every nonzero combination Σ c_i λ⁽ⁱ⁾ is unbounded along some
// witness and the k classes are independent.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/free_product.hpp"
#include "rackqm/linalg.hpp"
#include "rackqm/number.hpp"
#include "rackqm/quasimorphism.hpp"

namespace rackqm {

struct IotaIndicator {
  std::size_t factor = 0;  // s0
  Integer element = 0;     // x0
  Integer index = 1;       // σ = indicator(±index)
};

struct CertificateWitness {
  Integer j = 1;
  FreeProductElement element;
};

struct IndependenceCertificate {
  std::size_t rank = 0;
  std::size_t n = 0;
  std::vector<IotaIndicator> family;
  std::vector<CertificateWitness> witnesses;
  std::vector<std::vector<Rational>> matrix;  // matrix[i][j] = φ̂_{λ⁽ⁱ⁾}(w_j(n)) / n
  std::size_t verdict = 0;                    // exact rank of matrix

  bool is_identity() const {
    for (std::size_t i = 0; i < matrix.size(); ++i)
      for (std::size_t j = 0; j < matrix[i].size(); ++j)
        if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    return true;
  }
};

inline LambdaFamily family_of(const FreeProductRack& parent, const IotaIndicator& s) {
  return iota_family(parent, s.factor, s.element, OddFunction::indicator(s.index));
}

/// (x, (e_{x0}^j e_x)^n) with x0 the first element of factor 0 and x the
/// first element of factor 1.
inline FreeProductElement independence_witness(const FreeProductRack& parent, const Integer& j, std::size_t n) {
  const std::size_t s0 = 0, t = 1;
  const Integer x0 = 0, x = 0;
  FactorValue g0 = parent.factor(s0).model.embed(x0).pow(j);
  FactorValue ex = parent.factor(t).model.embed(x);
  std::vector<Syllable> syl;
  syl.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    syl.push_back({s0, g0});
    syl.push_back({t, ex});
  }
  return parent.reduce_element(t, x, SyllableWord::from_normal(std::move(syl)));
}

inline IndependenceCertificate independence_certificate(const FreeProductRack& parent, std::size_t k, std::size_t n) {
  if (parent.factor_count() < 2) throw input_error("certificate needs at least two factors");
  if (k == 0 || n == 0) throw input_error("rank and exponent must be positive");
  IndependenceCertificate cert;
  cert.rank = k;
  cert.n = n;
  std::vector<LambdaFamily> lambdas;
  for (std::size_t i = 1; i <= k; ++i) {
    cert.family.push_back({0, 0, Integer(i)});
    lambdas.push_back(family_of(parent, cert.family.back()));
    cert.witnesses.push_back({Integer(i), independence_witness(parent, Integer(i), n)});
  }
  const Rational scale(static_cast<long long>(n));
  cert.matrix.assign(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cert.matrix[i][j] = rack_qm(lambdas[i], cert.witnesses[j].element) / scale;
  cert.verdict = exact_rank(cert.matrix);
  return cert;
}

struct GrowthReport {
  std::size_t factor_orbit_sum = 0;  // Σ_s components(X_s)
  UnboundednessWitness witness;
  std::vector<std::pair<std::size_t, Rational>> table;  // n ↦ φ̂_λ(witness(n))
  bool linear = true;                                   // table[n] == n·period_value for every row
};

/// Linear growth of φ̂_λ along the unboundedness witness. A bounded φ̂_λ
/// would be forced by [δ¹φ̂_λ] = 0 (constant on each of finitely many
/// components up to a bounded error); the table refutes that.
inline GrowthReport boundedness_refutation(const LambdaFamily& lambda, const FreeProductRack& parent,
                                           const std::vector<std::size_t>& ns = {1, 10, 100}) {
  GrowthReport rep;
  for (const auto& f : parent.factors()) rep.factor_orbit_sum += f.model.component_count();
  rep.witness = unboundedness_witness(lambda, parent);
  for (auto n : ns) {
    Rational v = rack_qm(lambda, rep.witness.element(parent, n));
    rep.linear = rep.linear && v == Rational(static_cast<long long>(n)) * rep.witness.period_value;
    rep.table.emplace_back(n, v);
  }
  return rep;
}

}  // namespace rackqm
