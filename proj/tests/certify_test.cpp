#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "rackqm/certify.hpp"
#include "rackqm/cochain.hpp"

using namespace rackqm;

namespace {

std::vector<FreeProductRack> parents() {
  std::vector<FreeProductRack> out;
  out.push_back(FreeProductRack::free_rack({"a", "b"}));
  out.push_back(FreeProductRack::free_quandle({"a", "b"}));
  out.push_back(FreeProductRack::trivial_product({{"a", 2}, {"b", 3}}));
  return out;
}

// φ̂_{ι(σ_i)}(w_j(n)) = n·[i = j]: the tail of w_j(n) is n alternations of
// e_{x0}^j and e_x, and only the first factor's syllables are seen by λ.
Rational expected_entry(std::size_t i, std::size_t j) { return i == j ? 1 : 0; }

}  // namespace

TEST(IndependenceCertificate, Examples) {
  auto P = FreeProductRack::free_rack({"a", "b"});
  auto c = independence_certificate(P, 3, 100);
  EXPECT_EQ(c.verdict, 3u);
  EXPECT_TRUE(c.is_identity());
  auto one = independence_certificate(P, 1, 1);
  EXPECT_EQ(one.matrix, (std::vector<std::vector<Rational>>{{Rational(1)}}));
  EXPECT_EQ(one.verdict, 1u);

  auto Q = FreeProductRack::free_quandle({"a", "b"});
  auto cq = independence_certificate(Q, 5, 20);
  EXPECT_EQ(cq.verdict, 5u);
  for (const auto& f : cq.family) {
    EXPECT_TRUE(check_cocycle_diag(family_of(Q, f), Q, SamplerConfig{0, 2000, 12, 5}).ok());
  }
  EXPECT_THROW(independence_certificate(P, 0, 10), input_error);
  EXPECT_THROW(independence_certificate(P, 3, 0), input_error);
}

TEST(IndependenceCertificate, WitnessesAreReduced) {
  for (const auto& P : parents()) {
    auto c = independence_certificate(P, 4, 3);
    for (const auto& w : c.witnesses) {
      ASSERT_FALSE(w.element.tail.is_identity());
      EXPECT_NE(w.element.tail.front().factor, w.element.factor);
      EXPECT_EQ(w.element.tail.size(), 6u);
      EXPECT_TRUE(P.equal(P.parse_element(P.render(w.element)), w.element));
    }
  }
}

TEST(IndependenceCertificate, IdentityForAllRanksUpTo64) {
  for (const auto& P : parents()) {
    for (std::size_t n : {1u, 7u}) {
      auto c = independence_certificate(P, 64, n);
      ASSERT_EQ(c.matrix.size(), 64u);
      for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j) EXPECT_EQ(c.matrix[i][j], expected_entry(i, j));
      EXPECT_EQ(c.verdict, 64u);
      // the leading k x k block is the rank-k certificate
      for (std::size_t k : {1u, 2u, 17u}) {
        auto ck = independence_certificate(P, k, n);
        EXPECT_TRUE(ck.is_identity());
        EXPECT_EQ(ck.verdict, k);
      }
    }
  }
}

TEST(IndependenceCertificate, StableInN) {
  auto P = FreeProductRack::free_quandle({"a", "b"});
  auto base = independence_certificate(P, 6, 1);
  for (std::size_t n : {2u, 10u, 123u}) EXPECT_EQ(independence_certificate(P, 6, n).matrix, base.matrix);
}

TEST(IndependenceCertificate, CombinationsGrowLinearly) {
  // λ = Σ c_i λ⁽ⁱ⁾ grows with slope |c_j| on witness j.
  auto P = FreeProductRack::free_rack({"a", "b"});
  const std::vector<Rational> coeff{Rational(2), Rational(0), Rational(-1, 3)};
  std::map<Integer, Rational> table;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] != 0) table[Integer(i + 1)] = coeff[i];
  auto lam = iota_family(P, 0, 0, OddFunction(table, 3));
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t n : {1u, 10u, 100u})
      EXPECT_EQ(rack_qm(lam, independence_witness(P, Integer(j), n)), Rational(static_cast<long>(n)) * coeff[j - 1]);
}

TEST(BoundednessRefutation, Examples) {
  auto P = FreeProductRack::free_rack({"a", "b"});
  auto rep = boundedness_refutation(sign_family(P), P);
  EXPECT_EQ(rep.witness.slope, 2);
  ASSERT_EQ(rep.table.size(), 3u);
  EXPECT_EQ(rep.table[0], (std::pair<std::size_t, Rational>{1, 2}));
  EXPECT_EQ(rep.table[1], (std::pair<std::size_t, Rational>{10, 20}));
  EXPECT_EQ(rep.table[2], (std::pair<std::size_t, Rational>{100, 200}));
  EXPECT_TRUE(rep.linear);
  EXPECT_EQ(rep.factor_orbit_sum, 2u);

  auto iota3 = family_of(P, {0, 0, 3});
  EXPECT_EQ(rack_qm(iota3, independence_witness(P, 3, 50)), 50);
  EXPECT_EQ(rack_qm(iota3, independence_witness(P, 2, 50)), 0);
  EXPECT_EQ(boundedness_refutation(iota3, P).witness.slope, 1);

  EXPECT_THROW(boundedness_refutation(zero_family(P), P), input_error);
  auto T = FreeProductRack::trivial_product({{"a", 2}, {"b", 3}});
  EXPECT_EQ(boundedness_refutation(sign_family(T), T).factor_orbit_sum, 5u);
}
