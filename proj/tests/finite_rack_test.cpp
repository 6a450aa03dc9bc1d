#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rackqm/finite_rack.hpp"
#include "rackqm/group_table.hpp"

using namespace rackqm;

namespace {

std::vector<FiniteRack> builtin_racks() {
  std::vector<FiniteRack> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back(trivial_rack(n));
    out.push_back(dihedral_quandle(n));
  }
  out.push_back(conjugation_rack(symmetric_group(3)));
  out.push_back(conjugation_rack(cyclic_group(4)));
  return out;
}

// Brute-force check of all three axioms, written against the definitions.
bool satisfies_rack_axioms(const Table& t) {
  const std::size_t n = t.size();
  for (std::size_t y = 0; y < n; ++y) {
    std::set<std::size_t> image;
    for (std::size_t x = 0; x < n; ++x) image.insert(t[x][y]);
    if (image.size() != n) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
  return true;
}

// Union-find over x ~ x◁y, the symmetric closure used as an oracle.
std::vector<std::size_t> union_find_components(const FiniteRack& r) {
  std::vector<std::size_t> parent(r.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y) parent[find(x)] = find(r.op(x, y));
  std::vector<std::size_t> root(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) root[x] = find(x);
  return root;
}

}  // namespace

TEST(ValidateRack, Examples) {
  auto t3 = validate_rack({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  EXPECT_TRUE(t3.is_quandle());
  EXPECT_TRUE(t3.is_trivial());
  EXPECT_TRUE(validate_rack({{0}}).is_quandle());
  auto r3 = validate_rack({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  EXPECT_TRUE(r3.is_quandle());
  EXPECT_EQ(r3.table(), dihedral_quandle(3).table());
}

TEST(ValidateRack, NonQuandleRackStaysRack) {
  auto c = validate_rack({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  EXPECT_FALSE(c.is_quandle());
  EXPECT_THROW(validate_rack({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}}, {}, {}, rack_kind::quandle), axiom_violation);
}

TEST(ValidateRack, ReportsAxiomAndWitness) {
  try {
    validate_rack({{0, 0}, {0, 1}});
    FAIL();
  } catch (const axiom_violation& e) {
    EXPECT_EQ(e.axiom(), rack_axiom::right_invertibility);
    ASSERT_EQ(e.witness().size(), 3u);
    auto w = e.witness();
    Table t{{0, 0}, {0, 1}};
    EXPECT_NE(w[0], w[1]);
    EXPECT_EQ(t[w[0]][w[2]], t[w[1]][w[2]]);
  }
  try {
    validate_rack({{1, 0}, {0, 1}});
    FAIL();
  } catch (const axiom_violation& e) {
    EXPECT_EQ(e.axiom(), rack_axiom::self_distributivity);
    auto w = e.witness();
    Table t{{1, 0}, {0, 1}};
    EXPECT_NE(t[t[w[0]][w[1]]][w[2]], t[t[w[0]][w[2]]][t[w[1]][w[2]]]);
  }
  EXPECT_THROW(validate_rack({{0, 1}}), input_error);
  EXPECT_THROW(validate_rack({{0, 2}, {1, 1}}), input_error);
  EXPECT_THROW(validate_rack({}), input_error);
  EXPECT_THROW(validate_rack({{0, 0}, {1, 1}}, {"x", "x"}), input_error);
}

TEST(ValidateRack, MutationRejectionRate) {
  std::mt19937_64 rng(7);
  std::size_t rejected = 0, total = 0;
  for (const auto& r : builtin_racks()) {
    if (r.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pos(0, r.size() - 1), shift(1, r.size() - 1);
    for (int k = 0; k < 100; ++k) {
      Table t = r.table();
      std::size_t i = pos(rng), j = pos(rng);
      t[i][j] = (t[i][j] + shift(rng)) % r.size();
      bool accepted = true;
      try {
        validate_rack(t);
      } catch (const axiom_violation&) {
        accepted = false;
      }
      EXPECT_EQ(accepted, satisfies_rack_axioms(t));
      ++total;
      rejected += accepted ? 0 : 1;
    }
  }
  RecordProperty("mutations", static_cast<int>(total));
  RecordProperty("rejected", static_cast<int>(rejected));
  EXPECT_GT(rejected, 0u);
}

TEST(ValidateRack, InverseTable) {
  for (const auto& r : builtin_racks())
    for (std::size_t y = 0; y < r.size(); ++y)
      for (std::size_t x = 0; x < r.size(); ++x) {
        EXPECT_EQ(r.op_inverse(r.op(x, y), y), x);
        EXPECT_EQ(r.op(r.op_inverse(x, y), y), x);
      }
}

TEST(ConjugationRack, Examples) {
  auto z3 = conjugation_rack(cyclic_group(3));
  EXPECT_TRUE(z3.is_trivial());
  EXPECT_EQ(z3.size(), 3u);

  auto s3 = conjugation_rack(symmetric_group(3));
  EXPECT_EQ(s3.size(), 6u);
  EXPECT_TRUE(s3.is_quandle());
  // one-line notation: (1 2) = 213, (1 3) = 321, (2 3) = 132
  auto t12 = *s3.index_of("p213"), t13 = *s3.index_of("p321"), t23 = *s3.index_of("p132");
  EXPECT_EQ(s3.op(t12, t13), t23);

  auto one = conjugation_rack(FiniteGroup(Table{{0}}));
  EXPECT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.is_quandle());
}

TEST(ConjugationRack, RawTableAndErrors) {
  auto z4 = cyclic_group(4);
  EXPECT_TRUE(conjugation_rack(z4.table(), {0, 3, 2, 1}).is_trivial());
  EXPECT_THROW(conjugation_rack(z4.table(), {0, 1, 2, 3}), input_error);
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), input_error);
  EXPECT_THROW(FiniteGroup({{1, 2, 0}, {2, 0, 1}, {0, 0, 0}}), input_error);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_NO_THROW(conjugation_rack(symmetric_group(k)));
}

TEST(Components, Examples) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(components(trivial_rack(n)).count, n);
  EXPECT_EQ(components(dihedral_quandle(3)).count, 1u);
  EXPECT_EQ(components(dihedral_quandle(4)).count, 2u);
  EXPECT_EQ(components(dihedral_quandle(1)).count, 1u);
  EXPECT_EQ(components(conjugation_rack(symmetric_group(3))).count, 3u);
}

TEST(Components, AgreeWithUnionFind) {
  for (const auto& r : builtin_racks()) {
    auto p = components(r);
    auto root = union_find_components(r);
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) EXPECT_EQ(p.component_of[x] == p.component_of[y], root[x] == root[y]);
    std::set<std::size_t> ids(p.component_of.begin(), p.component_of.end());
    EXPECT_EQ(ids.size(), p.count);
  }
}

TEST(Components, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (const auto& r : builtin_racks()) {
    std::vector<std::size_t> perm(r.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Table t(r.size(), std::vector<std::size_t>(r.size()));
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) t[perm[x]][perm[y]] = perm[r.op(x, y)];
    auto relabeled = validate_rack(t);
    EXPECT_TRUE(is_homomorphism(perm, r, relabeled));
    auto a = components(r).sizes(), b = components(relabeled).sizes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(IsGenerating, Examples) {
  auto t = is_generating(trivial_rack(3), {0});
  EXPECT_FALSE(t.generates);
  EXPECT_EQ(t.closure, std::vector<std::size_t>{0});
  auto r = is_generating(dihedral_quandle(3), {0, 1});
  EXPECT_TRUE(r.generates);
  for (const auto& rk : builtin_racks()) {
    std::vector<std::size_t> all(rk.size());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_generating(rk, all).generates);
  }
  EXPECT_THROW(is_generating(trivial_rack(2), {}), input_error);
}

TEST(IsGenerating, WitnessPathsEvaluate) {
  for (const auto& rk : builtin_racks()) {
    for (std::size_t s = 0; s < rk.size(); ++s) {
      auto res = is_generating(rk, {s, (s + 1) % rk.size()});
      for (std::size_t x = 0; x < rk.size(); ++x) {
        bool in_closure = std::binary_search(res.closure.begin(), res.closure.end(), x);
        EXPECT_EQ(res.witness[x].has_value(), in_closure);
        if (res.witness[x]) EXPECT_EQ(evaluate_path(rk, *res.witness[x]), x);
      }
    }
  }
}

TEST(IsHomomorphism, Examples) {
  auto r3 = dihedral_quandle(3);
  EXPECT_TRUE(is_homomorphism({0, 1, 2}, r3, r3));
  EXPECT_TRUE(is_homomorphism({1, 1, 1}, r3, r3));
  // a transposition of R3 is an automorphism: x ↦ −x mod 3 swaps 1 and 2
  EXPECT_TRUE(is_homomorphism({0, 2, 1}, r3, r3));
  // constant map into a non-quandle fails
  auto c3 = validate_rack({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
  EXPECT_FALSE(is_homomorphism({0, 0, 0}, r3, c3));
  EXPECT_THROW(is_homomorphism({0, 1}, r3, r3), input_error);
}
