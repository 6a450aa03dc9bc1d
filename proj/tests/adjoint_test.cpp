#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rackqm/adjoint.hpp"
#include "rackqm/group_table.hpp"

using namespace rackqm;

namespace {

std::vector<FiniteRack> builtin_racks() {
  std::vector<FiniteRack> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    out.push_back(trivial_rack(n));
    out.push_back(dihedral_quandle(n));
  }
  out.push_back(conjugation_rack(symmetric_group(3)));
  out.push_back(validate_rack({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}}, {}, "C3"));
  return out;
}

FactorValue random_value(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<std::size_t> g(0, rank - 1);
  std::uniform_int_distribution<int> e(-4, 4);
  FactorValue v;
  for (int i = 0; i < 4; ++i) v.add(g(rng), e(rng));
  return v;
}

}  // namespace

TEST(Presentation, Examples) {
  auto t2 = presentation(trivial_rack(2));
  EXPECT_EQ(t2.relators.size(), 4u);
  // off-diagonal relators are the commutator and its inverse
  EXPECT_EQ(render(t2.relators[1]), "T2.0 T2.1 T2.0^-1 T2.1^-1");
  EXPECT_EQ(t2.relators[2], t2.relators[1].inverse());
  EXPECT_TRUE(t2.relators[0].is_identity());

  auto one = presentation(trivial_rack(1));
  ASSERT_EQ(one.relators.size(), 1u);
  EXPECT_TRUE(one.relators[0].is_identity());

  auto r3 = dihedral_quandle(3);
  auto p = presentation(r3);
  ASSERT_EQ(p.relators.size(), 9u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto name = [](std::size_t k) { return "R3." + std::to_string(k); };
      GroupWord lhs{{name(i), 1}, {name(j), 1}};
      GroupWord rhs{{name(j), 1}, {name((2 * j + 3 - i) % 3), 1}};
      EXPECT_EQ(p.relators[3 * i + j], lhs * rhs.inverse());
    }
}

TEST(Presentation, RelatorsActTrivially) {
  for (const auto& r : builtin_racks()) {
    auto p = presentation(r);
    EXPECT_EQ(p.relators.size(), r.size() * r.size());
    for (const auto& rel : p.relators)
      for (std::size_t z = 0; z < r.size(); ++z) EXPECT_EQ(act_on(r, z, rel, default_prefix(r)), z);
  }
}

TEST(Presentation, Export) {
  auto text = export_presentation(presentation(trivial_rack(2)));
  EXPECT_EQ(text, "generators: T2.0 T2.1\n\nT2.0 T2.1 T2.0^-1 T2.1^-1\nT2.1 T2.0 T2.1^-1 T2.0^-1\n\n");
  // every line after the header parses back to the relator
  auto p = presentation(dihedral_quandle(4));
  std::istringstream in(export_presentation(p));
  std::string line;
  std::getline(in, line);
  for (const auto& rel : p.relators) {
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(parse_word(line), rel);
  }
}

TEST(TrivialRackModel, Examples) {
  auto z = trivial_rack_model(1);
  EXPECT_EQ(z.embed(0), FactorValue::generator(0));
  EXPECT_EQ(z.multiply(z.embed(0).pow(3), z.embed(0).pow(-5)), FactorValue::generator(0, -2));

  auto m = trivial_rack_model(2);
  auto e0 = m.embed(0), e1 = m.embed(1);
  EXPECT_EQ(m.normal_form(m.multiply(e0.pow(2), e1 * e0), "x"), "x.0^3 x.1");
  EXPECT_EQ(m.act(1, e0.pow(5)), 1);
  EXPECT_THROW(m.embed(2), input_error);
  EXPECT_THROW(trivial_rack_model(0), input_error);
}

TEST(TrivialRackModel, ActionAndRelations) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto m = trivial_rack_model(n);
    auto rack = trivial_rack(n);
    for (std::size_t x = 0; x < n; ++x) {
      EXPECT_EQ(m.act(x, m.identity()), x);
      for (std::size_t y = 0; y < n; ++y) {
        EXPECT_EQ(m.act(x, m.embed(y)), rack.op(x, y));
        EXPECT_EQ(m.normal_form(m.multiply(m.embed(x), m.embed(y)), "t"),
                  m.normal_form(m.multiply(m.embed(y), m.embed(rack.op(x, y))), "t"));
      }
    }
    for (int k = 0; k < 200; ++k) {
      auto g = random_value(rng, n), h = random_value(rng, n);
      Integer x = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      EXPECT_EQ(m.act(m.act(x, g), h), m.act(x, m.multiply(g, h)));
      EXPECT_TRUE(m.is_identity(m.multiply(g, m.invert(g))));
    }
  }
}

TEST(FreeRackModel, ShiftAction) {
  auto m = AdjointModel::free_rack_model();
  EXPECT_FALSE(m.is_quandle());
  EXPECT_EQ(m.embed(7), FactorValue::generator(0));
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    auto g = random_value(rng, 1), h = random_value(rng, 1);
    Integer x = std::uniform_int_distribution<int>(-10, 10)(rng);
    EXPECT_EQ(m.act(m.act(x, g), h), m.act(x, m.multiply(g, h)));
    // x · e(y) = x ◁ y = x + 1 in the free rack on one generator
    EXPECT_EQ(m.act(x, m.embed(x + 3)), x + 1);
  }
}

TEST(ModelFor, OnlyTrivialRacks) {
  EXPECT_EQ(model_for(trivial_rack(3)).rank(), 3u);
  EXPECT_THROW(model_for(dihedral_quandle(3)), input_error);
}

TEST(ExpressGenerator, Examples) {
  auto r3 = dihedral_quandle(3);
  EXPECT_EQ(render(express_generator(r3, {0, 1}, 0)), "R3.0");
  // 2 = 0 ◁ 1 since 2·1 − 0 = 2
  EXPECT_EQ(r3.op(0, 1), 2u);
  EXPECT_EQ(render(express_generator(r3, {0, 1}, 2)), "R3.1^-1 R3.0 R3.1");
  auto t3 = trivial_rack(3);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(express_generator(t3, {0, 1, 2}, x), GroupWord::generator("T3." + std::to_string(x)));
  EXPECT_THROW(express_generator(t3, {0}, 1), input_error);
}

TEST(VerifyExpression, Examples) {
  for (const auto& r : builtin_racks()) {
    std::vector<std::size_t> all(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) all[i] = i;
    for (std::size_t s = 0; s < r.size(); ++s) {
      std::vector<std::size_t> gens = {s, (s + 1) % r.size()};
      if (!is_generating(r, gens).generates) gens = all;
      for (std::size_t x = 0; x < r.size(); ++x) {
        auto w = express_generator(r, gens, x);
        EXPECT_TRUE(verify_expression(r, gens, x, w, default_prefix(r)));
      }
    }
    for (std::size_t x = 0; x < r.size(); ++x) {
      auto ex = GroupWord::generator(generator_name(default_prefix(r), r.labels()[x]));
      EXPECT_TRUE(verify_expression(r, x, ex));
      EXPECT_FALSE(verify_expression(r, x, ex.pow(2)));
    }
  }
}

TEST(VerifyExpression, RejectsForeignGenerators) {
  auto r3 = dihedral_quandle(3);
  EXPECT_THROW(verify_expression(r3, {0, 1}, 2, parse_word("R3.2"), "R3"), input_error);
  EXPECT_THROW(verify_expression(r3, 0, parse_word("Q.0")), input_error);
}
