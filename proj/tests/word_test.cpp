#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rackqm/word.hpp"

using namespace rackqm;
using Raw = std::vector<syllable<std::string>>;

namespace {

// Letter-by-letter free reduction, independent of the syllable stack.
std::vector<std::pair<std::string, int>> letters_reduced(const Raw& raw) {
  std::vector<std::pair<std::string, int>> st;
  for (const auto& s : raw) {
    int e = s.exp > 0 ? 1 : -1;
    for (Integer k = abs(s.exp); k > 0; --k) {
      if (!st.empty() && st.back().first == s.gen && st.back().second == -e) {
        st.pop_back();
      } else {
        st.emplace_back(s.gen, e);
      }
    }
  }
  return st;
}

std::vector<std::pair<std::string, int>> letters(const GroupWord& w) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& s : w.syllables()) {
    int e = s.exp > 0 ? 1 : -1;
    for (Integer k = abs(s.exp); k > 0; --k) out.emplace_back(s.gen, e);
  }
  return out;
}

Raw random_raw(std::mt19937_64& rng, int max_len = 10) {
  static const char* names[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 2), exp(-3, 3);
  Raw r;
  for (int i = len(rng); i > 0; --i) r.push_back({names[gen(rng)], exp(rng)});
  return r;
}

GroupWord word(const std::string& s) { return parse_word(s); }

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(Raw{{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"b", 1}}), word("b"));
  EXPECT_TRUE(reduce(Raw{}).is_identity());
  auto w = reduce(Raw{{"a", 2}, {"a", 3}, {"b", -1}});
  ASSERT_EQ(w.syllable_count(), 2u);
  EXPECT_EQ(w.syllables()[0], (syllable<std::string>{"a", 5}));
  EXPECT_EQ(w.syllables()[1], (syllable<std::string>{"b", -1}));
}

TEST(Multiply, Examples) {
  EXPECT_TRUE((word("a") * word("a^-1")).is_identity());
  EXPECT_EQ(render(word("a^2 b^-1").inverse()), "b a^-2");
  EXPECT_EQ(word("a b") * word("b^-1 a"), word("a^2"));
}

TEST(Multiply, SelfProductAndPowers) {
  auto g = word("a b");
  auto h = g;
  h *= h;
  EXPECT_EQ(render(h), "a b a b");
  EXPECT_EQ(render(g.pow(3)), "a b a b a b");
  EXPECT_EQ(g.pow(-2), word("b^-1 a^-1 b^-1 a^-1"));
  EXPECT_TRUE(g.pow(0).is_identity());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto w = reduce(random_raw(rng, 5));
    GroupWord acc;
    for (int k = 0; k < 7; ++k) acc = acc * w;
    EXPECT_EQ(w.pow(7), acc);
  }
}

TEST(Parse, Examples) {
  auto w = word("a^2 b^-3 a");
  ASSERT_EQ(w.syllable_count(), 3u);
  EXPECT_EQ(w.syllables()[1], (syllable<std::string>{"b", -3}));
  EXPECT_TRUE(word("").is_identity());
  EXPECT_EQ(word("a^0 b"), word("b"));
  EXPECT_EQ(word("  a.0^+2\tR3.1  "), (GroupWord{{"a.0", 2}, {"R3.1", 1}}));
}

TEST(Parse, ErrorsReportPosition) {
  try {
    parse_word("a b^x");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  std::set<std::string> alphabet{"a", "b"};
  try {
    parse_word("a c", &alphabet);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_word("1a"), parse_error);
  EXPECT_THROW(parse_word("a^"), parse_error);
  EXPECT_THROW(parse_word("a^2^3"), parse_error);
}

TEST(Render, Grammar) {
  EXPECT_EQ(render(word("a^1 b^-1 c^10")), "a b^-1 c^10");
  EXPECT_EQ(render(GroupWord{}), "");
  auto big = GroupWord::generator("a", parse_integer("123456789012345678901234567890"));
  EXPECT_EQ(render(big), "a^123456789012345678901234567890");
  EXPECT_EQ(parse_word(render(big)), big);
}

TEST(WordProperties, ReduceAgreesWithLetterOracleAndIsIdempotent) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 10000; ++i) {
    auto raw = random_raw(rng);
    auto w = reduce(raw);
    EXPECT_EQ(letters(w), letters_reduced(raw));
    EXPECT_EQ(reduce(w.syllables()), w);
    Integer raw_len = 0;
    for (const auto& s : raw) raw_len += abs(s.exp);
    EXPECT_LE(w.letter_length(), raw_len);
    for (std::size_t k = 0; k + 1 < w.syllables().size(); ++k) EXPECT_NE(w.syllables()[k].gen, w.syllables()[k + 1].gen);
  }
}

TEST(WordProperties, GroupLaws) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto u = reduce(random_raw(rng)), v = reduce(random_raw(rng)), w = reduce(random_raw(rng));
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_TRUE((u * u.inverse()).is_identity());
    EXPECT_EQ(u.inverse().inverse(), u);
    EXPECT_EQ(parse_word(render(u)), u);
  }
}

TEST(AbelianWord, CommutativeAndMatchesAbelianization) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    auto u = reduce(random_raw(rng)), v = reduce(random_raw(rng));
    auto au = abelianize(u), av = abelianize(v);
    EXPECT_EQ(au * av, av * au);
    EXPECT_EQ(abelianize(u * v), au * av);
    EXPECT_EQ(parse_abelian_word(render(au)), au);
  }
  auto w = parse_abelian_word("b a^2 b^-1 a");
  EXPECT_EQ(render(w), "a^3");
  auto s = w;
  s *= s;
  EXPECT_EQ(render(s), "a^6");
  EXPECT_TRUE(parse_abelian_word("a b a^-1 b^-1").is_identity());
}
