#pragma once

// Reduced words in free groups and exponent vectors in free abelian groups.
//
// Text grammar: whitespace-separated tokens `name` or `name^k`, with k a
// signed decimal integer and names matching [A-Za-z][A-Za-z0-9_.]*.
// Rendering emits `name` for exponent 1, `name^k` otherwise, single spaces.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rackqm/error.hpp"
#include "rackqm/number.hpp"

namespace rackqm {

template <class Gen>
struct syllable {
  Gen gen;
  Integer exp;

  friend bool operator==(const syllable& a, const syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const syllable& a, const syllable& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp < b.exp;
  }
};

/// Element of the free group on Gen, always freely reduced: adjacent
/// syllables carry distinct generators and no exponent is zero.
template <class Gen>
class basic_group_word {
 public:
  using generator_type = Gen;
  using syllable_type = syllable<Gen>;

  basic_group_word() = default;

  explicit basic_group_word(const std::vector<syllable_type>& raw) { append(raw); }
  basic_group_word(std::initializer_list<syllable_type> raw) {
    for (const auto& s : raw) push(s.gen, s.exp);
  }

  static basic_group_word generator(Gen g, Integer k = 1) {
    basic_group_word w;
    w.push(std::move(g), std::move(k));
    return w;
  }

  const std::vector<syllable_type>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  std::size_t syllable_count() const noexcept { return syl_.size(); }

  Integer letter_length() const {
    Integer n = 0;
    for (const auto& s : syl_) n += abs(s.exp);
    return n;
  }

  basic_group_word inverse() const {
    basic_group_word w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  basic_group_word& operator*=(const basic_group_word& rhs) {
    if (&rhs == this) return *this *= basic_group_word(rhs);
    append(rhs.syl_);
    return *this;
  }
  friend basic_group_word operator*(basic_group_word lhs, const basic_group_word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// w^n for any integer n, by repeated squaring.
  basic_group_word pow(Integer n) const {
    basic_group_word base = n < 0 ? inverse() : *this;
    if (n < 0) n = -n;
    basic_group_word acc;
    while (n > 0) {
      if ((n & 1) != 0) acc *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return acc;
  }

  friend bool operator==(const basic_group_word& a, const basic_group_word& b) {
    return a.syl_ == b.syl_;
  }
  friend bool operator<(const basic_group_word& a, const basic_group_word& b) {
    return a.syl_ < b.syl_;
  }

 private:
  // Stack reduction: merging into the top syllable and popping on zero
  // leaves a freely reduced word after every push.
  void push(Gen g, Integer k) {
    if (k == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += k;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({std::move(g), std::move(k)});
  }

  void append(const std::vector<syllable_type>& raw) {
    for (const auto& s : raw) push(s.gen, s.exp);
  }

  std::vector<syllable_type> syl_;
};

template <class Gen>
basic_group_word<Gen> reduce(const std::vector<syllable<Gen>>& raw) {
  return basic_group_word<Gen>(raw);
}

/// Element of the free abelian group on Gen: sorted exponent vector without
/// zero entries.
template <class Gen>
class basic_abelian_word {
 public:
  using generator_type = Gen;
  using entry_type = std::pair<Gen, Integer>;

  basic_abelian_word() = default;

  explicit basic_abelian_word(const std::vector<syllable<Gen>>& raw) {
    for (const auto& s : raw) add(s.gen, s.exp);
  }

  static basic_abelian_word generator(Gen g, Integer k = 1) {
    basic_abelian_word w;
    w.add(std::move(g), std::move(k));
    return w;
  }

  const std::vector<entry_type>& entries() const noexcept { return ent_; }
  bool is_identity() const noexcept { return ent_.empty(); }

  Integer exponent(const Gen& g) const {
    auto it = find(g);
    return (it != ent_.end() && it->first == g) ? it->second : Integer(0);
  }

  Integer exponent_sum() const {
    Integer n = 0;
    for (const auto& [g, k] : ent_) n += k;
    return n;
  }

  Integer letter_length() const {
    Integer n = 0;
    for (const auto& [g, k] : ent_) n += abs(k);
    return n;
  }

  /// Single-generator power g^k, if this value is one.
  std::optional<std::pair<Gen, Integer>> as_generator_power() const {
    if (ent_.size() != 1) return std::nullopt;
    return ent_.front();
  }

  basic_abelian_word inverse() const {
    basic_abelian_word w = *this;
    for (auto& e : w.ent_) e.second = -e.second;
    return w;
  }

  basic_abelian_word pow(const Integer& n) const {
    if (n == 0) return {};
    basic_abelian_word w = *this;
    for (auto& e : w.ent_) e.second *= n;
    return w;
  }

  void add(Gen g, const Integer& k) {
    if (k == 0) return;
    auto it = find(g);
    if (it != ent_.end() && it->first == g) {
      it->second += k;
      if (it->second == 0) ent_.erase(it);
    } else {
      ent_.insert(it, {std::move(g), k});
    }
  }

  basic_abelian_word& operator*=(const basic_abelian_word& rhs) {
    if (&rhs == this) return *this *= basic_abelian_word(rhs);
    for (const auto& [g, k] : rhs.ent_) add(g, k);
    return *this;
  }
  friend basic_abelian_word operator*(basic_abelian_word lhs, const basic_abelian_word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const basic_abelian_word& a, const basic_abelian_word& b) {
    return a.ent_ == b.ent_;
  }
  friend bool operator<(const basic_abelian_word& a, const basic_abelian_word& b) {
    return a.ent_ < b.ent_;
  }

 private:
  typename std::vector<entry_type>::iterator find(const Gen& g) {
    return std::lower_bound(ent_.begin(), ent_.end(), g,
                            [](const entry_type& e, const Gen& key) { return e.first < key; });
  }
  typename std::vector<entry_type>::const_iterator find(const Gen& g) const {
    return std::lower_bound(ent_.begin(), ent_.end(), g,
                            [](const entry_type& e, const Gen& key) { return e.first < key; });
  }

  std::vector<entry_type> ent_;
};

template <class Gen>
basic_abelian_word<Gen> abelianize(const basic_group_word<Gen>& w) {
  return basic_abelian_word<Gen>(w.syllables());
}

using GroupWord = basic_group_word<std::string>;
using AbelianWord = basic_abelian_word<std::string>;

// ---------------------------------------------------------------------------
// Text form

inline bool is_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

/// Token-level parse without reduction; zero exponents are kept so callers
/// can see the raw syllables.
inline std::vector<syllable<std::string>> parse_syllables(
    std::string_view text, const std::set<std::string>* alphabet = nullptr) {
  std::vector<syllable<std::string>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    if (!is_generator_name(name)) {
      throw parse_error("malformed generator name '" + std::string(name) + "'", start);
    }
    if (alphabet != nullptr && alphabet->count(std::string(name)) == 0) {
      throw parse_error("unknown generator '" + std::string(name) + "'", start);
    }
    Integer exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      if (!detail::is_decimal_integer(digits)) {
        throw parse_error("malformed exponent '" + std::string(digits) + "'", start + caret + 1);
      }
      exp = detail::parse_integer_unchecked(digits);
    }
    out.push_back({std::string(name), exp});
  }
  return out;
}

inline GroupWord parse_word(std::string_view text, const std::set<std::string>* alphabet = nullptr) {
  return GroupWord(parse_syllables(text, alphabet));
}

inline AbelianWord parse_abelian_word(std::string_view text,
                                      const std::set<std::string>* alphabet = nullptr) {
  return AbelianWord(parse_syllables(text, alphabet));
}

inline std::string render_syllable(const std::string& name, const Integer& exp) {
  if (exp == 1) return name;
  return name + "^" + exp.str();
}

inline std::string render(const GroupWord& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += render_syllable(s.gen, s.exp);
  }
  return out;
}

inline std::string render(const AbelianWord& w) {
  std::string out;
  for (const auto& [g, k] : w.entries()) {
    if (!out.empty()) out += ' ';
    out += render_syllable(g, k);
  }
  return out;
}

}  // namespace rackqm
