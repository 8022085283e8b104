#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace qring {

struct Syllable {
  std::size_t gen = 0;
  std::int64_t exp = 0;

  auto operator<=>(const Syllable&) const = default;
};

/// A letter x_gen^{±1}.
struct Letter {
  std::size_t gen = 0;
  int sign = 1;

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word: adjacent syllables have distinct generators and
/// every exponent is non-zero. The empty word is the identity.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;

  /// Free reduction of an arbitrary syllable list.
  static FreeGroupWord reduce(const std::vector<Syllable>& raw) {
    FreeGroupWord w;
    for (const auto& s : raw) w.push(s);
    return w;
  }

  static FreeGroupWord from_letters(const std::vector<Letter>& letters) {
    FreeGroupWord w;
    for (const auto& l : letters) w.push({l.gen, l.sign});
    return w;
  }

  static FreeGroupWord generator(std::size_t g, std::int64_t e = 1) { return reduce({{g, e}}); }

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }

  std::size_t letter_length() const noexcept {
    std::size_t n = 0;
    for (const auto& s : syl_) n += static_cast<std::size_t>(std::llabs(s.exp));
    return n;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (const auto& s : syl_)
      for (std::int64_t k = 0; k < std::llabs(s.exp); ++k) out.push_back({s.gen, s.exp > 0 ? 1 : -1});
    return out;
  }

  std::size_t max_generator() const noexcept {
    std::size_t m = 0;
    for (const auto& s : syl_) m = std::max(m, s.gen);
    return m;
  }

  auto operator<=>(const FreeGroupWord&) const = default;

 private:
  friend FreeGroupWord word_mul(const FreeGroupWord&, const FreeGroupWord&);
  friend FreeGroupWord word_inv(const FreeGroupWord&);

  void push(Syllable s) {
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back(s);
    }
  }

  std::vector<Syllable> syl_;
};

inline FreeGroupWord word_mul(const FreeGroupWord& a, const FreeGroupWord& b) {
  FreeGroupWord w = a;
  for (const auto& s : b.syl_) w.push(s);
  return w;
}

inline FreeGroupWord word_inv(const FreeGroupWord& a) {
  FreeGroupWord w;
  for (auto it = a.syl_.rbegin(); it != a.syl_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

inline FreeGroupWord word_pow(const FreeGroupWord& a, std::int64_t k) {
  FreeGroupWord base = k < 0 ? word_inv(a) : a, out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out = word_mul(out, base);
  return out;
}

inline std::string to_string(const FreeGroupWord& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const auto& syl : w.syllables()) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(syl.gen);
    if (syl.exp != 1) s += "^" + std::to_string(syl.exp);
  }
  return s;
}

}  // namespace qring
