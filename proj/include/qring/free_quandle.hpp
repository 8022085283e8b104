#pragma once

// Free quandles FQ_n realized as conjugates of generators in the free group
// F_n, with the convention x*y = y x y^{-1}. An element u x_b u^{-1} is
// stored as (b, u) with trailing powers of x_b stripped from u; the
// centralizer of x_b is <x_b>, so this normal form is unique.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "free_group.hpp"

namespace qring {

class FreeQuandleElement {
 public:
  FreeQuandleElement() = default;

  FreeQuandleElement(std::size_t base, FreeGroupWord conjugator) : base_(base), conj_(std::move(conjugator)) {
    normalize();
  }

  static FreeQuandleElement generator(std::size_t g) { return {g, FreeGroupWord{}}; }

  std::size_t base() const noexcept { return base_; }
  const FreeGroupWord& conjugator() const noexcept { return conj_; }

  /// u x_base u^{-1}
  FreeGroupWord full_word() const {
    return word_mul(word_mul(conj_, FreeGroupWord::generator(base_)), word_inv(conj_));
  }

  /// 1 + letter length of the normalized conjugator.
  std::size_t length() const noexcept { return 1 + conj_.letter_length(); }

  bool operator==(const FreeQuandleElement&) const = default;

  /// Canonical order: length, then base, then conjugator.
  std::strong_ordering operator<=>(const FreeQuandleElement& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = base_ <=> o.base_; c != 0) return c;
    return conj_ <=> o.conj_;
  }

 private:
  void normalize() {
    const auto& s = conj_.syllables();
    if (!s.empty() && s.back().gen == base_)
      conj_ = word_mul(conj_, FreeGroupWord::generator(base_, -s.back().exp));
  }

  std::size_t base_ = 0;
  FreeGroupWord conj_;
};

/// a *^{sign} b = w^{sign} a w^{-sign}, w the full word of b.
inline FreeQuandleElement fq_op(const FreeQuandleElement& a, const FreeQuandleElement& b, int sign = 1) {
  FreeGroupWord w = word_pow(b.full_word(), sign >= 0 ? 1 : -1);
  return {a.base(), word_mul(w, a.conjugator())};
}

inline std::size_t length(const FreeQuandleElement& a) { return a.length(); }

/// The free quandle of a given rank, as a carrier for ring arithmetic.
class FreeQuandle {
 public:
  explicit FreeQuandle(std::size_t rank) : rank_(rank) {
    if (rank == 0) fail(Errc::InvalidParams, "free quandle rank must be at least 1");
  }

  std::size_t rank() const noexcept { return rank_; }
  FreeQuandleElement op(const FreeQuandleElement& a, const FreeQuandleElement& b) const { return fq_op(a, b, 1); }
  bool contains(const FreeQuandleElement& a) const {
    return a.base() < rank_ && (a.conjugator().is_identity() || a.conjugator().max_generator() < rank_);
  }
  FreeQuandleElement generator(std::size_t g) const {
    if (g >= rank_) fail(Errc::IndexOutOfRange, "generator index out of range", {g});
    return FreeQuandleElement::generator(g);
  }

 private:
  std::size_t rank_;
};

/// x_head *^{e_1} x_{i_1} *^{e_2} ... read left-associated.
struct LeftAssocExpr {
  std::size_t head = 0;
  std::vector<Letter> tail;

  bool operator==(const LeftAssocExpr&) const = default;
};

/// head differs from the first tail letter, and equal adjacent tail letters
/// carry equal signs.
inline bool is_canonical(const LeftAssocExpr& e) {
  if (!e.tail.empty() && e.tail.front().gen == e.head) return false;
  for (std::size_t i = 1; i < e.tail.size(); ++i)
    if (e.tail[i].gen == e.tail[i - 1].gen && e.tail[i].sign != e.tail[i - 1].sign) return false;
  return true;
}

/// Tail letters wrap as conjugators applied left to right, so the element is
/// u x_head u^{-1} with u = x_{i_k}^{e_k} ... x_{i_1}^{e_1}.
inline FreeQuandleElement eval_expr(const LeftAssocExpr& e, std::size_t rank) {
  if (e.head >= rank) fail(Errc::IndexOutOfRange, "generator index out of range", {e.head});
  std::vector<Letter> u;
  for (auto it = e.tail.rbegin(); it != e.tail.rend(); ++it) {
    if (it->gen >= rank) fail(Errc::IndexOutOfRange, "generator index out of range", {it->gen});
    if (it->sign != 1 && it->sign != -1) fail(Errc::InvalidParams, "operation sign must be +1 or -1");
    u.push_back(*it);
  }
  return {e.head, FreeGroupWord::from_letters(u)};
}

/// The canonical left-associated expression of an element.
inline LeftAssocExpr canonical_expr(const FreeQuandleElement& a) {
  LeftAssocExpr e{a.base(), a.conjugator().letters()};
  std::reverse(e.tail.begin(), e.tail.end());
  return e;
}

/// Rewrites an expression into canonical form using only x*y*^{-1}y = x and
/// x*^{±1}x = x.
inline LeftAssocExpr canonicalize(const LeftAssocExpr& e) {
  LeftAssocExpr out{e.head, {}};
  for (const auto& l : e.tail) {
    if (!out.tail.empty() && out.tail.back().gen == l.gen && out.tail.back().sign == -l.sign)
      out.tail.pop_back();
    else
      out.tail.push_back(l);
  }
  std::size_t k = 0;
  while (k < out.tail.size() && out.tail[k].gen == out.head) ++k;
  out.tail.erase(out.tail.begin(), out.tail.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

/// (x_0 *^{e_1} ... x_m) *^{mu_0} (y_0 *^{mu_1} ... y_n) as the single
/// left-associated expression
/// x_0 ... x_m *^{-mu_n} y_n ... *^{-mu_1} y_1 *^{mu_0} y_0 *^{mu_1} y_1 ... *^{mu_n} y_n,
/// before any cancellation.
inline LeftAssocExpr left_assoc_product_raw(const LeftAssocExpr& a, const LeftAssocExpr& b, int mu0) {
  LeftAssocExpr out = a;
  for (auto it = b.tail.rbegin(); it != b.tail.rend(); ++it) out.tail.push_back({it->gen, -it->sign});
  out.tail.push_back({b.head, mu0 >= 0 ? 1 : -1});
  out.tail.insert(out.tail.end(), b.tail.begin(), b.tail.end());
  return out;
}

inline LeftAssocExpr left_assoc_product(const LeftAssocExpr& a, const LeftAssocExpr& b, int mu0) {
  return canonicalize(left_assoc_product_raw(a, b, mu0));
}

/// "g0*g1^-1*g1" means g0 * g1 with *^{-1}, then * g1.
inline std::string render(const LeftAssocExpr& e) {
  std::string s = "g" + std::to_string(e.head);
  for (const auto& l : e.tail) {
    s += "*g" + std::to_string(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

inline std::string to_string(const FreeQuandleElement& a) { return render(canonical_expr(a)); }

inline LeftAssocExpr parse_expr(std::string_view text) {
  auto parse_token = [&](std::string_view tok, bool allow_inverse) -> Letter {
    auto bad = [&] { fail(Errc::ParseError, "bad free-quandle token '" + std::string(tok) + "'"); };
    if (tok.size() < 2 || tok[0] != 'g') bad();
    int sign = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      if (!allow_inverse) bad();
      sign = -1;
      tok.remove_suffix(3);
      if (tok.size() < 2) bad();
    }
    std::size_t g = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') bad();
      g = g * 10 + static_cast<std::size_t>(tok[i] - '0');
    }
    return {g, sign};
  };
  LeftAssocExpr e;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    std::size_t stop = text.find('*', start);
    std::string_view tok = text.substr(start, stop == std::string_view::npos ? text.npos : stop - start);
    Letter l = parse_token(tok, !first);
    if (first)
      e.head = l.gen;
    else
      e.tail.push_back(l);
    first = false;
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return e;
}

inline FreeQuandleElement parse_element(std::string_view text, std::size_t rank) {
  return eval_expr(parse_expr(text), rank);
}

/// All elements of length <= max_len in canonical order.
inline std::vector<FreeQuandleElement> enumerate_elements(std::size_t rank, std::size_t max_len) {
  if (rank == 0 || max_len == 0) fail(Errc::InvalidParams, "rank and max_len must be at least 1");
  std::vector<FreeQuandleElement> out;
  for (std::size_t b = 0; b < rank; ++b) {
    std::vector<Letter> word;
    auto rec = [&](auto&& self) -> void {
      if (word.empty() || word.back().gen != b) out.emplace_back(b, FreeGroupWord::from_letters(word));
      if (word.size() + 1 >= max_len) return;
      for (std::size_t g = 0; g < rank; ++g)
        for (int s : {1, -1}) {
          if (!word.empty() && word.back().gen == g && word.back().sign == -s) continue;
          word.push_back({g, s});
          self(self);
          word.pop_back();
        }
    };
    rec(rec);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether the support words w_k (each of length >= 2) satisfy
/// l(w_k * w_l) >= 2 and l(w_k * x) >= 2 for every generator x.
inline bool free_product_hypotheses(std::span<const FreeQuandleElement> ws, std::size_t rank) {
  for (const auto& w : ws) {
    if (w.length() < 2) return false;
    for (const auto& v : ws)
      if (fq_op(w, v).length() < 2) return false;
    for (std::size_t g = 0; g < rank; ++g)
      if (fq_op(w, FreeQuandleElement::generator(g)).length() < 2) return false;
  }
  return true;
}

}  // namespace qring
