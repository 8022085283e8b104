#pragma once

// Ring-level operations that need a finite carrier: orbit sums, the matrix
// of right multiplication w -> w u, and the checks built on it.

#include <cstddef>
#include <optional>
#include <vector>

#include "linear.hpp"
#include "quandle.hpp"
#include "ring_element.hpp"

namespace qring {

template <class C>
concept FiniteCarrier = Carrier<C, std::size_t> && requires(const C& c) {
  { c.order() } -> std::convertible_to<std::size_t>;
};

template <FiniteCarrier C>
std::vector<Scalar> coefficient_vector(const Element& u, const C& X) {
  std::vector<Scalar> v(X.order(), Scalar(0));
  for (const auto& [k, c] : u.terms()) {
    if (k >= X.order()) fail(Errc::CarrierMismatch, "basis key outside the carrier");
    v[k] = c;
  }
  return v;
}

inline Element from_vector(const CoeffRing& ring, const std::vector<Scalar>& v) {
  std::vector<Element::Term> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t.emplace_back(i, v[i]);
  return Element::from_terms(ring, std::move(t));
}

/// [e_x]_y = e_x + e_{S_y(x)} + ... + e_{S_y^{n_y-1}(x)}; n_y terms even
/// when the orbit of x is shorter, so repeated keys accumulate.
inline Element orbit_sum(std::size_t x, std::size_t y, const FiniteQuandle& X, const CoeffRing& ring) {
  if (!X.contains(x) || !X.contains(y)) fail(Errc::IndexOutOfRange, "orbit_sum index out of range", {x, y});
  const auto s = X.right_mult(y);
  const std::uint64_t ny = order(s);
  std::vector<Element::Term> t;
  std::size_t cur = x;
  for (std::uint64_t k = 0; k < ny; ++k) {
    t.emplace_back(cur, ring.one());
    cur = s[cur];
  }
  return Element::from_terms(ring, std::move(t));
}

/// Column k holds the coefficients of e_k u.
template <FiniteCarrier C>
SquareMatrix right_mult_matrix(const Element& u, const C& X) {
  SquareMatrix M(u.ring(), X.order());
  for (const auto& [j, c] : u.terms()) {
    if (j >= X.order()) fail(Errc::CarrierMismatch, "basis key outside the carrier");
    for (std::size_t k = 0; k < X.order(); ++k) M.add_to(X.op(k, j), k, c);
  }
  return M;
}

/// Whether w -> w u is multiplicative; basis pairs suffice by linearity.
template <FiniteCarrier C>
bool is_ring_endomorphism(const Element& u, const C& X) {
  const std::size_t n = X.order();
  std::vector<Element> image;
  image.reserve(n);
  for (std::size_t k = 0; k < n; ++k) image.push_back(mul(Element::basis(u.ring(), k), u, X));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Element lhs = mul(Element::basis(u.ring(), X.op(k, l)), u, X);
      if (!(lhs == mul(image[k], image[l], X))) return false;
    }
  return true;
}

struct AnnihilatorResult {
  bool answer = false;
  std::optional<Element> witness;  // non-zero w with w v = 0
};

template <FiniteCarrier C>
AnnihilatorResult has_nontrivial_right_annihilator(const Element& v, const C& X) {
  auto k = kernel(right_mult_matrix(v, X));
  AnnihilatorResult r;
  if (k.witness) {
    r.answer = true;
    r.witness = from_vector(v.ring(), *k.witness);
  }
  return r;
}

}  // namespace qring
