#pragma once

// Elements of the (generally nonassociative) ring k[X]: finitely supported
// maps from an ordered basis to exact scalars. The basis product comes from
// a carrier, so finite quandles, raw magmas and free quandles share this core.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace qring {

template <class C, class Key>
concept Carrier = requires(const C& c, const Key& a) {
  { c.op(a, a) } -> std::convertible_to<Key>;
  { c.contains(a) } -> std::convertible_to<bool>;
};

template <class Key>
class RingElement {
 public:
  using Term = std::pair<Key, Scalar>;

  explicit RingElement(CoeffRing ring = CoeffRing::integers()) : ring_(std::move(ring)) {}

  /// Combines repeated keys, reduces scalars and drops zeros.
  static RingElement from_terms(const CoeffRing& ring, std::vector<Term> terms) {
    RingElement u(ring);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [k, c] : terms) {
      if (!u.terms_.empty() && !(u.terms_.back().first < k))
        u.terms_.back().second += c;
      else
        u.terms_.emplace_back(k, c);
    }
    u.canonicalize();
    return u;
  }

  /// e_key
  static RingElement basis(const CoeffRing& ring, const Key& key) {
    RingElement u(ring);
    u.terms_.emplace_back(key, ring.one());
    u.canonicalize();
    return u;
  }

  const CoeffRing& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::vector<Key> support() const {
    std::vector<Key> s;
    for (const auto& t : terms_) s.push_back(t.first);
    return s;
  }

  Scalar coeff(const Key& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Key& key) { return t.first < key; });
    return it != terms_.end() && !(k < it->first) ? it->second : Scalar(0);
  }

  bool operator==(const RingElement& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

 private:
  void canonicalize() {
    std::vector<Term> kept;
    kept.reserve(terms_.size());
    for (auto& [k, c] : terms_) {
      Scalar r = ring_.normalize(c);
      if (r != 0) kept.emplace_back(k, std::move(r));
    }
    terms_ = std::move(kept);
  }

  CoeffRing ring_;
  std::vector<Term> terms_;
};

namespace detail {
template <class Key>
void same_ring(const RingElement<Key>& u, const RingElement<Key>& v) {
  if (!(u.ring() == v.ring()))
    fail(Errc::RingMismatch, "elements over " + u.ring().name() + " and " + v.ring().name());
}
}  // namespace detail

template <class Key>
RingElement<Key> add(const RingElement<Key>& u, const RingElement<Key>& v) {
  detail::same_ring(u, v);
  auto terms = u.terms();
  terms.insert(terms.end(), v.terms().begin(), v.terms().end());
  return RingElement<Key>::from_terms(u.ring(), std::move(terms));
}

template <class Key>
RingElement<Key> scalar_mul(const Scalar& c, const RingElement<Key>& u) {
  auto terms = u.terms();
  for (auto& t : terms) t.second *= c;
  return RingElement<Key>::from_terms(u.ring(), std::move(terms));
}

template <class Key>
RingElement<Key> sub(const RingElement<Key>& u, const RingElement<Key>& v) {
  return add(u, scalar_mul(Scalar(-1), v));
}

template <class Key>
RingElement<Key> operator+(const RingElement<Key>& u, const RingElement<Key>& v) { return add(u, v); }
template <class Key>
RingElement<Key> operator-(const RingElement<Key>& u, const RingElement<Key>& v) { return sub(u, v); }
template <class Key>
RingElement<Key> operator*(const Scalar& c, const RingElement<Key>& u) { return scalar_mul(c, u); }

/// Bilinear extension of e_x e_y = e_{x*y}. No associativity is assumed.
template <class Key, Carrier<Key> C>
RingElement<Key> mul(const RingElement<Key>& u, const RingElement<Key>& v, const C& carrier) {
  detail::same_ring(u, v);
  for (const auto* w : {&u, &v})
    for (const auto& t : w->terms())
      if (!carrier.contains(t.first)) fail(Errc::CarrierMismatch, "basis key outside the carrier");
  std::map<Key, Scalar> acc;
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) acc[carrier.op(a, b)] += ca * cb;
  std::vector<typename RingElement<Key>::Term> terms(acc.begin(), acc.end());
  return RingElement<Key>::from_terms(u.ring(), std::move(terms));
}

template <class Key>
Scalar augmentation(const RingElement<Key>& u) {
  Scalar s(0);
  for (const auto& t : u.terms()) s += t.second;
  return u.ring().normalize(s);
}

template <class Key, Carrier<Key> C>
bool is_idempotent(const RingElement<Key>& u, const C& carrier) {
  return !u.is_zero() && mul(u, u, carrier) == u;
}

/// Canonical order for idempotent lists: support size, then keys, then
/// coefficients.
template <class Key>
bool canonical_less(const RingElement<Key>& a, const RingElement<Key>& b) {
  if (a.support_size() != b.support_size()) return a.support_size() < b.support_size();
  const auto &ta = a.terms(), &tb = b.terms();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].first < tb[i].first) return true;
    if (tb[i].first < ta[i].first) return false;
  }
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  return false;
}

template <class Key>
void canonical_sort_unique(std::vector<RingElement<Key>>& v) {
  std::sort(v.begin(), v.end(), canonical_less<Key>);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class Key>
bool is_trivial_idempotent(const RingElement<Key>& u) {
  return u.support_size() == 1 && u.terms().front().second == 1;
}

using Element = RingElement<std::size_t>;

}  // namespace qring
