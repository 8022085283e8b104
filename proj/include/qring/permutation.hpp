#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace qring {

/// One-line notation, 0-based: perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

inline bool is_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline Permutation inverse(std::span<const std::size_t> p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

/// (a ∘ b)(i) = a(b(i))
inline Permutation compose(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline std::vector<std::vector<std::size_t>> cycles(std::span<const std::size_t> p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Order of the permutation (lcm of its cycle lengths).
inline std::uint64_t order(std::span<const std::size_t> p) {
  std::uint64_t l = 1;
  for (const auto& c : cycles(p)) l = std::lcm(l, static_cast<std::uint64_t>(c.size()));
  return l;
}

inline bool is_single_cycle(std::span<const std::size_t> p) {
  return !p.empty() && cycles(p).size() == 1;
}

/// Builds a permutation of [0, n) from disjoint cycles given with 1-based labels.
inline Permutation from_cycles_1based(std::size_t n, const std::vector<std::vector<std::size_t>>& cs) {
  Permutation p = identity_permutation(n);
  for (const auto& c : cs) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t a = c[k], b = c[(k + 1) % c.size()];
      if (a == 0 || b == 0 || a > n || b > n)
        fail(Errc::InvalidParams, "cycle label out of range");
      p[a - 1] = b - 1;
    }
  }
  if (!is_permutation(p)) fail(Errc::InvalidParams, "cycles are not disjoint");
  return p;
}

}  // namespace qring
