#pragma once

// Standard quandle constructions. Composite element orders: blocks are laid
// out in argument order (X-block then Y-block); products and extensions are
// (x, s) with x major.

#include <cstddef>
#include <string>
#include <vector>

#include "cocycle.hpp"
#include "quandle.hpp"

namespace qring::make {

inline FiniteQuandle trivial(std::size_t n) {
  if (n == 0) fail(Errc::InvalidParams, "trivial quandle needs n >= 1");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = i;
  return FiniteQuandle::validate(t);
}

/// R_n: i*j = 2j - i mod n.
inline FiniteQuandle dihedral(std::size_t n) {
  if (n == 0) fail(Errc::InvalidParams, "dihedral quandle needs n >= 1");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (2 * j + n - i) % n;
  return FiniteQuandle::validate(t);
}

/// Core of Z_{a_1} x ... x Z_{a_k}; elements in mixed radix, first factor
/// most significant. x*y = 2y - x.
inline FiniteQuandle core(const std::vector<std::size_t>& factors) {
  if (factors.empty()) fail(Errc::InvalidParams, "core needs at least one cyclic factor");
  std::size_t n = 1;
  for (std::size_t a : factors) {
    if (a == 0) fail(Errc::InvalidParams, "cyclic factor of order 0");
    n *= a;
  }
  auto digits = [&](std::size_t v) {
    std::vector<std::size_t> d(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      d[k] = v % factors[k];
      v /= factors[k];
    }
    return d;
  };
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto di = digits(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto dj = digits(j);
      std::size_t v = 0;
      for (std::size_t k = 0; k < factors.size(); ++k)
        v = v * factors[k] + (2 * dj[k] + factors[k] - di[k]) % factors[k];
      t[i][j] = v;
    }
  }
  return FiniteQuandle::validate(t);
}

/// Conj(G) for a group given by its multiplication table g[a][b] = a·b:
/// x*y = y x y^{-1}.
inline FiniteQuandle conj(const Table& g) {
  const std::size_t n = g.size();
  Magma m(g);  // shape and range
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = m.op(c, a) == a && m.op(a, c) == a;
    if (ok) e = c;
  }
  if (e == n) fail(Errc::InvalidParams, "group table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c)))
          fail(Errc::InvalidParams, "group table is not associative", {a, b, c});
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (m.op(a, b) == e) inv[a] = b;
    if (inv[a] == n || m.op(inv[a], a) != e)
      fail(Errc::InvalidParams, "element without inverse in group table", {a});
  }
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = m.op(m.op(y, x), inv[y]);
  return FiniteQuandle::validate(t);
}

/// (x, s) * (y, t) = (x*y, s*t), index x*|Y| + s.
inline FiniteQuandle product(const FiniteQuandle& X, const FiniteQuandle& Y) {
  const std::size_t n = X.order(), m = Y.order();
  Table t(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t a = 0; a < n * m; ++a)
    for (std::size_t b = 0; b < n * m; ++b)
      t[a][b] = X.op(a / m, b / m) * m + Y.op(a % m, b % m);
  return FiniteQuandle::validate(t);
}

/// Offsets of each block inside a union, plus the total order.
inline std::vector<std::size_t> block_offsets(const std::vector<FiniteQuandle>& parts) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& p : parts) {
    off.push_back(o);
    o += p.order();
  }
  off.push_back(o);
  return off;
}

/// Union quandle: blocks act trivially on each other.
inline FiniteQuandle disjoint_union(const std::vector<FiniteQuandle>& parts) {
  if (parts.empty()) fail(Errc::InvalidParams, "union of no quandles");
  auto off = block_offsets(parts);
  const std::size_t n = off.back();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t bi = 0; bi < parts.size(); ++bi)
    for (std::size_t i = 0; i < parts[bi].order(); ++i)
      for (std::size_t bj = 0; bj < parts.size(); ++bj)
        for (std::size_t j = 0; j < parts[bj].order(); ++j)
          t[off[bi] + i][off[bj] + j] = bi == bj ? off[bi] + parts[bi].op(i, j) : off[bi] + i;
  return FiniteQuandle::validate(t);
}

/// X ⊔_{f,g} Y for trivial X, Y: x*y = f(x), y*x = g(y).
inline FiniteQuandle twisted_union(const FiniteQuandle& X, const FiniteQuandle& Y, const Permutation& f,
                                   const Permutation& g) {
  if (!X.is_trivial() || !Y.is_trivial())
    fail(Errc::InvalidParams, "twisted union needs trivial quandles");
  if (f.size() != X.order() || !is_permutation(f))
    fail(Errc::InvalidParams, "f is not a permutation of X");
  if (g.size() != Y.order() || !is_permutation(g))
    fail(Errc::InvalidParams, "g is not a permutation of Y");
  const std::size_t n = X.order(), m = Y.order();
  Table t(n + m, std::vector<std::size_t>(n + m));
  for (std::size_t a = 0; a < n + m; ++a)
    for (std::size_t b = 0; b < n + m; ++b) {
      const bool ax = a < n, bx = b < n;
      if (ax == bx)
        t[a][b] = a;
      else if (ax)
        t[a][b] = f[a];
      else
        t[a][b] = n + g[a - n];
    }
  return FiniteQuandle::validate(t);
}

/// X x_alpha Z_a: (x, s) * (y, t) = (x*y, s + alpha(x, y)), index x*a + s.
inline FiniteQuandle cocycle_extension(const CocycleData& d) {
  auto rep = validate_cocycle(d);
  if (!rep.valid) fail(Errc::InvalidParams, "cocycle data is not a normalized 2-cocycle");
  const std::size_t n = d.base.order(), a = d.group_order;
  Table t(n * a, std::vector<std::size_t>(n * a));
  for (std::size_t p = 0; p < n * a; ++p)
    for (std::size_t q = 0; q < n * a; ++q) {
      std::size_t x = p / a, s = p % a, y = q / a;
      t[p][q] = d.base.op(x, y) * a + (s + d.alpha[x][y]) % a;
    }
  return FiniteQuandle::validate(t);
}

}  // namespace qring::make
