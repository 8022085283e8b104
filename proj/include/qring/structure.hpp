#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

#include "quandle.hpp"

namespace qring {

using IndexSet = std::vector<std::size_t>;

struct QuandleProperties {
  bool connected = false;
  bool latin = false;
  bool semi_latin = false;
  bool medial = false;
  bool faithful = false;
  bool involutory = false;
  std::vector<std::uint64_t> finite_type_orders;  // n_y = order of S_y
};

/// Connected components: orbits under the group generated by all S_y,
/// found by BFS over the moves S_y and S_y^{-1}.
inline std::vector<IndexSet> inner_orbits(const FiniteQuandle& X) {
  const std::size_t n = X.order();
  std::vector<bool> seen(n, false);
  std::vector<IndexSet> orbits;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    IndexSet orbit;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      orbit.push_back(x);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z : {X.op(x, y), X.op_inv(x, y)})
          if (!seen[z]) {
            seen[z] = true;
            queue.push_back(z);
          }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

inline QuandleProperties properties(const FiniteQuandle& X) {
  const std::size_t n = X.order();
  QuandleProperties p;
  p.connected = inner_orbits(X).size() == 1;

  p.semi_latin = true;
  p.latin = true;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    bool injective = true;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t v = X.op(x, y);
      if (hit[v]) injective = false;
      hit[v] = true;
    }
    bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    p.semi_latin = p.semi_latin && injective;
    p.latin = p.latin && injective && surjective;
  }

  p.medial = true;
  for (std::size_t x = 0; x < n && p.medial; ++x)
    for (std::size_t y = 0; y < n && p.medial; ++y)
      for (std::size_t z = 0; z < n && p.medial; ++z)
        for (std::size_t w = 0; w < n && p.medial; ++w)
          if (X.op(X.op(x, y), X.op(z, w)) != X.op(X.op(x, z), X.op(y, w))) p.medial = false;

  p.faithful = true;
  for (std::size_t x = 0; x < n && p.faithful; ++x)
    for (std::size_t y = x + 1; y < n && p.faithful; ++y)
      if (X.same_right_mult(x, y)) p.faithful = false;

  p.involutory = true;
  for (std::size_t y = 0; y < n; ++y) {
    auto s = X.right_mult(y);
    for (std::size_t x = 0; x < n; ++x)
      if (s[s[x]] != x) p.involutory = false;
    p.finite_type_orders.push_back(order(s));
  }
  return p;
}

/// {y : y*x = y}; always contains x.
inline IndexSet fixed_points(const FiniteQuandle& X, std::size_t x) {
  if (!X.contains(x)) fail(Errc::IndexOutOfRange, "element " + std::to_string(x) + " out of range", {x});
  IndexSet f;
  for (std::size_t y = 0; y < X.order(); ++y)
    if (X.op(y, x) == y) f.push_back(y);
  return f;
}

namespace detail {

inline std::vector<std::vector<bool>> commuting_graph(const FiniteQuandle& X) {
  const std::size_t n = X.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      adj[x][y] = x != y && X.op(x, y) == x && X.op(y, x) == y;
  return adj;
}

}  // namespace detail

constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Every trivial subquandle with between 2 and max_size elements, i.e. every
/// clique of the graph x~y iff x*y = x and y*x = y. Sorted by size, then
/// lexicographically.
inline std::vector<IndexSet> trivial_subquandles(const FiniteQuandle& X, std::size_t max_size,
                                                 std::size_t cap = kDefaultCliqueCap) {
  if (max_size < 2) fail(Errc::InvalidParams, "max_size must be at least 2");
  const auto adj = detail::commuting_graph(X);
  const std::size_t n = X.order();
  std::vector<IndexSet> out;
  IndexSet current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t v = from; v < n; ++v) {
      bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t u) { return adj[u][v]; });
      if (!ok) continue;
      current.push_back(v);
      if (current.size() >= 2) {
        if (out.size() >= cap)
          fail(Errc::SearchBudgetExceeded, "more than " + std::to_string(cap) + " trivial subquandles", {cap});
        out.push_back(current);
      }
      if (current.size() < max_size) self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Maximal trivial subquandles of order >= 2 (Bron–Kerbosch with pivoting).
inline std::vector<IndexSet> maximal_trivial_subquandles(const FiniteQuandle& X,
                                                         std::size_t cap = kDefaultCliqueCap) {
  const auto adj = detail::commuting_graph(X);
  const std::size_t n = X.order();
  std::vector<IndexSet> out;
  auto bk = [&](auto&& self, IndexSet R, IndexSet P, IndexSet Xs) -> void {
    if (P.empty() && Xs.empty()) {
      if (R.size() >= 2) {
        if (out.size() >= cap)
          fail(Errc::SearchBudgetExceeded, "more than " + std::to_string(cap) + " maximal cliques", {cap});
        std::sort(R.begin(), R.end());
        out.push_back(R);
      }
      return;
    }
    std::size_t pivot = P.empty() ? Xs.front() : P.front();
    std::size_t best = 0;
    for (const IndexSet* s : {&P, &Xs})
      for (std::size_t u : *s) {
        std::size_t c = std::count_if(P.begin(), P.end(), [&](std::size_t v) { return adj[u][v]; });
        if (c > best) best = c, pivot = u;
      }
    IndexSet candidates;
    for (std::size_t v : P)
      if (!adj[pivot][v]) candidates.push_back(v);
    for (std::size_t v : candidates) {
      IndexSet R2 = R, P2, X2;
      R2.push_back(v);
      for (std::size_t w : P)
        if (adj[v][w]) P2.push_back(w);
      for (std::size_t w : Xs)
        if (adj[v][w]) X2.push_back(w);
      self(self, R2, P2, X2);
      P.erase(std::find(P.begin(), P.end(), v));
      Xs.push_back(v);
    }
  };
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  bk(bk, {}, all, {});
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace qring
