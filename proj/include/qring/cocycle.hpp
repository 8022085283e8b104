#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "quandle.hpp"

namespace qring {

/// A Z_a-valued map alpha on X x X, written additively.
struct CocycleData {
  FiniteQuandle base;
  std::size_t group_order = 1;
  std::vector<std::vector<std::size_t>> alpha;
};

struct CocycleReport {
  bool valid = false;
  bool involutory_compatible = false;
  /// First failing (x, y, z) for the cocycle identity, or (x, x, x) when
  /// normalization fails at x.
  std::optional<std::array<std::size_t, 3>> counterexample;
  /// First (x, y) with alpha[x*y][y] != -alpha[x][y].
  std::optional<std::array<std::size_t, 2>> involutory_counterexample;
};

inline bool cocycle_shape_ok(const CocycleData& d) {
  const std::size_t n = d.base.order();
  if (d.group_order == 0 || d.alpha.size() != n) return false;
  for (const auto& row : d.alpha) {
    if (row.size() != n) return false;
    for (std::size_t v : row)
      if (v >= d.group_order) return false;
  }
  return true;
}

inline CocycleReport validate_cocycle(const CocycleData& d) {
  CocycleReport r;
  if (!cocycle_shape_ok(d)) return r;
  const std::size_t n = d.base.order(), a = d.group_order;
  const auto& X = d.base;
  const auto& al = d.alpha;
  r.valid = true;
  for (std::size_t x = 0; x < n && r.valid; ++x) {
    if (al[x][x] != 0) {
      r.valid = false;
      r.counterexample = {x, x, x};
    }
  }
  for (std::size_t x = 0; x < n && r.valid; ++x)
    for (std::size_t y = 0; y < n && r.valid; ++y)
      for (std::size_t z = 0; z < n && r.valid; ++z) {
        std::size_t lhs = (al[x][y] + al[X.op(x, y)][z]) % a;
        std::size_t rhs = (al[x][z] + al[X.op(x, z)][X.op(y, z)]) % a;
        if (lhs != rhs) {
          r.valid = false;
          r.counterexample = {x, y, z};
        }
      }
  r.involutory_compatible = true;
  for (std::size_t x = 0; x < n && r.involutory_compatible; ++x)
    for (std::size_t y = 0; y < n && r.involutory_compatible; ++y)
      if ((al[X.op(x, y)][y] + al[x][y]) % a != 0) {
        r.involutory_compatible = false;
        r.involutory_counterexample = {x, y};
      }
  return r;
}

}  // namespace qring
