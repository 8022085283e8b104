#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qring {

/// Dense n x n matrix over a coefficient ring; entries kept canonical.
class SquareMatrix {
 public:
  SquareMatrix(CoeffRing ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, Scalar(0)) {}

  std::size_t dimension() const noexcept { return n_; }
  const CoeffRing& ring() const noexcept { return ring_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { a_[r * n_ + c] = ring_.normalize(v); }
  void add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(n_, Scalar(0));
    for (std::size_t r = 0; r < n_; ++r) {
      Scalar s(0);
      for (std::size_t c = 0; c < n_; ++c) s += at(r, c) * v.at(c);
      out[r] = ring_.normalize(s);
    }
    return out;
  }

  bool operator==(const SquareMatrix& o) const { return ring_ == o.ring_ && n_ == o.n_ && a_ == o.a_; }

 private:
  CoeffRing ring_;
  std::size_t n_;
  std::vector<Scalar> a_;
};

struct KernelResult {
  std::size_t rank = 0;
  /// A non-zero kernel vector when rank < n. Over Z and Q it is a primitive
  /// integer vector; over Z/p it is reduced mod p.
  std::optional<std::vector<Scalar>> witness;
};

namespace detail {

inline std::vector<Scalar> back_substitute(const std::vector<std::vector<Scalar>>& M,
                                           const std::vector<std::size_t>& pivots, std::size_t free_col,
                                           std::size_t n) {
  std::vector<Scalar> x(n, Scalar(0));
  x[free_col] = 1;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    Scalar s(0);
    for (std::size_t j = pc + 1; j < n; ++j) s += M[r][j] * x[j];
    x[pc] = -s / M[r][pc];
  }
  return x;
}

inline std::vector<Scalar> primitive_integer(std::vector<Scalar> x) {
  mpz_class l = 1, g = 0;
  for (auto& v : x) {
    v.canonicalize();
    mpz_class d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  for (auto& v : x) {
    v *= Scalar(l);
    v.canonicalize();
    mpz_class num = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : x) v /= Scalar(g);
  for (const auto& v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : x) w = -w;
    break;
  }
  return x;
}

}  // namespace detail

/// Rank and a kernel witness for M. Z and Q use fraction-free (Bareiss)
/// elimination on an integer matrix; Z/p uses elimination over the field.
inline KernelResult kernel(const SquareMatrix& A) {
  const std::size_t n = A.dimension();
  const auto& ring = A.ring();
  std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_class d = A.at(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      M[r][c] = A.at(r, c) * Scalar(l);
      M[r][c].canonicalize();
    }
  }
  const bool modular = ring.kind() == CoeffRing::Kind::IntegersMod;
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  Scalar prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && M[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(M[p], M[row]);
    if (modular) {
      Scalar inv;
      ring.divide(Scalar(1), M[row][col], inv);
      for (std::size_t j = col; j < n; ++j) M[row][j] = ring.mul(M[row][j], inv);
      for (std::size_t i = row + 1; i < n; ++i) {
        const Scalar f = M[i][col];
        if (f == 0) continue;
        for (std::size_t j = col; j < n; ++j) M[i][j] = ring.sub(M[i][j], f * M[row][j]);
      }
    } else {
      for (std::size_t i = row + 1; i < n; ++i) {
        for (std::size_t j = col + 1; j < n; ++j) {
          M[i][j] = (M[row][col] * M[i][j] - M[i][col] * M[row][j]) / prev;
          M[i][j].canonicalize();
        }
        M[i][col] = 0;
      }
      prev = M[row][col];
    }
    pivots.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  KernelResult res;
  res.rank = pivots.size();
  if (res.rank < n) {
    std::size_t f = 0;
    while (is_pivot[f]) ++f;
    auto x = detail::back_substitute(M, pivots, f, n);
    if (modular) {
      for (auto& v : x) v = ring.normalize(v);
      res.witness = std::move(x);
    } else {
      res.witness = detail::primitive_integer(std::move(x));
    }
  }
  return res;
}

}  // namespace qring
