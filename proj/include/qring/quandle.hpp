#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace qring {

using Table = std::vector<std::vector<std::size_t>>;

/// A finite set with an arbitrary binary operation, table[i][j] = i*j.
/// Ring arithmetic only needs this much; quandles add the axioms on top.
class Magma {
 public:
  Magma() = default;

  explicit Magma(const Table& table, std::vector<std::string> labels = {}) : n_(table.size()) {
    if (n_ == 0) fail(Errc::InvalidParams, "empty table");
    data_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (table[i].size() != n_)
        fail(Errc::InvalidParams, "table is not square (row " + std::to_string(i) + ")", {i});
      for (std::size_t j = 0; j < n_; ++j) {
        if (table[i][j] >= n_)
          fail(Errc::InvalidParams,
               "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range", {i, j});
        data_.push_back(table[i][j]);
      }
    }
    set_labels(std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t op(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  bool contains(std::size_t i) const noexcept { return i < n_; }

  Table table() const {
    Table t(n_, std::vector<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t[i][j] = op(i, j);
    return t;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t i) const {
    return labels_.empty() ? std::to_string(i) : labels_.at(i);
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
      fail(Errc::InvalidParams, "labels length differs from order");
    labels_ = std::move(labels);
  }

  bool operator==(const Magma& o) const { return n_ == o.n_ && data_ == o.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> data_;
  std::vector<std::string> labels_;
};

/// A validated finite quandle: each right multiplication S_y is a
/// permutation fixing y and the operation is right distributive.
class FiniteQuandle {
 public:
  FiniteQuandle() = default;

  /// Validates the axioms; errors name the first violation found.
  static FiniteQuandle validate(const Table& table, std::vector<std::string> labels = {}) {
    return FiniteQuandle(Magma(table, std::move(labels)));
  }

  explicit FiniteQuandle(Magma m) : magma_(std::move(m)) {
    const std::size_t n = magma_.order();
    right_.assign(n, Permutation(n));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) right_[j][i] = magma_.op(i, j);
      if (!is_permutation(right_[j]))
        fail(Errc::NotPermutation, "column " + std::to_string(j) + " is not a permutation", {j});
    }
    for (std::size_t j = 0; j < n; ++j)
      if (magma_.op(j, j) != j)
        fail(Errc::NotIdempotent, std::to_string(j) + "*" + std::to_string(j) + " != " + std::to_string(j), {j});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (magma_.op(magma_.op(i, j), k) != magma_.op(magma_.op(i, k), magma_.op(j, k)))
            fail(Errc::NotRightDistributive,
                 "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" + std::to_string(k) +
                     " != (" + std::to_string(i) + "*" + std::to_string(k) + ")*(" + std::to_string(j) +
                     "*" + std::to_string(k) + ")",
                 {i, j, k});
    right_inv_.reserve(n);
    for (const auto& p : right_) right_inv_.push_back(inverse(p));
  }

  /// table[i][j] = perms[j](i)
  static FiniteQuandle from_right_mults(const std::vector<Permutation>& perms,
                                        std::vector<std::string> labels = {}) {
    const std::size_t n = perms.size();
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (perms[j].size() != n)
        fail(Errc::InvalidParams, "permutation " + std::to_string(j) + " has wrong length", {j});
      for (std::size_t i = 0; i < n; ++i) t[i][j] = perms[j][i];
    }
    return validate(t, std::move(labels));
  }

  std::size_t order() const noexcept { return magma_.order(); }
  std::size_t op(std::size_t i, std::size_t j) const noexcept { return magma_.op(i, j); }
  /// x *^{-1} y, i.e. S_y^{-1}(x)
  std::size_t op_inv(std::size_t i, std::size_t j) const noexcept { return right_inv_[j][i]; }
  bool contains(std::size_t i) const noexcept { return i < order(); }

  std::span<const std::size_t> right_mult(std::size_t j) const { return right_.at(j); }
  std::span<const std::size_t> right_mult_inverse(std::size_t j) const { return right_inv_.at(j); }

  const Magma& magma() const noexcept { return magma_; }
  Table table() const { return magma_.table(); }
  const std::vector<std::string>& labels() const noexcept { return magma_.labels(); }
  std::string label(std::size_t i) const { return magma_.label(i); }

  FiniteQuandle with_labels(std::vector<std::string> labels) const {
    FiniteQuandle q = *this;
    q.magma_.set_labels(std::move(labels));
    return q;
  }

  bool is_trivial() const {
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j)
        if (op(i, j) != i) return false;
    return true;
  }

  bool same_right_mult(std::size_t a, std::size_t b) const { return right_[a] == right_[b]; }

  bool operator==(const FiniteQuandle& o) const { return magma_ == o.magma_; }

 private:
  Magma magma_;
  std::vector<Permutation> right_;
  std::vector<Permutation> right_inv_;
};

/// 1-based labels "1".."n", used by fixtures that mirror published tables.
inline std::vector<std::string> one_based_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return l;
}

}  // namespace qring
