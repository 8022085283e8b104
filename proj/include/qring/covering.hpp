#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "structure.hpp"

namespace qring {

/// A quandle homomorphism, checked on construction.
class QuandleHom {
 public:
  QuandleHom(FiniteQuandle domain, FiniteQuandle codomain, std::vector<std::size_t> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != domain_.order())
      fail(Errc::InvalidParams, "map has " + std::to_string(images_.size()) + " images for a domain of order " +
                                    std::to_string(domain_.order()));
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] >= codomain_.order())
        fail(Errc::InvalidParams, "image of " + std::to_string(i) + " out of range", {i});
    const std::size_t n = domain_.order();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (images_[domain_.op(i, j)] != codomain_.op(images_[i], images_[j]))
          fail(Errc::NotHomomorphism,
               "p(" + std::to_string(i) + "*" + std::to_string(j) + ") != p(" + std::to_string(i) + ")*p(" +
                   std::to_string(j) + ")",
               {i, j});
  }

  const FiniteQuandle& domain() const noexcept { return domain_; }
  const FiniteQuandle& codomain() const noexcept { return codomain_; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  std::size_t operator()(std::size_t x) const { return images_.at(x); }

 private:
  FiniteQuandle domain_;
  FiniteQuandle codomain_;
  std::vector<std::size_t> images_;
};

class Covering;
inline Covering check_covering(const QuandleHom& hom);

/// A surjective homomorphism whose fibres share their right multiplications.
/// Only obtainable through check_covering.
class Covering {
 public:
  const QuandleHom& hom() const noexcept { return hom_; }
  const FiniteQuandle& total() const noexcept { return hom_.domain(); }
  const FiniteQuandle& base() const noexcept { return hom_.codomain(); }
  /// fibers()[y] = sorted p^{-1}(y)
  const std::vector<IndexSet>& fibers() const noexcept { return fibers_; }
  const IndexSet& fiber(std::size_t y) const { return fibers_.at(y); }
  bool nontrivial() const noexcept { return nontrivial_; }

 private:
  friend inline Covering check_covering(const QuandleHom& hom);
  Covering(QuandleHom h, std::vector<IndexSet> f, bool nt)
      : hom_(std::move(h)), fibers_(std::move(f)), nontrivial_(nt) {}

  QuandleHom hom_;
  std::vector<IndexSet> fibers_;
  bool nontrivial_;
};

inline Covering check_covering(const QuandleHom& hom) {
  const auto& X = hom.domain();
  const auto& Y = hom.codomain();
  std::vector<IndexSet> fibers(Y.order());
  for (std::size_t x = 0; x < X.order(); ++x) fibers[hom(x)].push_back(x);
  for (std::size_t y = 0; y < Y.order(); ++y)
    if (fibers[y].empty()) fail(Errc::NotSurjective, std::to_string(y) + " has no preimage", {y});
  for (const auto& f : fibers)
    for (std::size_t a = 1; a < f.size(); ++a)
      if (!X.same_right_mult(f[0], f[a]))
        fail(Errc::CoveringConditionFails,
             "S_" + std::to_string(f[0]) + " != S_" + std::to_string(f[a]) + " within one fibre", {f[0], f[a]});
  // Fibres are trivial subquandles; follows from the covering condition.
  for (const auto& f : fibers)
    for (std::size_t a : f)
      for (std::size_t b : f)
        if (X.op(a, b) != a) fail(Errc::AssertionFailed, "fibre is not a trivial subquandle", {a, b});
  bool nontrivial = false;
  for (const auto& comp : inner_orbits(Y)) {
    bool all_big = std::all_of(comp.begin(), comp.end(), [&](std::size_t y) { return fibers[y].size() >= 2; });
    nontrivial = nontrivial || all_big;
  }
  return Covering(hom, std::move(fibers), nontrivial);
}

/// The projection X x F -> X of a product with a trivial quandle F.
inline QuandleHom product_projection(const FiniteQuandle& X, const FiniteQuandle& XF, std::size_t fibre_size) {
  std::vector<std::size_t> img(XF.order());
  for (std::size_t i = 0; i < XF.order(); ++i) img[i] = i / fibre_size;
  return QuandleHom(XF, X, std::move(img));
}

constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// All coverings X -> Y, by backtracking over partial homomorphisms.
/// Sorted by image vector; the budget bounds visited search nodes.
inline std::vector<Covering> find_coverings(const FiniteQuandle& X, const FiniteQuandle& Y,
                                            std::uint64_t budget = kDefaultSearchBudget, unsigned jobs = 1) {
  const std::size_t n = X.order(), m = Y.order();
  if (m > n) return {};
  // checks[k]: pairs (i, j) whose triple (i, j, i*j) is fully assigned once k is.
  std::vector<std::vector<std::array<std::size_t, 2>>> checks(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) checks[std::max({i, j, X.op(i, j)})].push_back({i, j});

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over{false};
  std::mutex mu;
  std::vector<std::vector<std::size_t>> found;

  auto search_from = [&](std::size_t first_image) {
    std::vector<std::size_t> img(n, m);
    std::vector<std::size_t> hits(m, 0);
    std::size_t covered = 0;
    std::vector<std::vector<std::size_t>> local;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (over.load(std::memory_order_relaxed)) return;
      if (k == n) {
        if (covered == m) local.push_back(img);
        return;
      }
      if (m - covered > n - k) return;
      const std::size_t lo = k == 0 ? first_image : 0, hi = k == 0 ? first_image + 1 : m;
      for (std::size_t v = lo; v < hi; ++v) {
        if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
          over = true;
          return;
        }
        img[k] = v;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
          if (img[i] == v && !X.same_right_mult(i, k)) ok = false;
        for (const auto& pr : checks[k]) {
          if (!ok) break;
          ok = img[X.op(pr[0], pr[1])] == Y.op(img[pr[0]], img[pr[1]]);
        }
        if (ok) {
          if (hits[v]++ == 0) ++covered;
          self(self, k + 1);
          if (--hits[v] == 0) --covered;
        }
      }
      img[k] = m;
    };
    rec(rec, 0);
    std::lock_guard lock(mu);
    for (auto& f : local) found.push_back(std::move(f));
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(m)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t v; (v = next.fetch_add(1)) < m;) search_from(v);
    });
  for (auto& t : pool) t.join();
  if (over) fail(Errc::SearchBudgetExceeded, "covering search exceeded " + std::to_string(budget) + " nodes",
                 {static_cast<std::size_t>(budget)});

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Covering> out;
  for (auto& img : found) out.push_back(check_covering(QuandleHom(X, Y, std::move(img))));
  return out;
}

}  // namespace qring
