#pragma once

// Exhaustive idempotent enumeration over a finite support universe.
//
// Candidates are enumerated by support (size, then lexicographic subset),
// then by coefficient tuple. Since the augmentation is a ring homomorphism
// into a domain, an idempotent has augmentation 0 or 1; the last coefficient
// of each tuple is solved from the target augmentation instead of iterated.
// Supports are handed out to workers dynamically and the merged result is
// sorted canonically, so output does not depend on the worker count.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "quandle.hpp"
#include "ring_element.hpp"

namespace qring {

struct AugmentationFilter {
  bool zero = true;
  bool one = true;
  bool any = false;

  std::string describe() const {
    if (any) return "any";
    std::string s;
    if (zero) s += "0";
    if (one) s += s.empty() ? "1" : ",1";
    return s;
  }
};

struct SearchSpec {
  CoeffRing ring = CoeffRing::integers();
  std::int64_t box_bound = 0;                // Integers only
  std::optional<std::size_t> max_support;    // nullopt = all of X
  AugmentationFilter augmentation;
  std::uint64_t budget = 100'000'000;        // candidate evaluations
  unsigned jobs = 1;
};

template <class Key>
struct IdempotentReport {
  std::string quandle;
  SearchSpec spec;
  std::vector<RingElement<Key>> idempotents;
  bool exhaustive = false;
  std::vector<std::string> flags;
  std::uint64_t candidates_tested = 0;
  double elapsed_ms = 0;

  std::size_t nontrivial_count() const {
    std::size_t c = 0;
    for (const auto& u : idempotents) c += is_trivial_idempotent(u) ? 0 : 1;
    return c;
  }
};

/// Products of support-universe keys, as slot ids. Slots [0, universe) are
/// the universe keys themselves; larger slots are products landing outside.
struct ProductTable {
  std::size_t universe = 0;
  std::size_t slots = 0;
  std::vector<std::uint32_t> prod;  // universe * universe

  std::uint32_t at(std::size_t a, std::size_t b) const { return prod[a * universe + b]; }

  static ProductTable of(const Magma& m) {
    ProductTable t{m.order(), m.order(), {}};
    t.prod.resize(m.order() * m.order());
    for (std::size_t a = 0; a < m.order(); ++a)
      for (std::size_t b = 0; b < m.order(); ++b) t.prod[a * m.order() + b] = static_cast<std::uint32_t>(m.op(a, b));
    return t;
  }
};

namespace detail {

inline double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

struct CoefficientSpace {
  std::vector<std::int64_t> values;  // non-zero values, in iteration order
  std::int64_t modulus = 0;          // 0 = integers
  std::int64_t bound = 0;            // |c| <= bound when modulus == 0
  std::vector<std::int64_t> strata;  // target augmentations; empty = any

  std::int64_t reduce(std::int64_t v) const {
    if (modulus == 0) return v;
    v %= modulus;
    return v < 0 ? v + modulus : v;
  }
  bool admissible_last(std::int64_t v) const {
    return modulus == 0 ? v != 0 && v >= -bound && v <= bound : v != 0;
  }
  /// Exact number of tuples visited for a support of size s.
  double tuples(std::size_t s) const {
    const double v = static_cast<double>(values.size());
    return strata.empty() ? std::pow(v, static_cast<double>(s))
                          : std::pow(v, static_cast<double>(s - 1)) * static_cast<double>(strata.size());
  }
};

struct RawHit {
  std::vector<std::uint32_t> support;
  std::vector<std::int64_t> coeffs;
};

inline std::vector<std::vector<std::uint32_t>> all_supports(std::size_t universe, std::size_t max_support) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  for (std::size_t s = 1; s <= max_support; ++s) {
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (cur.size() == s) {
        out.push_back(cur);
        return;
      }
      for (std::size_t v = from; v + (s - cur.size()) <= universe; ++v) {
        cur.push_back(static_cast<std::uint32_t>(v));
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

/// Runs the enumeration; returns hits and the number of tuples visited.
inline std::pair<std::vector<RawHit>, std::uint64_t> run_support_search(const ProductTable& table,
                                                                        const CoefficientSpace& space,
                                                                        std::size_t max_support, unsigned jobs) {
  const auto supports = all_supports(table.universe, max_support);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> visited{0};
  std::mutex mu;
  std::vector<RawHit> hits;

  auto worker = [&] {
    std::vector<std::int64_t> acc(table.slots, 0);
    std::vector<std::uint32_t> touched;
    std::vector<std::int64_t> coeffs;
    std::vector<std::size_t> digit;
    std::vector<RawHit> local;
    std::uint64_t count = 0;

    auto test = [&](const std::vector<std::uint32_t>& sup) {
      const std::size_t k = sup.size();
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          const std::uint32_t slot = table.at(sup[a], sup[b]);
          if (acc[slot] == 0) touched.push_back(slot);
          acc[slot] = space.reduce(acc[slot] + space.reduce(coeffs[a] * coeffs[b]));
          if (acc[slot] == 0) touched.push_back(slot);
        }
      for (std::size_t a = 0; a < k; ++a) {
        touched.push_back(sup[a]);
        acc[sup[a]] = space.reduce(acc[sup[a]] - coeffs[a]);
      }
      bool ok = true;
      for (std::uint32_t s : touched) {
        if (acc[s] != 0) ok = false;
        acc[s] = 0;
      }
      touched.clear();
      if (ok) local.push_back({sup, coeffs});
    };

    for (std::size_t idx; (idx = next.fetch_add(1)) < supports.size();) {
      const auto& sup = supports[idx];
      const std::size_t k = sup.size();
      const std::size_t free = space.strata.empty() ? k : k - 1;
      digit.assign(free, 0);
      coeffs.assign(k, 0);
      while (true) {
        std::int64_t partial = 0;
        for (std::size_t i = 0; i < free; ++i) {
          coeffs[i] = space.values[digit[i]];
          partial += coeffs[i];
        }
        if (space.strata.empty()) {
          ++count;
          test(sup);
        } else {
          for (std::int64_t target : space.strata) {
            ++count;
            const std::int64_t last = space.reduce(target - partial);
            if (!space.admissible_last(last)) continue;
            coeffs[k - 1] = last;
            test(sup);
          }
        }
        std::size_t i = free;
        while (i > 0 && ++digit[i - 1] == space.values.size()) digit[--i] = 0;
        if (i == 0) break;
      }
    }
    visited += count;
    std::lock_guard lock(mu);
    for (auto& h : local) hits.push_back(std::move(h));
  };

  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return {std::move(hits), visited.load()};
}

inline CoefficientSpace coefficient_space(const SearchSpec& spec) {
  CoefficientSpace cs;
  const auto& ring = spec.ring;
  if (ring.kind() == CoeffRing::Kind::Integers) {
    if (spec.box_bound < 1) fail(Errc::InvalidParams, "box bound must be at least 1 over Z");
    if (spec.box_bound > 1'000'000) fail(Errc::InvalidParams, "box bound too large");
    cs.bound = spec.box_bound;
    for (std::int64_t v = -spec.box_bound; v <= spec.box_bound; ++v)
      if (v != 0) cs.values.push_back(v);
  } else if (ring.kind() == CoeffRing::Kind::IntegersMod) {
    cs.modulus = ring.modulus();
    for (std::int64_t v = 1; v < cs.modulus; ++v) cs.values.push_back(v);
  } else {
    fail(Errc::InvalidParams, "exhaustive search needs Z (with a box) or Z/p");
  }
  if (!spec.augmentation.any) {
    if (spec.augmentation.zero) cs.strata.push_back(0);
    if (spec.augmentation.one) cs.strata.push_back(1);
    if (cs.strata.empty()) fail(Errc::InvalidParams, "empty augmentation filter");
  }
  return cs;
}

}  // namespace detail

/// Enumerates idempotents supported on a finite universe of keys.
/// keys[i] names universe index i; verify re-checks each hit exactly.
template <class Key>
IdempotentReport<Key> support_search(const ProductTable& table, const std::vector<Key>& keys,
                                     const SearchSpec& spec, std::string name,
                                     const std::function<bool(const RingElement<Key>&)>& verify) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto space = detail::coefficient_space(spec);
  const std::size_t max_support = std::min(spec.max_support.value_or(table.universe), table.universe);
  if (max_support == 0) fail(Errc::InvalidParams, "max_support must be at least 1");

  double planned = 0;
  for (std::size_t s = 1; s <= max_support; ++s) planned += detail::binomial(table.universe, s) * space.tuples(s);
  if (planned > static_cast<double>(spec.budget)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f", planned);
    fail(Errc::BudgetExceeded,
         "search needs " + std::string(buf) + " candidates, budget is " + std::to_string(spec.budget),
         {static_cast<std::size_t>(spec.budget)});
  }

  auto [hits, visited] = detail::run_support_search(table, space, max_support, spec.jobs);

  IdempotentReport<Key> rep;
  rep.quandle = std::move(name);
  rep.spec = spec;
  rep.candidates_tested = visited;
  for (const auto& h : hits) {
    std::vector<typename RingElement<Key>::Term> terms;
    for (std::size_t i = 0; i < h.support.size(); ++i) terms.emplace_back(keys[h.support[i]], Scalar(h.coeffs[i]));
    auto u = RingElement<Key>::from_terms(spec.ring, std::move(terms));
    if (!verify(u)) fail(Errc::AssertionFailed, "search kernel reported a non-idempotent");
    rep.idempotents.push_back(std::move(u));
  }
  canonical_sort_unique(rep.idempotents);

  const bool all_strata = spec.augmentation.any || (spec.augmentation.zero && spec.augmentation.one);
  rep.exhaustive = all_strata && (spec.ring.is_domain() || spec.augmentation.any);
  if (!spec.ring.is_domain()) rep.flags.push_back("non-domain coefficients");
  if (spec.ring.kind() == CoeffRing::Kind::Integers)
    rep.flags.push_back("scope: coefficients in [-" + std::to_string(spec.box_bound) + ", " +
                        std::to_string(spec.box_bound) + "]; nothing is claimed outside this box");
  if (max_support < table.universe) rep.flags.push_back("scope: support size <= " + std::to_string(max_support));
  rep.flags.push_back("augmentation strata: " + spec.augmentation.describe());
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::vector<std::size_t> index_keys(std::size_t n) {
  std::vector<std::size_t> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = i;
  return k;
}

/// All idempotents of Z_p[X] (X may be any finite magma).
inline IdempotentReport<std::size_t> enumerate_mod_p(const Magma& X, std::int64_t p, SearchSpec spec,
                                                     std::string name = "", bool force_composite = false) {
  spec.ring = CoeffRing::integers_mod(p, force_composite);
  auto rep = support_search<std::size_t>(ProductTable::of(X), index_keys(X.order()), spec, std::move(name),
                                         [&](const Element& u) { return is_idempotent(u, X); });
  if (X.order() % static_cast<std::size_t>(p) != 0) rep.flags.insert(rep.flags.begin(), "|X| invertible in k");
  return rep;
}

/// All idempotents of Z[X] with every coefficient in [-B, B].
inline IdempotentReport<std::size_t> enumerate_boxed_Z(const Magma& X, SearchSpec spec, std::string name = "") {
  spec.ring = CoeffRing::integers();
  return support_search<std::size_t>(ProductTable::of(X), index_keys(X.order()), spec, std::move(name),
                                     [&](const Element& u) { return is_idempotent(u, X); });
}

}  // namespace qring
