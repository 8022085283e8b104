#pragma once

// Explicit idempotent families: covering families, the even dihedral family,
// unions and twisted unions of quandles, plus the checks that go with them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "covering.hpp"
#include "ring_ops.hpp"
#include "search.hpp"
#include "structure.hpp"

namespace qring {

using Coeffs = std::vector<std::pair<std::size_t, Scalar>>;

/// One zero-sum block: coefficients on a subset of the fibre over y.
struct ZeroSumBlock {
  std::size_t y = 0;
  Coeffs alphas;
};

/// Data of one covering-family idempotent
///   sum_{y in J} sum_{x in I_y} alpha_x [e_x]_{x0} + sum_{x' in I_y0} alpha_x' e_x'
/// with zero sums on each J block and sum 1 on the y0 block.
struct CoveringFamilyParams {
  CoeffRing ring = CoeffRing::integers();
  std::vector<ZeroSumBlock> blocks;  // one per y in J
  std::size_t y0 = 0;
  Coeffs unit_block;  // I_y0 with coefficients
  std::size_t x0 = 0;
};

namespace detail {

inline Scalar coeff_sum(const CoeffRing& ring, const Coeffs& c) {
  Scalar s(0);
  for (const auto& t : c) s += t.second;
  return ring.normalize(s);
}

inline bool in_set(const IndexSet& s, std::size_t x) { return std::binary_search(s.begin(), s.end(), x); }

inline void check_block_keys(const Covering& cov, std::size_t y, const Coeffs& c, const char* what) {
  if (y >= cov.base().order()) fail(Errc::ConstraintViolated, std::string(what) + ": base index out of range", {y});
  std::set<std::size_t> seen;
  for (const auto& [x, a] : c) {
    if (!in_set(cov.fiber(y), x))
      fail(Errc::ConstraintViolated, std::string(what) + ": " + std::to_string(x) + " is not over " + std::to_string(y),
           {x, y});
    if (!seen.insert(x).second) fail(Errc::ConstraintViolated, std::string(what) + ": repeated key", {x});
  }
}

}  // namespace detail

inline void check_params(const Covering& cov, const CoveringFamilyParams& p) {
  std::set<std::size_t> J;
  for (const auto& b : p.blocks) {
    detail::check_block_keys(cov, b.y, b.alphas, "zero-sum block");
    if (!J.insert(b.y).second) fail(Errc::ConstraintViolated, "base index repeated in J", {b.y});
    if (detail::coeff_sum(p.ring, b.alphas) != 0)
      fail(Errc::ConstraintViolated, "coefficients over " + std::to_string(b.y) + " do not sum to 0", {b.y});
  }
  detail::check_block_keys(cov, p.y0, p.unit_block, "unit block");
  if (detail::coeff_sum(p.ring, p.unit_block) != 1)
    fail(Errc::ConstraintViolated, "coefficients over y0 do not sum to 1", {p.y0});
  bool has_x0 = std::any_of(p.unit_block.begin(), p.unit_block.end(), [&](const auto& t) { return t.first == p.x0; });
  if (!has_x0) fail(Errc::ConstraintViolated, "x0 is not in I_y0", {p.x0});
}

/// Builds the family element without checking idempotency.
inline Element covering_element(const Covering& cov, const CoveringFamilyParams& p) {
  check_params(cov, p);
  const auto& X = cov.total();
  std::vector<Element::Term> terms;
  for (const auto& b : p.blocks)
    for (const auto& [x, a] : b.alphas) {
      const Element orb = orbit_sum(x, p.x0, X, p.ring);
      for (const auto& [k, c] : orb.terms()) terms.emplace_back(k, a * c);
    }
  for (const auto& t : p.unit_block) terms.push_back(t);
  return Element::from_terms(p.ring, std::move(terms));
}

inline Element covering_idempotent(const Covering& cov, const CoveringFamilyParams& p) {
  Element u = covering_element(cov, p);
  if (!is_idempotent(u, cov.total())) fail(Errc::AssertionFailed, "covering family member is not idempotent");
  return u;
}

inline Element pushforward(const Element& u, const QuandleHom& p) {
  std::vector<Element::Term> t;
  for (const auto& [x, c] : u.terms()) t.emplace_back(p(x), c);
  return Element::from_terms(u.ring(), std::move(t));
}

// ---------------------------------------------------------------------------
// Grid verification

struct FamilyVerifyOptions {
  std::vector<std::int64_t> grid{-1, 0, 1};
  std::size_t max_J = 2;
  CoeffRing ring = CoeffRing::integers();
  std::uint64_t budget = 100'000'000;
};

struct FamilyVerifyResult {
  bool verified = false;
  /// True when the grid has at least 3 distinct values: the defect has degree
  /// at most 2 in each free parameter, so vanishing on the grid means
  /// vanishing for every coefficient choice.
  bool certifies_all_coefficients = false;
  std::uint64_t structures = 0;
  std::uint64_t members_checked = 0;
  std::optional<CoveringFamilyParams> counterexample;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t v = from; v < n; ++v) {
      cur.push_back(v);
      out.push_back(cur);
      if (cur.size() < k) self(self, v + 1);
      cur.pop_back();
    }
  };
  if (k > 0) rec(rec, 0);
  return out;
}

}  // namespace detail

/// Sweeps y0, x0, J (|J| <= max_J) with full fibres and every grid value of
/// the free coefficients; the last coefficient of each block is solved.
inline FamilyVerifyResult covering_family_verify(const Covering& cov, const FamilyVerifyOptions& opt = {}) {
  std::set<std::int64_t> distinct(opt.grid.begin(), opt.grid.end());
  if (distinct.empty()) fail(Errc::InvalidParams, "empty grid");
  const auto& Y = cov.base();
  const auto Js = detail::subsets_up_to(Y.order(), opt.max_J);

  // planned work
  double planned = 0;
  const double g = static_cast<double>(opt.grid.size());
  for (std::size_t y0 = 0; y0 < Y.order(); ++y0) {
    const double unit = std::pow(g, static_cast<double>(cov.fiber(y0).size() - 1));
    for (const auto& J : Js) {
      double free = 0;
      for (std::size_t y : J) free += static_cast<double>(cov.fiber(y).size() - 1);
      planned += static_cast<double>(cov.fiber(y0).size()) * unit * std::pow(g, free);
    }
  }
  if (planned > static_cast<double>(opt.budget))
    fail(Errc::BudgetExceeded, "family sweep needs " + std::to_string(static_cast<long double>(planned)) + " checks",
         {static_cast<std::size_t>(opt.budget)});

  FamilyVerifyResult res;
  res.certifies_all_coefficients = distinct.size() >= 3;
  const auto& ring = opt.ring;
  for (std::size_t y0 = 0; y0 < Y.order(); ++y0)
    for (std::size_t x0 : cov.fiber(y0))
      for (const auto& J : Js) {
        ++res.structures;
        // free parameter slots: (fibre, position) for all but the last key
        std::vector<const IndexSet*> fibres;
        for (std::size_t y : J) fibres.push_back(&cov.fiber(y));
        fibres.push_back(&cov.fiber(y0));
        std::size_t nfree = 0;
        for (const auto* f : fibres) nfree += f->size() - 1;
        std::vector<std::size_t> digit(nfree, 0);
        while (true) {
          CoveringFamilyParams p;
          p.ring = ring;
          p.y0 = y0;
          p.x0 = x0;
          std::size_t d = 0;
          for (std::size_t b = 0; b < fibres.size(); ++b) {
            const auto& f = *fibres[b];
            const bool unit = b + 1 == fibres.size();
            Coeffs c;
            Scalar s(0);
            for (std::size_t i = 0; i + 1 < f.size(); ++i) {
              Scalar a = ring.normalize(Scalar(opt.grid[digit[d++]]));
              s += a;
              c.emplace_back(f[i], a);
            }
            c.emplace_back(f.back(), ring.normalize((unit ? Scalar(1) : Scalar(0)) - s));
            if (unit)
              p.unit_block = std::move(c);
            else
              p.blocks.push_back({J[b], std::move(c)});
          }
          ++res.members_checked;
          Element u = covering_element(cov, p);
          if (!is_idempotent(u, cov.total())) {
            res.counterexample = std::move(p);
            return res;
          }
          std::size_t i = nfree;
          while (i > 0 && ++digit[i - 1] == opt.grid.size()) digit[--i] = 0;
          if (i == 0) break;
        }
      }
  res.verified = true;
  return res;
}

// ---------------------------------------------------------------------------
// Classification

struct ClassifyResult {
  bool in_family = false;
  std::optional<CoveringFamilyParams> params;
  std::string reason;  // first failed condition when not in the family
  std::vector<std::string> flags;
};

/// Decides whether an idempotent u is a member of the covering family and
/// reconstructs parameters when it is. Assumes (and flags) that the base ring
/// has only trivial idempotents.
inline ClassifyResult covering_classify(const Element& u, const Covering& cov) {
  const auto& X = cov.total();
  const auto& ring = u.ring();
  if (!is_idempotent(u, X)) fail(Errc::NotIdempotent, "element is not an idempotent");
  ClassifyResult res;
  res.flags.push_back("assumes k[base] has only trivial idempotents");
  auto no = [&](std::string why) {
    res.reason = std::move(why);
    return res;
  };

  const Element pu = pushforward(u, cov.hom());
  if (!is_trivial_idempotent(pu)) return no("pushforward is not a trivial idempotent");
  const std::size_t y0 = pu.terms().front().first;
  const auto& F0 = cov.fiber(y0);

  Coeffs unit;
  std::vector<Element::Term> vt;
  for (const auto& [x, c] : u.terms()) {
    if (detail::in_set(F0, x))
      unit.emplace_back(x, c);
    else
      vt.emplace_back(x, c);
  }
  const Element w = Element::from_terms(ring, unit);
  const Element v = Element::from_terms(ring, vt);
  const std::size_t x0 = unit.front().first;
  if (!(mul(v, w, X) == v)) return no("v != v w");

  // v must be constant on S_x0-orbits; orbit O then carries c_O * [e_O] and
  // [e_x]_x0 = m_O * sum_{z in O} e_z with m_O = n_x0 / |O|.
  const auto s = X.right_mult(x0);
  const std::uint64_t nx0 = order(s);
  std::vector<std::size_t> orbit_of(X.order(), SIZE_MAX);
  std::vector<IndexSet> orbits;
  for (std::size_t x = 0; x < X.order(); ++x) {
    if (orbit_of[x] != SIZE_MAX || detail::in_set(F0, x)) continue;
    IndexSet O;
    for (std::size_t z = x; orbit_of[z] == SIZE_MAX; z = s[z]) {
      orbit_of[z] = orbits.size();
      O.push_back(z);
    }
    std::sort(O.begin(), O.end());
    orbits.push_back(std::move(O));
  }
  std::vector<Scalar> demand(orbits.size(), Scalar(0));
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const Scalar c = v.coeff(orbits[o].front());
    for (std::size_t z : orbits[o])
      if (v.coeff(z) != c) return no("v is not constant on an orbit of S_x0");
    const Scalar m(static_cast<long>(nx0 / orbits[o].size()));
    if (c != 0 && !ring.divide(c, m, demand[o])) return no("orbit coefficient not divisible by its multiplicity");
  }

  // Bipartite graph: orbit nodes [0, |orbits|), fibre nodes after; each
  // x outside F0 is an edge. Find edge values alpha_x with orbit sums equal
  // to demand and fibre sums 0, using a spanning forest.
  const std::size_t no_ = orbits.size(), nf = cov.base().order(), N = no_ + nf;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(N);  // (neighbour, x)
  for (std::size_t x = 0; x < X.order(); ++x) {
    if (orbit_of[x] == SIZE_MAX) continue;
    const std::size_t a = orbit_of[x], b = no_ + cov.hom()(x);
    adj[a].emplace_back(b, x);
    adj[b].emplace_back(a, x);
  }
  std::vector<Scalar> need(N, Scalar(0));
  for (std::size_t o = 0; o < no_; ++o) need[o] = demand[o];
  std::vector<Scalar> alpha(X.order(), Scalar(0));
  std::vector<bool> seen(N, false);
  for (std::size_t root = 0; root < N; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> order_, parent_edge(N, SIZE_MAX), parent(N, SIZE_MAX);
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      order_.push_back(a);
      for (auto [b, x] : adj[a])
        if (!seen[b]) {
          seen[b] = true;
          parent[b] = a;
          parent_edge[b] = x;
          stack.push_back(b);
        }
    }
    Scalar total(0);
    for (std::size_t a : order_) total += need[a];
    if (ring.normalize(total) != 0) return no("orbit and fibre sums are inconsistent");
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const std::size_t a = *it;
      if (a == root) continue;
      const Scalar val = ring.normalize(need[a]);
      alpha[parent_edge[a]] = val;
      need[parent[a]] -= val;
    }
  }

  CoveringFamilyParams p;
  p.ring = ring;
  p.y0 = y0;
  p.x0 = x0;
  p.unit_block = unit;
  for (std::size_t y = 0; y < nf; ++y) {
    if (y == y0) continue;
    Coeffs c;
    for (std::size_t x : cov.fiber(y))
      if (alpha[x] != 0) c.emplace_back(x, alpha[x]);
    if (!c.empty()) p.blocks.push_back({y, std::move(c)});
  }
  if (!(covering_element(cov, p) == u)) fail(Errc::AssertionFailed, "reconstructed parameters do not rebuild u");
  res.in_family = true;
  res.params = std::move(p);
  return res;
}

// ---------------------------------------------------------------------------
// Even dihedral family on R_{2n}, n odd

inline Element dihedral_even_family(std::size_t n, std::size_t j, const Scalar& beta, const std::vector<Scalar>& alphas,
                                    const CoeffRing& ring = CoeffRing::integers()) {
  if (n < 3 || n % 2 == 0) fail(Errc::InvalidParams, "n must be odd and at least 3");
  if (j >= n) fail(Errc::InvalidParams, "j must lie in [0, n)");
  const std::size_t m = (n - 1) / 2;
  if (alphas.size() != m + 1) fail(Errc::InvalidParams, "expected " + std::to_string(m + 1) + " alpha values");
  const std::int64_t N = static_cast<std::int64_t>(2 * n);
  auto idx = [&](std::int64_t k) { return static_cast<std::size_t>(((k % N) + N) % N); };
  const std::int64_t nn = static_cast<std::int64_t>(n), jj = static_cast<std::int64_t>(j);
  std::vector<Element::Term> t{{j, beta}, {j + n, Scalar(1) - beta}};
  for (std::size_t i = 0; i <= m; ++i) {
    const std::int64_t ii = static_cast<std::int64_t>(i);
    const Scalar& a = alphas[i];
    t.emplace_back(idx(ii), a);
    t.emplace_back(idx(nn + ii), -a);
    t.emplace_back(idx(2 * jj - ii), a);
    t.emplace_back(idx(nn + 2 * jj - ii), -a);
  }
  Element u = Element::from_terms(ring, std::move(t));
  if (!is_idempotent(u, make::dihedral(2 * n)))
    fail(Errc::AssertionFailed, "even dihedral family member is not idempotent");
  return u;
}

// ---------------------------------------------------------------------------
// Unions

enum class UnionKind { WeightedIdempotents = 1, NilpotentPerturbation = 2, ComponentMass = 3 };

struct UnionParams {
  std::vector<Element> parts;   // part-local elements (kinds 1 and 2)
  std::vector<Scalar> alphas;   // kinds 1 and 3
  std::size_t unit_part = 0;    // kind 2
};

inline Element embed(const Element& u, std::size_t offset) {
  std::vector<Element::Term> t;
  for (const auto& [k, c] : u.terms()) t.emplace_back(k + offset, c);
  return Element::from_terms(u.ring(), std::move(t));
}

inline Element union_idempotents(const std::vector<FiniteQuandle>& parts, UnionKind kind, const UnionParams& p,
                                 const CoeffRing& ring = CoeffRing::integers()) {
  if (parts.size() < 2) fail(Errc::InvalidParams, "a union needs at least two parts");
  const auto off = make::block_offsets(parts);
  const auto U = make::disjoint_union(parts);
  std::vector<Element::Term> terms;
  auto need_alphas = [&] {
    if (p.alphas.size() != parts.size()) fail(Errc::InvalidParams, "one alpha per part expected");
  };
  auto need_parts = [&] {
    if (p.parts.size() != parts.size()) fail(Errc::InvalidParams, "one element per part expected");
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (!(p.parts[j].ring() == ring)) fail(Errc::RingMismatch, "part element over a different ring", {j});
      for (const auto& t : p.parts[j].terms())
        if (t.first >= parts[j].order()) fail(Errc::CarrierMismatch, "key outside its part", {j, t.first});
    }
  };
  switch (kind) {
    case UnionKind::WeightedIdempotents: {
      need_alphas();
      need_parts();
      Scalar s(0);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!is_idempotent(p.parts[j], parts[j]) || augmentation(p.parts[j]) != 1)
          fail(Errc::ConstraintViolated, "part element must be an idempotent of augmentation 1", {j});
        s += p.alphas[j];
        for (const auto& [k, c] : p.parts[j].terms()) terms.emplace_back(k + off[j], p.alphas[j] * c);
      }
      if (ring.normalize(s) != 1) fail(Errc::ConstraintViolated, "alphas must sum to 1");
      break;
    }
    case UnionKind::NilpotentPerturbation: {
      need_parts();
      if (p.unit_part >= parts.size()) fail(Errc::InvalidParams, "unit part out of range", {p.unit_part});
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& u = p.parts[j];
        if (j == p.unit_part) {
          if (!is_idempotent(u, parts[j]) || augmentation(u) != 1)
            fail(Errc::ConstraintViolated, "unit part must be an idempotent of augmentation 1", {j});
        } else if (!mul(u, u, parts[j]).is_zero()) {
          fail(Errc::NotNilpotent, "part element does not square to 0", {j});
        }
        for (const auto& [k, c] : u.terms()) terms.emplace_back(k + off[j], c);
      }
      break;
    }
    case UnionKind::ComponentMass: {
      need_alphas();
      Scalar s(0);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        s += p.alphas[j] * Scalar(static_cast<long>(parts[j].order()));
        for (std::size_t k = 0; k < parts[j].order(); ++k) terms.emplace_back(k + off[j], p.alphas[j]);
      }
      if (ring.normalize(s) != 1) fail(Errc::ConstraintViolated, "sum of alpha_j |X_j| must be 1");
      break;
    }
    default:
      fail(Errc::InvalidParams, "unknown union kind");
  }
  Element u = Element::from_terms(ring, std::move(terms));
  if (!is_idempotent(u, U)) fail(Errc::AssertionFailed, "union family member is not idempotent");
  return u;
}

/// Which union families (1, 2, 3) contain u; empty means an observed gap.
inline std::vector<int> union_membership(const std::vector<FiniteQuandle>& parts, const Element& u) {
  const auto off = make::block_offsets(parts);
  const auto& ring = u.ring();
  std::vector<Element> piece(parts.size(), Element(ring));
  {
    std::vector<std::vector<Element::Term>> t(parts.size());
    for (const auto& [k, c] : u.terms()) {
      std::size_t j = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), k) - off.begin()) - 1;
      t[j].emplace_back(k - off[j], c);
    }
    for (std::size_t j = 0; j < parts.size(); ++j) piece[j] = Element::from_terms(ring, t[j]);
  }
  std::vector<int> kinds;
  // 1: piece_j = alpha_j u_j, u_j idempotent of augmentation 1, alpha_j = eps(piece_j)
  bool k1 = true;
  for (std::size_t j = 0; j < parts.size() && k1; ++j) {
    const Scalar a = augmentation(piece[j]);
    if (a == 0) {
      k1 = piece[j].is_zero();
      continue;
    }
    std::vector<Element::Term> t;
    for (const auto& [k, c] : piece[j].terms()) {
      Scalar q;
      if (!ring.divide(c, a, q)) {
        k1 = false;
        break;
      }
      t.emplace_back(k, q);
    }
    k1 = k1 && is_idempotent(Element::from_terms(ring, t), parts[j]);
  }
  if (k1) kinds.push_back(1);
  // 2: one idempotent piece of augmentation 1, all others square to 0
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (augmentation(piece[i]) != 1 || !is_idempotent(piece[i], parts[i])) continue;
    bool ok = true;
    for (std::size_t j = 0; j < parts.size() && ok; ++j)
      if (j != i) ok = mul(piece[j], piece[j], parts[j]).is_zero();
    if (ok) {
      kinds.push_back(2);
      break;
    }
  }
  // 3: constant on each part
  bool k3 = true;
  for (std::size_t j = 0; j < parts.size() && k3; ++j) {
    const Scalar c = piece[j].coeff(0);
    for (std::size_t k = 1; k < parts[j].order(); ++k) k3 = k3 && piece[j].coeff(k) == c;
  }
  if (k3) kinds.push_back(3);
  return kinds;
}

struct UnionCrossCheck {
  IdempotentReport<std::size_t> enumeration;
  std::vector<Element> observed_gap;  // enumerated idempotents outside all three families
};

inline UnionCrossCheck union_cross_check(const std::vector<FiniteQuandle>& parts, const SearchSpec& spec) {
  const auto U = make::disjoint_union(parts);
  UnionCrossCheck r{spec.ring.kind() == CoeffRing::Kind::IntegersMod
                        ? enumerate_mod_p(U.magma(), spec.ring.modulus(), spec, "union")
                        : enumerate_boxed_Z(U.magma(), spec, "union"),
                    {}};
  for (const auto& u : r.enumeration.idempotents)
    if (union_membership(parts, u).empty()) r.observed_gap.push_back(u);
  return r;
}

// ---------------------------------------------------------------------------
// Twisted union of trivial quandles

struct TwistedUnionClassification {
  std::size_t n = 0, m = 0;
  std::vector<std::string> description;
  std::vector<Element> members;  // the classified set within the search scope
  IdempotentReport<std::size_t> enumeration;
  std::vector<Element> missing;  // classified but not enumerated
  std::vector<Element> extra;    // enumerated but not classified
  bool cross_check = false;
};

namespace detail {

/// All vectors of length len with entries in vals (zero allowed) and the
/// given sum; calls emit for each.
template <class F>
void vectors_with_sum(std::size_t len, const std::vector<std::int64_t>& vals, const CoeffRing& ring,
                      const Scalar& target, F&& emit) {
  std::vector<std::int64_t> cur(len);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i + 1 == len) {
      Scalar s(0);
      for (std::size_t k = 0; k + 1 < len; ++k) s += cur[k];
      Scalar last = ring.normalize(target - s);
      if (std::find(vals.begin(), vals.end(), last.get_num().get_si()) == vals.end()) return;
      if (last.get_den() != 1) return;
      cur[i] = last.get_num().get_si();
      emit(cur);
      return;
    }
    for (std::int64_t v : vals) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline TwistedUnionClassification twisted_union_classify(std::size_t n, std::size_t m, const Permutation& f,
                                                         const Permutation& g, const SearchSpec& spec) {
  if (!is_permutation(f) || f.size() != n || !is_permutation(g) || g.size() != m)
    fail(Errc::InvalidParams, "f and g must be permutations of the two parts");
  if (!is_single_cycle(f) || !is_single_cycle(g)) fail(Errc::HypothesisFailed, "f and g must act transitively");
  const auto& ring = spec.ring;
  if (ring.kind() == CoeffRing::Kind::Rationals) fail(Errc::InvalidParams, "cross-check needs Z (box) or Z/p");
  if (!ring.is_domain()) fail(Errc::HypothesisFailed, "coefficients must form an integral domain");
  const std::int64_t ch = ring.characteristic();
  if (ch != 0 && (n % static_cast<std::size_t>(ch) == 0 || m % static_cast<std::size_t>(ch) == 0))
    fail(Errc::HypothesisFailed, "characteristic divides the order of a part");

  TwistedUnionClassification r;
  r.n = n;
  r.m = m;
  r.description = {"I(k[X]): sum over X of a_x e_x with sum a_x = 1",
                   "I(k[Y]): sum over Y of b_y e_y with sum b_y = 1",
                   "a (sum over X of e_x) + b (sum over Y of e_y) with " + std::to_string(n) + "a + " +
                       std::to_string(m) + "b = 1"};

  const auto Q = make::twisted_union(make::trivial(n), make::trivial(m), f, g);
  r.enumeration = ring.kind() == CoeffRing::Kind::IntegersMod
                      ? enumerate_mod_p(Q.magma(), ring.modulus(), spec, "twisted union")
                      : enumerate_boxed_Z(Q.magma(), spec, "twisted union");

  std::vector<std::int64_t> vals;
  if (ring.kind() == CoeffRing::Kind::IntegersMod)
    for (std::int64_t v = 0; v < ring.modulus(); ++v) vals.push_back(v);
  else
    for (std::int64_t v = -spec.box_bound; v <= spec.box_bound; ++v) vals.push_back(v);

  auto add_member = [&](std::vector<Element::Term> t) { r.members.push_back(Element::from_terms(ring, std::move(t))); };
  detail::vectors_with_sum(n, vals, ring, Scalar(1), [&](const std::vector<std::int64_t>& a) {
    std::vector<Element::Term> t;
    for (std::size_t x = 0; x < n; ++x) t.emplace_back(x, Scalar(a[x]));
    add_member(std::move(t));
  });
  detail::vectors_with_sum(m, vals, ring, Scalar(1), [&](const std::vector<std::int64_t>& b) {
    std::vector<Element::Term> t;
    for (std::size_t y = 0; y < m; ++y) t.emplace_back(n + y, Scalar(b[y]));
    add_member(std::move(t));
  });
  for (std::int64_t a : vals)
    for (std::int64_t b : vals) {
      if (ring.normalize(Scalar(a) * Scalar(static_cast<long>(n)) + Scalar(b) * Scalar(static_cast<long>(m))) != 1)
        continue;
      std::vector<Element::Term> t;
      for (std::size_t x = 0; x < n + m; ++x) t.emplace_back(x, Scalar(x < n ? a : b));
      add_member(std::move(t));
    }
  const std::size_t cap = spec.max_support.value_or(n + m);
  std::erase_if(r.members, [&](const Element& u) { return u.support_size() > cap; });
  canonical_sort_unique(r.members);

  const auto& found = r.enumeration.idempotents;
  std::set_difference(r.members.begin(), r.members.end(), found.begin(), found.end(), std::back_inserter(r.missing),
                      canonical_less<std::size_t>);
  std::set_difference(found.begin(), found.end(), r.members.begin(), r.members.end(), std::back_inserter(r.extra),
                      canonical_less<std::size_t>);
  r.cross_check = r.missing.empty() && r.extra.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Idempotents as a quandle

struct IdempotentQuandleReport {
  std::size_t sample_size = 0;
  bool idempotency = true;
  bool closure = true;
  bool self_distributivity = true;
  bool right_translation_is_basis = true;
  std::vector<std::string> failures;  // first few, with sample indices
  std::uint64_t failure_count = 0;

  bool all_pass() const { return idempotency && closure && self_distributivity && right_translation_is_basis; }
};

template <FiniteCarrier C>
IdempotentQuandleReport idempotent_quandle_check(std::vector<Element> sample, const C& X,
                                                 std::size_t max_listed = 20) {
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (!is_idempotent(sample[i], X)) fail(Errc::NotIdempotentInput, "sample element is not idempotent", {i});
  IdempotentQuandleReport r;
  r.sample_size = sample.size();
  auto note = [&](bool& flag, std::string msg) {
    flag = false;
    ++r.failure_count;
    if (r.failures.size() < max_listed) r.failures.push_back(std::move(msg));
  };
  const std::size_t s = sample.size(), n = X.order();
  if (s == 0) return r;
  const CoeffRing ring = sample.front().ring();

  using Dense = std::vector<Scalar>;
  auto dense = [&](const Element& u) { return coefficient_vector(u, X); };
  auto dmul = [&](const Dense& a, const Dense& b) {
    Dense out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[j] != 0) out[X.op(i, j)] += a[i] * b[j];
    }
    for (auto& v : out) v = ring.normalize(v);
    return out;
  };
  std::vector<Dense> d;
  for (const auto& u : sample) d.push_back(dense(u));
  std::vector<Dense> prod(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) prod[a * s + b] = dmul(d[a], d[b]);
  auto idx = [](std::size_t i) { return std::to_string(i); };

  for (std::size_t a = 0; a < s; ++a)
    if (prod[a * s + a] != d[a]) note(r.idempotency, "u" + idx(a) + " u" + idx(a) + " != u" + idx(a));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const Dense& uv = prod[a * s + b];
      if (dmul(uv, uv) != uv) note(r.closure, "u" + idx(a) + " u" + idx(b) + " is not idempotent");
    }
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t c = 0; c < s; ++c)
        if (dmul(prod[a * s + b], d[c]) != dmul(prod[a * s + c], prod[b * s + c]))
          note(r.self_distributivity, "(u" + idx(a) + " u" + idx(b) + ") u" + idx(c) + " != (u" + idx(a) + " u" +
                                          idx(c) + ")(u" + idx(b) + " u" + idx(c) + ")");
  std::vector<SquareMatrix> basis;
  for (std::size_t x = 0; x < n; ++x) basis.push_back(right_mult_matrix(Element::basis(ring, x), X));
  for (std::size_t c = 0; c < s; ++c) {
    const auto M = right_mult_matrix(sample[c], X);
    if (std::none_of(basis.begin(), basis.end(), [&](const SquareMatrix& B) { return B == M; }))
      note(r.right_translation_is_basis, "right multiplication by u" + idx(c) + " is not a basis translation");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Right zero-divisors from a fibre

struct ZeroDivisorResult {
  Element element;
  bool verified = false;
  bool basis_annihilates = false;
  bool matrix_zero = false;
  std::optional<Element> annihilator_witness;
};

/// v = sum alpha_i e_{x_i} over the fibre p^{-1}(y) in sorted order; every
/// element of k[X] right-annihilates v.
inline ZeroDivisorResult right_zero_divisor_from_fiber(const Covering& cov, std::size_t y,
                                                       const std::vector<Scalar>& alphas,
                                                       const CoeffRing& ring = CoeffRing::integers()) {
  if (y >= cov.base().order()) fail(Errc::IndexOutOfRange, "base index out of range", {y});
  const auto& F = cov.fiber(y);
  if (F.size() < 2) fail(Errc::ConstraintViolated, "fibre has fewer than two elements", {y});
  if (alphas.size() != F.size())
    fail(Errc::InvalidParams, "expected " + std::to_string(F.size()) + " coefficients for the fibre");
  Coeffs c;
  for (std::size_t i = 0; i < F.size(); ++i) c.emplace_back(F[i], ring.normalize(alphas[i]));
  if (detail::coeff_sum(ring, c) != 0) fail(Errc::ConstraintViolated, "coefficients must sum to 0");
  ZeroDivisorResult r{Element::from_terms(ring, c), false, true, false, std::nullopt};
  if (r.element.is_zero()) fail(Errc::ConstraintViolated, "coefficients are all zero");
  const auto& X = cov.total();
  for (std::size_t w = 0; w < X.order(); ++w)
    if (!mul(Element::basis(ring, w), r.element, X).is_zero()) r.basis_annihilates = false;
  r.matrix_zero = right_mult_matrix(r.element, X).is_zero();
  auto ann = has_nontrivial_right_annihilator(r.element, X);
  r.annihilator_witness = ann.witness;
  r.verified = r.basis_annihilates && r.matrix_zero && ann.answer;
  return r;
}

// ---------------------------------------------------------------------------
// Core quandles, supports of size <= 3

struct CoreThreeReport {
  std::vector<std::size_t> factors;
  IdempotentReport<std::size_t> enumeration;
  std::vector<Element> nontrivial;
};

inline CoreThreeReport core_three_support_check(const std::vector<std::size_t>& factors, std::int64_t B,
                                                unsigned jobs = 1, std::uint64_t budget = 100'000'000) {
  if (factors.empty()) fail(Errc::InvalidParams, "no factors given");
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] % 2 == 0 || factors[i] % 3 == 0)
      fail(Errc::HypothesisFailed, "factor " + std::to_string(factors[i]) + " has 2- or 3-torsion", {i});
  SearchSpec spec;
  spec.box_bound = B;
  spec.max_support = 3;
  spec.jobs = jobs;
  spec.budget = budget;
  const auto X = make::core(factors);
  std::string name = "Core(Z_";
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? " x Z_" : "") + std::to_string(factors[i]);
  name += ")";
  CoreThreeReport r{factors, enumerate_boxed_Z(X.magma(), spec, name), {}};
  for (const auto& u : r.enumeration.idempotents)
    if (!is_trivial_idempotent(u)) r.nontrivial.push_back(u);
  return r;
}

}  // namespace qring
