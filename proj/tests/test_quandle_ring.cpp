#include <gtest/gtest.h>

#include <random>

#include "qring/qring.hpp"

using namespace qring;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

FiniteQuandle fixture(const std::string& name) {
  return io::quandle_from_json(io::read_json_file(std::string(QRING_FIXTURES) + "/" + name + ".json"));
}

Magma raw_fixture(const std::string& name) {
  return io::magma_from_json(io::read_json_file(std::string(QRING_FIXTURES) + "/" + name + ".json"));
}

Element el(const CoeffRing& r, std::vector<std::pair<std::size_t, long>> t) {
  std::vector<Element::Term> terms;
  for (auto [k, c] : t) terms.emplace_back(k, Scalar(c));
  return Element::from_terms(r, std::move(terms));
}

Element random_element(std::mt19937_64& rng, std::size_t n, const CoeffRing& r) {
  std::vector<std::pair<std::size_t, long>> t;
  for (std::size_t k = 0; k < n; ++k)
    if (rng() % 2) t.emplace_back(k, static_cast<long>(rng() % 7) - 3);
  return el(r, t);
}

// rank over Q by plain Gaussian elimination on rationals
std::size_t rational_rank(const SquareMatrix& M) {
  const std::size_t n = M.dimension();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = M.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[rank][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(CoeffRing, Construction) {
  EXPECT_EQ(CoeffRing::integers_mod(7).name(), "Zmod:7");
  try {
    CoeffRing::integers_mod(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositeModulus);
  }
  EXPECT_FALSE(CoeffRing::integers_mod(4, true).is_domain());
  EXPECT_EQ(CoeffRing::parse("Q"), Q);
  EXPECT_EQ(Q.normalize(Scalar(6, 4)), Scalar(3, 2));
  EXPECT_EQ(CoeffRing::integers_mod(5).parse_scalar("-1"), 4);
  EXPECT_EQ(CoeffRing::integers_mod(5).parse_scalar("1/2"), 3);
}

TEST(Arithmetic, AddAndScale) {
  auto e0 = Element::basis(Z, 0);
  EXPECT_EQ(e0 + e0, el(Z, {{0, 2}}));
  EXPECT_TRUE((e0 + Scalar(-1) * e0).is_zero());
  auto Z3 = CoeffRing::integers_mod(3);
  EXPECT_EQ(el(Z3, {{1, 2}}) + el(Z3, {{1, 2}}), el(Z3, {{1, 1}}));
  try {
    add(e0, Element::basis(Q, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RingMismatch);
  }
  // stored form is sorted with no zeros
  auto u = el(Z, {{3, 1}, {1, 2}, {3, -1}, {0, 0}});
  ASSERT_EQ(u.terms().size(), 1u);
  EXPECT_EQ(u.terms()[0].first, 1u);
}

TEST(Multiplication, Examples) {
  auto R3 = make::dihedral(3);
  EXPECT_EQ(mul(Element::basis(Z, 0), Element::basis(Z, 1), R3), Element::basis(Z, 2));
  EXPECT_THROW(mul(Element::basis(Z, 5), Element::basis(Z, 1), R3), Error);

  // 1-based e2 - e3 - e6 + e7 on the 8-element quasigroup
  auto M = raw_fixture("quasigroup8");
  auto u = el(Z, {{1, 1}, {2, -1}, {5, -1}, {6, 1}});
  EXPECT_EQ(mul(u, u, M), u);
  EXPECT_TRUE(is_idempotent(u, M));
  EXPECT_EQ(augmentation(u), 0);
}

TEST(Multiplication, RightDistributivityFailsOnWeightedTriple) {
  auto X = fixture("conn6");
  for (long a : {2L, 3L, -1L}) {
    auto u = Element::basis(Z, 0), v = Element::basis(Z, 3), w = el(Z, {{4, a}, {5, 1 - a}});
    EXPECT_EQ(mul(mul(u, v, X), w, X), Element::basis(Z, 5));
    EXPECT_EQ(mul(mul(u, w, X), mul(v, w, X), X), el(Z, {{4, 2 * a - 2 * a * a}, {5, 2 * a * a - 2 * a + 1}}));
  }
  auto w = el(Z, {{4, 2}, {5, -1}});
  EXPECT_EQ(mul(mul(Element::basis(Z, 0), Element::basis(Z, 3), X), w, X), Element::basis(Z, 5));
  EXPECT_EQ(mul(mul(Element::basis(Z, 0), w, X), mul(Element::basis(Z, 3), w, X), X), el(Z, {{4, -4}, {5, 5}}));
}

TEST(Augmentation, Examples) {
  EXPECT_EQ(augmentation(el(Z, {{0, 3}, {1, -2}})), 1);
  EXPECT_EQ(augmentation(Element::from_terms(Z, {})), 0);
}

TEST(Idempotent, Examples) {
  auto X = fixture("conn6");
  EXPECT_TRUE(is_idempotent(Element::basis(Z, 4), X));
  EXPECT_TRUE(is_idempotent(el(Z, {{0, -2}, {1, 3}}), X));
  for (long a = -5; a <= 5; ++a) EXPECT_TRUE(is_idempotent(el(Z, {{0, a}, {1, 1 - a}}), X));
  EXPECT_FALSE(is_idempotent(Element::from_terms(Z, {}), X));
  EXPECT_FALSE(is_idempotent(el(Z, {{0, 1}, {1, 1}}), X));
}

TEST(OrbitSum, Examples) {
  auto R6 = make::dihedral(6);
  EXPECT_EQ(orbit_sum(3, 0, R6, Z), el(Z, {{3, 2}}));
  EXPECT_EQ(orbit_sum(1, 0, R6, Z), el(Z, {{1, 1}, {5, 1}}));
  EXPECT_EQ(orbit_sum(0, 1, make::trivial(2), Z), Element::basis(Z, 0));
  EXPECT_THROW(orbit_sum(6, 0, R6, Z), Error);
}

TEST(RightMultMatrix, Examples) {
  auto R4 = make::dihedral(4);
  auto P = right_mult_matrix(Element::basis(Z, 1), R4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(P.at(r, c), R4.op(c, 1) == r ? 1 : 0);

  auto X = fixture("conn6");
  Element half = Element::from_terms(Q, {{0, Scalar(1, 2)}, {1, Scalar(1, 2)}});
  auto M = right_mult_matrix(half, X);
  auto img = M.apply(coefficient_vector(el(Q, {{2, 1}, {3, -1}}), X));
  for (const auto& s : img) EXPECT_EQ(s, 0);

  EXPECT_TRUE(right_mult_matrix(Element::from_terms(Z, {}), X).is_zero());
}

TEST(Endomorphism, Examples) {
  auto X = fixture("conn6");
  EXPECT_TRUE(is_ring_endomorphism(Element::basis(Z, 0), X));
  auto R6 = make::dihedral(6);
  auto c = check_covering(QuandleHom(R6, make::dihedral(3), {0, 1, 2, 0, 1, 2}));
  // beta = 2 on the unit fibre, alpha = (1, -1) on another fibre
  CoveringFamilyParams p{Z, {ZeroSumBlock{1, {{1, Scalar(1)}, {4, Scalar(-1)}}}}, 0, {{0, Scalar(2)}, {3, Scalar(-1)}}, 0};
  auto u = covering_idempotent(c, p);
  EXPECT_TRUE(is_ring_endomorphism(u, R6));
  // a non-idempotent can fail
  EXPECT_FALSE(is_ring_endomorphism(el(Z, {{0, 1}, {1, 1}}), make::dihedral(3)));
}

TEST(Annihilator, Examples) {
  auto R6 = make::dihedral(6);
  auto v = el(Z, {{0, 1}, {3, -1}});
  EXPECT_TRUE(right_mult_matrix(v, R6).is_zero());
  auto r = has_nontrivial_right_annihilator(v, R6);
  EXPECT_TRUE(r.answer);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(mul(*r.witness, v, R6).is_zero());
  EXPECT_FALSE(has_nontrivial_right_annihilator(Element::basis(Z, 0), make::dihedral(3)).answer);

  // a zero-sum combination over one fibre of a nontrivial covering
  auto Y = make::product(make::dihedral(3), make::trivial(2));
  auto fibre = el(Z, {{2, 3}, {3, -3}});
  auto rf = has_nontrivial_right_annihilator(fibre, Y);
  EXPECT_TRUE(rf.answer);
  EXPECT_TRUE(mul(*rf.witness, fibre, Y).is_zero());
}

TEST(Kernel, RankMatchesRationalEliminationAndWitnessIsPrimitive) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 5;
    SquareMatrix M(Z, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M.set(r, c, Scalar(static_cast<long>(rng() % 5) - 2));
    if (rng() % 3 == 0 && n > 1)  // force a dependency
      for (std::size_t r = 0; r < n; ++r) M.set(r, n - 1, M.at(r, 0) * 2 - M.at(r, 1 % n));
    auto k = kernel(M);
    EXPECT_EQ(k.rank, rational_rank(M));
    EXPECT_EQ(k.witness.has_value(), k.rank < n);
    if (k.witness) {
      for (const auto& s : M.apply(*k.witness)) EXPECT_EQ(s, 0);
      mpz_class g = 0;
      for (const auto& s : *k.witness) {
        EXPECT_EQ(s.get_den(), 1);
        g = gcd(g, s.get_num());
      }
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(Kernel, ModPAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(5);
  const auto F = CoeffRing::integers_mod(3);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 4;
    SquareMatrix M(F, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M.set(r, c, Scalar(static_cast<long>(rng() % 3)));
    bool nonzero_kernel = false;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 1; code < total && !nonzero_kernel; ++code) {
      std::vector<Scalar> v(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) v[i] = Scalar(static_cast<long>(c % 3));
      auto img = M.apply(v);
      nonzero_kernel = std::all_of(img.begin(), img.end(), [](const Scalar& s) { return s == 0; });
    }
    auto k = kernel(M);
    EXPECT_EQ(k.witness.has_value(), nonzero_kernel);
    if (k.witness) {
      for (const auto& s : M.apply(*k.witness)) EXPECT_EQ(s, 0);
    }
  }
}

TEST(Property, BilinearityAugmentationAndMatrixConsistency) {
  std::mt19937_64 rng(3);
  std::vector<FiniteQuandle> pool{make::dihedral(3), make::dihedral(6), fixture("conn6"), make::trivial(3),
                                  make::twisted_union(make::trivial(2), make::trivial(3), {1, 0}, {1, 2, 0})};
  for (int round = 0; round < 300; ++round) {
    const auto& X = pool[rng() % pool.size()];
    const CoeffRing& r = (round % 3 == 0) ? CoeffRing::integers_mod(5) : Z;
    auto u = random_element(rng, X.order(), r), v = random_element(rng, X.order(), r),
         w = random_element(rng, X.order(), r);
    EXPECT_EQ(mul(u + v, w, X), mul(u, w, X) + mul(v, w, X));
    EXPECT_EQ(mul(w, u + v, X), mul(w, u, X) + mul(w, v, X));
    EXPECT_EQ(augmentation(mul(u, v, X)), r.normalize(augmentation(u) * augmentation(v)));
    EXPECT_EQ(right_mult_matrix(u, X).apply(coefficient_vector(w, X)), coefficient_vector(mul(w, u, X), X));
  }
}

TEST(Property, IdempotentsOverZHaveAugmentationZeroOrOne) {
  // sample a grid of two-term combinations in a few quandles
  for (const auto& X : {fixture("conn6"), make::dihedral(6), make::trivial(2)})
    for (std::size_t a = 0; a < X.order(); ++a)
      for (std::size_t b = a + 1; b < X.order(); ++b)
        for (long s = -4; s <= 4; ++s)
          for (long t = -4; t <= 4; ++t) {
            auto u = el(Z, {{a, s}, {b, t}});
            if (!is_idempotent(u, X)) continue;
            auto e = augmentation(u);
            EXPECT_TRUE(e == 0 || e == 1);
          }
}
