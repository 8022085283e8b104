#include <gtest/gtest.h>

#include "qring/qring.hpp"

using namespace qring;

namespace {

const CoeffRing Z = CoeffRing::integers();

FiniteQuandle fixture(const std::string& name) {
  return io::quandle_from_json(io::read_json_file(std::string(QRING_FIXTURES) + "/" + name + ".json"));
}

// All u != 0 in R^n with u*u = u, R = Z/p (p > 0) or the box [-B, B] (p = 0).
// Dense integer arithmetic, no shared code with the engine.
std::vector<std::vector<long>> naive_idempotents(const Table& t, long p, long B) {
  const std::size_t n = t.size();
  const long lo = p ? 0 : -B, width = p ? p : 2 * B + 1;
  std::vector<std::vector<long>> out;
  std::vector<long> u(n, lo), sq(n);
  while (true) {
    std::fill(sq.begin(), sq.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (u[i])
        for (std::size_t j = 0; j < n; ++j) sq[t[i][j]] += u[i] * u[j];
    bool nonzero = false, same = true;
    for (std::size_t k = 0; k < n; ++k) {
      nonzero |= u[k] != 0;
      long a = sq[k], b = u[k];
      if (p) a = ((a % p) + p) % p;
      same &= a == b;
    }
    if (nonzero && same) out.push_back(u);
    std::size_t i = n;
    while (i > 0 && ++u[i - 1] == lo + width) u[--i] = lo;
    if (i == 0) break;
  }
  return out;
}

std::vector<std::vector<long>> as_dense(const std::vector<Element>& v, std::size_t n) {
  std::vector<std::vector<long>> out;
  for (const auto& u : v) {
    std::vector<long> d(n, 0);
    for (const auto& [k, c] : u.terms()) d[k] = c.get_num().get_si();
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element el(std::vector<std::pair<std::size_t, long>> t, const CoeffRing& r = Z) {
  std::vector<Element::Term> terms;
  for (auto [k, c] : t) terms.emplace_back(k, Scalar(c));
  return Element::from_terms(r, std::move(terms));
}

bool contains(const std::vector<Element>& v, const Element& u) { return std::find(v.begin(), v.end(), u) != v.end(); }

SearchSpec box(std::int64_t B, std::optional<std::size_t> support = std::nullopt, unsigned jobs = 1) {
  SearchSpec s;
  s.box_bound = B;
  s.max_support = support;
  s.jobs = jobs;
  return s;
}

Errc code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::AssertionFailed;
}

}  // namespace

TEST(ModP, MatchesNaiveOracle) {
  struct Case {
    FiniteQuandle X;
    std::vector<long> primes;
  };
  std::vector<Case> cases{{make::dihedral(3), {2, 3, 5, 7}},
                          {make::dihedral(4), {2, 3, 5}},
                          {make::trivial(2), {2, 3, 5}},
                          {make::trivial(3), {2, 3}},
                          {make::dihedral(5), {3, 5}},
                          {make::dihedral(6), {2, 3, 5}},
                          {fixture("conn6"), {2, 3, 5}},
                          {make::twisted_union(make::trivial(2), make::trivial(3), {1, 0}, {1, 2, 0}), {2, 3, 7}}};
  for (const auto& [X, primes] : cases)
    for (long p : primes) {
      const auto oracle = naive_idempotents(X.magma().table(), p, 0);
      auto rep = enumerate_mod_p(X.magma(), p, SearchSpec{});
      EXPECT_EQ(as_dense(rep.idempotents, X.order()), oracle) << X.order() << " mod " << p;
      EXPECT_TRUE(rep.exhaustive);
      for (const auto& u : rep.idempotents) EXPECT_TRUE(is_idempotent(u, X));
      const bool invertible = X.order() % static_cast<std::size_t>(p) != 0;
      EXPECT_EQ(std::count(rep.flags.begin(), rep.flags.end(), "|X| invertible in k"), invertible ? 1 : 0);
    }
}

TEST(ModP, Examples) {
  auto r3 = enumerate_mod_p(make::dihedral(3).magma(), 3, SearchSpec{});
  EXPECT_EQ(r3.idempotents, (std::vector<Element>{el({{0, 1}}, r3.spec.ring), el({{1, 1}}, r3.spec.ring),
                                                   el({{2, 1}}, r3.spec.ring)}));
  auto t2 = enumerate_mod_p(make::trivial(2).magma(), 2, SearchSpec{});
  EXPECT_EQ(t2.idempotents.size(), 2u);
  EXPECT_EQ(t2.nontrivial_count(), 0u);

  auto X = fixture("conn6");
  auto r = enumerate_mod_p(X.magma(), 5, SearchSpec{});
  EXPECT_TRUE(contains(r.idempotents, el({{0, 3}, {1, 3}}, CoeffRing::integers_mod(5))));
}

TEST(ModP, Errors) {
  EXPECT_EQ(code_of([] { enumerate_mod_p(make::dihedral(3).magma(), 4, SearchSpec{}); }), Errc::CompositeModulus);
  SearchSpec tight;
  tight.budget = 10;
  EXPECT_EQ(code_of([&] { enumerate_mod_p(make::dihedral(6).magma(), 5, tight); }), Errc::BudgetExceeded);
}

TEST(ModP, ForcedCompositeIsFlagged) {
  SearchSpec any;
  any.augmentation = AugmentationFilter{false, false, true};
  auto rep = enumerate_mod_p(make::trivial(2).magma(), 4, any, "T2", true);
  EXPECT_NE(std::find(rep.flags.begin(), rep.flags.end(), "non-domain coefficients"), rep.flags.end());
  EXPECT_TRUE(rep.exhaustive);
  // over Z/4 the naive oracle still applies
  EXPECT_EQ(as_dense(rep.idempotents, 2), naive_idempotents(make::trivial(2).magma().table(), 4, 0));
  auto strata = enumerate_mod_p(make::trivial(2).magma(), 4, SearchSpec{}, "T2", true);
  EXPECT_FALSE(strata.exhaustive);
}

TEST(BoxedZ, MatchesNaiveOracle) {
  for (const auto& X : {make::dihedral(3), make::dihedral(4), make::trivial(3), fixture("conn6"),
                        make::twisted_union(make::trivial(2), make::trivial(3), {1, 0}, {1, 2, 0})}) {
    const long B = X.order() <= 4 ? 3 : 2;
    auto rep = enumerate_boxed_Z(X.magma(), box(B));
    EXPECT_EQ(as_dense(rep.idempotents, X.order()), naive_idempotents(X.magma().table(), 0, B)) << X.order();
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_NE(std::find(rep.flags.begin(), rep.flags.end(),
                        "scope: coefficients in [-" + std::to_string(B) + ", " + std::to_string(B) +
                            "]; nothing is claimed outside this box"),
              rep.flags.end());
    for (const auto& u : rep.idempotents) {
      const auto e = augmentation(u);
      EXPECT_TRUE(e == 0 || e == 1);
    }
  }
}

TEST(BoxedZ, Examples) {
  auto r3 = enumerate_boxed_Z(make::dihedral(3).magma(), box(3));
  EXPECT_EQ(r3.idempotents.size(), 3u);
  EXPECT_EQ(r3.nontrivial_count(), 0u);
  auto r5 = enumerate_boxed_Z(make::dihedral(5).magma(), box(2));
  EXPECT_EQ(r5.idempotents.size(), 5u);
  EXPECT_EQ(r5.nontrivial_count(), 0u);

  auto X = fixture("conn6");
  auto r = enumerate_boxed_Z(X.magma(), box(2, 2));
  for (std::size_t a : {0u, 2u, 4u})
    for (long alpha = -1; alpha <= 2; ++alpha)
      EXPECT_TRUE(contains(r.idempotents, el({{a, alpha}, {a + 1, 1 - alpha}})));
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "scope: support size <= 2"), r.flags.end());
}

TEST(BoxedZ, RejectsBadBox) {
  EXPECT_EQ(code_of([] { enumerate_boxed_Z(make::dihedral(3).magma(), box(0)); }), Errc::InvalidParams);
}

TEST(Search, CanonicalOrderAndDeterminismAcrossJobs) {
  auto X = make::dihedral(6);
  auto one = enumerate_boxed_Z(X.magma(), box(2, std::nullopt, 1));
  auto many = enumerate_boxed_Z(X.magma(), box(2, std::nullopt, 8));
  EXPECT_EQ(one.idempotents, many.idempotents);
  EXPECT_EQ(one.candidates_tested, many.candidates_tested);
  EXPECT_EQ(io::dump(io::to_json(one)), io::dump(io::to_json(many)));
  EXPECT_TRUE(std::is_sorted(one.idempotents.begin(), one.idempotents.end(), canonical_less<std::size_t>));
  EXPECT_EQ(one.idempotents.size(), 60u);
  EXPECT_EQ(one.candidates_tested, 7812u);
}

TEST(Search, AugmentationStrata) {
  auto X = fixture("conn6");
  SearchSpec zero = box(2);
  zero.augmentation = AugmentationFilter{true, false, false};
  EXPECT_TRUE(enumerate_boxed_Z(X.magma(), zero).idempotents.empty());
  EXPECT_FALSE(enumerate_boxed_Z(X.magma(), zero).exhaustive);
  // the 8-element quasigroup has augmentation-zero idempotents
  auto M = io::magma_from_json(io::read_json_file(std::string(QRING_FIXTURES) + "/quasigroup8.json"));
  auto rep = enumerate_boxed_Z(M, [] {
    auto s = box(1, 4);
    s.augmentation = AugmentationFilter{true, false, false};
    return s;
  }());
  EXPECT_TRUE(contains(rep.idempotents, el({{1, 1}, {2, -1}, {5, -1}, {6, 1}})));
}

TEST(Scan, Examples) {
  auto entry = [](const std::string& name) {
    auto m = io::magma_from_json(io::read_json_file(std::string(QRING_FIXTURES) + "/" + name + ".json"));
    return CatalogEntry{name, m.table(), m.labels()};
  };
  ScanSpec spec;
  spec.box_bound = 2;
  spec.primes = {2};
  auto rep = conjecture_scan({entry("r3"), entry("r5"), entry("quasigroup8"), entry("t3")}, spec);
  ASSERT_EQ(rep.items.size(), 4u);
  EXPECT_FALSE(rep.counterexample_found);
  EXPECT_EQ(rep.items[0].status, "scanned");
  EXPECT_EQ(rep.items[1].status, "scanned");
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(rep.items[i].latin);
    EXPECT_EQ(rep.items[i].runs.front().status, "no counterexample within box");
  }
  EXPECT_EQ(rep.items[2].status, "rejected");
  EXPECT_EQ(rep.items[3].status, "skipped");
  const std::string text = io::dump(io::to_json(rep));
  EXPECT_EQ(text.find("proved"), std::string::npos);
}

TEST(Scan, BudgetSkipsItemAndContinues) {
  ScanSpec spec;
  spec.box_bound = 2;
  spec.budget = 1000;
  auto r3 = make::dihedral(3).magma();
  auto rep = conjecture_scan({{"r3", r3.table(), {}}, {"big", make::dihedral(7).magma().table(), {}}}, spec);
  ASSERT_EQ(rep.items.size(), 2u);
  EXPECT_EQ(rep.items[0].runs.front().status, "no counterexample within box");
  EXPECT_EQ(rep.items[1].runs.front().status, "skipped: budget exceeded");
}
