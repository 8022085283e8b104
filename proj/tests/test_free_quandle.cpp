#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qring/qring.hpp"

using namespace qring;

namespace {

// F_2 embeds in SL(2, Z) via x0 -> [[1,2],[0,1]], x1 -> [[1,0],[2,1]].
using Mat = std::array<__int128, 4>;

Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat letter_mat(std::size_t g, int sign) {
  const __int128 t = 2 * sign;
  return g == 0 ? Mat{1, t, 0, 1} : Mat{1, 0, t, 1};
}

Mat word_mat(const FreeGroupWord& w) {
  Mat m{1, 0, 0, 1};
  for (const auto& l : w.letters()) m = mat_mul(m, letter_mat(l.gen, l.sign));
  return m;
}

Mat element_mat(const FreeQuandleElement& a) { return word_mat(a.full_word()); }

// u x_head u^-1 computed straight from the expression, u = tail read right to left
Mat expr_mat(const LeftAssocExpr& e) {
  Mat u{1, 0, 0, 1}, uinv{1, 0, 0, 1};
  for (auto it = e.tail.rbegin(); it != e.tail.rend(); ++it) {
    u = mat_mul(u, letter_mat(it->gen, it->sign));
    uinv = mat_mul(letter_mat(it->gen, -it->sign), uinv);
  }
  return mat_mul(mat_mul(u, letter_mat(e.head, 1)), uinv);
}

LeftAssocExpr random_expr(std::mt19937_64& rng, std::size_t rank, std::size_t max_tail) {
  LeftAssocExpr e{rng() % rank, {}};
  const std::size_t len = rng() % (max_tail + 1);
  for (std::size_t i = 0; i < len; ++i) e.tail.push_back({rng() % rank, (rng() % 2) ? 1 : -1});
  return e;
}

FreeQuandleElement g(std::size_t i) { return FreeQuandleElement::generator(i); }

}  // namespace

TEST(FreeGroup, WordOps) {
  auto x = FreeGroupWord::generator(0), y = FreeGroupWord::generator(1);
  EXPECT_EQ(word_mul(word_mul(x, y), word_inv(y)), x);
  EXPECT_EQ(word_inv(word_mul(x, word_pow(y, 2))), word_mul(word_pow(y, -2), word_inv(x)));
  EXPECT_TRUE(word_mul(x, word_inv(x)).is_identity());
  EXPECT_TRUE(FreeGroupWord::reduce({{0, 1}, {1, 2}, {1, -2}, {0, -1}}).is_identity());
  EXPECT_EQ(FreeGroupWord::reduce({{0, 1}, {0, 2}, {1, 0}}).syllables(), (std::vector<Syllable>{{0, 3}}));
}

TEST(FreeGroup, ReductionMatchesMatrixOracle) {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 2000; ++round) {
    std::vector<Letter> raw;
    const std::size_t len = rng() % 16;
    Mat m{1, 0, 0, 1};
    for (std::size_t i = 0; i < len; ++i) {
      Letter l{rng() % 2, (rng() % 2) ? 1 : -1};
      raw.push_back(l);
      m = mat_mul(m, letter_mat(l.gen, l.sign));
    }
    auto w = FreeGroupWord::from_letters(raw);
    EXPECT_EQ(word_mat(w), m);
    EXPECT_EQ(w.is_identity(), m == (Mat{1, 0, 0, 1}));
    auto l = w.letters();
    for (std::size_t i = 1; i < l.size(); ++i) EXPECT_FALSE(l[i].gen == l[i - 1].gen && l[i].sign != l[i - 1].sign);
  }
}

TEST(EvalExpr, Examples) {
  auto a = eval_expr({0, {{1, -1}}}, 2);
  EXPECT_EQ(a.base(), 0u);
  EXPECT_EQ(a.conjugator(), FreeGroupWord::generator(1, -1));
  auto b = eval_expr({0, {{1, 1}, {1, 1}}}, 2);
  EXPECT_EQ(b.conjugator(), FreeGroupWord::generator(1, 2));
  EXPECT_EQ(eval_expr({0, {{1, 1}, {1, -1}}}, 2), g(0));
  EXPECT_EQ(eval_expr({0, {{0, 1}, {0, -1}, {0, 1}}}, 2), g(0));
  EXPECT_THROW(eval_expr({2, {}}, 2), Error);
  EXPECT_THROW(eval_expr({0, {{5, 1}}}, 2), Error);
}

TEST(FqOp, Examples) {
  auto xy = fq_op(g(0), g(1)), yx = fq_op(g(1), g(0));
  EXPECT_EQ(xy.conjugator(), FreeGroupWord::generator(1));
  auto r = fq_op(xy, yx);
  // (x y x^-1)(y x y^-1)(x y^-1 x^-1)
  auto x = FreeGroupWord::generator(0), y = FreeGroupWord::generator(1);
  auto expect = word_mul(word_mul(word_mul(x, y), word_inv(x)), word_mul(word_mul(y, x), word_inv(y)));
  expect = word_mul(expect, word_mul(word_mul(x, word_inv(y)), word_inv(x)));
  EXPECT_EQ(r.full_word(), expect);
  for (const auto& a : enumerate_elements(2, 3)) {
    EXPECT_EQ(fq_op(a, a, 1), a);
    EXPECT_EQ(fq_op(a, a, -1), a);
  }
}

TEST(FqOp, AxiomsAndMatrixOracleOnRandomTriples) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 3000; ++round) {
    auto a = eval_expr(random_expr(rng, 2, 4), 2), b = eval_expr(random_expr(rng, 2, 4), 2),
         c = eval_expr(random_expr(rng, 2, 4), 2);
    EXPECT_EQ(fq_op(fq_op(a, b, 1), b, -1), a);
    EXPECT_EQ(fq_op(fq_op(a, b, -1), b, 1), a);
    EXPECT_EQ(fq_op(fq_op(a, b), c), fq_op(fq_op(a, c), fq_op(b, c)));
    // b a b^-1 in SL(2, Z)
    const Mat mb = word_mat(b.full_word());
    const Mat mbinv = word_mat(word_inv(b.full_word()));
    EXPECT_EQ(element_mat(fq_op(a, b)), mat_mul(mat_mul(mb, element_mat(a)), mbinv));
    // equality of normal forms agrees with equality of matrices
    EXPECT_EQ(a == b, element_mat(a) == element_mat(b));
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length(g(0)), 1u);
  EXPECT_EQ(length(fq_op(g(0), g(1))), 2u);
  EXPECT_EQ(length(fq_op(fq_op(g(0), g(1)), g(1))), 3u);
  EXPECT_EQ(length(fq_op(g(0), g(0))), 1u);
}

TEST(FreeProduct, Examples) {
  LeftAssocExpr A{0, {{1, 1}}}, B{1, {{0, 1}}};
  EXPECT_EQ(render(left_assoc_product_raw(A, B, 1)), "g0*g1*g0^-1*g1*g0");
  EXPECT_EQ(eval_expr(left_assoc_product(A, B, 1), 2), fq_op(eval_expr(A, 2), eval_expr(B, 2), 1));

  LeftAssocExpr C{0, {{1, 1}}}, z{2, {}};
  EXPECT_EQ(render(left_assoc_product_raw(C, z, 1)), "g0*g1*g2");

  LeftAssocExpr x{0, {}}, yz{1, {{2, -1}}};
  EXPECT_EQ(render(left_assoc_product_raw(x, yz, 1)), "g0*g2*g1*g2^-1");
  EXPECT_EQ(eval_expr(left_assoc_product(x, yz, 1), 3), fq_op(g(0), eval_expr(yz, 3), 1));
}

TEST(FreeProduct, RandomPairsAgreeWithFqOpAndLengthBound) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 10000; ++round) {
    const std::size_t rank = 2 + rng() % 2;
    auto A = canonicalize(random_expr(rng, rank, 4)), B = canonicalize(random_expr(rng, rank, 4));
    const int mu = (rng() % 2) ? 1 : -1;
    const auto expect = fq_op(eval_expr(A, rank), eval_expr(B, rank), mu);
    const auto P = left_assoc_product(A, B, mu);
    ASSERT_EQ(eval_expr(P, rank), expect);
    ASSERT_EQ(eval_expr(left_assoc_product_raw(A, B, mu), rank), expect);
    EXPECT_TRUE(is_canonical(P));
    EXPECT_LE(length(expect), length(eval_expr(A, rank)) + 2 * length(eval_expr(B, rank)) - 1);
    if (rank == 2) {
      EXPECT_EQ(expr_mat(P), element_mat(expect));
    }
  }
}

TEST(Rewrite, SelfDistributivityRewritesPreserveValue) {
  // x *^e (y *^m z) = ((x *^-m z) *^e y) *^m z, applied at random to random elements
  std::mt19937_64 rng(4);
  for (int round = 0; round < 3000; ++round) {
    auto x = eval_expr(random_expr(rng, 3, 3), 3), y = eval_expr(random_expr(rng, 3, 3), 3),
         z = eval_expr(random_expr(rng, 3, 3), 3);
    const int e = (rng() % 2) ? 1 : -1, m = (rng() % 2) ? 1 : -1;
    EXPECT_EQ(fq_op(x, fq_op(y, z, m), e), fq_op(fq_op(fq_op(x, z, -m), y, e), z, m));
  }
  // a random bracketing flattens, via repeated left-associated products, to the same element
  for (int round = 0; round < 2000; ++round) {
    struct Node {
      LeftAssocExpr expr;
      FreeQuandleElement value;
    };
    std::vector<Node> pool;
    for (int i = 0; i < 4; ++i) {
      auto e = canonicalize(random_expr(rng, 2, 2));
      pool.push_back({e, eval_expr(e, 2)});
    }
    while (pool.size() > 1) {
      const std::size_t i = rng() % pool.size();
      Node a = pool[i];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t j = rng() % pool.size();
      Node b = pool[j];
      const int s = (rng() % 2) ? 1 : -1;
      pool[j] = {left_assoc_product(a.expr, b.expr, s), fq_op(a.value, b.value, s)};
    }
    EXPECT_EQ(eval_expr(pool[0].expr, 2), pool[0].value);
    EXPECT_EQ(expr_mat(pool[0].expr), element_mat(pool[0].value));
  }
}

TEST(Canonical, ExpressionsBijectWithNormalForms) {
  for (std::size_t rank : {1u, 2u, 3u})
    for (std::size_t max_len = 1; max_len <= 4; ++max_len) {
      // every canonical expression with at most max_len - 1 tail letters
      std::vector<LeftAssocExpr> exprs;
      for (std::size_t h = 0; h < rank; ++h) {
        std::vector<LeftAssocExpr> frontier{{h, {}}};
        for (std::size_t len = 0; len < max_len; ++len) {
          std::vector<LeftAssocExpr> next;
          for (const auto& e : frontier) {
            if (is_canonical(e)) exprs.push_back(e);
            if (len + 1 == max_len) continue;
            for (std::size_t gg = 0; gg < rank; ++gg)
              for (int s : {1, -1}) {
                auto f = e;
                f.tail.push_back({gg, s});
                next.push_back(f);
              }
          }
          frontier = std::move(next);
        }
      }
      std::set<FreeQuandleElement> values;
      for (const auto& e : exprs) {
        auto v = eval_expr(e, rank);
        EXPECT_EQ(length(v), e.tail.size() + 1);
        EXPECT_EQ(canonical_expr(v), e);
        values.insert(v);
      }
      EXPECT_EQ(values.size(), exprs.size());
      auto listed = enumerate_elements(rank, max_len);
      EXPECT_EQ(std::set<FreeQuandleElement>(listed.begin(), listed.end()), values);
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_elements(2, 1).size(), 2u);
  EXPECT_EQ(enumerate_elements(2, 2).size(), 6u);
  EXPECT_EQ(enumerate_elements(2, 3).size(), 18u);
  EXPECT_EQ(enumerate_elements(1, 5).size(), 1u);
  EXPECT_THROW(enumerate_elements(0, 2), Error);
}

TEST(Injectivity, LeftAndRightTranslationsOnRankTwo) {
  for (std::size_t max_len = 1; max_len <= 3; ++max_len) {
    const auto U = enumerate_elements(2, max_len);
    for (const auto& b : U) {
      std::set<FreeQuandleElement> left, right;
      for (const auto& a : U) {
        left.insert(fq_op(b, a, 1));
        right.insert(fq_op(a, b, 1));
      }
      EXPECT_EQ(left.size(), U.size());
      EXPECT_EQ(right.size(), U.size());
    }
  }
}

TEST(Render, RoundTrip) {
  EXPECT_EQ(to_string(fq_op(g(0), g(1), -1)), "g0*g1^-1");
  EXPECT_EQ(parse_element("g0*g1*g1^-1", 2), g(0));
  for (const auto& a : enumerate_elements(3, 3)) EXPECT_EQ(parse_element(to_string(a), 3), a);
  EXPECT_THROW(parse_expr("g0^-1"), Error);
  EXPECT_THROW(parse_expr("x0*g1"), Error);
  EXPECT_THROW(parse_expr("g0**g1"), Error);
}

TEST(FreeProductHypotheses, Predicate) {
  std::vector<FreeQuandleElement> ok{fq_op(g(0), g(1)), fq_op(g(1), g(0))};
  EXPECT_TRUE(free_product_hypotheses(ok, 2));
  std::vector<FreeQuandleElement> short_word{g(0)};
  EXPECT_FALSE(free_product_hypotheses(short_word, 2));
}

TEST(FqSearch, OnlyTrivialIdempotents) {
  auto rep = fq_idempotent_search(2, 3, 3, 2, 4);
  EXPECT_EQ(rep.idempotents.size(), 18u);
  EXPECT_EQ(rep.nontrivial_count(), 0u);
  EXPECT_EQ(rep.candidates_tested, 27372u);
  for (const auto& u : rep.idempotents) EXPECT_TRUE(is_trivial_idempotent(u));

  auto r1 = fq_idempotent_search(1, 4, 1, 2);
  ASSERT_EQ(r1.idempotents.size(), 1u);
  EXPECT_EQ(r1.idempotents[0].terms()[0].first, g(0));

  auto s1 = fq_idempotent_search(2, 3, 1, 3);
  EXPECT_EQ(s1.idempotents.size(), 18u);
  EXPECT_EQ(s1.nontrivial_count(), 0u);

  // determinism across job counts
  EXPECT_EQ(fq_idempotent_search(2, 3, 2, 2, 1).idempotents, fq_idempotent_search(2, 3, 2, 2, 6).idempotents);
}
