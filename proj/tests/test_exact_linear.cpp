#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "bisets/field.hpp"
#include "bisets/intertwiner.hpp"
#include "bisets/matrix.hpp"
#include "bisets/quotient.hpp"
#include "bisets/rational.hpp"
#include "bisets/sparse.hpp"

using namespace bisets;

namespace {

// Determinant by cofactor expansion over mpq, independent of elimination.
mpq_class cofactor_det(const std::vector<std::vector<mpq_class>>& a) {
  const auto n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * a[0][j] * cofactor_det(minor);
  }
  return d;
}

std::vector<std::vector<long>> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<std::vector<long>> rows(r, std::vector<long>(c));
  for (auto& row : rows)
    for (auto& v : row) v = d(rng);
  return rows;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ((Rational(2) / Rational(4)).str(), "1/2");
  EXPECT_EQ((Rational(-3) / Rational(-6)).str(), "1/2");
  EXPECT_EQ((Rational(3) / Rational(-6)).str(), "-1/2");
  EXPECT_EQ((Rational(1) / Rational(3) + Rational(2) / Rational(3)).str(), "1");
  EXPECT_TRUE((Rational(5) - Rational(5)).sign() == 0);
}

TEST(Rational, PromotesOnOverflowAndDemotesBack) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const auto sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
  const auto back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  const auto sum = big + big;
  EXPECT_FALSE(sum.is_small());
  EXPECT_EQ((sum - big), big);
  const Rational least(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-least).to_mpq(), -mpq_class(mpz_class("-9223372036854775808")));
}

TEST(Rational, AgreesWithMpqOnRandomExpressions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-(1ll << 40), 1ll << 40);
  for (int it = 0; it < 2000; ++it) {
    Rational a(d(rng)), b(d(rng) | 1), c(d(rng)), e(d(rng) | 1);
    mpq_class qa = a.to_mpq(), qb = b.to_mpq(), qc = c.to_mpq(), qe = e.to_mpq();
    const auto r = (a / b) * (c / e) - a / e + c;
    const mpq_class q = (qa / qb) * (qc / qe) - qa / qe + qc;
    ASSERT_EQ(r.to_mpq(), q);
    ASSERT_EQ(r, Rational(q));
  }
}

TEST(Rational, ModularResidue) {
  const auto half = Rational(1) / Rational(2);
  EXPECT_EQ(half.mod(3), std::optional<std::uint64_t>(2));
  EXPECT_EQ(half.mod(2), std::nullopt);
  EXPECT_EQ(Rational(-1).mod(5), std::optional<std::uint64_t>(4));
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW((void)f.inv(0), AssertionFailure);
  EXPECT_THROW(PrimeField(4), SpecError);
  EXPECT_THROW(PrimeField(65537), SpecError);
  EXPECT_EQ(PrimeField().modulus(), 2u);
  std::uint32_t y = 3;
  PrimeField big(65521);
  big.axpy_in(y, 65520, 65520);
  EXPECT_EQ(y, 4u);
}

TEST(FieldTag, Parsing) {
  EXPECT_EQ(parse_field("Q").kind, FieldKind::rational);
  EXPECT_EQ(parse_field("F3").p, 3u);
  EXPECT_EQ(parse_field("GF5").p, 5u);
  EXPECT_THROW(parse_field("F4"), SpecError);
  EXPECT_THROW(parse_field("R"), SpecError);
}

TEST(Matrix, RrefExample) {
  const Rationals q;
  auto m = Matrix<Rationals>::from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  auto r = rref(m);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.reduced, Matrix<Rationals>::from_rows(q, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  auto ns = null_space(m);
  ASSERT_EQ(ns.cols(), 1u);
  EXPECT_EQ(ns, Matrix<Rationals>::from_rows(q, {{-1}, {-1}, {1}}));
}

TEST(Matrix, RankMatchesCofactorDeterminant) {
  std::mt19937_64 rng(11);
  const Rationals q;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + it % 5;
    auto rows = random_rows(rng, n, n, -2, 2);
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    const bool nonsingular = cofactor_det(a) != 0;
    auto m = Matrix<Rationals>::from_rows(q, rows);
    ASSERT_EQ(is_invertible(m), nonsingular);
    ASSERT_EQ(certify_invertible(m), nonsingular);
    auto inv = inverse(m);
    ASSERT_EQ(inv.has_value(), nonsingular);
    if (inv) {
      ASSERT_EQ(m * *inv, (Matrix<Rationals>::identity(q, n)));
      ASSERT_EQ(*inv * m, (Matrix<Rationals>::identity(q, n)));
    }
  }
}

TEST(Matrix, ImageAndKernelOverFp) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 65521u}) {
    const PrimeField f(p);
    for (int it = 0; it < 100; ++it) {
      const std::size_t r = 1 + it % 6, c = 1 + (it / 6) % 6;
      auto m = Matrix<PrimeField>::from_rows(f, random_rows(rng, r, c, 0, p == 2 ? 1 : 2));
      auto [img, ker] = image_and_kernel(m);
      ASSERT_EQ(img.cols() + ker.cols(), c);
      ASSERT_EQ(img.cols(), rank(m));
      ASSERT_EQ(rank(ker), ker.cols());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) ASSERT_EQ((m * ker)(i, j), 0u);
      ASSERT_EQ(rank(hconcat(m, img)), rank(m));
      ASSERT_EQ(null_space(m), ker);
      ASSERT_EQ(column_space(m), img);
    }
  }
}

TEST(Matrix, SolveRight) {
  const Rationals q;
  auto a = Matrix<Rationals>::from_rows(q, {{1, 1}, {1, -1}});
  auto b = Matrix<Rationals>::from_rows(q, {{3}, {1}});
  auto x = solve_right(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, b);
  auto singular = Matrix<Rationals>::from_rows(q, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve_right(singular, b));
}

TEST(Matrix, PrimeProductMatchesSchoolbook) {
  std::mt19937_64 rng(3);
  const PrimeField f(65521);
  auto a = Matrix<PrimeField>::from_rows(f, random_rows(rng, 7, 9, 0, 65520));
  auto b = Matrix<PrimeField>::from_rows(f, random_rows(rng, 9, 5, 0, 65520));
  auto c = a * b;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < 9; ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      ASSERT_EQ(c(i, j), s);
    }
  EXPECT_EQ(Matrix<PrimeField>::from_sparse(a.to_sparse()), a);
  EXPECT_EQ(Matrix<PrimeField>::from_sparse(a.to_sparse() * b.to_sparse()), c);
}

TEST(Matrix, CertifyInvertibleOverF2) {
  const PrimeField f2;
  EXPECT_TRUE(certify_invertible(Matrix<PrimeField>::from_rows(f2, {{1, 1}, {0, 1}})));
  EXPECT_FALSE(certify_invertible(Matrix<PrimeField>::from_rows(f2, {{1, 1}, {1, 1}})));
  EXPECT_FALSE(certify_invertible(Matrix<PrimeField>::from_rows(f2, {{1, 1, 0}, {0, 1, 1}})));
  const Rationals q;
  // det = 2^31 - 1, singular modulo the certificate prime but not over Q
  auto m = Matrix<Rationals>::from_rows(q, {{2147483647, 0}, {0, 1}});
  EXPECT_TRUE(certify_invertible(m));
}

TEST(SparseEchelon, ReduceAndKernel) {
  const Rationals q;
  SparseEchelon<Rationals> e(q, 4);
  EXPECT_TRUE(e.add({{0, Rational(1)}, {1, Rational(-1)}}));
  EXPECT_TRUE(e.add({{1, Rational(1)}, {2, Rational(-1)}}));
  EXPECT_FALSE(e.add({{0, Rational(2)}, {2, Rational(-2)}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.reduce({{0, Rational(1)}, {2, Rational(-1)}}).empty());
  auto k = e.kernel_basis();
  ASSERT_EQ(k.size(), 2u);
  // x0 = x1 = x2 and x3 free
  EXPECT_TRUE(sparse_equal(q, k[0], SparseVec<Rationals>{{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}}));
  EXPECT_TRUE(sparse_equal(q, k[1], SparseVec<Rationals>{{3, Rational(1)}}));
}

TEST(SparseEchelon, KernelMatchesDenseNullSpace) {
  std::mt19937_64 rng(19);
  const PrimeField f(3);
  for (int it = 0; it < 100; ++it) {
    const std::size_t r = 1 + it % 7, c = 2 + it % 5;
    auto rows = random_rows(rng, r, c, 0, 2);
    auto dense = Matrix<PrimeField>::from_rows(f, rows);
    SparseEchelon<PrimeField> e(f, c);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Entry<PrimeField>> raw;
      for (std::size_t j = 0; j < c; ++j) raw.emplace_back(static_cast<std::uint32_t>(j), dense(i, j));
      e.add(canonicalize(f, std::move(raw)));
    }
    ASSERT_EQ(e.rank(), rank(dense));
    auto k = e.kernel_basis();
    ASSERT_EQ(k.size(), c - rank(dense));
    for (const auto& v : k) {
      SparseMatrix<PrimeField> col(f, c, 1);
      col.set_column(0, v);
      auto img = dense * Matrix<PrimeField>::from_sparse(col);
      for (std::size_t i = 0; i < r; ++i) ASSERT_EQ(img(i, 0), 0u);
    }
  }
}

TEST(QuotientSpace, ProjectSectionAndDescend) {
  // F^3 / <e0 - e1>: coordinates e1, e2
  const Rationals q;
  QuotientSpace<Rationals> qs(q, 3, {{{0, Rational(1)}, {1, Rational(-1)}}});
  EXPECT_EQ(qs.dim(), 2u);
  EXPECT_EQ(qs.relation_rank(), 1u);
  EXPECT_EQ(qs.free_columns(), (std::vector<std::uint32_t>{1, 2}));
  EXPECT_TRUE(sparse_equal(q, qs.project({{0, Rational(1)}}), SparseVec<Rationals>{{0, Rational(1)}}));
  EXPECT_TRUE(qs.project({{0, Rational(1)}, {1, Rational(-1)}}).empty());
  auto pi = qs.projection_matrix(), s = qs.section_matrix();
  EXPECT_TRUE((pi * s).is_identity());
  // the swap e0 <-> e1 preserves the relation span and descends to the identity
  auto swap = qs.descend([](std::uint32_t i) -> SparseVec<Rationals> {
    return {{i == 2 ? 2u : 1u - i, Rational(1)}};
  });
  EXPECT_TRUE(swap.is_identity());
}
