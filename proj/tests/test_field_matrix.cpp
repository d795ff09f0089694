#include <gtest/gtest.h>

#include "common.hpp"

using namespace nonic;
using namespace nonic::testing;

namespace {

// Independent rank oracle: plain elimination on int64 residues with Fermat inverses.
std::size_t oracle_rank(std::uint32_t p, std::vector<std::vector<std::int64_t>> m) {
  auto powm = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = powm(m[r][c], p - 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = m[i][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<std::int64_t>> as_ints(const DenseMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).v;
  return out;
}

// Random matrix of prescribed rank: product of r x k and k x c factors.
DenseMatrix low_rank(const PrimeField& F, std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  DenseMatrix a = random_matrix(F, rng, r, k), b = random_matrix(F, rng, k, c), m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Fp s(0);
      for (std::size_t t = 0; t < k; ++t) s = F.add(s, F.mul(a.at(i, t), b.at(t, j)));
      m.at(i, j) = s;
    }
  return m;
}

}  // namespace

TEST(Field, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(2), FieldError);
  EXPECT_THROW(PrimeField(32000), FieldError);
  EXPECT_THROW(PrimeField(1), FieldError);
  EXPECT_NO_THROW(PrimeField(5));
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(Field, BalancedRepresentatives) {
  PrimeField F;
  EXPECT_EQ(F.balanced(F.from_int(-663)), -663);
  EXPECT_EQ(F.balanced(F.from_int(4283)), 4283);
  EXPECT_EQ(F.balanced(F.from_int(15995)), 15995);
  EXPECT_EQ(F.balanced(F.from_int(15996)), -15995);
  EXPECT_EQ(F.from_int(-31991).v, 0u);
}

TEST(Field, InverseAndPow) {
  for (std::uint32_t p : {5u, 31991u, 2147483647u}) {
    PrimeField F(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 200; ++i) {
      Fp a(static_cast<std::uint32_t>(rng() % (p - 1) + 1));
      EXPECT_EQ(F.mul(a, F.inv(a)).v, 1u);
      EXPECT_EQ(F.pow(a, p - 1).v, 1u);  // Fermat
    }
    EXPECT_THROW(F.inv(Fp(0)), std::domain_error);
  }
}

TEST(Matrix, RankExamples) {
  PrimeField F;
  EXPECT_EQ(rank(F, DenseMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(F, DenseMatrix(4, 6)), 0u);
  EXPECT_EQ(rank(F, evaluation_matrix(F, reference_A(F), 5)), 18u);
}

TEST(Matrix, KernelExamples) {
  PrimeField F;
  EXPECT_EQ(kernel_basis(F, DenseMatrix::identity(3)).rows(), 0u);
  DenseMatrix ones = DenseMatrix::from_rows(3, {{Fp(1), Fp(1), Fp(1)}});
  DenseMatrix k = kernel_basis(F, ones);
  ASSERT_EQ(k.rows(), 2u);
  for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(dot(F, ones.row(0), k.row(i)).is_zero());
  EXPECT_EQ(kernel_basis(F, evaluation_matrix(F, reference_A(F), 6)).rows(), 10u);
}

TEST(Matrix, SolveExamples) {
  PrimeField F;
  std::vector<Fp> b{Fp(3), Fp(5), Fp(7)};
  EXPECT_EQ(*solve(F, DenseMatrix::identity(3), b), b);
  DenseMatrix m = DenseMatrix::from_rows(2, {{Fp(1), Fp(1)}, {Fp(2), Fp(2)}});
  EXPECT_FALSE(solve(F, m, std::vector<Fp>{Fp(1), Fp(3)}));

  // lambda = 1 recovered from T2 against the nu_9 rows of A
  const PointSet A = reference_A(F);
  const auto t = contracted_from_waring(F, Decomposition{A, std::vector<Fp>(18, Fp(1))}, 9);
  const auto lam = solve(F, evaluation_matrix(F, A, 9).transpose(), t);
  ASSERT_TRUE(lam);
  EXPECT_EQ(*lam, std::vector<Fp>(18, Fp(1)));
}

TEST(MatrixProperty, RankMatchesOracleAndTranspose) {
  PrimeField F;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12, k = rng() % 8;
    DenseMatrix m = low_rank(F, rng, r, c, k);
    const std::size_t rk = rank(F, m);
    EXPECT_EQ(rk, oracle_rank(F.modulus(), as_ints(m)));
    EXPECT_EQ(rk, rank(F, m.transpose()));
    EXPECT_EQ(rk, std::min({r, c, k}));
  }
}

TEST(MatrixProperty, KernelRankNullity) {
  PrimeField F;
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 14, k = rng() % 9;
    DenseMatrix m = low_rank(F, rng, r, c, k);
    DenseMatrix ker = kernel_basis(F, m);
    EXPECT_EQ(rank(F, m) + ker.rows(), c);
    for (std::size_t i = 0; i < ker.rows(); ++i)
      for (Fp x : mat_vec(F, m, ker.row(i))) EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(rank(F, ker), ker.rows());
  }
}

TEST(MatrixProperty, SolveReproducesRightHandSide) {
  PrimeField F;
  std::mt19937_64 rng(13);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    DenseMatrix m = low_rank(F, rng, r, c, rng() % 6);
    std::vector<Fp> b = trial % 2 ? mat_vec(F, m, random_vector(F, rng, c)) : random_vector(F, rng, r);
    if (auto x = solve(F, m, b)) {
      EXPECT_EQ(mat_vec(F, m, *x), b);
      ++solved;
    } else {
      // inconsistent: appending b as a column raises the rank
      DenseMatrix aug(r, c + 1);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, c) = b[i];
      }
      EXPECT_EQ(rank(F, aug), rank(F, m) + 1);
    }
  }
  EXPECT_GE(solved, 30);
}

TEST(MatrixParallel, RrefMatchesSerial) {
  PrimeField F;
  std::mt19937_64 rng(14);
  for (auto [r, c, k] : std::vector<std::array<std::size_t, 3>>{{80, 90, 60}, {120, 70, 70}, {64, 200, 64}, {5, 5, 3}}) {
    DenseMatrix m = low_rank(F, rng, r, c, k);
    RowEchelon a = rref(F, m), b = rref_serial(F, m);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.rank(), std::min({r, c, k}));
  }
}
