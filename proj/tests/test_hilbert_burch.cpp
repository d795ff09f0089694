#include <gtest/gtest.h>

#include "common.hpp"
#include "nonic/io.hpp"

using namespace nonic;
using namespace nonic::testing;

namespace {

void expect_vanishes_on(const PrimeField& F, const HomForm& f, const PointSet& A) {
  for (const auto& P : A) EXPECT_TRUE(evaluate(F, f, P).is_zero());
}

// Rank of a list of equal-degree forms.
std::size_t form_rank(const PrimeField& F, int d, const std::vector<HomForm>& fs) {
  return rank(F, forms_matrix(d, fs));
}

void check_hb_invariants(const PrimeField& F, const PointSet& A) {
  const HBMatrix hb = assemble_hb(F, A);
  for (const auto& q : hb.Q) {
    EXPECT_EQ(q.degree(), 5);
    expect_vanishes_on(F, q, A);
  }
  EXPECT_EQ(hb.S.degree(), 6);
  expect_vanishes_on(F, hb.S, A);
  // signed minors reproduce the generators exactly
  for (int r = 0; r < 3; ++r) {
    const HomForm m = hb.minor(F, r);
    EXPECT_EQ(r % 2 == 0 ? scale(F, F.neg(Fp(1)), m) : m, hb.Q[r]);
  }
  EXPECT_EQ(hb.minor(F, 3), hb.S);
  // (Q1, Q2, Q3, S) M = 0
  for (int v = 0; v < 3; ++v) {
    HomForm acc(7);
    for (int i = 0; i < 3; ++i) acc = add(F, acc, multiply(F, hb.Q[i], hb.quadric[i][v]));
    acc = add(F, acc, multiply(F, hb.S, hb.linear[v]));
    EXPECT_TRUE(acc.is_zero());
  }
  // constant degree matrix: three quadric rows and a linear row
  for (int v = 0; v < 3; ++v) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(hb.quadric[i][v].degree(), 2);
    EXPECT_EQ(hb.linear[v].degree(), 1);
  }
  // ideal pieces agree with the generator spans
  std::vector<HomForm> q5(hb.Q.begin(), hb.Q.end());
  EXPECT_EQ(form_rank(F, 5, q5), 3u);
  EXPECT_EQ(ideal_piece(F, A, 5).dim(), 3u);
  auto l6 = lambda6_spanning_set(hb.Q);
  EXPECT_EQ(form_rank(F, 6, l6), 9u);
  l6.push_back(hb.S);
  EXPECT_EQ(form_rank(F, 6, l6), 10u);
  EXPECT_EQ(sum_dim(F, ideal_piece(F, A, 6), span_piece(F, 6, l6)), 10u);
}

}  // namespace

TEST(HilbertBurch, QuinticsOfReferenceSet) {
  PrimeField F;
  const PointSet A = reference_A(F);
  const auto Q = quintic_generators(F, A);
  // oracle: kernel of the degree-5 evaluation matrix
  DenseMatrix K = kernel_basis(F, evaluation_matrix(F, A, 5));
  ASSERT_EQ(K.rows(), 3u);
  std::vector<HomForm> both(Q.begin(), Q.end());
  for (std::size_t i = 0; i < K.rows(); ++i) both.emplace_back(5, K.row_vector(i));
  EXPECT_EQ(form_rank(F, 5, both), 3u);
  for (const auto& q : Q) expect_vanishes_on(F, q, A);
}

TEST(HilbertBurch, SexticComplement) {
  PrimeField F;
  const PointSet A = reference_A(F);
  const auto Q = quintic_generators(F, A);
  const HomForm S = sextic_complement(F, A, Q);
  expect_vanishes_on(F, S, A);
  auto l6 = lambda6_spanning_set(Q);
  EXPECT_EQ(form_rank(F, 6, l6), 9u);
  l6.push_back(S);
  EXPECT_EQ(form_rank(F, 6, l6), 10u);
}

TEST(HilbertBurch, DegreeSevenSyzygies) {
  PrimeField F;
  const PointSet A = reference_A(F);
  const auto Q = quintic_generators(F, A);
  const HomForm S = sextic_complement(F, A, Q);
  const auto syz = degree7_syzygies(F, Q, S);
  std::vector<HomForm> image;
  for (const auto& col : syz) {
    HomForm acc(7);
    for (int i = 0; i < 3; ++i) acc = add(F, acc, multiply(F, col.c[i], Q[i]));
    acc = add(F, acc, multiply(F, col.l, S));
    EXPECT_TRUE(acc.is_zero());
  }
  // image of (quadrics)^3 + (linear) has dimension 21 - 3 = 18 = dim (I_A)_7
  for (const auto& q : Q)
    for (const auto& e : monomials(2)) image.push_back(shift(q, e));
  for (const auto& e : monomials(1)) image.push_back(shift(S, e));
  EXPECT_EQ(form_rank(F, 7, image), 18u);
  EXPECT_EQ(ideal_piece(F, A, 7).dim(), 18u);
}

TEST(HilbertBurch, ReferenceSetInvariants) {
  PrimeField F;
  check_hb_invariants(F, reference_A(F));
}

TEST(HilbertBurch, RandomGeneralSets) {
  PrimeField F;
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto A = random_general(F, seed);
    ASSERT_TRUE(A);
    check_hb_invariants(F, *A);
  }
}

TEST(HilbertBurch, PointsOnAQuarticAreRejected) {
  PrimeField F;
  // x0^4 - x1^3 x2 = 0 through (u, 1, u^4)
  std::vector<ProjPoint> pts;
  for (int u = 1; u <= 18; ++u) {
    Fp x(static_cast<std::uint32_t>(u));
    pts.emplace_back(x, Fp(1), F.pow(x, 4));
  }
  PointSet A(F, pts);
  EXPECT_GT(ideal_piece(F, A, 4).dim(), 0u);
  EXPECT_FALSE(test_genericity(F, Decomposition{A, std::nullopt}).test2);
  EXPECT_THROW(assemble_hb(F, A), GenericityError);
}

TEST(HilbertBurch, ConicSetIsRejected) {
  PrimeField F;
  std::vector<ProjPoint> pts;
  for (int u = 1; u <= 18; ++u) {
    Fp x(static_cast<std::uint32_t>(u));
    pts.emplace_back(F.mul(x, x), x, Fp(1));
  }
  PointSet A(F, pts);
  const GenericityResult g = test_genericity(F, Decomposition{A, std::nullopt});
  EXPECT_FALSE(g.test2);
  EXPECT_LT(g.k4, 15u);
  EXPECT_FALSE(g.test3);
  EXPECT_THROW(assemble_hb(F, A), GenericityError);
}
