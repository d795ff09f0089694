#include <gtest/gtest.h>

#include <algorithm>

#include "macaulay.hpp"

using namespace nonic;
using namespace nonic::testing;

namespace {

SparsePoly P(int n, std::vector<std::pair<std::vector<int>, std::int64_t>> terms) {
  static const PrimeField F;
  std::vector<Term> ts;
  for (auto& [e, c] : terms) ts.push_back({Monomial::from_exponents(e), F.from_int(c)});
  return SparsePoly(n, std::move(ts));
}

void expect_s_pairs_reduce(const PrimeField& F, const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
      EXPECT_TRUE(normal_form(F, s_polynomial(F, gb.generators[i], gb.generators[j]), gb.generators).is_zero());
}

}  // namespace

TEST(Monomial, GrevlexWithX0Smallest) {
  const Monomial x0 = Monomial::variable(0), x1 = Monomial::variable(1), x2 = Monomial::variable(2);
  EXPECT_LT(x0, x1);
  EXPECT_LT(x1, x2);
  EXPECT_GT(Monomial::from_exponents({0, 2, 0}), Monomial::from_exponents({1, 0, 1}));
  EXPECT_GT(Monomial::from_exponents({0, 1, 1}), Monomial::from_exponents({0, 2, 0}));
  EXPECT_GT(Monomial::from_exponents({3, 0, 0}), Monomial::from_exponents({0, 0, 2}));  // degree first
  EXPECT_TRUE(Monomial().is_one());
  const Monomial a = Monomial::from_exponents({2, 1, 0}), b = Monomial::from_exponents({1, 3, 1});
  EXPECT_EQ(mono_lcm(a, b), Monomial::from_exponents({2, 3, 1}));
  EXPECT_EQ(mono_div(mono_mul(a, b), b), a);
  EXPECT_TRUE(Monomial::from_exponents({1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE(mono_coprime(x0, x1));
  EXPECT_EQ(b.support(), 0b111u);
}

TEST(SparsePolyTest, SortedAndRejectsDuplicates) {
  SparsePoly f = P(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{2, 0}, 3}});
  EXPECT_EQ(f.lm(), Monomial::from_exponents({2, 0}));
  EXPECT_EQ(f.terms().size(), 3u);
  EXPECT_THROW(P(2, {{{1, 0}, 1}, {{1, 0}, 2}}), std::invalid_argument);
  EXPECT_TRUE(P(2, {{{1, 0}, 0}}).is_zero());
}

TEST(SparsePolyProperty, RingLaws) {
  PrimeField F;
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + rng() % 4;
    SparsePoly a = random_poly(F, rng, n, 3, 4), b = random_poly(F, rng, n, 3, 4), c = random_poly(F, rng, n, 2, 3);
    EXPECT_EQ(poly_mul(F, a, b), poly_mul(F, b, a));
    EXPECT_EQ(poly_mul(F, poly_mul(F, a, b), c), poly_mul(F, a, poly_mul(F, b, c)));
    EXPECT_EQ(poly_mul(F, a, poly_add(F, b, c)), poly_add(F, poly_mul(F, a, b), poly_mul(F, a, c)));
    EXPECT_TRUE(poly_sub(F, a, a).is_zero());
    auto x = random_vector(F, rng, n);
    EXPECT_EQ(poly_mul(F, a, b).evaluate(F, x), F.mul(a.evaluate(F, x), b.evaluate(F, x)));
    if (!b.is_zero()) {
      const Monomial m = Monomial::from_exponents(std::vector<int>(n, 1));
      EXPECT_EQ(poly_sub_mul(F, a, Fp(5), m, b), poly_sub(F, a, poly_mul(F, P(n, {{std::vector<int>(n, 1), 5}}), b)));
    }
  }
}

TEST(NormalForm, Examples) {
  PrimeField F;
  // x = var 0, y = var 1
  const SparsePoly g = P(2, {{{2, 0}, 1}, {{0, 1}, -1}});
  EXPECT_EQ(normal_form(F, P(2, {{{2, 1}, 1}}), {g}), P(2, {{{0, 2}, 1}}));
  EXPECT_TRUE(normal_form(F, g, {g}).is_zero());
  const SparsePoly one = SparsePoly::constant(2, Fp(1));
  EXPECT_EQ(normal_form(F, one, {g, P(2, {{{1, 1}, 1}})}), one);
}

TEST(Buchberger, Examples) {
  PrimeField F;
  const SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  GroebnerBasis gb = buchberger(F, 2, {x, y});
  ASSERT_EQ(gb.generators.size(), 2u);
  EXPECT_EQ(gb.generators[0], x);
  EXPECT_EQ(gb.generators[1], y);

  EXPECT_TRUE(buchberger(F, 1, {P(1, {{{1}, 1}, {{0}, -1}}), P(1, {{{1}, 1}})}).is_trivial());

  // x^2 + y^2 - 1, x - y: two points
  GroebnerBasis c = buchberger(F, 2, {P(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}), P(2, {{{1, 0}, 1}, {{0, 1}, -1}})});
  EXPECT_EQ(ideal_dimension(c), 0);
  EXPECT_EQ(zero_dim_degree(c), 2u);
  expect_s_pairs_reduce(F, c);
}

TEST(Buchberger, TrivialityAndDimension) {
  PrimeField F;
  EXPECT_TRUE(ideal_is_trivial(F, 1, {P(1, {{{1}, 1}}), P(1, {{{1}, 1}, {{0}, -1}})}));
  EXPECT_FALSE(ideal_is_trivial(F, 3, {}));
  EXPECT_EQ(ideal_dimension(buchberger(F, 1, {SparsePoly::constant(1, Fp(1))})), -1);
  EXPECT_EQ(ideal_dimension(buchberger(F, 14, {})), 14);
  EXPECT_EQ(ideal_dimension(buchberger(F, 2, {P(2, {{{1, 1}, 1}})})), 1);
  EXPECT_EQ(ideal_dimension(buchberger(F, 3, {SparsePoly::variable(3, 0), SparsePoly::variable(3, 1)})), 1);
  EXPECT_EQ(ideal_dimension(buchberger(F, 4, {P(4, {{{1, 1, 0, 0}, 1}}), P(4, {{{0, 0, 1, 1}, 1}})})), 2);
}

TEST(Buchberger, DegreeAndUniqueSolution) {
  PrimeField F;
  GroebnerBasis a = buchberger(F, 2, {P(2, {{{1, 0}, 1}, {{0, 0}, -3}}), P(2, {{{0, 1}, 1}, {{0, 0}, -5}})});
  EXPECT_EQ(zero_dim_degree(a), 1u);
  auto s = unique_solution(F, a);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (std::vector<Fp>{Fp(3), Fp(5)}));
  GroebnerBasis b = buchberger(F, 2, {P(2, {{{2, 0}, 1}, {{0, 0}, -1}}), SparsePoly::variable(2, 1)});
  EXPECT_EQ(zero_dim_degree(b), 2u);
  EXPECT_FALSE(unique_solution(F, b));
  EXPECT_THROW(zero_dim_degree(buchberger(F, 2, {SparsePoly::variable(2, 0)})), std::domain_error);
}

TEST(Buchberger, LinearSystemMatchesSolve) {
  PrimeField F;
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + rng() % 5;
    DenseMatrix m = random_matrix(F, rng, n, n);
    auto b = random_vector(F, rng, n);
    std::vector<SparsePoly> eqs;
    for (int i = 0; i < n; ++i) {
      std::vector<Term> ts;
      for (int j = 0; j < n; ++j) ts.push_back({Monomial::variable(j), m.at(i, j)});
      ts.push_back({Monomial(), F.neg(b[i])});
      eqs.emplace_back(n, std::move(ts));
    }
    auto x = solve(F, m, b);
    auto y = unique_solution(F, buchberger(F, n, eqs));
    ASSERT_TRUE(x && y);
    EXPECT_EQ(*x, *y);
  }
}

TEST(GroebnerProperty, MembershipMatchesMacaulayOracle) {
  PrimeField F;
  std::mt19937_64 rng(43);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + rng() % 3;
    std::vector<SparsePoly> gens;
    const int k = 1 + rng() % 3;
    const auto zero = random_vector(F, rng, n);
    for (int i = 0; i < k; ++i) {
      SparsePoly g = random_poly(F, rng, n, 1 + rng() % 2, 1 + rng() % 3);
      if (trial % 2) g = poly_sub(F, g, SparsePoly::constant(n, g.evaluate(F, zero)));
      gens.push_back(g);
    }
    GroebnerBasis gb = buchberger(F, n, gens, {.stop_on_constant = false});
    expect_s_pairs_reduce(F, gb);
    for (int q = 0; q < 6; ++q) {
      SparsePoly f = random_poly(F, rng, n, 2, 3);
      if (q % 2 == 0) {  // a certain member of degree <= 4
        f = SparsePoly(n);
        for (const auto& g : gens) f = poly_add(F, f, poly_mul(F, random_poly(F, rng, n, 2, 2), g));
      }
      const bool gb_says = normal_form(F, f, gb.generators).is_zero();
      EXPECT_EQ(gb_says, macaulay_member(F, n, gens, f, 6));
      (gb_says ? members : non_members)++;
    }
  }
  EXPECT_GT(members, 0);
  EXPECT_GT(non_members, 0);
}

TEST(GroebnerProperty, ChurchRosserAndIdempotence) {
  PrimeField F;
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + rng() % 2;
    std::vector<SparsePoly> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_poly(F, rng, n, 2, 3));
    GroebnerBasis gb = buchberger(F, n, gens, {.stop_on_constant = false});
    if (gb.is_trivial()) continue;
    for (int q = 0; q < 10; ++q) {
      const SparsePoly f = random_poly(F, rng, n, 4, 6);
      const SparsePoly r = normal_form(F, f, gb.generators);
      auto shuffled = gb.generators;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(normal_form(F, f, shuffled), r);
      EXPECT_EQ(normal_form(F, r, gb.generators), r);
      // f - NF(f) lies in the ideal
      EXPECT_TRUE(normal_form(F, poly_sub(F, f, r), gb.generators).is_zero());
    }
    // basis of a basis is the same reduced basis
    GroebnerBasis again = buchberger(F, n, gb.generators, {.stop_on_constant = false});
    EXPECT_EQ(again.generators, gb.generators);
  }
}

TEST(GroebnerProperty, ReducedBasisIsOrderIndependent) {
  PrimeField F;
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SparsePoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(F, rng, 3, 2, 3));
    GroebnerBasis a = buchberger(F, 3, gens, {.stop_on_constant = false});
    std::reverse(gens.begin(), gens.end());
    GroebnerBasis b = buchberger(F, 3, gens, {.stop_on_constant = false});
    EXPECT_EQ(a.generators, b.generators);
  }
}
