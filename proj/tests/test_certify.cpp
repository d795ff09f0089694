#include <gtest/gtest.h>

#include "common.hpp"
#include "nonic/io.hpp"

using namespace nonic;
using namespace nonic::testing;

namespace {

const LiaisonBase& reference_base() {
  static const PrimeField F;
  static const LiaisonBase base = make_liaison_base(F, reference_A(F));
  return base;
}

std::vector<Fp> contracted(const PrimeField& F, const std::vector<std::int64_t>& lambdas) {
  return contracted_from_waring(F, reference_decomposition(F, lambdas), 9);
}

}  // namespace

TEST(Genericity, ReferenceSet) {
  PrimeField F;
  const GenericityResult g = test_genericity(F, reference_decomposition(F, std::vector<std::int64_t>(18, 1)));
  EXPECT_TRUE(g.all());
  EXPECT_EQ(g.rank_nu9, 18u);
  EXPECT_EQ(g.k4, 15u);
  EXPECT_EQ(g.k4_rank_checks, 816u);
  EXPECT_EQ(g.h5, 18u);
}

TEST(Genericity, RedundantExpressionAndWrongLength) {
  PrimeField F;
  auto lam = std::vector<std::int64_t>(18, 1);
  lam[4] = 0;
  const GenericityResult g = test_genericity(F, reference_decomposition(F, lam));
  EXPECT_FALSE(g.test1);
  ASSERT_FALSE(g.reasons.empty());
  EXPECT_NE(g.reasons[0].find("redundant expression"), std::string::npos);
  std::vector<std::size_t> idx(17);
  for (std::size_t i = 0; i < 17; ++i) idx[i] = i;
  EXPECT_THROW(test_genericity(F, Decomposition{reference_A(F).subset(idx), std::nullopt}), std::invalid_argument);
}

TEST(Case2System, T1ParametersSolveEveryChartMinusGauge) {
  PrimeField F;
  const auto& base = reference_base();
  const auto t = contracted(F, kT1Lambdas);
  const auto v = to_field(F, kT1Parameters);
  for (int j = 4; j <= 15; ++j) {
    if (v[j - 1].is_zero()) continue;
    const ChartSystem sys = build_case2_system(F, base, t, {1, j});
    EXPECT_EQ(sys.nvars, 13);
    const Fp inv = F.inv(v[j - 1]);
    std::vector<Fp> x;
    for (int s : sys.variable_slot) x.push_back(s < 3 ? v[s] : F.mul(v[s], inv));
    for (const auto& e : sys.equations) EXPECT_TRUE(e.evaluate(F, x).is_zero()) << "chart (1," << j << ")";
  }
}

TEST(Case2System, InputOutsideSpanIsRejected) {
  PrimeField F;
  std::mt19937_64 rng(51);
  EXPECT_THROW(build_case2_system(F, reference_base(), random_vector(F, rng, 55), {1, 4}), std::invalid_argument);
}

TEST(Case2System, ConstructedPointSolvesItsSystem) {
  PrimeField F;
  const auto& base = reference_base();
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Case2Params th = case2_gauge(F, random_case2(F, seed), 0);
    const auto t = map_fprime(F, base, th);
    const auto v = case2_to_vector(F, th, 0);
    const ChartSystem sys = build_case2_system(F, base, t, {1, 4});
    const Fp inv = F.inv(v[3]);
    std::vector<Fp> x;
    for (int s : sys.variable_slot) x.push_back(s < 3 ? v[s] : F.mul(v[s], inv));
    for (const auto& e : sys.equations) EXPECT_TRUE(e.evaluate(F, x).is_zero());
  }
}

TEST(Test4, T1HasZeroDimensionalChart) {
  PrimeField F;
  const auto& base = reference_base();
  const auto t = contracted(F, kT1Lambdas);
  const Test4Result r = test4_minimality(F, base, t);
  ASSERT_EQ(r.charts.size(), 36u);
  EXPECT_EQ(r.aggregate, 0);
  const ChartResult& c = r.charts[0];
  EXPECT_EQ(c.chart.quintic, 1);
  EXPECT_EQ(c.chart.gauge, 4);
  EXPECT_EQ(c.dimension, 0);
  EXPECT_EQ(c.degree, 1u);
  ASSERT_TRUE(c.sample);
  // matches the printed parameter vector up to the q rescaling
  const auto v = to_field(F, kT1Parameters);
  const Fp inv = F.inv(v[3]);
  for (int s = 0; s < 15; ++s) EXPECT_EQ((*c.sample)[s], s < 3 ? v[s] : F.mul(v[s], inv)) << s;
}

TEST(Test4, ParallelMatchesSerial) {
  PrimeField F;
  const auto& base = reference_base();
  for (const auto* lam : {&kT1Lambdas, &kT3Lambdas}) {
    const auto t = contracted(F, *lam);
    const Test4Result a = test4_minimality(F, base, t), b = test4_minimality_serial(F, base, t);
    EXPECT_EQ(a.aggregate, b.aggregate);
    ASSERT_EQ(a.charts.size(), b.charts.size());
    for (std::size_t i = 0; i < a.charts.size(); ++i) {
      EXPECT_EQ(a.charts[i].dimension, b.charts[i].dimension);
      EXPECT_EQ(a.charts[i].degree, b.charts[i].degree);
      EXPECT_EQ(a.charts[i].sample, b.charts[i].sample);
    }
  }
}

TEST(Test4, SingleChartMatchesScan) {
  PrimeField F;
  const auto t = contracted(F, kT1Lambdas);
  const Test4Result all = test4_minimality(F, reference_base(), t);
  for (std::size_t i : {0u, 7u, 20u, 35u}) {
    const ChartResult one = test4_chart(F, reference_base(), t, all.charts[i].chart);
    EXPECT_EQ(one.dimension, all.charts[i].dimension);
    EXPECT_EQ(one.sample, all.charts[i].sample);
  }
}

TEST(Test5, T3HasSinglePointRecoveringThePencil) {
  PrimeField F;
  const auto& base = reference_base();
  const auto t = contracted(F, kT3Lambdas);
  const Test5Result r = test5_uniqueness(F, base, t, {{0, 9}});
  ASSERT_EQ(r.charts.size(), 1u);
  EXPECT_EQ(r.max_dimension, 0);
  EXPECT_EQ(r.degree, 1u);
  ASSERT_TRUE(r.charts[0].sample);
  const Case1Params w = t3_pencil(F);
  EXPECT_EQ(r.charts[0].sample->W, w.W);
  EXPECT_FALSE(r.caveat.empty());
  // chart coordinates of the printed pencil
  const auto x = case1_chart_coordinates(F, w, {0, 9});
  ASSERT_TRUE(x);
  EXPECT_EQ(x->size(), 16u);
}

TEST(Test5, ConstructedPencilLiesInItsSolutionSet) {
  PrimeField F;
  const auto& base = reference_base();
  const Case1Params w = random_pencil(F, 9);
  const auto t = map_f(F, base, w);
  const Case1Pairing pairing = case1_pairing(F, base.hb, t);
  const Case1System sys = build_case1_system(F, pairing, {0, 9});
  const auto x = case1_chart_coordinates(F, w, {0, 9});
  ASSERT_TRUE(x);
  for (const auto& e : sys.equations) EXPECT_TRUE(e.evaluate(F, *x).is_zero());
  // and the chart point reproduces the row space
  EXPECT_TRUE(proportional(F, plucker_coords(F, sys.point(*x)), plucker_coords(F, w)));
}

TEST(Certify, T2IsRankEighteen) {
  PrimeField F;
  const CertReport rep = certify_rank18(F, reference_decomposition(F, std::vector<std::int64_t>(18, 1)));
  EXPECT_EQ(rep.verdict, Verdict::RankCertified18);
  ASSERT_TRUE(rep.test4);
  for (const auto& c : rep.test4->charts) EXPECT_EQ(c.dimension, -1);
  ASSERT_TRUE(rep.test5);
  EXPECT_EQ(rep.test5->max_dimension, -1);
  EXPECT_FALSE(rep.not_unique());
}

TEST(Certify, T1HasVerifiedLowerRankWitness) {
  PrimeField F;
  const CertReport rep = certify_rank18(F, reference_decomposition(F, kT1Lambdas));
  EXPECT_EQ(rep.verdict, Verdict::LowerRankWitness);
  ASSERT_TRUE(rep.lower_rank_witness);
  EXPECT_TRUE(rep.lower_rank_witness->resubstitution_ok);
  EXPECT_TRUE(rep.lower_rank_witness->residual_verified);
  EXPECT_FALSE(rep.test5);  // uniqueness is only examined after a rank certificate
}

TEST(Certify, T3RankEighteenButNotUnique) {
  PrimeField F;
  CertifyOptions opts;
  opts.test5_charts = {{0, 9}};
  const CertReport rep = certify_rank18(F, reference_decomposition(F, kT3Lambdas), opts);
  EXPECT_EQ(rep.verdict, Verdict::RankCertified18);
  EXPECT_TRUE(rep.not_unique());
}

TEST(Certify, RandomFormIsRankEighteenAndDeterministic) {
  PrimeField F;
  std::mt19937_64 rng(52);
  const auto lam = random_vector(F, rng, 18);
  CertifyOptions opts;
  opts.run_test5 = false;
  const CertReport a = certify_rank18(F, Decomposition{reference_A(F), lam}, opts);
  const CertReport b = certify_vector(F, reference_A(F), contracted_from_waring(F, Decomposition{reference_A(F), lam}, 9), opts);
  EXPECT_EQ(a.verdict, Verdict::RankCertified18);
  EXPECT_EQ(report_to_json(F, a).dump(), report_to_json(F, b).dump());
}

TEST(Certify, InapplicableInputs) {
  PrimeField F;
  std::vector<std::size_t> idx(17);
  for (std::size_t i = 0; i < 17; ++i) idx[i] = i;
  EXPECT_EQ(certify_rank18(F, Decomposition{reference_A(F).subset(idx), std::vector<Fp>(17, Fp(1))}).verdict,
            Verdict::CriterionInapplicable);
  std::mt19937_64 rng(53);
  EXPECT_EQ(certify_vector(F, reference_A(F), random_vector(F, rng, 55)).verdict, Verdict::CriterionInapplicable);
}

TEST(GeneralCriteria, Examples) {
  PrimeField F;
  std::vector<std::size_t> idx(17);
  for (std::size_t i = 0; i < 17; ++i) idx[i] = i;
  const GeneralCriteria a = general_criteria(F, Decomposition{reference_A(F).subset(idx), std::vector<Fp>(17, Fp(1))}, 9);
  EXPECT_TRUE(a.ternary_identifiable);

  const GeneralCriteria b = general_criteria(F, Decomposition{reference_A(F), std::vector<Fp>(18, Fp(1))}, 9);
  EXPECT_FALSE(b.kruskal_identifiable);
  // A has collinear triples, so k_1 = 2 and (4,4,1) gives (15 + 15 + 2 - 2) / 2
  EXPECT_DOUBLE_EQ(b.best_bound, 15.0);
  EXPECT_EQ(b.best_partition, (std::array<int, 3>{4, 4, 1}));

  PointSet two(F, {ProjPoint(Fp(1), Fp(2), Fp(3)), ProjPoint(Fp(4), Fp(5), Fp(7))});
  const GeneralCriteria c = general_criteria(F, Decomposition{two, std::vector<Fp>(2, Fp(1))}, 3);
  EXPECT_TRUE(c.kruskal_identifiable);
}
