#include "nonic/certify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace nonic {

namespace {

constexpr const char* kTest5Caveat =
    "an empty or single-point answer does not certify identifiability: second decompositions "
    "that meet A, or that are linked to A through sextics with a common component, are not "
    "parametrized by this system";

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Polynomial accumulator keyed by monomial.
struct Accum {
  const PrimeField& F;
  int nvars;
  std::map<Monomial, Fp, std::greater<Monomial>> terms;
  void add(const Monomial& m, Fp c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) it->second = F.add(it->second, c);
  }
  void add_poly(const SparsePoly& p, Fp c) {
    for (const auto& t : p.terms()) add(t.m, F.mul(c, t.c));
  }
  SparsePoly take() const {
    std::vector<Term> v;
    for (const auto& [m, c] : terms)
      if (!c.is_zero()) v.push_back({m, c});
    return SparsePoly(nvars, std::move(v));
  }
};

void check_in_span(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t) {
  if (t.size() != num_monomials(9)) throw std::invalid_argument("expected a degree-9 vector of 55 entries");
  for (const auto& g : base.ia9.basis)
    if (!dot(F, g.coeffs(), t).is_zero()) throw std::invalid_argument("input form not in <nu_9(A)>");
}

std::vector<int> other_slots(int i0) {
  std::vector<int> v;
  for (int j = 0; j < 3; ++j)
    if (j != i0) v.push_back(j);
  return v;
}

}  // namespace

GenericityResult test_genericity(const PrimeField& F, const Decomposition& dec) {
  if (dec.points.size() != 18) throw std::invalid_argument("algorithm specific to 18 summands");
  GenericityResult g;
  const PointSet& A = dec.points;
  g.rank_nu9 = rank(F, evaluation_matrix(F, A, 9));
  g.test1 = g.rank_nu9 == 18;
  if (!g.test1) g.reasons.push_back("nu_9(A) has rank " + std::to_string(g.rank_nu9) + " < 18");
  if (dec.lambdas) {
    for (std::size_t i = 0; i < dec.lambdas->size(); ++i)
      if ((*dec.lambdas)[i].is_zero()) {
        g.test1 = false;
        g.reasons.push_back("redundant expression: lambda " + std::to_string(i + 1) + " is zero");
      }
  }
  auto kr = kruskal_rank(F, A, 4);
  g.k4 = kr.k;
  g.k4_rank_checks = kr.rank_checks;
  g.test2 = g.k4 == 15;
  if (!g.test2) g.reasons.push_back("k_4(A) = " + std::to_string(g.k4) + " < 15");
  g.h5 = rank(F, evaluation_matrix(F, A, 5));
  g.test3 = g.h5 == 18;
  if (!g.test3) g.reasons.push_back("h_A(5) = " + std::to_string(g.h5) + " < 18");
  return g;
}

std::vector<Case2Chart> all_case2_charts() {
  std::vector<Case2Chart> v;
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 15; ++j) v.push_back({i, j});
  return v;
}

Case2Pairing case2_pairing(const PrimeField& F, const HBMatrix& hb, const std::vector<Fp>& t) {
  const auto& m4 = monomials(4);
  Case2Pairing out;
  out.coeff.resize(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 6; ++k) {
        std::array<std::array<HomForm, 4>, 2> top;
        for (int c = 0; c < 3; ++c) {
          top[0][c] = HomForm::constant(c == i ? Fp(1) : Fp(0));
          top[1][c] = c == j ? HomForm::monomial(2, kQuadricLexOrder[k]) : HomForm(2);
        }
        top[0][3] = HomForm();
        top[1][3] = HomForm();
        auto minors = stacked_minors(F, hb, top);
        for (int v = 0; v < 3; ++v) {
          const HomForm& P = minors[2 + v];
          for (std::size_t m = 0; m < m4.size(); ++m) {
            Fp c = P.is_zero() ? Fp(0) : dot(F, shift(P, m4[m]).coeffs(), t);
            out.coeff[v][m][i][6 * j + k] = c;
          }
        }
      }
  return out;
}

std::vector<Fp> ChartSystem::expand(const std::vector<Fp>& x) const {
  std::vector<Fp> v = fixed;
  for (std::size_t k = 0; k < variable_slot.size(); ++k) v[variable_slot[k]] = x[k];
  return v;
}

ChartSystem build_case2_system(const PrimeField& F, const Case2Pairing& pairing, Case2Chart chart) {
  if (chart.quintic < 1 || chart.quintic > 3 || chart.gauge < 4 || chart.gauge > 15)
    throw std::invalid_argument("chart must be (1..3, 4..15)");
  const int i0 = chart.quintic - 1;
  const int pin = chart.gauge - 1;  // 0-based position in the parameter vector
  ChartSystem sys;
  sys.fixed.assign(15, Fp(0));
  sys.fixed[i0] = Fp(1);
  sys.fixed[pin] = Fp(1);
  std::vector<int> var_of(15, -1);
  for (int s = 0; s < 15; ++s) {
    if (s == i0 || s == pin) continue;
    var_of[s] = static_cast<int>(sys.variable_slot.size());
    sys.variable_slot.push_back(s);
  }
  sys.nvars = static_cast<int>(sys.variable_slot.size());
  const auto others = other_slots(i0);
  // parameter position of quadric entry 6*j+k (or -1 when q_j is gauged to 0)
  auto q_pos = [&](int s18) -> int {
    int j = s18 / 6, k = s18 % 6;
    if (j == i0) return -1;
    int slot = j == others[0] ? 0 : 1;
    return 3 + 6 * slot + k;
  };
  // a parameter as (is_constant, value-or-variable)
  auto factor = [&](int pos, Monomial& m, bool& zero) {
    if (pos < 0) {
      zero = true;
      return;
    }
    if (var_of[pos] >= 0)
      m = mono_mul(m, Monomial::variable(var_of[pos]));
    else if (sys.fixed[pos].is_zero())
      zero = true;
  };
  for (int v = 0; v < 3; ++v)
    for (std::size_t mi = 0; mi < pairing.coeff[v].size(); ++mi) {
      Accum acc{F, sys.nvars, {}};
      for (int i = 0; i < 3; ++i)
        for (int s18 = 0; s18 < 18; ++s18) {
          Fp c = pairing.coeff[v][mi][i][s18];
          if (c.is_zero()) continue;
          Monomial m;
          bool zero = false;
          factor(i, m, zero);
          factor(q_pos(s18), m, zero);
          if (!zero) acc.add(m, c);
        }
      SparsePoly p = acc.take();
      if (!p.is_zero()) sys.equations.push_back(std::move(p));
    }
  return sys;
}

ChartSystem build_case2_system(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                               Case2Chart chart) {
  check_in_span(F, base, t);
  return build_case2_system(F, case2_pairing(F, base.hb, t), chart);
}

namespace {

// Random affine slices to cut a positive-dimensional ideal down to points.
GroebnerBasis slice(const PrimeField& F, int nvars, std::vector<SparsePoly> eqs, int count,
                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> U(0, F.modulus() - 1);
  for (int c = 0; c < count; ++c) {
    std::vector<Term> terms;
    for (int i = 0; i < nvars; ++i) terms.push_back({Monomial::variable(i), Fp(U(rng))});
    terms.push_back({Monomial(), Fp(U(rng))});
    eqs.emplace_back(nvars, std::move(terms));
  }
  return buchberger(F, nvars, eqs);
}

template <class Sample>
void analyse_chart(const PrimeField& F, int nvars, const std::vector<SparsePoly>& eqs, std::uint64_t seed,
                   int& dimension, std::optional<std::size_t>& degree, Sample&& on_point) {
  GroebnerBasis gb = buchberger(F, nvars, eqs);
  dimension = ideal_dimension(gb);
  if (dimension < 0) return;
  if (dimension == 0) {
    degree = zero_dim_degree(gb);
    if (auto x = unique_solution(F, gb)) on_point(*x);
    return;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    GroebnerBasis s = slice(F, nvars, eqs, dimension, rng);
    if (auto x = unique_solution(F, s)) {
      on_point(*x);
      return;
    }
  }
}

ChartResult analyse_case2(const PrimeField& F, const Case2Pairing& pairing, Case2Chart chart,
                          std::size_t index) {
  ChartResult r;
  r.chart = chart;
  ChartSystem sys = build_case2_system(F, pairing, chart);
  analyse_chart(F, sys.nvars, sys.equations, 0x9e3779b97f4a7c15ull + index, r.dimension, r.degree,
                [&](const std::vector<Fp>& x) { r.sample = sys.expand(x); });
  return r;
}

Test4Result test4_impl(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                       bool parallel) {
  check_in_span(F, base, t);
  const Case2Pairing pairing = case2_pairing(F, base.hb, t);
  Test4Result res;
  const auto charts = all_case2_charts();
  res.charts.resize(charts.size());
  auto run = [&](std::size_t c) { res.charts[c] = analyse_case2(F, pairing, charts[c], c); };
  const auto n = static_cast<std::int64_t>(charts.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < n; ++c) run(c);
  } else {
    for (std::int64_t c = 0; c < n; ++c) run(c);
  }
  for (const auto& r : res.charts) res.aggregate = std::max(res.aggregate, r.dimension);
  return res;
}

}  // namespace

Test4Result test4_minimality(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t) {
  return test4_impl(F, base, t, true);
}
Test4Result test4_minimality_serial(const PrimeField& F, const LiaisonBase& base,
                                    const std::vector<Fp>& t) {
  return test4_impl(F, base, t, false);
}

ChartResult test4_chart(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                        Case2Chart chart) {
  if (chart.quintic < 1 || chart.quintic > 3 || chart.gauge < 4 || chart.gauge > 15)
    throw std::invalid_argument("chart out of range");
  check_in_span(F, base, t);
  const std::size_t index = static_cast<std::size_t>((chart.quintic - 1) * 12 + (chart.gauge - 4));
  return analyse_case2(F, case2_pairing(F, base.hb, t), chart, index);
}

const std::vector<Case1Chart>& default_case1_charts() {
  static const std::vector<Case1Chart> charts{{0, 9}, {3, 9}, {6, 9}, {0, 3}};
  return charts;
}

Case1Pairing case1_pairing(const PrimeField& F, const HBMatrix& hb, const std::vector<Fp>& t) {
  const auto& m4 = monomials(4);
  Case1Pairing out;
  out.coeff.resize(3);
  auto unit_row = [](int k) {
    std::array<HomForm, 4> r;
    for (int j = 0; j < 3; ++j) {
      std::array<Fp, 3> c{};
      if (k / 3 == j) c[k % 3] = Fp(1);
      r[j] = HomForm::linear(c[0], c[1], c[2]);
    }
    r[3] = HomForm::constant(k == 9 ? Fp(1) : Fp(0));
    return r;
  };
  for (int k = 0; k < 10; ++k)
    for (int l = k + 1; l < 10; ++l) {
      auto minors = stacked_minors(F, hb, {unit_row(k), unit_row(l)});
      const std::size_t kl = plucker_index(k, l);
      for (int v = 0; v < 3; ++v) {
        const HomForm& P = minors[2 + v];
        for (std::size_t m = 0; m < m4.size(); ++m)
          out.coeff[v][m][kl] = P.is_zero() ? Fp(0) : dot(F, shift(P, m4[m]).coeffs(), t);
      }
    }
  return out;
}

Case1Params Case1System::point(const std::vector<Fp>& x) const {
  Case1Params w;
  w.W[0][chart.k] = Fp(1);
  w.W[1][chart.l] = Fp(1);
  for (std::size_t i = 0; i < variable_entry.size(); ++i)
    w.W[variable_entry[i].first][variable_entry[i].second] = x[i];
  return w;
}

Case1System build_case1_system(const PrimeField& F, const Case1Pairing& pairing, Case1Chart chart) {
  if (!(0 <= chart.k && chart.k < chart.l && chart.l < 10))
    throw std::invalid_argument("Plucker chart needs 0 <= k < l < 10");
  Case1System sys;
  sys.chart = chart;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 10; ++c)
      if (c != chart.k && c != chart.l) sys.variable_entry.push_back({r, c});
  sys.nvars = static_cast<int>(sys.variable_entry.size());
  // entries of W as polynomials
  std::array<std::array<SparsePoly, 10>, 2> W;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 10; ++c) W[r][c] = SparsePoly(sys.nvars);
  W[0][chart.k] = SparsePoly::constant(sys.nvars, Fp(1));
  W[1][chart.l] = SparsePoly::constant(sys.nvars, Fp(1));
  for (int i = 0; i < sys.nvars; ++i)
    W[sys.variable_entry[i].first][sys.variable_entry[i].second] = SparsePoly::variable(sys.nvars, i);
  std::vector<SparsePoly> pl(45);
  for (int k = 0; k < 10; ++k)
    for (int l = k + 1; l < 10; ++l)
      pl[plucker_index(k, l)] =
          poly_sub(F, poly_mul(F, W[0][k], W[1][l]), poly_mul(F, W[0][l], W[1][k]));
  for (int v = 0; v < 3; ++v)
    for (std::size_t m = 0; m < pairing.coeff[v].size(); ++m) {
      Accum acc{F, sys.nvars, {}};
      for (std::size_t kl = 0; kl < 45; ++kl)
        if (!pairing.coeff[v][m][kl].is_zero()) acc.add_poly(pl[kl], pairing.coeff[v][m][kl]);
      SparsePoly p = acc.take();
      if (!p.is_zero()) sys.equations.push_back(std::move(p));
    }
  return sys;
}

std::optional<std::vector<Fp>> case1_chart_coordinates(const PrimeField& F, const Case1Params& w,
                                                       Case1Chart chart) {
  const Fp a = w.W[0][chart.k], b = w.W[0][chart.l], c = w.W[1][chart.k], d = w.W[1][chart.l];
  const Fp det = F.sub(F.mul(a, d), F.mul(b, c));
  if (det.is_zero()) return std::nullopt;
  const Fp inv = F.inv(det);
  // S^{-1} = inv * (d -b; -c a)
  const Fp s00 = F.mul(inv, d), s01 = F.neg(F.mul(inv, b)), s10 = F.neg(F.mul(inv, c)),
           s11 = F.mul(inv, a);
  std::vector<Fp> x;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 10; ++col) {
      if (col == chart.k || col == chart.l) continue;
      Fp u = r == 0 ? s00 : s10, v = r == 0 ? s01 : s11;
      x.push_back(F.add(F.mul(u, w.W[0][col]), F.mul(v, w.W[1][col])));
    }
  return x;
}

Test5Result test5_uniqueness(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                             const std::vector<Case1Chart>& charts) {
  check_in_span(F, base, t);
  const Case1Pairing pairing = case1_pairing(F, base.hb, t);
  Test5Result res;
  res.caveat = kTest5Caveat;
  res.charts.resize(charts.size());
  const auto n = static_cast<std::int64_t>(charts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n; ++c) {
    Case1ChartResult& r = res.charts[c];
    r.chart = charts[c];
    Case1System sys = build_case1_system(F, pairing, charts[c]);
    analyse_chart(F, sys.nvars, sys.equations, 0x51ed2701ull + c, r.dimension, r.degree,
                  [&](const std::vector<Fp>& x) { r.sample = sys.point(x); });
  }
  for (const auto& r : res.charts)
    if (r.dimension > res.max_dimension) {
      res.max_dimension = r.dimension;
      res.degree = r.degree;
    }
  return res;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RankCertified18: return "RankCertified18";
    case Verdict::LowerRankWitness: return "LowerRankWitness";
    case Verdict::CriterionInapplicable: return "CriterionInapplicable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

Case2Witness verify_case2(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                          const ChartResult& r) {
  Case2Witness w;
  w.chart = r.chart;
  w.dimension = r.dimension;
  w.parameters = *r.sample;
  const Case2Pairing pairing = case2_pairing(F, base.hb, t);
  ChartSystem sys = build_case2_system(F, pairing, r.chart);
  std::vector<Fp> x;
  for (int s : sys.variable_slot) x.push_back(w.parameters[s]);
  w.resubstitution_ok = true;
  for (const auto& e : sys.equations)
    if (!e.evaluate(F, x).is_zero()) w.resubstitution_ok = false;
  try {
    Case2Params th = case2_from_vector(w.parameters, r.chart.quintic - 1);
    ResidualIdeal B = residual_57(F, base, th);
    w.residual_verified = proportional(F, dual_point(F, base.ia9, B.piece9), t);
    w.residual_generators = B.generators;
  } catch (const DegenerateError&) {
    w.residual_verified = false;
  }
  return w;
}

Case1Witness verify_case1(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                          const Case1ChartResult& r) {
  Case1Witness w;
  w.chart = r.chart;
  w.pencil = *r.sample;
  try {
    ResidualIdeal B = residual_66(F, base, w.pencil);
    w.residual_verified = proportional(F, dual_point(F, base.ia9, B.piece9), t);
    w.residual_generators = B.generators;
  } catch (const DegenerateError&) {
    w.residual_verified = false;
  }
  return w;
}

CertReport run_pipeline(const PrimeField& F, const PointSet& A, const std::vector<Fp>& t,
                        const CertifyOptions& opts, CertReport rep) {
  LiaisonBase base;
  try {
    base = make_liaison_base(F, A);
  } catch (const GenericityError& e) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = e.what();
    return rep;
  }
  try {
    check_in_span(F, base, t);
  } catch (const std::invalid_argument& e) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = e.what();
    return rep;
  }
  rep.test4 = test4_minimality(F, base, t);
  if (rep.test4->aggregate < 0) {
    rep.verdict = Verdict::RankCertified18;
    rep.reason = "every test-4 chart ideal contains 1";
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.reason = "a chart ideal is nonempty but no verified rational witness was found";
    for (const auto& r : rep.test4->charts) {
      if (r.dimension < 0 || !r.sample) continue;
      Case2Witness w = verify_case2(F, base, t, r);
      if (w.resubstitution_ok && w.residual_verified) {
        rep.verdict = Verdict::LowerRankWitness;
        rep.reason = "a 17-point residual set computes the form";
        rep.lower_rank_witness = std::move(w);
        break;
      }
      if (!rep.lower_rank_witness) rep.lower_rank_witness = std::move(w);
    }
  }
  if (opts.run_test5 && rep.verdict == Verdict::RankCertified18) {
    rep.test5 = test5_uniqueness(F, base, t, opts.test5_charts);
    for (const auto& r : rep.test5->charts) {
      if (!r.sample) continue;
      Case1Witness w = verify_case1(F, base, t, r);
      if (w.residual_verified) {
        rep.second_decomposition = std::move(w);
        break;
      }
    }
  }
  return rep;
}

}  // namespace

CertReport certify_vector(const PrimeField& F, const PointSet& A, const std::vector<Fp>& t,
                          const CertifyOptions& opts) {
  CertReport rep;
  rep.prime = F.modulus();
  if (A.size() != 18) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "algorithm specific to 18 summands";
    return rep;
  }
  Decomposition dec{A, std::nullopt};
  rep.genericity = test_genericity(F, dec);
  auto lam = waring_from_contracted(F, t, A);
  if (!lam) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "input form not in <nu_9(A)>";
    return rep;
  }
  for (std::size_t i = 0; i < lam->size(); ++i)
    if ((*lam)[i].is_zero()) {
      rep.genericity->test1 = false;
      rep.genericity->reasons.push_back("redundant expression: lambda " + std::to_string(i + 1) + " is zero");
    }
  if (!rep.genericity->all()) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "genericity tests failed";
    return rep;
  }
  return run_pipeline(F, A, t, opts, std::move(rep));
}

CertReport certify_rank18(const PrimeField& F, const Decomposition& dec, const CertifyOptions& opts) {
  CertReport rep;
  rep.prime = F.modulus();
  if (dec.points.size() != 18) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "algorithm specific to 18 summands";
    return rep;
  }
  if (!dec.lambdas) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "decomposition has no coefficients";
    return rep;
  }
  rep.genericity = test_genericity(F, dec);
  if (!rep.genericity->all()) {
    rep.verdict = Verdict::CriterionInapplicable;
    rep.reason = "genericity tests failed";
    return rep;
  }
  return run_pipeline(F, dec.points, contracted_from_waring(F, dec, 9), opts, std::move(rep));
}

GeneralCriteria general_criteria(const PrimeField& F, const Decomposition& dec, int d) {
  GeneralCriteria g;
  g.degree = d;
  g.length = dec.points.size();
  const std::size_t r = dec.points.size();
  if (d < 3) {
    g.notes.push_back("criteria need d >= 3");
    return g;
  }
  bool nonredundant = rank(F, evaluation_matrix(F, dec.points, d)) == r;
  if (dec.lambdas)
    for (auto l : *dec.lambdas)
      if (l.is_zero()) nonredundant = false;
  if (!nonredundant) {
    g.notes.push_back("expression is redundant; criteria do not apply");
    return g;
  }
  std::map<int, std::size_t> kcache;
  auto k = [&](int j) {
    auto it = kcache.find(j);
    if (it != kcache.end()) return it->second;
    return kcache[j] = kruskal_rank(F, dec.points, j).k;
  };
  auto h = [&](int j) { return rank(F, evaluation_matrix(F, dec.points, j)); };
  for (int d1 = d - 2; d1 >= 1; --d1)
    for (int d2 = std::min(d1, d - d1 - 1); d2 >= 1; --d2) {
      int d3 = d - d1 - d2;
      if (d3 < 1 || d3 > d2) continue;
      const double bound = (static_cast<double>(k(d1)) + k(d2) + k(d3) - 2) / 2;
      if (bound > g.best_bound || g.best_partition[0] == 0) {
        g.best_bound = bound;
        g.best_partition = {d1, d2, d3};
      }
      if (static_cast<double>(r) <= bound) g.kruskal_identifiable = true;
    }
  if (d % 2 == 0) {
    const int m = d / 2;
    const bool hm = h(m) == r;
    g.ternary_identifiable = k(m - 1) == std::min(binom(m + 1, 2), r) && hm && r + 2 <= binom(m + 2, 2);
    g.ternary_rank = hm;
  } else {
    const int m = (d - 1) / 2;
    const bool km = k(m) == std::min(binom(m + 2, 2), r);
    const bool hm = h(m + 1) == r;
    g.ternary_identifiable = km && hm && r <= binom(m + 2, 2) + m / 2;
    g.ternary_rank = km && hm && r <= binom(m + 2, 2) + (m + 1) / 2;
  }
  if (g.kruskal_identifiable || g.ternary_identifiable)
    g.notes.push_back("identifiable of rank " + std::to_string(r));
  else if (g.ternary_rank)
    g.notes.push_back("the decomposition computes the rank " + std::to_string(r));
  return g;
}

}  // namespace nonic
