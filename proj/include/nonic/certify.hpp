#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nonic/groebner.hpp"
#include "nonic/liaison.hpp"

namespace nonic {

struct GenericityResult {
  bool test1 = false;  // nu_9(A) has rank 18 and every lambda is nonzero
  bool test2 = false;  // k_4(A) = 15
  bool test3 = false;  // h_A(5) = 18
  std::size_t rank_nu9 = 0;
  std::size_t k4 = 0;
  std::size_t k4_rank_checks = 0;
  std::size_t h5 = 0;
  std::vector<std::string> reasons;
  bool all() const { return test1 && test2 && test3; }
};

// Throws std::invalid_argument("algorithm specific to 18 summands") unless 18 points.
GenericityResult test_genericity(const PrimeField& F, const Decomposition& dec);

// Chart for the Case-2 system: a_{quintic} = 1, q_{quintic} = 0, and entry
// `gauge` (4..15, in the 15-entry parameter layout) equal to 1. Indices are
// 1-based as in the parameter vector.
struct Case2Chart {
  int quintic = 1;  // 1..3
  int gauge = 4;    // 4..15
};
std::vector<Case2Chart> all_case2_charts();

// Precomputed bilinear structure of the three quintic minors P_v(a, q) and
// their pairings with t; shared by all charts.
struct Case2Pairing {
  // coeff[v][m][i][s]: coefficient of a_i * (entry s of the 18 quadric
  // coefficients, lex order per quadric) in t . (x^m P_v), m over degree-4 monomials
  std::vector<std::array<std::array<std::array<Fp, 18>, 3>, 15>> coeff;  // size 3
};
Case2Pairing case2_pairing(const PrimeField& F, const HBMatrix& hb, const std::vector<Fp>& t);

struct ChartSystem {
  int nvars = 0;
  std::vector<SparsePoly> equations;
  // position in the full 15-entry parameter vector of each variable
  std::vector<int> variable_slot;
  // builds the full parameter vector from a point of the chart
  std::vector<Fp> expand(const std::vector<Fp>& x) const;
  std::vector<Fp> fixed;  // parameter vector with the chart constants and zeros
};

// Throws std::invalid_argument("input form not in <nu_9(A)>") if t pairs
// nontrivially with (I_A)_9.
ChartSystem build_case2_system(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                               Case2Chart chart);
ChartSystem build_case2_system(const PrimeField& F, const Case2Pairing& pairing, Case2Chart chart);

struct ChartResult {
  Case2Chart chart;
  int dimension = -1;
  std::optional<std::size_t> degree;
  std::optional<std::vector<Fp>> sample;  // full 15-entry parameter vector
};

struct Test4Result {
  std::vector<ChartResult> charts;  // 36, in scan order
  int aggregate = -1;
};
Test4Result test4_minimality(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t);
Test4Result test4_minimality_serial(const PrimeField& F, const LiaisonBase& base,
                                    const std::vector<Fp>& t);
// A single chart of the scan, with the same sampling seed as in the full scan.
ChartResult test4_chart(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                        Case2Chart chart);

// Plucker chart for the Case-1 system: W is normalized so that its columns
// k < l form the identity.
struct Case1Chart {
  int k = 0;
  int l = 9;
};
const std::vector<Case1Chart>& default_case1_charts();

struct Case1Pairing {
  // coeff[v][m][kl]: coefficient of p_kl in t . (x^m P_v)
  std::vector<std::array<std::array<Fp, 45>, 15>> coeff;  // size 3
};
Case1Pairing case1_pairing(const PrimeField& F, const HBMatrix& hb, const std::vector<Fp>& t);

struct Case1System {
  int nvars = 16;
  Case1Chart chart;
  std::vector<SparsePoly> equations;
  std::vector<std::pair<int, int>> variable_entry;  // (row, column) of W per variable
  Case1Params point(const std::vector<Fp>& x) const;
};
Case1System build_case1_system(const PrimeField& F, const Case1Pairing& pairing, Case1Chart chart);
// Chart coordinates of a pencil; nullopt if the pencil is outside the chart.
std::optional<std::vector<Fp>> case1_chart_coordinates(const PrimeField& F, const Case1Params& w,
                                                       Case1Chart chart);

struct Case1ChartResult {
  Case1Chart chart;
  int dimension = -1;
  std::optional<std::size_t> degree;
  std::optional<Case1Params> sample;
};

struct Test5Result {
  std::vector<Case1ChartResult> charts;
  int max_dimension = -1;
  std::optional<std::size_t> degree;  // of the first chart reaching max_dimension, when 0
  std::string caveat;
};
Test5Result test5_uniqueness(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                             const std::vector<Case1Chart>& charts = default_case1_charts());

enum class Verdict { RankCertified18, LowerRankWitness, CriterionInapplicable, Inconclusive };
const char* to_string(Verdict v);

struct Case2Witness {
  Case2Chart chart;
  int dimension = 0;
  std::vector<Fp> parameters;             // 15 entries
  bool resubstitution_ok = false;          // every test-4 equation vanishes
  bool residual_verified = false;          // residual_57 dims 38/54 and dual point proportional to t
  std::vector<HomForm> residual_generators;
};

struct Case1Witness {
  Case1Chart chart;
  Case1Params pencil;
  bool residual_verified = false;  // residual_66 dims 37/54 and dual point proportional to t
  std::vector<HomForm> residual_generators;
};

struct CertifyOptions {
  bool run_test5 = true;
  std::vector<Case1Chart> test5_charts = default_case1_charts();
};

struct CertReport {
  std::uint32_t prime = 0;
  std::optional<GenericityResult> genericity;
  std::optional<Test4Result> test4;
  std::optional<Test5Result> test5;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<Case2Witness> lower_rank_witness;
  // set when test 5 found a verified second decomposition
  std::optional<Case1Witness> second_decomposition;
  bool not_unique() const { return second_decomposition && second_decomposition->residual_verified; }
};

CertReport certify_rank18(const PrimeField& F, const Decomposition& dec, const CertifyOptions& opts = {});
// Same pipeline from a contracted degree-9 vector known to lie in <nu_9(A)>.
CertReport certify_vector(const PrimeField& F, const PointSet& A, const std::vector<Fp>& t,
                          const CertifyOptions& opts = {});

struct GeneralCriteria {
  int degree = 0;
  std::size_t length = 0;
  // reshaped Kruskal: best partition and its bound 2*l <= k1+k2+k3-2
  bool kruskal_identifiable = false;
  std::array<int, 3> best_partition{0, 0, 0};
  double best_bound = 0;
  bool ternary_identifiable = false;  // identifiable of rank r
  bool ternary_rank = false;          // A computes the rank
  std::vector<std::string> notes;
};
GeneralCriteria general_criteria(const PrimeField& F, const Decomposition& dec, int d);

}  // namespace nonic
