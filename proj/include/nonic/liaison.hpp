#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "nonic/hilbert_burch.hpp"
#include "nonic/points.hpp"

namespace nonic {

class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pencil of sextics F = L1 Q1 + L2 Q2 + L3 Q3 + a S (row 0 of W) and F'
// (row 1). Each row is laid out as (L1 x0,x1,x2 | L2 | L3 | a).
struct Case1Params {
  std::array<std::array<Fp, 10>, 2> W{};

  HomForm L(int row, int j) const { return HomForm::linear(W[row][3 * j], W[row][3 * j + 1], W[row][3 * j + 2]); }
  Fp a(int row) const { return W[row][9]; }
};

// Q = sum a_i Q_i, G = sum q_i Q_i.
struct Case2Params {
  std::array<Fp, 3> a{};
  std::array<HomForm, 3> q{HomForm(2), HomForm(2), HomForm(2)};
};

struct ResidualIdeal {
  std::vector<HomForm> generators;  // signed maximal minors, by omitted row
  GradedPiece piece9;
};

// Everything about A that the liaison maps reuse.
struct LiaisonBase {
  PointSet A;
  HBMatrix hb;
  GradedPiece ia9;
};
LiaisonBase make_liaison_base(const PrimeField& F, const PointSet& A);

std::array<HomForm, 2> case1_sextics(const PrimeField& F, const HBMatrix& hb, const Case1Params& w);

// Signed 4x4 minors of the 5x4 matrix whose first rows are `top` and whose
// last three rows are the transposed Hilbert-Burch matrix. Sign (-1)^r for
// the omitted row r counted from 1.
std::vector<HomForm> stacked_minors(const PrimeField& F, const HBMatrix& hb,
                                    const std::array<std::array<HomForm, 4>, 2>& top);

ResidualIdeal residual_66(const PrimeField& F, const LiaisonBase& base, const Case1Params& w);
ResidualIdeal residual_57(const PrimeField& F, const LiaisonBase& base, const Case2Params& th);

// Normalized generator of the annihilator of the span of both pieces.
std::vector<Fp> dual_point(const PrimeField& F, const GradedPiece& a9, const GradedPiece& b9);

std::vector<Fp> map_f(const PrimeField& F, const LiaisonBase& base, const Case1Params& w);
std::vector<Fp> map_fprime(const PrimeField& F, const LiaisonBase& base, const Case2Params& th);

// 2x2 minors p_kl of W for k < l, in lexicographic order of (k, l).
std::vector<Fp> plucker_coords(const PrimeField& F, const Case1Params& w);
std::size_t plucker_index(int k, int l);

// 15-entry parameter vector (a1, a2, a3, then the 6 coefficients of each of
// the two quadrics other than q_{i0}, quadric coefficients in the order
// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2). q_{i0} is zero in this layout.
Case2Params case2_from_vector(const std::vector<Fp>& v, int i0);
// Gauge-fix a_{i0} = 1 and q_{i0} = 0, then flatten.
std::vector<Fp> case2_to_vector(const PrimeField& F, const Case2Params& th, int i0);

// Same residual after rescaling a, rescaling q, or adding a multiple of a to q.
Case2Params case2_gauge(const PrimeField& F, const Case2Params& th, int i0);

// True when t is proportional to s (both nonzero).
bool proportional(const PrimeField& F, const std::vector<Fp>& t, const std::vector<Fp>& s);

}  // namespace nonic
