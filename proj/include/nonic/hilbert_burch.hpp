#pragma once

#include <array>
#include <stdexcept>

#include "nonic/forms.hpp"
#include "nonic/points.hpp"

namespace nonic {

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One degree-7 relation c1 Q1 + c2 Q2 + c3 Q3 + l S = 0.
struct SyzygyColumn {
  std::array<HomForm, 3> c;  // quadrics
  HomForm l;                 // linear form
};

// 4x3 matrix with rows (c-row 1, c-row 2, c-row 3, l-row); column v is the
// v-th syzygy. Generators satisfy Q_i = (-1)^i * (minor omitting row i) and
// S = det of the quadric block.
struct HBMatrix {
  std::array<std::array<HomForm, 3>, 3> quadric;  // quadric[i][v] = c_{i+1, v+1}
  std::array<HomForm, 3> linear;                  // linear[v] = l_{v+1}
  std::array<HomForm, 3> Q;
  HomForm S;

  // entry of the 4x3 matrix, row r in 0..3
  const HomForm& entry(int r, int v) const { return r < 3 ? quadric[r][v] : linear[v]; }
  // the 3x3 minor omitting row r (0-based)
  HomForm minor(const PrimeField& F, int r) const;
};

std::array<HomForm, 3> quintic_generators(const PrimeField& F, const PointSet& A);
HomForm sextic_complement(const PrimeField& F, const PointSet& A, const std::array<HomForm, 3>& Q);
std::array<SyzygyColumn, 3> degree7_syzygies(const PrimeField& F, const std::array<HomForm, 3>& Q,
                                             const HomForm& S);
HBMatrix assemble_hb(const PrimeField& F, const PointSet& A);

// x_i Q_j for i in 0..2, j in 0..2
std::vector<HomForm> lambda6_spanning_set(const std::array<HomForm, 3>& Q);

}  // namespace nonic
