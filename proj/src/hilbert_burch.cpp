#include "nonic/hilbert_burch.hpp"

#include <algorithm>
#include <string>

namespace nonic {

namespace {

HomForm signed_form(const PrimeField& F, const HomForm& f, bool negate) {
  return negate ? scale(F, F.neg(Fp(1)), f) : f;
}

}  // namespace

HomForm HBMatrix::minor(const PrimeField& F, int r) const {
  std::vector<std::vector<HomForm>> m;
  for (int row = 0; row < 4; ++row) {
    if (row == r) continue;
    m.push_back({entry(row, 0), entry(row, 1), entry(row, 2)});
  }
  return determinant(F, m);
}

std::array<HomForm, 3> quintic_generators(const PrimeField& F, const PointSet& A) {
  GradedPiece p = ideal_piece(F, A, 5);
  if (p.dim() != 3)
    throw GenericityError("genericity violated: quintic space has wrong dimension (" +
                          std::to_string(p.dim()) + " instead of 3)");
  return {p.basis[0], p.basis[1], p.basis[2]};
}

std::vector<HomForm> lambda6_spanning_set(const std::array<HomForm, 3>& Q) {
  std::vector<HomForm> out;
  for (int i = 0; i < 3; ++i) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    for (const auto& q : Q) out.push_back(shift(q, e));
  }
  return out;
}

HomForm sextic_complement(const PrimeField& F, const PointSet& A, const std::array<HomForm, 3>& Q) {
  GradedPiece ia6 = ideal_piece(F, A, 6);
  GradedPiece lam = span_piece(F, 6, lambda6_spanning_set(Q));
  if (ia6.dim() != 10 || lam.dim() != 9)
    throw GenericityError("genericity violated in degree 6 (dim (I_A)_6 = " +
                          std::to_string(ia6.dim()) + ", dim Lambda_6 = " +
                          std::to_string(lam.dim()) + ")");
  // Lambda_6 is a hyperplane of (I_A)_6, so exactly one leading monomial of
  // the echelon basis of (I_A)_6 is missing from the one of Lambda_6.
  for (std::size_t r = 0; r < ia6.dim(); ++r)
    if (!std::binary_search(lam.pivots.begin(), lam.pivots.end(), ia6.pivots[r]))
      return ia6.basis[r];
  throw GenericityError("genericity violated in degree 6 (Lambda_6 not contained in (I_A)_6)");
}

std::array<SyzygyColumn, 3> degree7_syzygies(const PrimeField& F, const std::array<HomForm, 3>& Q,
                                             const HomForm& S) {
  // unknowns: 6 coefficients for each of c1, c2, c3 (degree-2 monomial
  // order), then 3 for l; image in degree 7 (36 monomials)
  const auto& m2 = monomials(2);
  const auto& m1 = monomials(1);
  DenseMatrix map(num_monomials(7), 21);
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < m2.size(); ++k) {
      HomForm img = shift(Q[i], m2[k]);
      for (std::size_t r = 0; r < img.coeffs().size(); ++r) map.at(r, i * 6 + k) = img.coeffs()[r];
    }
  for (std::size_t k = 0; k < m1.size(); ++k) {
    HomForm img = shift(S, m1[k]);
    for (std::size_t r = 0; r < img.coeffs().size(); ++r) map.at(r, 18 + k) = img.coeffs()[r];
  }
  RowEchelon ker = rref(F, kernel_basis(F, map));
  if (ker.rank() != 3)
    throw GenericityError("genericity violated: syzygy defect (" + std::to_string(ker.rank()) +
                          " relations of degree 7 instead of 3)");
  std::array<SyzygyColumn, 3> out;
  for (int v = 0; v < 3; ++v) {
    auto row = ker.reduced.row(v);
    for (int i = 0; i < 3; ++i)
      out[v].c[i] = HomForm(2, std::vector<Fp>(row.begin() + i * 6, row.begin() + i * 6 + 6));
    out[v].l = HomForm(1, std::vector<Fp>(row.begin() + 18, row.end()));
  }
  return out;
}

HBMatrix assemble_hb(const PrimeField& F, const PointSet& A) {
  auto Q = quintic_generators(F, A);
  HomForm S = sextic_complement(F, A, Q);
  auto syz = degree7_syzygies(F, Q, S);
  HBMatrix hb;
  for (int v = 0; v < 3; ++v) {
    for (int i = 0; i < 3; ++i) hb.quadric[i][v] = syz[v].c[i];
    hb.linear[v] = syz[v].l;
  }
  // signed minors in 1-based row numbering: (-1)^i for i = 1..3, + for S
  std::array<HomForm, 4> minors;
  for (int r = 0; r < 4; ++r) minors[r] = signed_form(F, hb.minor(F, r), r < 3 && r % 2 == 0);
  const std::array<const HomForm*, 4> gens{&Q[0], &Q[1], &Q[2], &S};
  // find the common scalar c with minor = c * generator
  std::size_t piv = 0;
  while (piv < Q[0].coeffs().size() && Q[0].coeffs()[piv].is_zero()) ++piv;
  if (minors[0].degree() != 5)
    throw GenericityError("genericity violated: Hilbert-Burch minor vanishes identically");
  Fp c = F.mul(minors[0].coeffs()[piv], F.inv(Q[0].coeffs()[piv]));
  if (c.is_zero()) throw GenericityError("genericity violated: Hilbert-Burch minors vanish");
  for (int r = 0; r < 4; ++r) {
    if (!(minors[r] == scale(F, c, *gens[r])))
      throw GenericityError("genericity violated: minor " + std::to_string(r + 1) +
                            " is not proportional to its generator");
  }
  for (int i = 0; i < 3; ++i) hb.Q[i] = minors[i];
  hb.S = minors[3];
  return hb;
}

}  // namespace nonic
