#include "nonic/liaison.hpp"

#include <string>

namespace nonic {

LiaisonBase make_liaison_base(const PrimeField& F, const PointSet& A) {
  LiaisonBase b{A, assemble_hb(F, A), ideal_piece(F, A, 9)};
  return b;
}

namespace {

void check_pencil(const PrimeField& F, const Case1Params& w) {
  DenseMatrix m(2, 10);
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 10; ++k) m.at(r, k) = w.W[r][k];
  if (rank(F, m) != 2) throw DegenerateError("degenerate pencil: rows of W are dependent");
}

std::string dims_message(const char* what, std::size_t b9, std::size_t expect_b9, std::size_t sum) {
  return std::string("non-generic ") + what + " (improper intersection or shared points): dim (I_B)_9 = " +
         std::to_string(b9) + " (expected " + std::to_string(expect_b9) +
         "), dim (I_A)_9 + (I_B)_9 = " + std::to_string(sum) + " (expected 54)";
}

ResidualIdeal finish_residual(const PrimeField& F, const LiaisonBase& base, std::vector<HomForm> gens,
                              std::size_t expect_b9, const char* what) {
  ResidualIdeal res;
  res.generators = std::move(gens);
  res.piece9 = generated_piece(F, res.generators, 9);
  const std::size_t s = sum_dim(F, base.ia9, res.piece9);
  if (res.piece9.dim() != expect_b9 || s != 54)
    throw DegenerateError(dims_message(what, res.piece9.dim(), expect_b9, s));
  return res;
}

}  // namespace

std::array<HomForm, 2> case1_sextics(const PrimeField& F, const HBMatrix& hb, const Case1Params& w) {
  check_pencil(F, w);
  std::array<HomForm, 2> out;
  for (int r = 0; r < 2; ++r) {
    HomForm f = scale(F, w.a(r), hb.S);
    for (int j = 0; j < 3; ++j) f = add(F, f, multiply(F, w.L(r, j), hb.Q[j]));
    out[r] = f;
  }
  return out;
}

std::vector<HomForm> stacked_minors(const PrimeField& F, const HBMatrix& hb,
                                    const std::array<std::array<HomForm, 4>, 2>& top) {
  std::vector<std::array<HomForm, 4>> rows{top[0], top[1]};
  for (int v = 0; v < 3; ++v)
    rows.push_back({hb.quadric[0][v], hb.quadric[1][v], hb.quadric[2][v], hb.linear[v]});
  std::vector<HomForm> out;
  for (int r = 0; r < 5; ++r) {
    std::vector<std::vector<HomForm>> m;
    for (int k = 0; k < 5; ++k)
      if (k != r) m.emplace_back(rows[k].begin(), rows[k].end());
    HomForm d = determinant(F, m);
    // omitted row r+1: odd rows get a minus sign
    out.push_back(r % 2 == 0 ? scale(F, F.neg(Fp(1)), d) : d);
  }
  return out;
}

ResidualIdeal residual_66(const PrimeField& F, const LiaisonBase& base, const Case1Params& w) {
  check_pencil(F, w);
  std::array<std::array<HomForm, 4>, 2> top;
  for (int r = 0; r < 2; ++r)
    top[r] = {w.L(r, 0), w.L(r, 1), w.L(r, 2), HomForm::constant(w.a(r))};
  return finish_residual(F, base, stacked_minors(F, base.hb, top), 37, "pencil");
}

ResidualIdeal residual_57(const PrimeField& F, const LiaisonBase& base, const Case2Params& th) {
  if (th.a[0].is_zero() && th.a[1].is_zero() && th.a[2].is_zero())
    throw DegenerateError("degenerate quintic: a = 0");
  std::array<std::array<HomForm, 4>, 2> top;
  top[0] = {HomForm::constant(th.a[0]), HomForm::constant(th.a[1]), HomForm::constant(th.a[2]),
            HomForm()};
  top[1] = {th.q[0], th.q[1], th.q[2], HomForm()};
  return finish_residual(F, base, stacked_minors(F, base.hb, top), 38, "quintic-septic pair");
}

std::vector<Fp> dual_point(const PrimeField& F, const GradedPiece& a9, const GradedPiece& b9) {
  DenseMatrix stacked = vstack(a9.matrix(), b9.matrix());
  DenseMatrix k = kernel_basis(F, stacked);
  if (k.rows() != 1)
    throw DegenerateError("not a hyperplane: dim (I_A)_9 = " + std::to_string(a9.dim()) +
                          ", dim (I_B)_9 = " + std::to_string(b9.dim()) + ", dim of sum = " +
                          std::to_string(stacked.cols() - k.rows()));
  std::vector<Fp> t = k.row_vector(0);
  std::size_t last = t.size();
  while (last > 0 && t[last - 1].is_zero()) --last;
  Fp inv = F.inv(t[last - 1]);
  for (auto& x : t) x = F.mul(x, inv);
  return t;
}

std::vector<Fp> map_f(const PrimeField& F, const LiaisonBase& base, const Case1Params& w) {
  return dual_point(F, base.ia9, residual_66(F, base, w).piece9);
}

std::vector<Fp> map_fprime(const PrimeField& F, const LiaisonBase& base, const Case2Params& th) {
  return dual_point(F, base.ia9, residual_57(F, base, th).piece9);
}

std::size_t plucker_index(int k, int l) {
  if (!(0 <= k && k < l && l < 10)) throw std::invalid_argument("plucker_index: need 0 <= k < l < 10");
  // pairs (0,1),...,(0,9),(1,2),...
  return static_cast<std::size_t>(k * 9 - k * (k - 1) / 2 + (l - k - 1));
}

std::vector<Fp> plucker_coords(const PrimeField& F, const Case1Params& w) {
  std::vector<Fp> p;
  for (int k = 0; k < 10; ++k)
    for (int l = k + 1; l < 10; ++l)
      p.push_back(F.sub(F.mul(w.W[0][k], w.W[1][l]), F.mul(w.W[0][l], w.W[1][k])));
  return p;
}

Case2Params case2_from_vector(const std::vector<Fp>& v, int i0) {
  if (v.size() != 15) throw std::invalid_argument("Case-2 parameter vector must have 15 entries");
  if (i0 < 0 || i0 > 2) throw std::invalid_argument("gauge index must be 0, 1 or 2");
  Case2Params th;
  for (int i = 0; i < 3; ++i) th.a[i] = v[i];
  int slot = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == i0) continue;
    HomForm q(2);
    for (int k = 0; k < 6; ++k) q.coeff(kQuadricLexOrder[k]) = v[3 + 6 * slot + k];
    th.q[j] = q;
    ++slot;
  }
  return th;
}

Case2Params case2_gauge(const PrimeField& F, const Case2Params& th, int i0) {
  if (th.a[i0].is_zero()) throw DegenerateError("gauge chart needs a nonzero quintic coefficient");
  Case2Params g;
  Fp inv = F.inv(th.a[i0]);
  for (int i = 0; i < 3; ++i) g.a[i] = F.mul(th.a[i], inv);
  // G - q_{i0} Q cancels the i0 slot (same septic modulo Q)
  for (int j = 0; j < 3; ++j) g.q[j] = sub(F, th.q[j], scale(F, g.a[j], th.q[i0]));
  return g;
}

std::vector<Fp> case2_to_vector(const PrimeField& F, const Case2Params& th, int i0) {
  Case2Params g = case2_gauge(F, th, i0);
  std::vector<Fp> v(g.a.begin(), g.a.end());
  for (int j = 0; j < 3; ++j) {
    if (j == i0) continue;
    for (const auto& e : kQuadricLexOrder) v.push_back(g.q[j].coeff(e));
  }
  return v;
}

bool proportional(const PrimeField& F, const std::vector<Fp>& t, const std::vector<Fp>& s) {
  if (t.size() != s.size()) return false;
  std::size_t i = 0;
  while (i < t.size() && t[i].is_zero()) ++i;
  if (i == t.size() || s[i].is_zero()) return false;
  Fp c = F.mul(s[i], F.inv(t[i]));
  for (std::size_t k = 0; k < t.size(); ++k)
    if (F.mul(c, t[k]) != s[k]) return false;
  return true;
}

}  // namespace nonic
