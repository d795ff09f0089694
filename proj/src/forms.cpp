#include "nonic/forms.hpp"

#include <string>

namespace nonic {

const std::array<Exponent, 6> kQuadricLexOrder = {
    Exponent{2, 0, 0}, Exponent{1, 1, 0}, Exponent{1, 0, 1},
    Exponent{0, 2, 0}, Exponent{0, 1, 1}, Exponent{0, 0, 2}};

std::size_t monomial_index(int d, const Exponent& e) {
  if (d < 0 || e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != d)
    throw std::invalid_argument("bad exponent");
  const std::size_t e2 = e[2];
  return e2 * (d + 1) - e2 * (e2 - 1) / 2 + e[1];
}

Exponent monomial_at(int d, std::size_t index) {
  if (index >= num_monomials(d)) throw std::out_of_range("monomial index out of range");
  int e2 = 0;
  std::size_t block = d + 1;
  while (index >= block) {
    index -= block;
    --block;
    ++e2;
  }
  int e1 = static_cast<int>(index);
  return {d - e1 - e2, e1, e2};
}

const std::vector<Exponent>& monomials(int d) {
  constexpr int kMaxCached = 64;
  static const std::vector<std::vector<Exponent>> table = [] {
    std::vector<std::vector<Exponent>> t(kMaxCached + 1);
    for (int k = 0; k <= kMaxCached; ++k)
      for (std::size_t i = 0; i < num_monomials(k); ++i) t[k].push_back(monomial_at(k, i));
    return t;
  }();
  if (d < 0 || d > kMaxCached) throw std::out_of_range("degree outside monomial table");
  return table[d];
}

HomForm::HomForm(int degree, std::vector<Fp> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != num_monomials(degree))
    throw std::invalid_argument("coefficient count does not match degree " + std::to_string(degree));
}

HomForm HomForm::constant(Fp c) { return HomForm(0, {c}); }

HomForm HomForm::monomial(int degree, const Exponent& e, Fp c) {
  HomForm f(degree);
  f.coeff(e) = c;
  return f;
}

HomForm HomForm::linear(Fp a0, Fp a1, Fp a2) { return HomForm(1, {a0, a1, a2}); }

bool HomForm::is_zero() const {
  for (auto c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HomForm multiply(const PrimeField& F, const HomForm& f, const HomForm& g) {
  const int d = f.degree() + g.degree();
  HomForm h(d);
  const auto& mf = monomials(f.degree());
  const auto& mg = monomials(g.degree());
  for (std::size_t i = 0; i < mf.size(); ++i) {
    Fp a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < mg.size(); ++j) {
      Fp b = g.coeffs()[j];
      if (b.is_zero()) continue;
      Exponent e{mf[i][0] + mg[j][0], mf[i][1] + mg[j][1], mf[i][2] + mg[j][2]};
      auto& c = h.coeffs()[monomial_index(d, e)];
      c = F.add(c, F.mul(a, b));
    }
  }
  return h;
}

HomForm add(const PrimeField& F, const HomForm& f, const HomForm& g) {
  if (f.degree() != g.degree()) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    throw std::invalid_argument("adding forms of degrees " + std::to_string(f.degree()) + " and " +
                                std::to_string(g.degree()));
  }
  HomForm h = f;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i)
    h.coeffs()[i] = F.add(h.coeffs()[i], g.coeffs()[i]);
  return h;
}

HomForm scale(const PrimeField& F, Fp c, const HomForm& f) {
  HomForm h = f;
  for (auto& x : h.coeffs()) x = F.mul(c, x);
  return h;
}

HomForm sub(const PrimeField& F, const HomForm& f, const HomForm& g) {
  return add(F, f, scale(F, F.neg(Fp(1)), g));
}

HomForm shift(const HomForm& f, const Exponent& e) {
  const int k = e[0] + e[1] + e[2];
  const int d = f.degree() + k;
  HomForm h(d);
  const auto& mf = monomials(f.degree());
  for (std::size_t i = 0; i < mf.size(); ++i)
    h.coeffs()[monomial_index(d, {mf[i][0] + e[0], mf[i][1] + e[1], mf[i][2] + e[2]})] =
        f.coeffs()[i];
  return h;
}

namespace {

HomForm det_rec(const PrimeField& F, const std::vector<std::vector<HomForm>>& m,
                std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return HomForm::constant(Fp(1));
  HomForm acc;  // zero, degree-free
  bool any = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    const HomForm& e = m[row][c];
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    HomForm minor = det_rec(F, m, rest, row + 1);
    if (minor.is_zero()) continue;
    HomForm term = multiply(F, e, minor);
    if (k % 2 == 1) term = scale(F, F.neg(Fp(1)), term);
    acc = any ? add(F, acc, term) : term;
    any = true;
  }
  return acc;
}

}  // namespace

HomForm determinant(const PrimeField& F, const std::vector<std::vector<HomForm>>& m) {
  for (const auto& r : m)
    if (r.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(F, m, cols, 0);
}

ProjPoint::ProjPoint(Fp a, Fp b, Fp c) : c_{a, b, c} {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw std::invalid_argument("projective point with all coordinates zero");
}

ProjPoint ProjPoint::normalized(const PrimeField& F) const {
  int i = 0;
  while (c_[i].is_zero()) ++i;
  Fp inv = F.inv(c_[i]);
  return ProjPoint(F.mul(c_[0], inv), F.mul(c_[1], inv), F.mul(c_[2], inv));
}

bool ProjPoint::same_point(const PrimeField& F, const ProjPoint& o) const {
  return normalized(F).coords() == o.normalized(F).coords();
}

PointSet::PointSet(const PrimeField& F, std::vector<ProjPoint> pts) : pts_(std::move(pts)) {
  for (std::size_t i = 0; i < pts_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pts_[i].same_point(F, pts_[j]))
        throw std::invalid_argument("duplicate point at positions " + std::to_string(j) + " and " +
                                    std::to_string(i));
}

PointSet PointSet::without(std::size_t i) const {
  PointSet s = *this;
  s.pts_.erase(s.pts_.begin() + static_cast<std::ptrdiff_t>(i));
  return s;
}

PointSet PointSet::subset(std::span<const std::size_t> idx) const {
  PointSet s;
  for (auto i : idx) s.pts_.push_back(pts_.at(i));
  return s;
}

void Decomposition::validate() const {
  if (!lambdas) return;
  if (lambdas->size() != points.size())
    throw std::invalid_argument("lambda count does not match point count");
  for (std::size_t i = 0; i < lambdas->size(); ++i)
    if ((*lambdas)[i].is_zero())
      throw std::invalid_argument("lambda " + std::to_string(i) + " is zero (redundant summand)");
}

Fp evaluate(const PrimeField& F, const HomForm& f, const ProjPoint& P) {
  return dot(F, f.coeffs(), veronese_vector(F, P, f.degree()));
}

std::vector<Fp> veronese_vector(const PrimeField& F, const ProjPoint& P, int d) {
  std::vector<std::array<Fp, 3>> pw(d + 1);
  pw[0] = {Fp(1), Fp(1), Fp(1)};
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i < 3; ++i) pw[k][i] = F.mul(pw[k - 1][i], P[i]);
  std::vector<Fp> v;
  v.reserve(num_monomials(d));
  for (const auto& e : monomials(d)) v.push_back(F.mul(F.mul(pw[e[0]][0], pw[e[1]][1]), pw[e[2]][2]));
  return v;
}

std::vector<Fp> contracted_from_waring(const PrimeField& F, const Decomposition& dec, int d) {
  if (!dec.lambdas) throw std::invalid_argument("decomposition has no lambdas");
  dec.validate();
  std::vector<Fp> t(num_monomials(d));
  for (std::size_t i = 0; i < dec.points.size(); ++i) {
    auto v = veronese_vector(F, dec.points[i], d);
    Fp l = (*dec.lambdas)[i];
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = F.add(t[k], F.mul(l, v[k]));
  }
  return t;
}

int degree_of_length(std::size_t n) {
  for (int d = 0; num_monomials(d) <= n; ++d)
    if (num_monomials(d) == n) return d;
  throw std::invalid_argument("length " + std::to_string(n) + " is not C(d+2,2)");
}

std::optional<std::vector<Fp>> waring_from_contracted(const PrimeField& F, std::span<const Fp> t,
                                                      const PointSet& points) {
  const int d = degree_of_length(t.size());
  // columns = points, rows = monomials
  DenseMatrix m(t.size(), points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto v = veronese_vector(F, points[i], d);
    for (std::size_t k = 0; k < v.size(); ++k) m.at(k, i) = v[k];
  }
  return solve(F, m, t);
}

namespace {

std::vector<Fp> multinomials(const PrimeField& F, int d) {
  std::vector<Fp> fact(d + 1);
  fact[0] = Fp(1);
  for (int k = 1; k <= d; ++k) fact[k] = F.mul(fact[k - 1], F.from_int(k));
  std::vector<Fp> out;
  for (const auto& e : monomials(d)) {
    Fp den = F.mul(F.mul(fact[e[0]], fact[e[1]]), fact[e[2]]);
    if (den.is_zero() || fact[d].is_zero())
      throw std::domain_error("multinomial rescaling undefined: p divides d!");
    out.push_back(F.mul(fact[d], F.inv(den)));
  }
  return out;
}

}  // namespace

std::vector<Fp> contracted_to_polynomial(const PrimeField& F, std::span<const Fp> t) {
  auto w = multinomials(F, degree_of_length(t.size()));
  std::vector<Fp> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = F.mul(t[i], w[i]);
  return out;
}

std::vector<Fp> polynomial_to_contracted(const PrimeField& F, std::span<const Fp> f) {
  auto w = multinomials(F, degree_of_length(f.size()));
  std::vector<Fp> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = F.mul(f[i], F.inv(w[i]));
  return out;
}

DenseMatrix forms_matrix(int d, std::span<const HomForm> forms) {
  DenseMatrix m(0, num_monomials(d));
  for (const auto& f : forms) {
    if (f.degree() != d && !f.is_zero()) throw std::invalid_argument("forms_matrix: degree mismatch");
    if (f.degree() != d)
      m.append_row(std::vector<Fp>(num_monomials(d)));
    else
      m.append_row(f.coeffs());
  }
  return m;
}

}  // namespace nonic
