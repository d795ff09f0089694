#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nonic/field.hpp"
#include "nonic/matrix.hpp"

namespace nonic {

// Exponent triple (e0, e1, e2) of x0^e0 x1^e1 x2^e2.
using Exponent = std::array<int, 3>;

// Monomials of degree d are indexed by e2 ascending, then e1 ascending:
// x0^d, x0^(d-1) x1, ..., x1^d, x0^(d-1) x2, ... For each fixed degree this
// is the grevlex order with x0 > x1 > x2, read from largest to smallest.
constexpr std::size_t num_monomials(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * (d + 2) / 2;
}
std::size_t monomial_index(int d, const Exponent& e);  // throws std::invalid_argument("bad exponent")
Exponent monomial_at(int d, std::size_t index);
const std::vector<Exponent>& monomials(int d);

// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2: the layout used for quadric
// coefficients inside parameter vectors.
extern const std::array<Exponent, 6> kQuadricLexOrder;

class HomForm {
 public:
  HomForm() = default;  // the zero form of degree 0
  explicit HomForm(int degree) : degree_(degree), coeffs_(num_monomials(degree)) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }
  HomForm(int degree, std::vector<Fp> coeffs);

  static HomForm constant(Fp c);
  static HomForm monomial(int degree, const Exponent& e, Fp c = Fp(1));
  static HomForm linear(Fp a0, Fp a1, Fp a2);

  int degree() const { return degree_; }
  const std::vector<Fp>& coeffs() const { return coeffs_; }
  std::vector<Fp>& coeffs() { return coeffs_; }
  Fp coeff(const Exponent& e) const { return coeffs_[monomial_index(degree_, e)]; }
  Fp& coeff(const Exponent& e) { return coeffs_[monomial_index(degree_, e)]; }
  bool is_zero() const;

  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_ = 0;
  std::vector<Fp> coeffs_ = std::vector<Fp>(1);
};

HomForm multiply(const PrimeField& F, const HomForm& f, const HomForm& g);
// Sums: a zero summand is accepted in any degree; otherwise degrees must agree.
HomForm add(const PrimeField& F, const HomForm& f, const HomForm& g);
HomForm sub(const PrimeField& F, const HomForm& f, const HomForm& g);
HomForm scale(const PrimeField& F, Fp c, const HomForm& f);
// Multiply by x^e.
HomForm shift(const HomForm& f, const Exponent& e);

// Determinant of a square matrix of forms by cofactor expansion. Entries must
// be homogeneous with consistent degrees (zero entries are degree-free).
HomForm determinant(const PrimeField& F, const std::vector<std::vector<HomForm>>& m);

class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(Fp a, Fp b, Fp c);  // throws std::invalid_argument if all zero
  Fp operator[](int i) const { return c_[i]; }
  const std::array<Fp, 3>& coords() const { return c_; }
  // First nonzero coordinate scaled to 1.
  ProjPoint normalized(const PrimeField& F) const;
  bool same_point(const PrimeField& F, const ProjPoint& o) const;

 private:
  std::array<Fp, 3> c_{Fp(1), Fp(0), Fp(0)};
};

// Ordered list of pairwise distinct projective points. Representatives are
// kept as given; evaluation depends on them.
class PointSet {
 public:
  PointSet() = default;
  PointSet(const PrimeField& F, std::vector<ProjPoint> pts);  // throws on duplicates
  std::size_t size() const { return pts_.size(); }
  const ProjPoint& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<ProjPoint>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  PointSet without(std::size_t i) const;
  PointSet subset(std::span<const std::size_t> idx) const;

 private:
  std::vector<ProjPoint> pts_;
};

struct Decomposition {
  PointSet points;
  std::optional<std::vector<Fp>> lambdas;  // all nonzero when present

  void validate() const;  // throws std::invalid_argument on length mismatch or zero lambda
};

Fp evaluate(const PrimeField& F, const HomForm& f, const ProjPoint& P);
// (P^alpha) in monomial order; g . veronese_vector(P, d) = g(P).
std::vector<Fp> veronese_vector(const PrimeField& F, const ProjPoint& P, int d);

std::vector<Fp> contracted_from_waring(const PrimeField& F, const Decomposition& dec, int d);
std::optional<std::vector<Fp>> waring_from_contracted(const PrimeField& F, std::span<const Fp> t,
                                                      const PointSet& points);
// Degree of a coefficient vector of length C(d+2,2); throws if none.
int degree_of_length(std::size_t n);

// Diagonal rescaling between contracted coordinates and the coefficients of
// the actual polynomial sum lambda_i L_i^d (multiply by multinomial d!/(e0!e1!e2!)).
std::vector<Fp> contracted_to_polynomial(const PrimeField& F, std::span<const Fp> t);
std::vector<Fp> polynomial_to_contracted(const PrimeField& F, std::span<const Fp> f);

// Stack forms (all of degree d) as matrix rows.
DenseMatrix forms_matrix(int d, std::span<const HomForm> forms);

}  // namespace nonic
