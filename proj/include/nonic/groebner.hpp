#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "nonic/field.hpp"

namespace nonic {

constexpr int kMaxVars = 20;

// Monomial in at most kMaxVars variables. Stored as the byte key
// (total degree, 255 - e_0, 255 - e_1, ...), so that ordinary lexicographic
// byte comparison is grevlex with x_0 the smallest variable.
struct Monomial {
  std::array<std::uint8_t, kMaxVars + 1> key{};

  Monomial() { key.fill(255); key[0] = 0; }
  static Monomial from_exponents(const std::vector<int>& e);
  static Monomial variable(int i, int power = 1);

  int degree() const { return key[0]; }
  int exponent(int i) const { return 255 - key[1 + i]; }
  bool is_one() const { return key[0] == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key == b.key; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.key != b.key; }
  // grevlex comparison
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.key.data(), b.key.data(), a.key.size()) < 0;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  bool divides(const Monomial& b) const;
  std::uint32_t support() const;  // bitmask of variables with positive exponent
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Fp c;
};

// Polynomial as a list of terms sorted strictly decreasing in grevlex, no
// zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}
  SparsePoly(int nvars, std::vector<Term> terms);  // sorts, drops zeros; rejects duplicates

  static SparsePoly constant(int nvars, Fp c);
  static SparsePoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
  const Monomial& lm() const { return terms_.front().m; }
  Fp lc() const { return terms_.front().c; }
  int total_degree() const;
  Fp evaluate(const PrimeField& F, const std::vector<Fp>& x) const;
  std::string to_string(const PrimeField& F) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

SparsePoly poly_add(const PrimeField& F, const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const PrimeField& F, const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_mul(const PrimeField& F, const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_scale(const PrimeField& F, Fp c, const SparsePoly& a);
// a - c * m * b
SparsePoly poly_sub_mul(const PrimeField& F, const SparsePoly& a, Fp c, const Monomial& m,
                        const SparsePoly& b);
SparsePoly make_monic(const PrimeField& F, const SparsePoly& a);

// Full division remainder; reducers are tried in the given order.
SparsePoly normal_form(const PrimeField& F, const SparsePoly& f, const std::vector<SparsePoly>& G);
SparsePoly s_polynomial(const PrimeField& F, const SparsePoly& f, const SparsePoly& g);

struct GroebnerBasis {
  int nvars = 0;
  std::vector<SparsePoly> generators;  // reduced, monic, increasing leading monomial
  bool is_trivial() const { return generators.size() == 1 && generators[0].is_constant(); }
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

struct BuchbergerOptions {
  // stop as soon as a constant shows up (basis becomes {1})
  bool stop_on_constant = true;
};

GroebnerBasis buchberger(const PrimeField& F, int nvars, const std::vector<SparsePoly>& gens,
                         const BuchbergerOptions& opts = {}, GroebnerStats* stats = nullptr);

bool ideal_is_trivial(const PrimeField& F, int nvars, const std::vector<SparsePoly>& gens);
int ideal_dimension(const GroebnerBasis& gb);
// Throws std::domain_error("not zero-dimensional") unless the dimension is 0.
std::size_t zero_dim_degree(const GroebnerBasis& gb);
// For a zero-dimensional ideal of degree 1, the unique point.
std::optional<std::vector<Fp>> unique_solution(const PrimeField& F, const GroebnerBasis& gb);

}  // namespace nonic
