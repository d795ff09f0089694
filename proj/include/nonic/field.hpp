#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonic {

// Residue class in [0, p). Arithmetic goes through PrimeField so that the
// modulus is never implicit.
struct Fp {
  std::uint32_t v = 0;
  constexpr Fp() = default;
  constexpr explicit Fp(std::uint32_t x) : v(x) {}
  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 31991;

  // Throws FieldError unless 2 < p < 2^31 and p is prime.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Fp from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fp(static_cast<std::uint32_t>(r));
  }
  // Representative in (-p/2, p/2].
  std::int64_t balanced(Fp a) const {
    return a.v > p_ / 2 ? static_cast<std::int64_t>(a.v) - p_ : a.v;
  }

  Fp add(Fp a, Fp b) const {
    std::uint32_t s = a.v + b.v;
    return Fp(s >= p_ ? s - p_ : s);
  }
  Fp sub(Fp a, Fp b) const { return Fp(a.v >= b.v ? a.v - b.v : a.v + p_ - b.v); }
  Fp neg(Fp a) const { return Fp(a.v == 0 ? 0 : p_ - a.v); }
  Fp mul(Fp a, Fp b) const {
    return Fp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_));
  }
  // a - b*c
  Fp sub_mul(Fp a, Fp b, Fp c) const { return sub(a, mul(b, c)); }
  Fp pow(Fp a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Fp inv(Fp a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace nonic
