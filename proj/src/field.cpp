#include "nonic/field.hpp"

namespace nonic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw FieldError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r(1 % p_), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t t = 0, nt = 1, r = p_, nr = a.v;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return Fp(static_cast<std::uint32_t>(t));
}

}  // namespace nonic
