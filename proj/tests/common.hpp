#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nonic/certify.hpp"

namespace nonic::testing {

inline const std::array<std::array<int, 3>, 18> kReferenceA{{{1, 1, 1},  {0, 1, 2},  {-1, 2, 1}, {1, 2, 3},  {1, -2, 0},
                                                         {2, 1, 4},  {4, 2, -3}, {1, 5, 1},  {5, 2, 3},  {6, 2, 3},
                                                         {1, 7, 7},  {1, 7, 3},  {6, 5, 4},  {-7, 2, 3}, {3, 7, 4},
                                                         {2, -5, 1}, {6, 3, -4}, {-7, 6, 6}}};

inline const std::vector<std::int64_t> kT1Lambdas{10308, -9437,  -13956, -12270, 2135,  -4854,
                                                  -2213, 1755,   -13629, 7308,   -8496, 2940,
                                                  11348, -12437, -6712,  4086,   -823,  -2818};
inline const std::vector<std::int64_t> kT3Lambdas{5864,  9496,  11539,  1233,  -13315, -14222,
                                                  10709, -5067, 13797,  13169, -10531, 1592,
                                                  12589, 1728,  -4725,  -4784, -8696,  7515};
inline const std::vector<std::int64_t> kT1Parameters{1,     10399, 13534, -633,  -11455, 2134,   11038, -8888,
                                                     -588,  1927,  4114,  11328, 13814,  -10664, -1749};
inline const std::array<std::array<std::int64_t, 10>, 2> kT3Pencil{
    {{1, 14307, 13416, 11657, 9248, 8324, -13193, -1403, 12171, 0},
     {0, 7694, 12549, -12983, 538, 11728, 743, -12966, 12870, 1}}};

inline std::string fixture(const std::string& name) { return std::string(NONIC_FIXTURE_DIR) + "/" + name; }

inline PointSet points_from(const PrimeField& F, const auto& rows) {
  std::vector<ProjPoint> pts;
  for (const auto& r : rows) pts.emplace_back(F.from_int(r[0]), F.from_int(r[1]), F.from_int(r[2]));
  return PointSet(F, std::move(pts));
}

inline PointSet reference_A(const PrimeField& F) { return points_from(F, kReferenceA); }

inline std::vector<Fp> to_field(const PrimeField& F, const std::vector<std::int64_t>& v) {
  std::vector<Fp> out;
  for (auto x : v) out.push_back(F.from_int(x));
  return out;
}

inline Decomposition reference_decomposition(const PrimeField& F, const std::vector<std::int64_t>& lambdas) {
  return Decomposition{reference_A(F), to_field(F, lambdas)};
}

inline Case1Params t3_pencil(const PrimeField& F) {
  Case1Params w;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 10; ++k) w.W[r][k] = F.from_int(kT3Pencil[r][k]);
  return w;
}

inline std::vector<Fp> random_vector(const PrimeField& F, std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> U(0, F.modulus() - 1);
  std::vector<Fp> v(n);
  for (auto& x : v) x = Fp(U(rng));
  return v;
}

inline HomForm random_form(const PrimeField& F, std::mt19937_64& rng, int d) {
  return HomForm(d, random_vector(F, rng, num_monomials(d)));
}

inline DenseMatrix random_matrix(const PrimeField& F, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  DenseMatrix m(r, c);
  std::uniform_int_distribution<std::uint32_t> U(0, F.modulus() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Fp(U(rng));
  return m;
}

}  // namespace nonic::testing
