#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nonic/forms.hpp"
#include "nonic/matrix.hpp"

namespace nonic {

struct HilbertData {
  std::vector<std::size_t> h;   // h(0..j_max)
  std::vector<std::size_t> dh;  // Dh(0..j_max)
};

// A linear subspace of degree-d forms held in reduced row echelon form.
struct GradedPiece {
  int degree = 0;
  std::vector<HomForm> basis;
  std::vector<std::size_t> pivots;  // leading monomial index of each basis form
  std::size_t dim() const { return basis.size(); }
  DenseMatrix matrix() const;
};

enum class UnionCase { Case1, Case2, Case3, NotApplicable };
const char* to_string(UnionCase c);

DenseMatrix evaluation_matrix(const PrimeField& F, const PointSet& Z, int d);
HilbertData hilbert_function(const PrimeField& F, const PointSet& Z, int j_max);
HilbertData hilbert_from_values(std::vector<std::size_t> h);
HilbertData hilbert_from_differences(std::vector<std::size_t> dh);

GradedPiece ideal_piece(const PrimeField& F, const PointSet& Z, int d);
// Canonical basis of the span of the given degree-d forms.
GradedPiece span_piece(const PrimeField& F, int d, std::span<const HomForm> forms);
GradedPiece span_piece(const PrimeField& F, int d, const DenseMatrix& rows);
GradedPiece intersect(const PrimeField& F, const GradedPiece& a, const GradedPiece& b);
std::size_t sum_dim(const PrimeField& F, const GradedPiece& a, const GradedPiece& b);
// All products g * m with m a monomial of degree d - deg g, for g in gens.
GradedPiece generated_piece(const PrimeField& F, std::span<const HomForm> gens, int d);

struct KruskalResult {
  std::size_t k = 0;
  std::size_t rank_checks = 0;  // as counted by the serial lexicographic scan
};
KruskalResult kruskal_rank(const PrimeField& F, const PointSet& Z, int d);
KruskalResult kruskal_rank_serial(const PrimeField& F, const PointSet& Z, int d);

bool cayley_bacharach(const PrimeField& F, const PointSet& Z, int i);
bool cayley_bacharach_serial(const PrimeField& F, const PointSet& Z, int i);

// Necessary conditions on Dh of Z = A u B for two disjoint non-redundant
// degree-d decompositions. Empty result means no violation.
std::vector<std::string> validate_joint_dh(const HilbertData& Dh, int d);

UnionCase classify_union_case(const HilbertData& Dh);
const std::vector<std::size_t>& case_table(UnionCase c);

}  // namespace nonic
