#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nonic/field.hpp"

namespace nonic {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::size_t cols, const std::vector<std::vector<Fp>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Fp> row_vector(std::size_t r) const;

  void append_row(std::span<const Fp> r);
  // Keep only the first n rows.
  void truncate_rows(std::size_t n);

  DenseMatrix transpose() const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fp> data_;
};

struct RowEchelon {
  DenseMatrix reduced;               // nonzero rows only, leading 1s, pivot columns cleared
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form with first-nonzero pivoting. The parallel and
// serial variants produce identical results; the serial one is the reference.
RowEchelon rref(const PrimeField& F, DenseMatrix m);
RowEchelon rref_serial(const PrimeField& F, DenseMatrix m);

std::size_t rank(const PrimeField& F, const DenseMatrix& m);

// Rows span the right kernel {x : m x = 0}, one row per free column in
// increasing order (1 at the free column, zeros at the other free columns).
DenseMatrix kernel_basis(const PrimeField& F, const DenseMatrix& m);

// One solution of m x = b, free variables set to zero; nullopt if inconsistent.
std::optional<std::vector<Fp>> solve(const PrimeField& F, const DenseMatrix& m,
                                     std::span<const Fp> b);

std::vector<Fp> mat_vec(const PrimeField& F, const DenseMatrix& m, std::span<const Fp> x);
Fp dot(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b);

// Stack the rows of a and b (equal column counts).
DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace nonic
