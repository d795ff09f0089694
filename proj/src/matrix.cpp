#include "nonic/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nonic {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp(1);
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Fp>>& rows) {
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Fp> DenseMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

void DenseMatrix::append_row(std::span<const Fp> r) {
  if (r.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void DenseMatrix::truncate_rows(std::size_t n) {
  if (n < rows_) {
    rows_ = n;
    data_.resize(rows_ * cols_);
  }
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// Shared driver; `parallel` only changes how the independent row updates of
// one elimination step are scheduled.
RowEchelon rref_impl(const PrimeField& F, DenseMatrix m, bool parallel) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const bool big = parallel && R * C >= 4096;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && m.at(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < C; ++k) std::swap(m.at(piv, k), m.at(rank, k));
    Fp inv = F.inv(m.at(rank, c));
    for (std::size_t k = c; k < C; ++k) m.at(rank, k) = F.mul(m.at(rank, k), inv);
    const std::size_t pr = rank;
    auto eliminate = [&](std::size_t r) {
      if (r == pr) return;
      Fp f = m.at(r, c);
      if (f.is_zero()) return;
      for (std::size_t k = c; k < C; ++k) m.at(r, k) = F.sub_mul(m.at(r, k), f, m.at(pr, k));
    };
    if (big) {
#pragma omp parallel for schedule(static)
      for (std::size_t r = 0; r < R; ++r) eliminate(r);
    } else {
      for (std::size_t r = 0; r < R; ++r) eliminate(r);
    }
    pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RowEchelon rref(const PrimeField& F, DenseMatrix m) { return rref_impl(F, std::move(m), true); }
RowEchelon rref_serial(const PrimeField& F, DenseMatrix m) {
  return rref_impl(F, std::move(m), false);
}

std::size_t rank(const PrimeField& F, const DenseMatrix& m) { return rref(F, m).rank(); }

DenseMatrix kernel_basis(const PrimeField& F, const DenseMatrix& m) {
  RowEchelon e = rref(F, m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  DenseMatrix k(0, C);
  std::vector<Fp> v(C);
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Fp(0));
    v[f] = Fp(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced.at(i, f));
    k.append_row(v);
  }
  return k;
}

std::optional<std::vector<Fp>> solve(const PrimeField& F, const DenseMatrix& m,
                                     std::span<const Fp> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: length(b) != rows");
  const std::size_t C = m.cols();
  DenseMatrix aug(m.rows(), C + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < C; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, C) = b[r];
  }
  RowEchelon e = rref(F, std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  std::vector<Fp> x(C);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced.at(i, C);
  return x;
}

std::vector<Fp> mat_vec(const PrimeField& F, const DenseMatrix& m, std::span<const Fp> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: width mismatch");
  std::vector<Fp> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) y[r] = dot(F, m.row(r), x);
  return y;
}

Fp dot(const PrimeField& F, std::span<const Fp> a, std::span<const Fp> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  // p < 2^31, so two products plus a residue still fit in 64 bits
  std::uint64_t acc = 0;
  const std::uint64_t p = F.modulus();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i].v) * b[i].v;
    if ((i & 1) == 1) acc %= p;
  }
  return Fp(static_cast<std::uint32_t>(acc % p));
}

DenseMatrix vstack(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: width mismatch");
  DenseMatrix s = a;
  for (std::size_t r = 0; r < b.rows(); ++r) s.append_row(b.row(r));
  return s;
}

}  // namespace nonic
