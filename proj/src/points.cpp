#include "nonic/points.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace nonic {

const char* to_string(UnionCase c) {
  switch (c) {
    case UnionCase::Case1: return "Case1";
    case UnionCase::Case2: return "Case2";
    case UnionCase::Case3: return "Case3";
    case UnionCase::NotApplicable: return "NotApplicable";
  }
  return "?";
}

DenseMatrix GradedPiece::matrix() const { return forms_matrix(degree, basis); }

DenseMatrix evaluation_matrix(const PrimeField& F, const PointSet& Z, int d) {
  DenseMatrix m(0, num_monomials(d));
  for (const auto& P : Z) m.append_row(veronese_vector(F, P, d));
  return m;
}

HilbertData hilbert_from_values(std::vector<std::size_t> h) {
  HilbertData out;
  out.dh.resize(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    std::size_t prev = j == 0 ? 0 : h[j - 1];
    if (h[j] < prev) throw std::invalid_argument("Hilbert function must be nondecreasing");
    out.dh[j] = h[j] - prev;
  }
  out.h = std::move(h);
  return out;
}

HilbertData hilbert_from_differences(std::vector<std::size_t> dh) {
  HilbertData out;
  std::size_t acc = 0;
  for (auto x : dh) out.h.push_back(acc += x);
  out.dh = std::move(dh);
  return out;
}

HilbertData hilbert_function(const PrimeField& F, const PointSet& Z, int j_max) {
  std::vector<std::size_t> h;
  for (int j = 0; j <= j_max; ++j) {
    // once h reaches the cardinality it stays there
    if (!h.empty() && h.back() == Z.size())
      h.push_back(Z.size());
    else
      h.push_back(Z.size() == 0 ? 0 : rank(F, evaluation_matrix(F, Z, j)));
  }
  return hilbert_from_values(std::move(h));
}

GradedPiece span_piece(const PrimeField& F, int d, const DenseMatrix& rows) {
  if (rows.cols() != num_monomials(d)) throw std::invalid_argument("span_piece: width mismatch");
  RowEchelon e = rref(F, rows);
  GradedPiece g;
  g.degree = d;
  g.pivots = e.pivots;
  for (std::size_t r = 0; r < e.rank(); ++r) g.basis.emplace_back(d, e.reduced.row_vector(r));
  return g;
}

GradedPiece span_piece(const PrimeField& F, int d, std::span<const HomForm> forms) {
  return span_piece(F, d, forms_matrix(d, forms));
}

GradedPiece ideal_piece(const PrimeField& F, const PointSet& Z, int d) {
  if (Z.size() == 0) return span_piece(F, d, DenseMatrix::identity(num_monomials(d)));
  return span_piece(F, d, kernel_basis(F, evaluation_matrix(F, Z, d)));
}

GradedPiece intersect(const PrimeField& F, const GradedPiece& a, const GradedPiece& b) {
  if (a.degree != b.degree) throw std::invalid_argument("intersect: degree mismatch");
  const int d = a.degree;
  if (a.dim() == 0 || b.dim() == 0) return span_piece(F, d, DenseMatrix(0, num_monomials(d)));
  // (alpha, beta) with alpha A + beta B = 0  =>  alpha A lies in both spans
  DenseMatrix stacked = vstack(a.matrix(), b.matrix());
  DenseMatrix rel = kernel_basis(F, stacked.transpose());
  DenseMatrix A = a.matrix();
  DenseMatrix out(rel.rows(), A.cols());
  for (std::size_t r = 0; r < rel.rows(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Fp c = rel.at(r, i);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < A.cols(); ++k)
        out.at(r, k) = F.add(out.at(r, k), F.mul(c, A.at(i, k)));
    }
  return span_piece(F, d, out);
}

std::size_t sum_dim(const PrimeField& F, const GradedPiece& a, const GradedPiece& b) {
  if (a.degree != b.degree) throw std::invalid_argument("sum_dim: degree mismatch");
  return rank(F, vstack(a.matrix(), b.matrix()));
}

GradedPiece generated_piece(const PrimeField& F, std::span<const HomForm> gens, int d) {
  DenseMatrix m(0, num_monomials(d));
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& e : monomials(d - g.degree())) m.append_row(shift(g, e).coeffs());
  }
  return span_piece(F, d, m);
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i))
      throw std::overflow_error("subset count overflows");
    r = r * (n - k + i) / i;
  }
  return r;
}

// idx-th k-subset of {0..n-1} in lexicographic order
void unrank_combination(std::size_t n, std::size_t k, std::uint64_t idx, std::vector<std::size_t>& out) {
  out.clear();
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = next;; ++v) {
      std::uint64_t c = binomial(n - v - 1, k - slot - 1);
      if (idx < c) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      idx -= c;
    }
  }
}

bool subset_full_rank(const PrimeField& F, const std::vector<std::vector<Fp>>& rows,
                      const std::vector<std::size_t>& idx) {
  DenseMatrix m(0, rows[0].size());
  for (auto i : idx) m.append_row(rows[i]);
  return rref_serial(F, std::move(m)).rank() == idx.size();
}

constexpr std::uint64_t kMaxSubsets = 50'000'000;

KruskalResult kruskal_impl(const PrimeField& F, const PointSet& Z, int d, bool parallel) {
  const std::size_t n = Z.size();
  if (n == 0) return {0, 0};
  std::vector<std::vector<Fp>> rows;
  for (const auto& P : Z) rows.push_back(veronese_vector(F, P, d));
  KruskalResult res;
  for (std::size_t s = std::min<std::size_t>(num_monomials(d), n); s >= 1; --s) {
    const std::uint64_t total = binomial(n, s);
    if (total > kMaxSubsets) throw std::length_error("Kruskal scan too large");
    std::uint64_t first_bad = total;
    if (parallel) {
      std::atomic<std::uint64_t> best{total};
#pragma omp parallel
      {
        std::vector<std::size_t> idx;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t q = 0; q < static_cast<std::int64_t>(total); ++q) {
          const auto u = static_cast<std::uint64_t>(q);
          if (u >= best.load(std::memory_order_relaxed)) continue;
          unrank_combination(n, s, u, idx);
          if (!subset_full_rank(F, rows, idx)) {
            std::uint64_t cur = best.load();
            while (u < cur && !best.compare_exchange_weak(cur, u)) {
            }
          }
        }
      }
      first_bad = best.load();
    } else {
      std::vector<std::size_t> idx;
      for (std::uint64_t u = 0; u < total; ++u) {
        unrank_combination(n, s, u, idx);
        if (!subset_full_rank(F, rows, idx)) {
          first_bad = u;
          break;
        }
      }
    }
    res.rank_checks += first_bad == total ? total : first_bad + 1;
    if (first_bad == total) {
      res.k = s;
      return res;
    }
  }
  return res;
}

bool cb_impl(const PrimeField& F, const PointSet& Z, int i, bool parallel) {
  const std::size_t hz = rank(F, evaluation_matrix(F, Z, i));
  const std::int64_t n = static_cast<std::int64_t>(Z.size());
  std::atomic<bool> ok{true};
  // removing P keeps the ideal piece unchanged iff the rank stays hz
  auto check = [&](std::int64_t p) {
    if (!ok.load(std::memory_order_relaxed)) return;
    if (rank(F, evaluation_matrix(F, Z.without(p), i)) != hz) ok = false;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t p = 0; p < n; ++p) check(p);
  } else {
    for (std::int64_t p = 0; p < n; ++p) check(p);
  }
  return ok.load();
}

}  // namespace

KruskalResult kruskal_rank(const PrimeField& F, const PointSet& Z, int d) {
  return kruskal_impl(F, Z, d, true);
}
KruskalResult kruskal_rank_serial(const PrimeField& F, const PointSet& Z, int d) {
  return kruskal_impl(F, Z, d, false);
}

bool cayley_bacharach(const PrimeField& F, const PointSet& Z, int i) { return cb_impl(F, Z, i, true); }
bool cayley_bacharach_serial(const PrimeField& F, const PointSet& Z, int i) {
  return cb_impl(F, Z, i, false);
}

std::vector<std::string> validate_joint_dh(const HilbertData& Dh, int d) {
  std::vector<std::string> out;
  auto at = [&](int j) -> std::size_t {
    return j >= 0 && static_cast<std::size_t>(j) < Dh.dh.size() ? Dh.dh[j] : 0;
  };
  const int last = static_cast<int>(Dh.dh.size()) + 1;
  for (int i = 1; i < last; ++i)
    if (at(i) <= static_cast<std::size_t>(i) && at(i) < at(i + 1))
      out.push_back("Dh increases after index " + std::to_string(i) + " although Dh(" +
                    std::to_string(i) + ") <= " + std::to_string(i));
  if (at(d + 1) == 0) out.push_back("Dh(d+1) > 0 fails");
  for (int j = 1; j <= d; ++j)
    if (at(j) > 0 && at(j) == at(j + 1) && at(j) < static_cast<std::size_t>(j))
      out.push_back("Davis window at j=" + std::to_string(j) + ": 0 < Dh(j) = Dh(j+1) < j");
  // the union satisfies CB(d), hence the cumulative inequality with i = d
  for (int j = 0; j <= d + 1; ++j) {
    std::size_t lo = 0, hi = 0;
    for (int k = 0; k <= j; ++k) lo += at(k);
    for (int k = d + 1 - j; k <= d + 1; ++k) hi += at(k);
    if (lo > hi)
      out.push_back("CB inequality fails at j=" + std::to_string(j) + ": " + std::to_string(lo) +
                    " > " + std::to_string(hi));
  }
  return out;
}

const std::vector<std::size_t>& case_table(UnionCase c) {
  static const std::vector<std::size_t> t1{1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1};
  static const std::vector<std::size_t> t2{1, 2, 3, 4, 5, 5, 5, 4, 3, 2, 1};
  static const std::vector<std::size_t> t3{1, 2, 3, 4, 5, 5, 5, 5, 3, 2, 1};
  static const std::vector<std::size_t> none;
  switch (c) {
    case UnionCase::Case1: return t1;
    case UnionCase::Case2: return t2;
    case UnionCase::Case3: return t3;
    default: return none;
  }
}

UnionCase classify_union_case(const HilbertData& Dh) {
  // compare with trailing zeros stripped
  std::vector<std::size_t> v = Dh.dh;
  while (!v.empty() && v.back() == 0) v.pop_back();
  for (auto c : {UnionCase::Case1, UnionCase::Case2, UnionCase::Case3})
    if (v == case_table(c)) return c;
  return UnionCase::NotApplicable;
}

}  // namespace nonic
