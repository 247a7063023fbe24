#ifndef CYCLEREP_LINALG_HPP
#define CYCLEREP_LINALG_HPP

// Exact dense linear algebra. Every kernel with a data-parallel inner loop
// comes in two flavours: the default OpenMP version and a *_serial reference
// that the tests compare against bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclerep/errors.hpp"
#include "cyclerep/matrix.hpp"

namespace cyclerep {

/// Below this many scalar multiply-adds the OpenMP kernels stay serial.
inline constexpr std::size_t kParallelWorkThreshold = 1U << 14;

namespace detail {

template <bool Parallel, ExactField F>
Matrix<F> matmul_impl(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: cannot multiply " + a.shape() + " by " + b.shape());
  Matrix<F> c(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  [[maybe_unused]] const bool big = a.rows() * a.cols() * b.cols() >= kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (Parallel && big)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto out = c.row(static_cast<std::size_t>(i));
    const auto lhs = a.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (lhs[k].is_zero()) continue;
      const auto rhs = b.row(k);
      for (std::size_t j = 0; j < rhs.size(); ++j)
        if (!rhs[j].is_zero()) out[j].add_product(lhs[k], rhs[j]);
    }
  }
  return c;
}

/// In-place Gauss-Jordan on w; applies the same row operations to t when given.
/// Pivot = first nonzero entry of the column at or below the current row.
template <bool Parallel, ExactField F>
std::vector<std::size_t> gauss_jordan(Matrix<F>& w, Matrix<F>* t) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && w(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(w(p, k), w(r, k));
      if (t != nullptr)
        for (std::size_t k = 0; k < t->cols(); ++k) std::swap((*t)(p, k), (*t)(r, k));
    }
    const F inv = w(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) w(r, k) *= inv;
    if (t != nullptr)
      for (std::size_t k = 0; k < t->cols(); ++k) (*t)(r, k) *= inv;

    const auto nrows = static_cast<std::ptrdiff_t>(rows);
    const std::size_t width = (cols - c) + (t != nullptr ? t->cols() : 0);
    [[maybe_unused]] const bool big = rows * width >= kParallelWorkThreshold / 8;
#pragma omp parallel for schedule(static) if (Parallel && big)
    for (std::ptrdiff_t si = 0; si < nrows; ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (i == r || w(i, c).is_zero()) continue;
      const F factor = w(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!w(r, k).is_zero()) w(i, k).sub_product(factor, w(r, k));
      if (t != nullptr)
        for (std::size_t k = 0; k < t->cols(); ++k)
          if (!(*t)(r, k).is_zero()) (*t)(i, k).sub_product(factor, (*t)(r, k));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <ExactField F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  return detail::matmul_impl<true>(a, b);
}

template <ExactField F>
Matrix<F> matmul_serial(const Matrix<F>& a, const Matrix<F>& b) {
  return detail::matmul_impl<false>(a, b);
}

template <ExactField F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  return matmul(a, b);
}

template <ExactField F>
struct Rref {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
  /// Invertible; transform * input == reduced.
  Matrix<F> transform;
};

template <ExactField F>
Rref<F> rref(const Matrix<F>& m) {
  Rref<F> out{m, {}, Matrix<F>::identity(m.rows())};
  out.pivot_cols = detail::gauss_jordan<true>(out.reduced, &out.transform);
  return out;
}

template <ExactField F>
Rref<F> rref_serial(const Matrix<F>& m) {
  Rref<F> out{m, {}, Matrix<F>::identity(m.rows())};
  out.pivot_cols = detail::gauss_jordan<false>(out.reduced, &out.transform);
  return out;
}

/// Reduced form and pivots only; skips the transform bookkeeping.
template <ExactField F>
std::pair<Matrix<F>, std::vector<std::size_t>> reduce(Matrix<F> m) {
  auto pivots = detail::gauss_jordan<true>(m, static_cast<Matrix<F>*>(nullptr));
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  // Eliminate along the shorter side.
  if (m.cols() < m.rows()) return reduce(m.transpose()).second.size();
  return reduce(m).second.size();
}

/// Columns form a basis of {v : m v = 0}.
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const auto [red, pivots] = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, out) = F(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = -red(r, f);
    ++out;
  }
  return basis;
}

/// The pivot columns of m: a basis of its column space.
template <ExactField F>
Matrix<F> image_basis(const Matrix<F>& m) {
  const auto pivots = reduce(m).second;
  return m.select_columns(pivots);
}

/// Canonical basis of the row space: the nonzero rows of rref(m).
template <ExactField F>
Matrix<F> row_space(const Matrix<F>& m) {
  auto [red, pivots] = reduce(m);
  return red.block(0, 0, pivots.size(), red.cols());
}

/// Canonical basis of the column space (reduced column echelon form). Unlike
/// image_basis its entries do not inherit the growth of m.
template <ExactField F>
Matrix<F> column_space(const Matrix<F>& m) {
  return row_space(m.transpose()).transpose();
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix " + m.shape() + " is not square");
  auto r = rref(m);
  if (r.pivot_cols.size() != m.rows())
    throw NotInvertibleError("inverse: singular " + m.shape() + " matrix (rank " + std::to_string(r.pivot_cols.size()) + ")");
  return std::move(r.transform);
}

template <ExactField F>
bool is_invertible(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

/// Unique X with basis * X == y, where basis has independent columns.
/// Throws InternalError when some column of y leaves the span.
template <ExactField F>
Matrix<F> coordinates_in(const Matrix<F>& basis, const Matrix<F>& y) {
  if (basis.rows() != y.rows())
    throw DimensionError("coordinates_in: basis " + basis.shape() + " vs vectors " + y.shape());
  const std::size_t k = basis.cols();
  const auto [red, pivots] = reduce(hcat(basis, y));
  if (pivots.size() < k || (k > 0 && pivots[k - 1] != k - 1))
    throw InternalError("coordinates_in: basis columns are dependent");
  if (pivots.size() > k) throw InternalError("coordinates_in: vector outside the span of the basis");
  return red.block(0, k, k, y.cols());
}

template <ExactField F>
Matrix<F> power(const Matrix<F>& m, std::size_t e) {
  if (!m.is_square()) throw DimensionError("power: matrix " + m.shape() + " is not square");
  Matrix<F> out = Matrix<F>::identity(m.rows());
  for (std::size_t k = 0; k < e; ++k) out = matmul(m, out);
  return out;
}

/// dim(span(a) ∩ span(b)) for column bases a, b of the same ambient space.
template <ExactField F>
std::size_t intersection_dim(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(a) + rank(b) - rank(hcat(a, b));
}

/// A growing set of independent vectors in F^n, kept in semi-echelon form so
/// membership tests cost O(dim * n).
template <ExactField F>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient) : n_(ambient) {}

  [[nodiscard]] std::size_t ambient() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool try_add(std::span<const F> v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    const F inv = r[p].inverse();
    for (std::size_t k = p; k < n_; ++k) r[k] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  [[nodiscard]] bool contains(std::span<const F> v) const {
    const auto r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds every column of m; returns how many were independent.
  std::size_t add_columns(const Matrix<F>& m) {
    std::size_t added = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto col = m.column(c);
      added += try_add(col) ? 1 : 0;
    }
    return added;
  }

 private:
  [[nodiscard]] std::vector<F> reduce(std::span<const F> v) const {
    if (v.size() != n_) throw DimensionError("IncrementalSpan: vector of length " + std::to_string(v.size()) + " in F^" + std::to_string(n_));
    std::vector<F> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (r[p].is_zero()) continue;
      const F factor = r[p];
      for (std::size_t c = p; c < n_; ++c)
        if (!rows_[k][c].is_zero()) r[c].sub_product(factor, rows_[k][c]);
    }
    return r;
  }

  std::size_t n_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cyclerep

#endif  // CYCLEREP_LINALG_HPP
