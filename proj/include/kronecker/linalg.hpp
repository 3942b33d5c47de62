/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination: rank, kernels, reduced row echelon form, solving.
 *
 * Reduced row echelon form is the single canonical form of the library;
 * subspace equality and Grassmannian points are both decided through it.
 */
#pragma once

#include "kronecker/matrix.hpp"

#include <optional>
#include <vector>

namespace kronecker {

template <ExactField F>
struct RowReduction {
  Matrix<F> reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

template <ExactField F>
struct RankKernel {
  std::size_t rank;
  Matrix<F> kernel_basis;  ///< cols x nullity, columns form a basis of the null space
};

namespace detail {

/// In-place forward elimination restricted to the first `limit` columns.
/// With `reduce` set the result is fully reduced (pivots 1, zeros above).
template <ExactField F>
std::vector<std::size_t> eliminate(Matrix<F>& m, std::size_t limit, bool reduce) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < limit && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      auto a = m.row(pivot), b = m.row(row);
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[j], b[j]);
    }
    auto prow = m.row(row);
    auto pinv = f.inv(prow[col]);
    if (reduce) {
      for (std::size_t j = col; j < cols; ++j) prow[j] = f.mul(pinv, prow[j]);
    }
    const std::size_t first = reduce ? 0 : row + 1;
    for (std::size_t k = first; k < rows; ++k) {
      if (k == row) continue;
      auto krow = m.row(k);
      if (f.is_zero(krow[col])) continue;
      auto factor = reduce ? krow[col] : f.mul(krow[col], pinv);
      for (std::size_t j = col; j < cols; ++j) krow[j] = f.sub_mul(krow[j], factor, prow[j]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <ExactField F>
RowReduction<F> row_reduce(Matrix<F> a) {
  auto pivots = detail::eliminate(a, a.cols(), true);
  return {std::move(a), std::move(pivots)};
}

/// The unique reduced row echelon form of `a` (zero rows kept at the bottom).
template <ExactField F>
Matrix<F> rref(const Matrix<F>& a) {
  return row_reduce(a).reduced;
}

template <ExactField F>
std::size_t rank(Matrix<F> a) {
  // eliminate along the shorter side
  if (a.cols() > a.rows()) a = a.transpose();
  return detail::eliminate(a, a.cols(), false).size();
}

template <ExactField F>
Matrix<F> kernel_from_rref(const Matrix<F>& reduced, const std::vector<std::size_t>& pivots) {
  const F& f = reduced.field();
  const std::size_t n = reduced.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis(f, n, n - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(reduced(i, free));
    ++k;
  }
  return basis;
}

template <ExactField F>
RankKernel<F> rank_and_kernel(const Matrix<F>& a) {
  auto red = row_reduce(a);
  auto basis = kernel_from_rref(red.reduced, red.pivots);
  return {red.pivots.size(), std::move(basis)};
}

template <ExactField F>
Matrix<F> kernel(const Matrix<F>& a) {
  return rank_and_kernel(a).kernel_basis;
}

/// Rows spanning the annihilator {y : y a = 0}; the quotient map onto coker(a).
template <ExactField F>
Matrix<F> left_annihilator(const Matrix<F>& a) {
  return kernel(a.transpose()).transpose();
}

/// A basis of the column space, chosen among the columns of `a`.
template <ExactField F>
Matrix<F> column_space(const Matrix<F>& a) {
  auto red = row_reduce(a);
  return select_columns(a, std::span<const std::size_t>(red.pivots));
}

/// Solves a X = b. Absent iff the system is inconsistent.
template <ExactField F>
std::optional<Matrix<F>> solve_linear(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("solve_linear: A is " + a.shape() + " but B is " + b.shape());
  }
  auto aug = hstack(a, b);
  auto pivots = detail::eliminate(aug, aug.cols(), true);
  const F& f = a.field();
  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, a.cols() + j);
  }
  return x;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_linear(a, Matrix<F>::identity(a.field(), a.rows()));
}

template <ExactField F>
bool is_invertible(const Matrix<F>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Integer power by repeated squaring.
template <ExactField F>
Matrix<F> power(Matrix<F> a, std::size_t e) {
  Matrix<F> result = Matrix<F>::identity(a.field(), a.rows());
  while (e > 0) {
    if (e & 1) result = result * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return result;
}

}  // namespace kronecker
