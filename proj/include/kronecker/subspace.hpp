/**
 * @file subspace.hpp
 * @brief Linear subspaces of k^n in canonical reduced row echelon form.
 */
#pragma once

#include "kronecker/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace kronecker {

/// A subspace of k^n, stored as the nonzero rows of its RREF basis.
/// Two subspaces are equal iff their stored matrices are identical.
template <ExactField F>
class Subspace {
 public:
  /// The row space of `rows` (any rank, zero rows allowed).
  static Subspace span_of_rows(const Matrix<F>& rows) {
    auto red = row_reduce(rows);
    std::vector<std::size_t> keep(red.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return Subspace(select_rows(red.reduced, std::span<const std::size_t>(keep)), std::move(red.pivots));
  }

  static Subspace span_of_columns(const Matrix<F>& columns) { return span_of_rows(columns.transpose()); }

  /// Rows must be linearly independent.
  static Subspace from_basis(const Matrix<F>& rows) {
    auto s = span_of_rows(rows);
    if (s.dim() != rows.rows()) throw std::invalid_argument("Subspace: basis rows are linearly dependent");
    return s;
  }

  static Subspace whole(const F& field, std::size_t n) { return from_basis(Matrix<F>::identity(field, n)); }
  static Subspace zero(const F& field, std::size_t n) { return span_of_rows(Matrix<F>(field, 0, n)); }

  const F& field() const { return basis_.field(); }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  /// dim x ambient, in RREF.
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient(); ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  bool contains(const Subspace& other) const {
    return other.ambient() == ambient() && rank(vstack(basis_, other.basis_)) == dim();
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  /// Canonical ordering: by dimension, then pivot pattern, then entries.
  bool operator<(const Subspace& o) const
    requires std::totally_ordered<typename F::value_type>
  {
    if (ambient() != o.ambient()) return ambient() < o.ambient();
    if (dim() != o.dim()) return dim() < o.dim();
    if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
    return basis_.entries() < o.basis_.entries();
  }

  std::string to_string() const { return "span" + basis_.to_string(); }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kronecker
