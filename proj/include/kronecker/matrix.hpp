/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over an exact field.
 */
#pragma once

#include "kronecker/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronecker {

template <ExactField F>
class Matrix {
 public:
  using field_type = F;
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Entries given as integers, reduced into the field.
  static Matrix from_integers(const F& field, std::size_t rows, std::size_t cols,
                              std::span<const std::int64_t> entries) {
    if (entries.size() != rows * cols) {
      throw std::invalid_argument("Matrix::from_integers: expected " + std::to_string(rows * cols) +
                                  " entries, got " + std::to_string(entries.size()));
    }
    Matrix m(field, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.from_integer(entries[k]);
    return m;
  }

  static Matrix from_rows(const F& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    std::vector<std::int64_t> flat;
    for (const auto& row : rows) {
      if (row.size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_integers(field, rows.size(), cols, flat);
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  value_type& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const value_type& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<value_type>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(const value_type& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = field_.mul(c, x);
    return m;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = field_.neg(x);
    return m;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], other.data_[k]);
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], other.data_[k]);
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) {
      throw std::invalid_argument("Matrix product: shape " + a.shape() + " times " + b.shape());
    }
    Matrix c(a.field_, a.rows_, b.cols_);
    const F& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
      }
    }
    return c;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.to_string((*this)(i, j));
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix index out of range");
  }
  void require_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_)) {
      throw std::invalid_argument(std::string("Matrix ") + op + ": shape " + shape() + " vs " + other.shape());
    }
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  Matrix<F> m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <ExactField F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

template <ExactField F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <ExactField F>
Matrix<F> select_columns(const Matrix<F>& a, std::span<const std::size_t> columns) {
  Matrix<F> m(a.field(), a.rows(), columns.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = a(i, columns[j]);
  return m;
}

template <ExactField F>
Matrix<F> select_rows(const Matrix<F>& a, std::span<const std::size_t> rows) {
  Matrix<F> m(a.field(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(rows[i], j);
  return m;
}

/// Rows [r0, r0+nr) and columns [c0, c0+nc).
template <ExactField F>
Matrix<F> block(const Matrix<F>& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw std::out_of_range("block: out of range");
  Matrix<F> m(a.field(), nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = a(r0 + i, c0 + j);
  return m;
}

template <ExactField F, class Rng>
Matrix<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.random(rng);
  return m;
}

}  // namespace kronecker
