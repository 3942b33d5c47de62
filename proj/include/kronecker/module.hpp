/**
 * @file module.hpp
 * @brief Representations of the r-Kronecker quiver and their morphisms.
 *
 * A module M consists of spaces M_1, M_2 and r linear maps M(gamma_i): M_1 -> M_2,
 * stored as d2 x d1 matrices. Where a single coordinate vector for all of M is
 * needed, the M_1 coordinates come first, followed by the M_2 coordinates.
 *
 * Morphisms f = (f1, f2) satisfy target.map(i) * f1 == f2 * source.map(i).
 */
#pragma once

#include "kronecker/linalg.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace kronecker {

struct DimVector {
  std::size_t d1 = 0;
  std::size_t d2 = 0;

  auto operator<=>(const DimVector&) const = default;
  DimVector operator+(const DimVector& o) const { return {d1 + o.d1, d2 + o.d2}; }
  std::size_t total() const { return d1 + d2; }
  std::string to_string() const { return "(" + std::to_string(d1) + "," + std::to_string(d2) + ")"; }
};

/// Checks the raw parts of a module; returns the first violated invariant.
template <ExactField F>
std::optional<std::string> validate(const F& field, std::size_t r, DimVector dim,
                                    const std::vector<Matrix<F>>& maps) {
  if (r < 2) return "r = " + std::to_string(r) + ": the Kronecker quiver needs r >= 2 arrows";
  if (maps.size() != r) {
    return "expected " + std::to_string(r) + " maps, got " + std::to_string(maps.size());
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].field() == field)) return "maps[" + std::to_string(i) + "]: field mismatch";
    if (maps[i].rows() != dim.d2 || maps[i].cols() != dim.d1) {
      return "maps[" + std::to_string(i) + "]: shape " + maps[i].shape() + ", expected " +
             std::to_string(dim.d2) + "x" + std::to_string(dim.d1);
    }
  }
  return std::nullopt;
}

template <ExactField F>
class KroneckerModule {
 public:
  KroneckerModule(F field, std::size_t r, DimVector dim, std::vector<Matrix<F>> maps)
      : field_(std::move(field)), r_(r), dim_(dim), maps_(std::move(maps)) {
    if (auto violation = validate(field_, r_, dim_, maps_)) throw std::invalid_argument(*violation);
  }

  static KroneckerModule zero(const F& field, std::size_t r) {
    return KroneckerModule(field, r, {0, 0}, std::vector<Matrix<F>>(r, Matrix<F>(field, 0, 0)));
  }

  const F& field() const { return field_; }
  std::size_t r() const { return r_; }
  DimVector dim() const { return dim_; }
  std::size_t total_dimension() const { return dim_.total(); }
  bool is_zero() const { return dim_.total() == 0; }
  const Matrix<F>& map(std::size_t i) const { return maps_.at(i); }
  const std::vector<Matrix<F>>& maps() const { return maps_; }

  bool operator==(const KroneckerModule& o) const {
    return field_ == o.field_ && r_ == o.r_ && dim_ == o.dim_ && maps_ == o.maps_;
  }

  /// The linear map sum_i alpha_i M(gamma_i): M_1 -> M_2.
  template <class Coefficients>
  Matrix<F> combination(const Coefficients& alpha) const {
    Matrix<F> m(field_, dim_.d2, dim_.d1);
    std::size_t i = 0;
    for (const auto& a : alpha) {
      if (i >= r_) throw std::invalid_argument("combination: more than r coefficients");
      if (!field_.is_zero(a)) m += maps_[i].scaled(a);
      ++i;
    }
    if (i != r_) throw std::invalid_argument("combination: expected r coefficients");
    return m;
  }

 private:
  F field_;
  std::size_t r_;
  DimVector dim_;
  std::vector<Matrix<F>> maps_;
};

template <ExactField F>
struct Morphism {
  Matrix<F> f1;  ///< target.d1 x source.d1
  Matrix<F> f2;  ///< target.d2 x source.d2

  bool operator==(const Morphism&) const = default;
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
};

template <ExactField F>
void require_compatible(const KroneckerModule<F>& m, const KroneckerModule<F>& n, const char* where) {
  if (!(m.field() == n.field())) throw std::invalid_argument(std::string(where) + ": field mismatch");
  if (m.r() != n.r()) {
    throw std::invalid_argument(std::string(where) + ": r mismatch (" + std::to_string(m.r()) + " vs " +
                                std::to_string(n.r()) + ")");
  }
}

template <ExactField F>
bool is_morphism(const KroneckerModule<F>& source, const KroneckerModule<F>& target, const Morphism<F>& f) {
  if (f.f1.rows() != target.dim().d1 || f.f1.cols() != source.dim().d1) return false;
  if (f.f2.rows() != target.dim().d2 || f.f2.cols() != source.dim().d2) return false;
  for (std::size_t i = 0; i < source.r(); ++i) {
    if (!(target.map(i) * f.f1 == f.f2 * source.map(i))) return false;
  }
  return true;
}

template <ExactField F>
Morphism<F> identity_morphism(const KroneckerModule<F>& m) {
  return {Matrix<F>::identity(m.field(), m.dim().d1), Matrix<F>::identity(m.field(), m.dim().d2)};
}

/// g after f.
template <ExactField F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  return {g.f1 * f.f1, g.f2 * f.f2};
}

template <ExactField F>
bool is_isomorphism(const Morphism<F>& f) {
  return is_invertible(f.f1) && is_invertible(f.f2);
}

/// The morphism as one block-diagonal matrix on M_1 + M_2 coordinates.
template <ExactField F>
Matrix<F> total_matrix(const Morphism<F>& f) {
  return block_diagonal(f.f1, f.f2);
}

template <ExactField F>
KroneckerModule<F> direct_sum(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  require_compatible(m, n, "direct_sum");
  std::vector<Matrix<F>> maps;
  maps.reserve(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) maps.push_back(block_diagonal(m.map(i), n.map(i)));
  return KroneckerModule<F>(m.field(), m.r(), m.dim() + n.dim(), std::move(maps));
}

template <ExactField F>
KroneckerModule<F> direct_power(const KroneckerModule<F>& m, std::size_t copies) {
  auto result = KroneckerModule<F>::zero(m.field(), m.r());
  for (std::size_t k = 0; k < copies; ++k) result = direct_sum(result, m);
  return result;
}

/// The standard duality D: (DM)_1 = M_2^*, (DM)_2 = M_1^*, (DM)(gamma_i) = M(gamma_i)^T.
template <ExactField F>
KroneckerModule<F> dual(const KroneckerModule<F>& m) {
  std::vector<Matrix<F>> maps;
  maps.reserve(m.r());
  for (const auto& a : m.maps()) maps.push_back(a.transpose());
  return KroneckerModule<F>(m.field(), m.r(), {m.dim().d2, m.dim().d1}, std::move(maps));
}

/// D applied to a morphism f: M -> N gives Df: DN -> DM.
template <ExactField F>
Morphism<F> dual(const Morphism<F>& f) {
  return {f.f2.transpose(), f.f1.transpose()};
}

/// The submodule spanned by the columns of b1 (in M_1) and b2 (in M_2), in those bases.
/// Both bases must be linearly independent and the pair must be stable under all maps.
template <ExactField F>
KroneckerModule<F> submodule(const KroneckerModule<F>& m, const Matrix<F>& b1, const Matrix<F>& b2) {
  std::vector<Matrix<F>> maps;
  maps.reserve(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) {
    auto restricted = solve_linear(b2, m.map(i) * b1);
    if (!restricted) throw std::invalid_argument("submodule: subspace pair is not stable under the arrows");
    maps.push_back(std::move(*restricted));
  }
  return KroneckerModule<F>(m.field(), m.r(), {b1.cols(), b2.cols()}, std::move(maps));
}

template <ExactField F>
struct QuotientModule {
  KroneckerModule<F> module;
  Morphism<F> projection;  ///< M -> M / (b1, b2)
};

/// M modulo the stable subspace pair spanned by the columns of b1, b2.
template <ExactField F>
QuotientModule<F> quotient(const KroneckerModule<F>& m, const Matrix<F>& b1, const Matrix<F>& b2) {
  const F& f = m.field();
  auto q1 = left_annihilator(b1);
  auto q2 = left_annihilator(b2);
  // section of q1: q1 * s1 = I
  auto s1 = solve_linear(q1, Matrix<F>::identity(f, q1.rows()));
  if (!s1) throw std::logic_error("quotient: annihilator is not surjective");
  std::vector<Matrix<F>> maps;
  maps.reserve(m.r());
  for (std::size_t i = 0; i < m.r(); ++i) {
    if (!(q2 * m.map(i) * b1).is_zero()) {
      throw std::invalid_argument("quotient: subspace pair is not stable under the arrows");
    }
    maps.push_back(q2 * m.map(i) * *s1);
  }
  KroneckerModule<F> result(f, m.r(), {q1.rows(), q2.rows()}, std::move(maps));
  return {std::move(result), Morphism<F>{q1, q2}};
}

}  // namespace kronecker
