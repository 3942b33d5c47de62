/**
 * @file functors.hpp
 * @brief Inflation and restriction between Kronecker quivers, GL_r twists, and the
 *        functor to radical-square-zero modules over an elementary abelian group.
 */
#pragma once

#include "kronecker/rank_props.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronecker {

/// M over Gamma_r viewed over Gamma_s: arrows r+1..s act by zero.
template <ExactField F>
KroneckerModule<F> inflate(const KroneckerModule<F>& m, std::size_t s) {
  if (s <= m.r()) {
    throw std::invalid_argument("inflate: target s = " + std::to_string(s) + " must exceed r = " + std::to_string(m.r()));
  }
  auto maps = m.maps();
  maps.resize(s, Matrix<F>(m.field(), m.dim().d2, m.dim().d1));
  return KroneckerModule<F>(m.field(), s, m.dim(), std::move(maps));
}

/// Pullback along Gamma_r -> Gamma_s: keeps the first r arrows.
template <ExactField F>
KroneckerModule<F> restrict_to(const KroneckerModule<F>& n, std::size_t r) {
  if (r >= n.r()) {
    throw std::invalid_argument("restrict_to: r = " + std::to_string(r) + " must be below s = " + std::to_string(n.r()));
  }
  std::vector<Matrix<F>> maps(n.maps().begin(), n.maps().begin() + static_cast<std::ptrdiff_t>(r));
  return KroneckerModule<F>(n.field(), r, n.dim(), std::move(maps));
}

/// A pair of points of Gr_{m,s} on which inf(M) has different m-socle dimension:
/// U = <e_{r+1}, ..., e_{r+m}> kills all of inf(M), V contains some e_j with gamma_j acting non-trivially.
template <ExactField F>
std::pair<Subspace<F>, Subspace<F>> inflation_socle_witness(const KroneckerModule<F>& m, std::size_t s, std::size_t mm) {
  const std::size_t r = m.r();
  if (mm < 1 || r + mm > s) throw std::invalid_argument("inflation_socle_witness: need 1 <= m <= s - r");
  std::size_t j = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (!m.map(i).is_zero()) {
      j = i;
      break;
    }
  }
  if (j == r) throw std::invalid_argument("inflation_socle_witness: every arrow acts trivially");
  const F& f = m.field();
  Matrix<F> u(f, mm, s), v(f, mm, s);
  for (std::size_t k = 0; k < mm; ++k) u(k, r + k) = f.one();
  v(0, j) = f.one();
  for (std::size_t k = 1; k < mm; ++k) v(k, r + k - 1) = f.one();
  return {Subspace<F>::from_basis(u), Subspace<F>::from_basis(v)};
}

template <ExactField F>
class GLMatrix {
 public:
  explicit GLMatrix(Matrix<F> g) : g_(std::move(g)) {
    if (!is_invertible(g_)) throw std::invalid_argument("GLMatrix: matrix is singular");
  }
  static GLMatrix identity(const F& field, std::size_t r) { return GLMatrix(Matrix<F>::identity(field, r)); }

  const Matrix<F>& matrix() const { return g_; }
  std::size_t r() const { return g_.rows(); }
  GLMatrix operator*(const GLMatrix& o) const { return GLMatrix(g_ * o.g_); }

 private:
  Matrix<F> g_;
};

template <ExactField F, class Rng>
GLMatrix<F> random_gl(const F& field, std::size_t r, Rng& rng) {
  while (true) {
    auto g = random_matrix(field, r, r, rng);
    if (is_invertible(g)) return GLMatrix<F>(std::move(g));
  }
}

/// M^(g): the j-th arrow acts as sum_i g_{ij} M(gamma_i). twist(twist(M, g), h) = twist(M, g h).
template <ExactField F>
KroneckerModule<F> gl_twist(const KroneckerModule<F>& m, const GLMatrix<F>& g) {
  if (g.r() != m.r()) throw std::invalid_argument("gl_twist: matrix size does not match r");
  std::vector<Matrix<F>> maps;
  maps.reserve(m.r());
  for (std::size_t j = 0; j < m.r(); ++j) {
    std::vector<typename F::value_type> column;
    for (std::size_t i = 0; i < m.r(); ++i) column.push_back(g.matrix()(i, j));
    maps.push_back(m.combination(column));
  }
  return KroneckerModule<F>(m.field(), m.r(), m.dim(), std::move(maps));
}

/// A kE_r-module of Loewy length at most 2: generators x_i map the top to the socle part
/// and kill the socle part. Coordinates: top first, then socle part.
template <ExactField F>
class ERModule {
 public:
  ERModule(F field, std::size_t r, std::size_t top, std::size_t socle_part, std::vector<Matrix<F>> actions)
      : field_(std::move(field)), r_(r), top_(top), socle_(socle_part), actions_(std::move(actions)) {
    if (field_.characteristic() == 0) throw std::invalid_argument("ERModule: the field must have positive characteristic");
    if (actions_.size() != r_) throw std::invalid_argument("ERModule: expected one action per generator");
    for (const auto& a : actions_) {
      if (a.rows() != socle_ || a.cols() != top_ || !(a.field() == field_)) {
        throw std::invalid_argument("ERModule: action of shape " + a.shape() + ", expected " + std::to_string(socle_) +
                                    "x" + std::to_string(top_));
      }
    }
  }

  const F& field() const { return field_; }
  std::size_t r() const { return r_; }
  std::size_t top() const { return top_; }
  std::size_t socle_part() const { return socle_; }
  std::size_t dimension() const { return top_ + socle_; }
  std::uint64_t characteristic() const { return field_.characteristic(); }
  const std::vector<Matrix<F>>& actions() const { return actions_; }

  /// l(u) on the whole module for u = sum_i alpha_i x_i.
  template <class Coefficients>
  Matrix<F> operator_of(const Coefficients& alpha) const {
    const std::size_t n = dimension();
    Matrix<F> l(field_, n, n);
    std::size_t i = 0;
    for (const auto& a : alpha) {
      if (!field_.is_zero(a)) {
        for (std::size_t x = 0; x < socle_; ++x)
          for (std::size_t y = 0; y < top_; ++y)
            l(top_ + x, y) = field_.add(l(top_ + x, y), field_.mul(a, actions_[i](x, y)));
      }
      ++i;
    }
    return l;
  }

 private:
  F field_;
  std::size_t r_;
  std::size_t top_;
  std::size_t socle_;
  std::vector<Matrix<F>> actions_;
};

template <ExactField F>
ERModule<F> to_elementary_abelian(const KroneckerModule<F>& m) {
  if (m.field().characteristic() == 0) {
    throw std::invalid_argument("to_elementary_abelian: needs a field of positive characteristic");
  }
  return ERModule<F>(m.field(), m.r(), m.dim().d1, m.dim().d2, m.maps());
}

template <ExactField F>
void require_er_match(const ERModule<F>& n, const Subspace<F>& u, const char* where) {
  if (u.ambient() != n.r() || !(u.field() == n.field())) {
    throw std::invalid_argument(std::string(where) + ": subspace of k^" + std::to_string(u.ambient()) +
                                " against a module for rank " + std::to_string(n.r()));
  }
}

/// { m : u m = 0 for all u in U }
template <ExactField F>
Subspace<F> er_soc(const ERModule<F>& n, const Subspace<F>& u) {
  require_er_match(n, u, "er_soc");
  Matrix<F> stacked(n.field(), 0, n.dimension());
  for (std::size_t k = 0; k < u.dim(); ++k) stacked = vstack(stacked, n.operator_of(u.basis().row(k)));
  return Subspace<F>::span_of_columns(kernel(stacked));
}

/// sum over u in U of u M
template <ExactField F>
Subspace<F> er_rad(const ERModule<F>& n, const Subspace<F>& u) {
  require_er_match(n, u, "er_rad");
  Matrix<F> joined(n.field(), n.dimension(), 0);
  for (std::size_t k = 0; k < u.dim(); ++k) joined = hstack(joined, n.operator_of(u.basis().row(k)));
  return Subspace<F>::span_of_columns(joined);
}

namespace detail {

template <ExactField F, class Compute, class Same>
PropertyVerdict<F> er_survey(const ERModule<F>& n, std::size_t d, const Survey& survey, Compute compute, Same same,
                             const std::string& what) {
  const auto points = survey_points(n.field(), d, n.r(), survey);
  const auto first = compute(points.front());
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!same(compute(points[k]), first)) {
      return verdict_from<F>(true, survey, {points.front(), points[k]}, what + " differs between two points");
    }
  }
  return verdict_from<F>(false, survey, {}, what + " agrees on every surveyed point");
}

}  // namespace detail

template <ExactField F>
PropertyVerdict<F> er_constant_soc(const ERModule<F>& n, std::size_t d, const Survey& survey) {
  return detail::er_survey(
      n, d, survey, [&](const Subspace<F>& u) { return er_soc(n, u).dim(); }, std::equal_to<>{}, "dim Soc_U");
}

template <ExactField F>
PropertyVerdict<F> er_equal_soc(const ERModule<F>& n, std::size_t d, const Survey& survey) {
  return detail::er_survey(
      n, d, survey, [&](const Subspace<F>& u) { return er_soc(n, u); }, std::equal_to<>{}, "Soc_U");
}

template <ExactField F>
PropertyVerdict<F> er_constant_rad(const ERModule<F>& n, std::size_t d, const Survey& survey) {
  return detail::er_survey(
      n, d, survey, [&](const Subspace<F>& u) { return er_rad(n, u).dim(); }, std::equal_to<>{}, "dim Rad_U");
}

template <ExactField F>
PropertyVerdict<F> er_equal_rad(const ERModule<F>& n, std::size_t d, const Survey& survey) {
  return detail::er_survey(
      n, d, survey, [&](const Subspace<F>& u) { return er_rad(n, u); }, std::equal_to<>{}, "Rad_U");
}

}  // namespace kronecker
