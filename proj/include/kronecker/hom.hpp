/**
 * @file hom.hpp
 * @brief Hom spaces as solution spaces of the commuting-square system.
 */
#pragma once

#include "kronecker/module.hpp"

#include <vector>

namespace kronecker {

namespace detail {

/// Coefficient matrix whose null space is Hom(M, N). Unknowns are the entries
/// of f1 (row-major) followed by the entries of f2 (row-major).
template <ExactField F>
Matrix<F> hom_system(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  const F& f = m.field();
  const auto [m1, m2] = m.dim();
  const auto [n1, n2] = n.dim();
  const std::size_t unknowns = n1 * m1 + n2 * m2;
  const std::size_t offset2 = n1 * m1;
  Matrix<F> sys(f, m.r() * n2 * m1, unknowns);
  for (std::size_t i = 0; i < m.r(); ++i) {
    const auto& ni = n.map(i);
    const auto& mi = m.map(i);
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t b = 0; b < m1; ++b) {
        const std::size_t eq = (i * n2 + a) * m1 + b;
        // (N_i f1)[a,b] = sum_c N_i[a,c] f1[c,b]
        for (std::size_t c = 0; c < n1; ++c) sys(eq, c * m1 + b) = f.add(sys(eq, c * m1 + b), ni(a, c));
        // -(f2 M_i)[a,b] = -sum_c f2[a,c] M_i[c,b]
        for (std::size_t c = 0; c < m2; ++c) {
          auto& cell = sys(eq, offset2 + a * m2 + c);
          cell = f.sub(cell, mi(c, b));
        }
      }
    }
  }
  return sys;
}

template <ExactField F>
Morphism<F> morphism_from_vector(const KroneckerModule<F>& m, const KroneckerModule<F>& n,
                                 const Matrix<F>& vectors, std::size_t column) {
  const auto [m1, m2] = m.dim();
  const auto [n1, n2] = n.dim();
  Matrix<F> f1(m.field(), n1, m1), f2(m.field(), n2, m2);
  for (std::size_t c = 0; c < n1; ++c)
    for (std::size_t b = 0; b < m1; ++b) f1(c, b) = vectors(c * m1 + b, column);
  const std::size_t offset2 = n1 * m1;
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t c = 0; c < m2; ++c) f2(a, c) = vectors(offset2 + a * m2 + c, column);
  return {std::move(f1), std::move(f2)};
}

}  // namespace detail

/// A basis of Hom(M, N).
template <ExactField F>
std::vector<Morphism<F>> hom_basis(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  require_compatible(m, n, "hom_basis");
  auto basis = kernel(detail::hom_system(m, n));
  std::vector<Morphism<F>> result;
  result.reserve(basis.cols());
  for (std::size_t k = 0; k < basis.cols(); ++k) result.push_back(detail::morphism_from_vector(m, n, basis, k));
  return result;
}

template <ExactField F>
std::size_t hom_dim(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  require_compatible(m, n, "hom_dim");
  auto sys = detail::hom_system(m, n);
  return sys.cols() - rank(std::move(sys));
}

template <ExactField F>
std::size_t end_dim(const KroneckerModule<F>& m) {
  return hom_dim(m, m);
}

/// Linear combination sum_k c_k basis_k of morphisms.
template <ExactField F, class Coefficients>
Morphism<F> combine(const std::vector<Morphism<F>>& basis, const Coefficients& coefficients,
                    const Morphism<F>& zero) {
  Morphism<F> result = zero;
  std::size_t k = 0;
  for (const auto& c : coefficients) {
    if (!result.f1.field().is_zero(c)) {
      result.f1 += basis[k].f1.scaled(c);
      result.f2 += basis[k].f2.scaled(c);
    }
    ++k;
  }
  return result;
}

template <ExactField F>
Morphism<F> zero_morphism(const KroneckerModule<F>& source, const KroneckerModule<F>& target) {
  return {Matrix<F>(source.field(), target.dim().d1, source.dim().d1),
          Matrix<F>(source.field(), target.dim().d2, source.dim().d2)};
}

template <ExactField F>
struct SubmoduleEmbedding {
  KroneckerModule<F> module;
  Morphism<F> inclusion;
};

template <ExactField F>
SubmoduleEmbedding<F> kernel_of(const KroneckerModule<F>& source, const Morphism<F>& f) {
  auto k1 = kernel(f.f1);
  auto k2 = kernel(f.f2);
  auto sub = submodule(source, k1, k2);
  return {std::move(sub), Morphism<F>{std::move(k1), std::move(k2)}};
}

template <ExactField F>
SubmoduleEmbedding<F> image_of(const KroneckerModule<F>& target, const Morphism<F>& f) {
  auto i1 = column_space(f.f1);
  auto i2 = column_space(f.f2);
  auto sub = submodule(target, i1, i2);
  return {std::move(sub), Morphism<F>{std::move(i1), std::move(i2)}};
}

template <ExactField F>
QuotientModule<F> cokernel_of(const KroneckerModule<F>& target, const Morphism<F>& f) {
  return quotient(target, column_space(f.f1), column_space(f.f2));
}

}  // namespace kronecker
