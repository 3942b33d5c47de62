/**
 * @file decompose.hpp
 * @brief Isomorphism and indecomposability tests.
 *
 * Negative isomorphism answers come from invariants that cannot differ between
 * isomorphic modules; positive answers always carry an invertible witness.
 * Indecomposability is certified only by a brick test or by exhausting End(M)
 * over a small finite field.
 */
#pragma once

#include "kronecker/hom.hpp"
#include "kronecker/test_modules.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kronecker {

enum class Answer { yes, no, undetermined };

inline std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::undetermined: return "undetermined";
  }
  return "?";
}

template <ExactField F>
struct IsoVerdict {
  Answer answer = Answer::undetermined;
  std::optional<Morphism<F>> witness;  ///< M -> N, set iff answer == yes
  std::string reason;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t random_budget = 64;
  /// Exhaustive enumeration of a Hom or End space is used when q^dim stays below this.
  std::uint64_t exhaustive_limit = 1u << 14;
};

namespace detail {

/// q^e if it does not exceed `limit`.
inline std::optional<std::uint64_t> bounded_power(std::optional<std::uint64_t> q, std::size_t e, std::uint64_t limit) {
  if (!q) return std::nullopt;
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= *q;
    if (v > limit) return std::nullopt;
  }
  return v;
}

/// Calls visit(morphism) for every element of span(basis); stops early when visit returns true.
template <ExactField F, class Visit>
bool for_each_combination(const std::vector<Morphism<F>>& basis, const Morphism<F>& zero, std::uint64_t count,
                          Visit&& visit) {
  const F& f = zero.f1.field();
  const std::uint64_t q = *f.order();
  std::vector<typename F::value_type> coeff(basis.size(), f.zero());
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (auto& x : coeff) {
      x = f.element_at(c % q);
      c /= q;
    }
    if (visit(combine(basis, coeff, zero))) return true;
  }
  return false;
}

template <ExactField F, class Rng>
Morphism<F> random_combination(const std::vector<Morphism<F>>& basis, const Morphism<F>& zero, Rng& rng) {
  const F& f = zero.f1.field();
  std::vector<typename F::value_type> coeff;
  coeff.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) coeff.push_back(f.random(rng));
  return combine(basis, coeff, zero);
}

/// X_U for U the line through e_i; Hom from it is a cheap isomorphism invariant.
template <ExactField F>
KroneckerModule<F> coordinate_probe(const F& field, std::size_t r, std::size_t i) {
  Matrix<F> row(field, 1, r);
  row(0, i) = field.one();
  return x_u_module(Subspace<F>::from_basis(row)).module;
}

}  // namespace detail

template <ExactField F>
IsoVerdict<F> is_isomorphic(const KroneckerModule<F>& m, const KroneckerModule<F>& n, const SearchOptions& opt = {}) {
  require_compatible(m, n, "is_isomorphic");
  if (m.dim() != n.dim()) {
    return {Answer::no, std::nullopt, "dimension vectors differ: " + m.dim().to_string() + " vs " + n.dim().to_string()};
  }
  if (m == n) return {Answer::yes, identity_morphism(m), "identical modules"};
  const auto h_mn = hom_dim(m, n), h_nm = hom_dim(n, m);
  if (h_mn != h_nm) {
    return {Answer::no, std::nullopt,
            "dim Hom(M,N) = " + std::to_string(h_mn) + " but dim Hom(N,M) = " + std::to_string(h_nm)};
  }
  const auto e_m = end_dim(m), e_n = end_dim(n);
  if (e_m != e_n) {
    return {Answer::no, std::nullopt, "dim End differs: " + std::to_string(e_m) + " vs " + std::to_string(e_n)};
  }
  if (h_mn != e_m) {
    return {Answer::no, std::nullopt,
            "dim Hom(M,N) = " + std::to_string(h_mn) + " differs from dim End(M) = " + std::to_string(e_m)};
  }
  for (std::size_t i = 0; i < m.r(); ++i) {
    auto probe = detail::coordinate_probe(m.field(), m.r(), i);
    const auto a = hom_dim(probe, m), b = hom_dim(probe, n);
    if (a != b) {
      return {Answer::no, std::nullopt,
              "dim Hom(X_<e" + std::to_string(i + 1) + ">, -) differs: " + std::to_string(a) + " vs " +
                  std::to_string(b)};
    }
  }
  if (m.is_zero()) return {Answer::yes, identity_morphism(m), "zero modules"};

  const auto basis = hom_basis(m, n);
  const auto zero = zero_morphism(m, n);
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.random_budget; ++t) {
    auto f = detail::random_combination(basis, zero, rng);
    if (is_isomorphism(f)) return {Answer::yes, std::move(f), "invertible element found by random search"};
  }
  if (auto count = detail::bounded_power(m.field().order(), basis.size(), opt.exhaustive_limit)) {
    std::optional<Morphism<F>> found;
    detail::for_each_combination(basis, zero, *count, [&](const Morphism<F>& f) {
      if (!is_isomorphism(f)) return false;
      found = f;
      return true;
    });
    if (found) return {Answer::yes, std::move(found), "invertible element found by exhaustive search"};
    return {Answer::no, std::nullopt, "no element of Hom(M,N) is invertible (exhaustive search)"};
  }
  return {Answer::undetermined, std::nullopt,
          "no invertible element among " + std::to_string(opt.random_budget) + " random elements of Hom(M,N)"};
}

enum class Decomposition { indecomposable, probably_indecomposable, decomposable };

inline std::string to_string(Decomposition d) {
  switch (d) {
    case Decomposition::indecomposable: return "indecomposable";
    case Decomposition::probably_indecomposable: return "probably_indecomposable";
    case Decomposition::decomposable: return "decomposable";
  }
  return "?";
}

template <ExactField F>
struct Splitting {
  KroneckerModule<F> first;
  KroneckerModule<F> second;
  Morphism<F> isomorphism;  ///< first (+) second -> M
};

template <ExactField F>
struct IndecomposabilityVerdict {
  Decomposition verdict = Decomposition::probably_indecomposable;
  std::optional<Splitting<F>> splitting;
  std::size_t end_dimension = 0;
  std::string reason;
};

/// The Fitting decomposition M = im(phi^n) (+) ker(phi^n), if both parts are nonzero.
template <ExactField F>
std::optional<Splitting<F>> fitting_splitting(const KroneckerModule<F>& m, const Morphism<F>& phi) {
  const std::size_t n = m.total_dimension();
  Morphism<F> p{power(phi.f1, n), power(phi.f2, n)};
  const std::size_t rk = rank(p.f1) + rank(p.f2);
  if (rk == 0 || rk == n) return std::nullopt;
  auto im = image_of(m, p);
  auto ker = kernel_of(m, p);
  Morphism<F> iso{hstack(im.inclusion.f1, ker.inclusion.f1), hstack(im.inclusion.f2, ker.inclusion.f2)};
  return Splitting<F>{std::move(im.module), std::move(ker.module), std::move(iso)};
}

template <ExactField F>
IndecomposabilityVerdict<F> is_indecomposable(const KroneckerModule<F>& m, const SearchOptions& opt = {}) {
  if (m.is_zero()) throw std::invalid_argument("is_indecomposable: zero module");
  const auto basis = hom_basis(m, m);
  IndecomposabilityVerdict<F> out;
  out.end_dimension = basis.size();
  if (basis.size() == 1) {
    out.verdict = Decomposition::indecomposable;
    out.reason = "brick: dim End(M) = 1";
    return out;
  }
  const auto zero = zero_morphism(m, m);
  auto try_split = [&](const Morphism<F>& phi) {
    if (auto s = fitting_splitting(m, phi)) {
      out.verdict = Decomposition::decomposable;
      out.splitting = std::move(s);
      out.reason = "non-trivial Fitting decomposition of an endomorphism";
      return true;
    }
    return false;
  };
  if (auto count = detail::bounded_power(m.field().order(), basis.size(), opt.exhaustive_limit)) {
    if (detail::for_each_combination(basis, zero, *count, try_split)) return out;
    out.verdict = Decomposition::indecomposable;
    out.reason = "every endomorphism is nilpotent or invertible (exhaustive over End(M))";
    return out;
  }
  const auto id = identity_morphism(m);
  const F& f = m.field();
  std::mt19937_64 rng(opt.seed);
  std::vector<Morphism<F>> candidates = basis;
  for (std::size_t t = 0; t < opt.random_budget; ++t) candidates.push_back(detail::random_combination(basis, zero, rng));
  for (const auto& phi : candidates) {
    if (try_split(phi)) return out;
    // shifts by scalars expose eigenvalues that phi itself hides
    for (int k = 0; k < 4; ++k) {
      auto lambda = f.random(rng);
      if (f.is_zero(lambda)) continue;
      Morphism<F> shifted{phi.f1 - id.f1.scaled(lambda), phi.f2 - id.f2.scaled(lambda)};
      if (try_split(shifted)) return out;
    }
  }
  out.verdict = Decomposition::probably_indecomposable;
  out.reason = "no splitting endomorphism among " + std::to_string(candidates.size()) + " candidates";
  return out;
}

}  // namespace kronecker
