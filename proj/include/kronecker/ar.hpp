/**
 * @file ar.hpp
 * @brief Auslander-Reiten translation, Ext dimensions, explicit extensions and
 *        tau-orbit scans.
 *
 * Conventions. P_1 is the simple projective (dim (0,1)), P_2 the projective with
 * top at vertex 1 (dim (1,r)); I_i = D(P_i). For M with M_2 generated by M_1 the
 * minimal projective resolution is
 *
 *     0 -> P_1^a --kappa--> P_2^b --pi--> M -> 0,   b = dim M_1, a = r b - dim M_2,
 *
 * where pi at vertex 2 is k^{rb} -> M_2, e_{j r + i} -> M(gamma_i) e_j, and kappa is
 * a basis of its kernel. Applying the Nakayama functor gives I_2^a -> I_1^b, whose
 * kernel is tau M. P_2 summands of M vanish in that kernel on their own.
 */
#pragma once

#include "kronecker/decompose.hpp"
#include "kronecker/forms.hpp"
#include "kronecker/rank_props.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronecker {

template <ExactField F>
struct TauResult {
  KroneckerModule<F> translate;
  /// Summands removed before translating: P_1 / P_2 for tau, I_1 / I_2 for tau^{-1}.
  std::size_t stripped_1 = 0;
  std::size_t stripped_2 = 0;
  bool inverse = false;

  /// The input was a sum of projectives (injectives for the inverse); the translate is zero.
  bool vanished() const { return translate.is_zero(); }
  bool stripped_any() const { return stripped_1 + stripped_2 > 0; }
};

/// Vertex-2 part of the cover P_2^{d1} -> M: the d2 x (r d1) matrix with column j r + i equal to M(gamma_i) e_j.
template <ExactField F>
Matrix<F> cover_matrix(const KroneckerModule<F>& m) {
  const auto [d1, d2] = m.dim();
  const std::size_t r = m.r();
  Matrix<F> pi(m.field(), d2, r * d1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < d2; ++k) pi(k, j * r + i) = m.map(i)(k, j);
  return pi;
}

/// M = M' (+) P_1^c with M' = (M_1, sum of the images): returns M' and c.
template <ExactField F>
std::pair<KroneckerModule<F>, std::size_t> strip_simple_projectives(const KroneckerModule<F>& m) {
  auto image = column_space(cover_matrix(m));
  const std::size_t c = m.dim().d2 - image.cols();
  if (c == 0) return {m, 0};
  return {submodule(m, Matrix<F>::identity(m.field(), m.dim().d1), image), c};
}

template <ExactField F>
TauResult<F> tau(const KroneckerModule<F>& m) {
  if (m.is_zero()) throw std::invalid_argument("tau: zero module");
  const F& f = m.field();
  const std::size_t r = m.r();
  auto [core, c] = strip_simple_projectives(m);
  const std::size_t b = core.dim().d1;

  auto kappa = kernel(cover_matrix(core));  // (r b) x a
  const std::size_t a = kappa.cols();
  // Nakayama image at vertex 1: N[j, l r + i] = kappa[j r + i, l]
  Matrix<F> nu(f, b, r * a);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t l = 0; l < a; ++l)
      for (std::size_t i = 0; i < r; ++i) nu(j, l * r + i) = kappa(j * r + i, l);
  auto rk = rank_and_kernel(nu);
  const std::size_t e = b - rk.rank;  // number of P_2 summands
  const auto& k1 = rk.kernel_basis;   // (r a) x dim

  std::vector<Matrix<F>> maps;
  maps.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::size_t> rows(a);
    for (std::size_t l = 0; l < a; ++l) rows[l] = l * r + i;
    maps.push_back(select_rows(k1, std::span<const std::size_t>(rows)));
  }
  KroneckerModule<F> t(f, r, {k1.cols(), a}, std::move(maps));

  FormContext ctx(r);
  const auto reduced = FormContext::to_pair(m.dim());
  const auto expected = ctx.coxeter(IntPair{reduced.first - static_cast<std::int64_t>(e),
                                            reduced.second - static_cast<std::int64_t>(c + r * e)});
  if (FormContext::to_pair(t.dim()) != expected) {
    throw std::logic_error("tau: dimension " + t.dim().to_string() + " does not match the Coxeter transform");
  }
  return {std::move(t), c, e, false};
}

/// tau^{-1} = D tau D; stripped counts refer to I_1 and I_2.
template <ExactField F>
TauResult<F> tau_inv(const KroneckerModule<F>& m) {
  auto t = tau(dual(m));
  return {dual(t.translate), t.stripped_1, t.stripped_2, true};
}

/// dim Ext(M, N) = dim Hom(M, N) - <dim M, dim N> (the algebra is hereditary).
template <ExactField F>
std::size_t ext_dim(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  const auto h = static_cast<std::int64_t>(hom_dim(m, n));
  const auto e = h - FormContext(m.r()).euler_form(m.dim(), n.dim());
  if (e < 0) throw std::logic_error("ext_dim: negative value " + std::to_string(e));
  return static_cast<std::size_t>(e);
}

/// The projective resolution 0 -> P_1^{r b} -> P_2^b (+) P_1^{d2} -> M -> 0 with
/// vertex-2 cover [pi | I]. Not minimal, but needs no choices.
template <ExactField F>
struct Presentation {
  std::size_t b = 0;     ///< copies of P_2
  std::size_t c = 0;     ///< copies of P_1 in the cover
  Matrix<F> cover;       ///< d2 x (r b + c)
  Matrix<F> relations;   ///< (r b + c) x a, a basis of the kernel of `cover`
};

template <ExactField F>
Presentation<F> presentation(const KroneckerModule<F>& m) {
  auto cover = hstack(cover_matrix(m), Matrix<F>::identity(m.field(), m.dim().d2));
  auto rel = kernel(cover);
  return {m.dim().d1, m.dim().d2, std::move(cover), std::move(rel)};
}

/// The map Hom(P_2^b (+) P_1^c, N) = N_1^b (+) N_2^c -> Hom(P_1^a, N) = N_2^a induced by the relations.
/// Its kernel is Hom(M, N) and its cokernel is Ext(M, N).
template <ExactField F>
Matrix<F> ext_boundary(const Presentation<F>& p, const KroneckerModule<F>& n) {
  const auto [n1, n2] = n.dim();
  const std::size_t r = n.r(), a = p.relations.cols();
  const F& f = n.field();
  Matrix<F> phi(f, a * n2, p.b * n1 + p.c * n2);
  for (std::size_t l = 0; l < a; ++l) {
    for (std::size_t j = 0; j < p.b; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        const auto& coef = p.relations(j * r + i, l);
        if (f.is_zero(coef)) continue;
        for (std::size_t x = 0; x < n2; ++x)
          for (std::size_t y = 0; y < n1; ++y)
            phi(l * n2 + x, j * n1 + y) = f.add(phi(l * n2 + x, j * n1 + y), f.mul(coef, n.map(i)(x, y)));
      }
    }
    for (std::size_t k = 0; k < p.c; ++k) {
      const auto& coef = p.relations(r * p.b + k, l);
      if (f.is_zero(coef)) continue;
      for (std::size_t x = 0; x < n2; ++x) {
        auto& cell = phi(l * n2 + x, p.b * n1 + k * n2 + x);
        cell = f.add(cell, coef);
      }
    }
  }
  return phi;
}

/// dim Ext(M, N) as the cokernel dimension of the presentation-induced map.
template <ExactField F>
std::size_t ext_dim_via_presentation(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  require_compatible(m, n, "ext_dim_via_presentation");
  auto phi = ext_boundary(presentation(m), n);
  return phi.rows() - rank(phi);
}

/// dim Hom(N, tau M); equals dim Ext(M, N) when M has no projective summands.
template <ExactField F>
std::size_t ext_dim_ar(const KroneckerModule<F>& m, const KroneckerModule<F>& n) {
  auto t = tau(m);
  if (t.stripped_any()) throw std::invalid_argument("ext_dim_ar: M has projective summands");
  return hom_dim(n, t.translate);
}

template <ExactField F>
struct ExtensionWitness {
  KroneckerModule<F> middle;
  Morphism<F> inclusion;   ///< A -> middle
  Morphism<F> projection;  ///< middle -> C
};

/// A non-split extension 0 -> A -> B -> C -> 0 by pushout of the presentation of C
/// along a random cocycle, or nothing when Ext(C, A) = 0.
template <ExactField F>
std::optional<ExtensionWitness<F>> realize_extension(const KroneckerModule<F>& c_mod, const KroneckerModule<F>& a_mod,
                                                     std::uint64_t seed) {
  require_compatible(c_mod, a_mod, "realize_extension");
  if (ext_dim(c_mod, a_mod) == 0) return std::nullopt;
  const F& f = c_mod.field();
  const std::size_t r = c_mod.r();
  const auto p = presentation(c_mod);
  const auto boundary = ext_boundary(p, a_mod);
  const std::size_t a = p.relations.cols(), a2 = a_mod.dim().d2, a1 = a_mod.dim().d1;
  const std::size_t qdim = r * p.b + p.c;
  const std::size_t brank = rank(boundary);

  std::mt19937_64 rng(seed);
  std::optional<Matrix<F>> cocycle;
  for (int attempt = 0; attempt < 256 && !cocycle; ++attempt) {
    auto candidate = random_matrix(f, a2, a, rng);
    Matrix<F> vec(f, a * a2, 1);
    for (std::size_t l = 0; l < a; ++l)
      for (std::size_t x = 0; x < a2; ++x) vec(l * a2 + x, 0) = candidate(x, l);
    if (rank(hstack(boundary, vec)) > brank) cocycle = std::move(candidate);
  }
  if (!cocycle) throw std::logic_error("realize_extension: no cocycle outside the coboundaries was found");

  // B_2 = (A_2 (+) k^{qdim}) / span [cocycle ; -relations]
  auto gluing = vstack(*cocycle, -p.relations);
  auto qm = left_annihilator(gluing);  // (a2 + c) x (a2 + qdim)
  std::vector<Matrix<F>> maps;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix<F> big(f, a2 + qdim, a1 + p.b);
    for (std::size_t x = 0; x < a2; ++x)
      for (std::size_t y = 0; y < a1; ++y) big(x, y) = a_mod.map(i)(x, y);
    for (std::size_t j = 0; j < p.b; ++j) big(a2 + j * r + i, a1 + j) = f.one();
    maps.push_back(qm * big);
  }
  KroneckerModule<F> middle(f, r, {a1 + p.b, qm.rows()}, std::move(maps));

  Matrix<F> in1(f, a1 + p.b, a1), in2(f, a2 + qdim, a2);
  for (std::size_t y = 0; y < a1; ++y) in1(y, y) = f.one();
  for (std::size_t x = 0; x < a2; ++x) in2(x, x) = f.one();
  Morphism<F> inclusion{in1, qm * in2};

  Matrix<F> pr1(f, p.b, a1 + p.b);
  for (std::size_t j = 0; j < p.b; ++j) pr1(j, a1 + j) = f.one();
  auto target = hstack(Matrix<F>(f, c_mod.dim().d2, a2), p.cover);  // [0 | cover], kills the gluing
  auto x = solve_linear(qm.transpose(), target.transpose());
  if (!x) throw std::logic_error("realize_extension: projection does not factor through the pushout");
  Morphism<F> projection{pr1, x->transpose()};

  ExtensionWitness<F> w{std::move(middle), std::move(inclusion), std::move(projection)};
  if (!is_morphism(a_mod, w.middle, w.inclusion) || !is_morphism(w.middle, c_mod, w.projection) ||
      !compose(w.projection, w.inclusion).is_zero()) {
    throw std::logic_error("realize_extension: constructed maps are not morphisms of a complex");
  }
  if (hom_dim(c_mod, w.middle) >= hom_dim(c_mod, a_mod) + hom_dim(c_mod, c_mod)) {
    throw std::logic_error("realize_extension: non-splitness certificate failed");
  }
  return w;
}

enum class TowerSide {
  top,     ///< 0 -> tower[i] -> tower[i+1] -> E -> 0
  bottom,  ///< 0 -> E -> tower[i+1] -> tower[i] -> 0
};

/// tower[0] = E and each further member a non-split extension by E; tower.size() == n.
template <ExactField F>
std::vector<KroneckerModule<F>> self_extension_tower(const KroneckerModule<F>& e, std::size_t n, std::uint64_t seed,
                                                     TowerSide side = TowerSide::top) {
  if (n == 0) return {};
  std::vector<KroneckerModule<F>> tower{e};
  for (std::size_t i = 1; i < n; ++i) {
    const auto& prev = tower.back();
    auto w = side == TowerSide::top ? realize_extension(e, prev, seed + i) : realize_extension(prev, e, seed + i);
    if (!w) throw std::runtime_error("self_extension_tower: extension group vanishes at stage " + std::to_string(i));
    tower.push_back(std::move(w->middle));
  }
  return tower;
}

template <ExactField F>
struct ConeRow {
  int j = 0;  ///< the row describes tau^j M
  DimVector dim;
  std::vector<PropertyVerdict<F>> esp;  ///< ESP_1 .. ESP_{r-1}
  std::vector<PropertyVerdict<F>> erp;  ///< ERP_1 .. ERP_{r-1}
};

template <ExactField F>
struct ConeScan {
  std::vector<ConeRow<F>> rows;  ///< ascending j
  std::optional<int> stopped_below;  ///< smallest j that could not be reached, if any
  std::optional<int> stopped_above;
  /// Last j with ESP_1 before it fails and first j with ERP_1, when both are visible in the window.
  std::optional<int> m_candidate;
  std::optional<int> w_candidate;
  std::optional<int> width;
  bool window_limited = true;
};

template <ExactField F>
ConeScan<F> cone_scan(const KroneckerModule<F>& m, int lo, int hi, const Survey& survey) {
  if (lo > 0 || hi < 0) throw std::invalid_argument("cone_scan: window must contain 0");
  std::map<int, KroneckerModule<F>> orbit{{0, m}};
  ConeScan<F> scan;
  for (int j = 1; j <= hi; ++j) {
    auto t = tau(orbit.at(j - 1));
    if (t.stripped_any() || t.vanished()) {
      scan.stopped_above = j;
      break;
    }
    orbit.emplace(j, std::move(t.translate));
  }
  for (int j = -1; j >= lo; --j) {
    auto t = tau_inv(orbit.at(j + 1));
    if (t.stripped_any() || t.vanished()) {
      scan.stopped_below = j;
      break;
    }
    orbit.emplace(j, std::move(t.translate));
  }
  for (const auto& [j, mod] : orbit) {
    ConeRow<F> row{j, mod.dim(), {}, {}};
    for (std::size_t d = 1; d < mod.r(); ++d) {
      row.esp.push_back(has_equal_socle_property(mod, d, survey, false));
      row.erp.push_back(has_equal_radical_property(mod, d, survey, false));
    }
    scan.rows.push_back(std::move(row));
  }
  // ESP_1 holds on a tau^{-1}-closed end (small j), ERP_1 on a tau-closed end (large j)
  std::optional<int> last_esp, first_erp;
  bool esp_fails_somewhere = false, erp_fails_somewhere = false;
  for (const auto& row : scan.rows) {
    if (row.esp.front().survived()) {
      last_esp = row.j;
    } else {
      esp_fails_somewhere = true;
    }
    if (row.erp.front().survived()) {
      if (!first_erp) first_erp = row.j;
    } else {
      erp_fails_somewhere = true;
    }
  }
  if (last_esp && esp_fails_somewhere) scan.m_candidate = last_esp;
  if (first_erp && erp_fails_somewhere) scan.w_candidate = first_erp;
  if (scan.m_candidate && scan.w_candidate) scan.width = *scan.w_candidate - *scan.m_candidate - 1;
  return scan;
}

}  // namespace kronecker
