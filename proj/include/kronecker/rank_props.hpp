/**
 * @file rank_props.hpp
 * @brief Constant / equal d-socle and d-radical rank, strata, U-triviality and
 *        orthogonality to the test family, decided over a survey of Gr_{d,r}.
 *
 * An exhaustive survey visits every F_q-point of Gr_{d,r} for the field of the
 * module and answers exactly over F_q. A sampled survey draws random points and
 * can only refute: a property that survives sampling is reported as evidence.
 */
#pragma once

#include "kronecker/test_modules.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronecker {

struct Survey {
  enum class Kind { exhaustive, sample };
  Kind kind = Kind::exhaustive;
  std::size_t count = 64;
  std::uint64_t seed = 0;

  static Survey exhaustive() { return {}; }
  static Survey sample(std::size_t count, std::uint64_t seed = 0) { return {Kind::sample, count, seed}; }
  bool is_exhaustive() const { return kind == Kind::exhaustive; }
  std::string to_string() const {
    return is_exhaustive() ? "exhaustive" : "sample(count=" + std::to_string(count) + ", seed=" + std::to_string(seed) + ")";
  }
};

enum class Scope { exact_over_Fq, sampled };
enum class Holds { yes, no, evidence_only };

inline std::string to_string(Scope s) { return s == Scope::exact_over_Fq ? "exact_over_Fq" : "sampled"; }
inline std::string to_string(Holds h) {
  switch (h) {
    case Holds::yes: return "yes";
    case Holds::no: return "no";
    case Holds::evidence_only: return "evidence_only";
  }
  return "?";
}

template <ExactField F>
struct PropertyVerdict {
  Holds holds = Holds::evidence_only;
  Scope scope = Scope::exact_over_Fq;
  std::vector<Subspace<F>> witnesses;  ///< non-empty when holds == no
  std::string detail;

  /// yes, or evidence_only; i.e. not refuted on the survey.
  bool survived() const { return holds != Holds::no; }
};

/// The points of Gr_{d,r} visited by a survey, in canonical order without repetition.
template <ExactField F>
std::vector<Subspace<F>> survey_points(const F& field, std::size_t d, std::size_t r, const Survey& survey) {
  require_grassmannian(d, r);
  if (survey.is_exhaustive()) return grassmannian_points(field, d, r);
  if (survey.count == 0) throw std::invalid_argument("sampled survey with zero points");
  std::mt19937_64 rng(survey.seed);
  std::vector<Subspace<F>> out;
  for (std::size_t k = 0; k < survey.count; ++k) out.push_back(random_subspace(field, d, r, rng));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Scope scope_of(const Survey& s) { return s.is_exhaustive() ? Scope::exact_over_Fq : Scope::sampled; }

template <ExactField F>
PropertyVerdict<F> verdict_from(bool refuted, const Survey& survey, std::vector<Subspace<F>> witnesses,
                                std::string detail) {
  PropertyVerdict<F> v;
  v.scope = scope_of(survey);
  v.holds = refuted ? Holds::no : (survey.is_exhaustive() ? Holds::yes : Holds::evidence_only);
  if (refuted) v.witnesses = std::move(witnesses);
  v.detail = std::move(detail);
  return v;
}

template <ExactField F>
struct Observation {
  Subspace<F> subspace;
  std::size_t soc_dim;
  std::size_t rad_dim;
};

template <ExactField F>
struct RankProfile {
  std::size_t d = 0;
  Survey survey;
  std::vector<Observation<F>> observations;
  std::size_t min_soc = 0, max_soc = 0, min_rad = 0, max_rad = 0;
};

template <ExactField F>
RankProfile<F> socle_rank_profile(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  RankProfile<F> p;
  p.d = d;
  p.survey = survey;
  for (auto& u : survey_points(m.field(), d, m.r(), survey)) {
    const auto s = soc_dim(m, u), r = rad_dim(m, u);
    p.observations.push_back({std::move(u), s, r});
  }
  auto [smin, smax] = std::minmax_element(p.observations.begin(), p.observations.end(),
                                          [](const auto& a, const auto& b) { return a.soc_dim < b.soc_dim; });
  auto [rmin, rmax] = std::minmax_element(p.observations.begin(), p.observations.end(),
                                          [](const auto& a, const auto& b) { return a.rad_dim < b.rad_dim; });
  p.min_soc = smin->soc_dim;
  p.max_soc = smax->soc_dim;
  p.min_rad = rmin->rad_dim;
  p.max_rad = rmax->rad_dim;
  return p;
}

namespace detail {

template <ExactField F>
PropertyVerdict<F> constancy_verdict(const RankProfile<F>& p, bool socle, const char* what) {
  const auto key = [socle](const Observation<F>& o) { return socle ? o.soc_dim : o.rad_dim; };
  const auto lo = socle ? p.min_soc : p.min_rad, hi = socle ? p.max_soc : p.max_rad;
  if (lo == hi) {
    return verdict_from<F>(false, p.survey, {},
                           std::string(what) + " dimension " + std::to_string(lo) + " on " +
                               std::to_string(p.observations.size()) + " points");
  }
  const Subspace<F>* a = nullptr;
  const Subspace<F>* b = nullptr;
  for (const auto& o : p.observations) {
    if (!a && key(o) == lo) a = &o.subspace;
    if (!b && key(o) == hi) b = &o.subspace;
  }
  return verdict_from<F>(true, p.survey, {*a, *b},
                         std::string(what) + " dimension varies: " + std::to_string(lo) + " vs " + std::to_string(hi));
}

}  // namespace detail

/// CSR_d: dim Soc_U(M) independent of U.
template <ExactField F>
PropertyVerdict<F> has_constant_socle_rank(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  return detail::constancy_verdict(socle_rank_profile(m, d, survey), true, "Soc_U");
}

/// CRR_d, decided as CSR_d of DM and checked against dim Rad_U(M) = dim M - dim Soc_U(DM).
template <ExactField F>
PropertyVerdict<F> has_constant_radical_rank(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  const auto dm = dual(m);
  const auto pd = socle_rank_profile(dm, d, survey);
  const std::size_t total = m.total_dimension();
  for (const auto& o : pd.observations) {
    if (rad_dim(m, o.subspace) != total - o.soc_dim) {
      throw std::logic_error("has_constant_radical_rank: dual socle and direct radical disagree at " +
                             o.subspace.to_string());
    }
  }
  auto v = detail::constancy_verdict(pd, true, "Soc_U(DM)");
  v.detail = "via DM: " + v.detail;
  return v;
}

/// ESP_d, decided by the criterion Soc_U(M) = M_2 for every surveyed U, together with
/// the equivalent Hom(X_U, M) = 0. With `cross_check` set both are computed and must agree.
template <ExactField F>
PropertyVerdict<F> has_equal_socle_property(const KroneckerModule<F>& m, std::size_t d, const Survey& survey,
                                            bool cross_check = true) {
  const std::size_t d2 = m.dim().d2;
  for (const auto& u : survey_points(m.field(), d, m.r(), survey)) {
    const bool socle_is_m2 = soc_dim(m, u) == d2;
    if (cross_check) {
      const bool hom_vanishes = hom_dim(x_u_module(u).module, m) == 0;
      if (socle_is_m2 != hom_vanishes) {
        throw std::logic_error("has_equal_socle_property: socle and Hom criteria disagree at " + u.to_string());
      }
    }
    if (!socle_is_m2) return verdict_from<F>(true, survey, {u}, "Soc_U(M) != M_2, Hom(X_U, M) != 0");
  }
  return verdict_from<F>(false, survey, {}, "Soc_U(M) = M_2 on every surveyed U");
}

/// ERP_d, decided as ESP_d of DM; cross-checked by Rad_U(M) = M_2 computed directly.
template <ExactField F>
PropertyVerdict<F> has_equal_radical_property(const KroneckerModule<F>& m, std::size_t d, const Survey& survey,
                                              bool cross_check = true) {
  auto v = has_equal_socle_property(dual(m), d, survey, cross_check);
  if (cross_check) {
    bool direct_refuted = false;
    for (const auto& u : survey_points(m.field(), d, m.r(), survey)) {
      if (rad_dim(m, u) != m.dim().d2) {
        direct_refuted = true;
        break;
      }
    }
    if (direct_refuted != (v.holds == Holds::no)) {
      throw std::logic_error("has_equal_radical_property: dual and direct computations disagree");
    }
  }
  v.detail = "via DM: " + v.detail;
  return v;
}

/// Literal equality of the subspaces Soc_U(M) over the survey.
template <ExactField F>
PropertyVerdict<F> has_equal_socle_literal(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  const auto points = survey_points(m.field(), d, m.r(), survey);
  const auto first = soc(m, points.front());
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(soc(m, points[k]) == first)) {
      return verdict_from<F>(true, survey, {points.front(), points[k]}, "Soc_U(M) differs between two points");
    }
  }
  return verdict_from<F>(false, survey, {}, "Soc_U(M) is the same subspace on every surveyed U");
}

/// Literal equality of the subspaces Rad_U(M) over the survey.
template <ExactField F>
PropertyVerdict<F> has_equal_radical_literal(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  const auto points = survey_points(m.field(), d, m.r(), survey);
  const auto first = rad(m, points.front());
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(rad(m, points[k]) == first)) {
      return verdict_from<F>(true, survey, {points.front(), points[k]}, "Rad_U(M) differs between two points");
    }
  }
  return verdict_from<F>(false, survey, {}, "Rad_U(M) is the same subspace on every surveyed U");
}

template <ExactField F>
struct StratumResult {
  std::optional<std::size_t> level;  ///< minimal i with M in ESP_i
  Scope scope = Scope::exact_over_Fq;
  std::vector<PropertyVerdict<F>> verdicts;  ///< ESP_1 .. ESP_{r-1}
};

template <ExactField F>
StratumResult<F> stratum(const KroneckerModule<F>& m, const Survey& survey, bool cross_check = true) {
  StratumResult<F> s;
  s.scope = scope_of(survey);
  for (std::size_t d = 1; d < m.r(); ++d) {
    auto v = has_equal_socle_property(m, d, survey, cross_check);
    if (!s.level && v.survived()) s.level = d;
    s.verdicts.push_back(std::move(v));
  }
  return s;
}

/// dim Hom(X_U, M) = dim M_1; the bound dim Hom(X_U, M) <= dim M_1 is enforced.
template <ExactField F>
bool is_u_trivial(const KroneckerModule<F>& m, const Subspace<F>& u) {
  require_same_r(m, u, "is_u_trivial");
  const auto h = hom_dim(x_u_module(u).module, m);
  if (h > m.dim().d1) throw std::logic_error("is_u_trivial: dim Hom(X_U, M) exceeds dim M_1");
  return h == m.dim().d1;
}

template <ExactField F>
struct OrthogonalityFlags {
  PropertyVerdict<F> right;  ///< Hom(X_U, M) = 0 for all surveyed U
  PropertyVerdict<F> left;   ///< Hom(M, X_U) = 0 for all surveyed U
  bool both() const { return right.survived() && left.survived(); }
};

template <ExactField F>
OrthogonalityFlags<F> orthogonality_flags(const KroneckerModule<F>& m, std::size_t d, const Survey& survey) {
  std::optional<Subspace<F>> right_witness, left_witness;
  for (const auto& u : survey_points(m.field(), d, m.r(), survey)) {
    const auto x = x_u_module(u).module;
    if (!right_witness && hom_dim(x, m) != 0) right_witness = u;
    if (!left_witness && hom_dim(m, x) != 0) left_witness = u;
    if (right_witness && left_witness) break;
  }
  auto as_list = [](const std::optional<Subspace<F>>& w) {
    return w ? std::vector<Subspace<F>>{*w} : std::vector<Subspace<F>>{};
  };
  return {verdict_from<F>(right_witness.has_value(), survey, as_list(right_witness),
                          right_witness ? "Hom(X_U, M) != 0" : "Hom(X_U, M) = 0 on every surveyed U"),
          verdict_from<F>(left_witness.has_value(), survey, as_list(left_witness),
                          left_witness ? "Hom(M, X_U) != 0" : "Hom(M, X_U) = 0 on every surveyed U")};
}

}  // namespace kronecker
