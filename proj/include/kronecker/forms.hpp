/**
 * @file forms.hpp
 * @brief Integer forms on dimension vectors of the r-Kronecker quiver.
 */
#pragma once

#include "kronecker/module.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace kronecker {

using IntPair = std::pair<std::int64_t, std::int64_t>;

class FormContext {
 public:
  explicit FormContext(std::size_t r) : r_(static_cast<std::int64_t>(r)) {
    if (r < 2) throw std::invalid_argument("FormContext: r must be at least 2");
  }

  std::int64_t r() const { return r_; }

  /// <d, e> = d1 e1 + d2 e2 - r d1 e2
  std::int64_t euler_form(IntPair d, IntPair e) const {
    return d.first * e.first + d.second * e.second - r_ * d.first * e.second;
  }
  std::int64_t euler_form(DimVector d, DimVector e) const { return euler_form(to_pair(d), to_pair(e)); }

  std::int64_t quadratic(IntPair d) const { return euler_form(d, d); }
  std::int64_t quadratic(DimVector d) const { return quadratic(to_pair(d)); }

  IntPair coxeter(IntPair d, bool inverse = false) const {
    const auto [x, y] = d;
    if (!inverse) return {(r_ * r_ - 1) * x - r_ * y, r_ * x - y};
    return {-x + r_ * y, -r_ * x + (r_ * r_ - 1) * y};
  }
  IntPair coxeter(DimVector d, bool inverse = false) const { return coxeter(to_pair(d), inverse); }

  static IntPair to_pair(DimVector d) {
    return {static_cast<std::int64_t>(d.d1), static_cast<std::int64_t>(d.d2)};
  }

 private:
  std::int64_t r_;
};

enum class RootKind { real_preprojective, real_preinjective, imaginary, not_a_root };

inline std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::real_preprojective: return "real_root(preprojective)";
    case RootKind::real_preinjective: return "real_root(preinjective)";
    case RootKind::imaginary: return "imaginary_root";
    case RootKind::not_a_root: return "not_a_root";
  }
  return "?";
}

/// Root type of a nonzero dimension vector. Says nothing about a particular module.
inline RootKind classify_dimvector(const FormContext& ctx, DimVector d) {
  if (d.total() == 0) throw std::invalid_argument("classify_dimvector: zero dimension vector");
  const auto q = ctx.quadratic(d);
  if (q == 1) return d.d1 < d.d2 ? RootKind::real_preprojective : RootKind::real_preinjective;
  if (q <= 0) return RootKind::imaginary;
  return RootKind::not_a_root;
}

}  // namespace kronecker
