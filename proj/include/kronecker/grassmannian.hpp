/**
 * @file grassmannian.hpp
 * @brief F_q-rational points of Gr_{d,r}, enumerated cell by cell in RREF.
 */
#pragma once

#include "kronecker/subspace.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace kronecker {

inline void require_grassmannian(std::size_t d, std::size_t r) {
  if (d < 1 || d >= r) {
    throw std::invalid_argument("Gr_{" + std::to_string(d) + "," + std::to_string(r) +
                                "}: need 1 <= d < r");
  }
}

/// Number of F_q-points of Gr_{d,r}: the Gaussian binomial [r choose d]_q.
inline std::uint64_t grassmannian_count(std::uint64_t q, std::size_t d, std::size_t r) {
  require_grassmannian(d, r);
  // product (q^{r-i} - 1) / (q^{i+1} - 1), kept exact by dividing at each step
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    num *= boost::multiprecision::pow(boost::multiprecision::cpp_int(q), static_cast<unsigned>(r - i)) - 1;
    den *= boost::multiprecision::pow(boost::multiprecision::cpp_int(q), static_cast<unsigned>(i + 1)) - 1;
  }
  const auto count = num / den;
  if (count > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("grassmannian_count: exceeds 64 bits");
  return static_cast<std::uint64_t>(count);
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Calls `visit` once per point of Gr_{d,r}(F_q), where F_q is the given finite field.
/// Order: pivot sets lexicographically, then free entries as base-q counters.
template <ExactField F>
void for_each_grassmannian_point(const F& field, std::size_t d, std::size_t r,
                                 const std::function<void(const Subspace<F>&)>& visit) {
  require_grassmannian(d, r);
  const auto q = field.order();
  if (!q) throw std::invalid_argument("Grassmannian enumeration needs a finite field");
  std::vector<std::size_t> pivots(d);
  for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
  do {
    // free cells: (row j, column c) with c > pivots[j] and c not a pivot
    std::vector<bool> is_pivot(r, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = pivots[j] + 1; c < r; ++c)
        if (!is_pivot[c]) cells.emplace_back(j, c);

    Matrix<F> m(field, d, r);
    for (std::size_t j = 0; j < d; ++j) m(j, pivots[j]) = field.one();
    std::vector<std::uint64_t> digits(cells.size(), 0);
    bool done = false;
    while (!done) {
      for (std::size_t k = 0; k < cells.size(); ++k) m(cells[k].first, cells[k].second) = field.element_at(digits[k]);
      visit(Subspace<F>::from_basis(m));
      std::size_t k = 0;
      for (; k < cells.size(); ++k) {
        if (++digits[k] < *q) break;
        digits[k] = 0;
      }
      done = k == cells.size();
    }
  } while (detail::next_combination(pivots, r));
}

template <ExactField F>
std::vector<Subspace<F>> grassmannian_points(const F& field, std::size_t d, std::size_t r) {
  std::vector<Subspace<F>> out;
  for_each_grassmannian_point<F>(field, d, r, [&](const Subspace<F>& u) { out.push_back(u); });
  return out;
}

/// A random point, from a random full-rank d x r matrix.
template <ExactField F, class Rng>
Subspace<F> random_subspace(const F& field, std::size_t d, std::size_t r, Rng& rng) {
  require_grassmannian(d, r);
  while (true) {
    auto m = random_matrix(field, d, r, rng);
    if (rank(m) == d) return Subspace<F>::from_basis(m);
  }
}

}  // namespace kronecker
