/**
 * @file field.hpp
 * @brief Exact ground fields: prime fields F_p and the rationals.
 *
 * A field object carries the arithmetic; elements are plain values. Every
 * container in the library stores its field next to the entries so that
 * mixed-field operations are caught at run time.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace kronecker {

template <class F>
concept ExactField = std::equality_comparable<F> && requires(const F& f, typename F::value_type a,
                                                             std::int64_t n, std::mt19937_64& rng) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_integer(n) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.order() } -> std::same_as<std::optional<std::uint64_t>>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.random(rng) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::same_as<std::string>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// F_p with 2 <= p < 2^31, elements stored as residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  bool operator==(const PrimeField&) const = default;

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::optional<std::uint64_t> order() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<value_type>(m);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// a - c*b in one reduction; the row-operation kernel of elimination.
  value_type sub_mul(value_type a, value_type c, value_type b) const {
    return static_cast<value_type>((a + static_cast<std::uint64_t>(p_ - c) * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  bool is_zero(value_type a) const { return a == 0; }

  /// The i-th element in the fixed enumeration 0, 1, ..., p-1.
  value_type element_at(std::uint64_t i) const { return static_cast<value_type>(i % p_); }

  template <class Rng>
  value_type random(Rng& rng) const {
    return static_cast<value_type>(rng() % p_);
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  /// Representative in (-p/2, p/2], used for compact display only.
  std::int64_t to_integer(value_type a) const { return static_cast<std::int64_t>(a); }

 private:
  std::uint32_t p_;
};

/// The field Q of rational numbers with arbitrary precision.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  bool operator==(const RationalField&) const = default;

  std::uint64_t characteristic() const { return 0; }
  std::optional<std::uint64_t> order() const { return std::nullopt; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(std::int64_t n) const { return value_type(n); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const {
    return a - c * b;
  }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return value_type(1) / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }

  value_type element_at(std::uint64_t) const {
    throw std::logic_error("RationalField: the field is infinite and cannot be enumerated");
  }

  /// Small integers in [-3, 3]; enough to hit generic behaviour in sampled surveys.
  template <class Rng>
  value_type random(Rng& rng) const {
    return value_type(static_cast<std::int64_t>(rng() % 7) - 3);
  }

  std::string to_string(const value_type& a) const { return a.str(); }

  value_type parse(const std::string& text) const {
    auto slash = text.find('/');
    if (slash == std::string::npos) return value_type(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return value_type(num, den);
  }
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

/// Runtime descriptor used by serialization and the command line.
struct FieldDescriptor {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  std::uint64_t p = 0;

  bool operator==(const FieldDescriptor&) const = default;
};

inline FieldDescriptor describe(const PrimeField& f) { return {FieldDescriptor::Kind::prime, f.modulus()}; }
inline FieldDescriptor describe(const RationalField&) { return {FieldDescriptor::Kind::rational, 0}; }

}  // namespace kronecker
