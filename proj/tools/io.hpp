// Module documents: {"field": {"prime": p} | {"rational": true}, "r": r, "dim": [d1, d2], "maps": [...]}.
// Maps are dense row-major d2 x d1 integer lists; rational entries may also be "a/b" strings.
#pragma once

#include "kronecker/module.hpp"
#include "kronecker/subspace.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace kronecker::io {

using json = nlohmann::json;
using PrimeModule = KroneckerModule<PrimeField>;
using RationalModule = KroneckerModule<RationalField>;
using AnyModule = std::variant<PrimeModule, RationalModule>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

namespace detail {

[[noreturn]] inline void fail(const std::string& source, const std::string& path, const std::string& what) {
  throw InputError(source + ": at " + (path.empty() ? "/" : path) + ": " + what);
}

inline std::size_t natural(const json& j, const std::string& source, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(source, path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline RationalField::value_type rational_entry(const json& j, const std::string& source, const std::string& path) {
  static const RationalField q{};
  if (j.is_number_integer()) return q.from_integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return q.parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(source, path, std::string("bad rational entry: ") + e.what());
    }
  }
  fail(source, path, "expected an integer or a rational string");
}

inline PrimeField::value_type prime_entry(const PrimeField& f, const json& j, const std::string& source,
                                          const std::string& path) {
  const auto x = rational_entry(j, source, path);
  using boost::multiprecision::cpp_int;
  const cpp_int p = f.modulus();
  cpp_int num = boost::multiprecision::numerator(x) % p, den = boost::multiprecision::denominator(x) % p;
  if (num < 0) num += p;
  if (den == 0) fail(source, path, "denominator vanishes modulo " + std::to_string(f.modulus()));
  return f.mul(static_cast<std::uint32_t>(num), f.inv(static_cast<std::uint32_t>(den)));
}

template <class F, class Entry>
KroneckerModule<F> build(const F& field, const json& doc, const std::string& source, Entry entry) {
  const std::size_t r = natural(doc.at("r"), source, "/r");
  const json& dim = doc.at("dim");
  if (!dim.is_array() || dim.size() != 2) fail(source, "/dim", "expected [d1, d2]");
  const DimVector d{natural(dim[0], source, "/dim/0"), natural(dim[1], source, "/dim/1")};
  const json& maps = doc.at("maps");
  if (!maps.is_array()) fail(source, "/maps", "expected a list of matrices");
  if (maps.size() != r) {
    fail(source, "/maps", "expected r = " + std::to_string(r) + " matrices, found " + std::to_string(maps.size()));
  }
  std::vector<Matrix<F>> out;
  for (std::size_t i = 0; i < r; ++i) {
    const std::string mp = "/maps/" + std::to_string(i);
    const json& m = maps[i];
    // a d2 x 0 matrix has no columns to write down; accept [] or a list of empty rows
    if (!m.is_array() || (m.size() != d.d2 && !(d.d1 == 0 && m.empty()))) {
      fail(source, mp, "expected " + std::to_string(d.d2) + " rows");
    }
    Matrix<F> a(field, d.d2, d.d1);
    for (std::size_t x = 0; x < m.size(); ++x) {
      const std::string rp = mp + "/" + std::to_string(x);
      if (!m[x].is_array() || m[x].size() != d.d1) fail(source, rp, "expected " + std::to_string(d.d1) + " entries");
      for (std::size_t y = 0; y < d.d1; ++y) a(x, y) = entry(m[x][y], rp + "/" + std::to_string(y));
    }
    out.push_back(std::move(a));
  }
  return KroneckerModule<F>(field, r, d, std::move(out));
}

}  // namespace detail

/// Parses a module document. With `prime_override` the integer (or rational) entries are read over F_p instead.
inline AnyModule parse_module(const json& doc, const std::string& source,
                              std::optional<std::uint64_t> prime_override = std::nullopt) {
  if (!doc.is_object()) detail::fail(source, "", "expected an object");
  for (const char* key : {"field", "r", "dim", "maps"}) {
    if (!doc.contains(key)) detail::fail(source, "", std::string("missing key \"") + key + "\"");
  }
  const json& fd = doc.at("field");
  bool rational = false;
  std::uint64_t p = 0;
  if (fd.is_object() && fd.contains("prime")) {
    p = detail::natural(fd.at("prime"), source, "/field/prime");
  } else if (fd.is_object() && fd.contains("rational") && fd.at("rational") == true) {
    rational = true;
  } else {
    detail::fail(source, "/field", "expected {\"prime\": p} or {\"rational\": true}");
  }
  if (prime_override) {
    rational = false;
    p = *prime_override;
  }
  try {
    if (rational) {
      return detail::build(RationalField{}, doc, source,
                           [&](const json& j, const std::string& path) { return detail::rational_entry(j, source, path); });
    }
    std::optional<PrimeField> f;
    try {
      f.emplace(p);
    } catch (const std::invalid_argument& e) {
      detail::fail(source, "/field/prime", e.what());
    }
    return detail::build(*f, doc, source,
                         [&](const json& j, const std::string& path) { return detail::prime_entry(*f, j, source, path); });
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline AnyModule parse_module_text(const std::string& text, const std::string& source,
                                   std::optional<std::uint64_t> prime_override = std::nullopt) {
  return parse_module(parse_document(text, source), source, prime_override);
}

inline json field_json(const PrimeField& f) { return {{"prime", f.modulus()}}; }
inline json field_json(const RationalField&) { return {{"rational", true}}; }

inline json entry_json(const PrimeField&, PrimeField::value_type a) { return a; }
inline json entry_json(const RationalField& q, const RationalField::value_type& a) {
  if (boost::multiprecision::denominator(a) == 1 && abs(a) < 1'000'000'000) {
    return static_cast<std::int64_t>(boost::multiprecision::numerator(a));
  }
  return q.to_string(a);
}

template <ExactField F>
json matrix_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m.field(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ExactField F>
json module_json(const KroneckerModule<F>& m) {
  json maps = json::array();
  for (const auto& a : m.maps()) maps.push_back(matrix_json(a));
  return {{"field", field_json(m.field())}, {"r", m.r()}, {"dim", {m.dim().d1, m.dim().d2}}, {"maps", std::move(maps)}};
}

inline json module_json(const AnyModule& m) {
  return std::visit([](const auto& x) { return module_json(x); }, m);
}

template <ExactField F>
json subspace_json(const Subspace<F>& s) {
  return matrix_json(s.basis());
}

/// Canonical text: sorted keys, no whitespace.
inline std::string canonical(const json& j) { return j.dump(); }

inline std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace kronecker::io
