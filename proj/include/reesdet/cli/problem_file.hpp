/*
 * Copyright 2026 The reesdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "reesdet/errors.hpp"
#include "reesdet/extended.hpp"
#include "reesdet/groebner/ideal.hpp"
#include "reesdet/matrix/matrix.hpp"
#include "reesdet/poly/io.hpp"

namespace reesdet::cli {

using Json = nlohmann::ordered_json;
using matrix::MatrixKind;

enum class Analysis { height, gs, specialize, bounds, classify, pfaffian };

[[nodiscard]] inline std::string to_string(Analysis a) {
  switch (a) {
    case Analysis::height: return "height";
    case Analysis::gs: return "gs";
    case Analysis::specialize: return "specialize";
    case Analysis::bounds: return "bounds";
    case Analysis::classify: return "classify";
    case Analysis::pfaffian: return "pfaffian";
  }
  return {};
}

[[nodiscard]] inline Analysis parse_analysis(const std::string& s) {
  for (Analysis a : {Analysis::height, Analysis::gs, Analysis::specialize, Analysis::bounds,
                     Analysis::classify, Analysis::pfaffian})
    if (to_string(a) == s) return a;
  throw InputError("unknown analysis '" + s + "'");
}

struct KRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;

  [[nodiscard]] std::string to_string() const {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
  }
  friend bool operator==(const KRange&, const KRange&) = default;
};

namespace detail {

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError(what + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace detail

/// "3" or "1..4".
[[nodiscard]] inline KRange parse_k_range(const std::string& s) {
  KRange r;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    r.lo = detail::parse_int(s.substr(0, dots), "k range");
    r.hi = detail::parse_int(s.substr(dots + 2), "k range");
  } else {
    r.lo = r.hi = detail::parse_int(s, "k");
  }
  if (r.lo < 1 || r.hi < r.lo) throw InputError("k range '" + s + "' must satisfy 1 <= a <= b");
  if (r.hi - r.lo > 1000) throw InputError("k range '" + s + "' is longer than 1000");
  return r;
}

/// Positive integer or "inf".
[[nodiscard]] inline ExtendedNat parse_s(const std::string& s) {
  if (s == "inf" || s == "+inf") return ExtendedNat::infinity();
  const auto v = detail::parse_int(s, "s");
  if (v < 1) throw InputError("s must be positive or inf, got " + s);
  return ExtendedNat(static_cast<std::uint64_t>(v));
}

/// "QQ", "rationals", "F_p" or a bare prime p.
[[nodiscard]] inline poly::FieldSpec parse_field_spec(const std::string& s) {
  if (s == "QQ" || s == "rationals") return poly::FieldSpec::rationals();
  std::string digits = s.rfind("F_", 0) == 0 ? s.substr(2) : s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("unknown field '" + s + "' (use QQ, rationals, F_p or p)");
  const auto p = detail::parse_int(digits, "field");
  if (p < 2 || p >= (1LL << 31) || !poly::is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("field '" + s + "' needs a prime below 2^31");
  return poly::FieldSpec::prime_field(static_cast<std::uint32_t>(p));
}

struct Request {
  Analysis analysis = Analysis::height;
  std::optional<ExtendedNat> s;
  std::optional<KRange> k;

  friend bool operator==(const Request&, const Request&) = default;
};

struct ProblemFile {
  int format = 1;
  poly::FieldSpec field = poly::FieldSpec::prime_field();
  poly::MonomialOrder order = poly::MonomialOrder::grevlex;
  std::vector<std::string> variables;
  MatrixKind kind = MatrixKind::ordinary;
  std::vector<std::vector<std::string>> entries;
  std::int64_t t = 1;
  std::vector<Request> requested;

  [[nodiscard]] std::size_t rows() const { return entries.size(); }
  [[nodiscard]] std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Calls `f` with the coefficient field named by `spec`.
template <class Fn>
decltype(auto) with_field(const poly::FieldSpec& spec, Fn&& f) {
  if (spec.kind == poly::FieldKind::rationals) return f(poly::RationalField{});
  return f(poly::PrimeField(spec.p));
}

/// Parses the entries in a ring over `field`; errors name the offending cell.
template <poly::CoefficientField F>
[[nodiscard]] matrix::PolyMatrix<F> build_matrix(const ProblemFile& pf, F field) {
  const auto ring = poly::make_ring<F>(pf.variables, std::move(field), pf.order);
  std::vector<poly::Polynomial<F>> cells;
  for (std::size_t i = 0; i < pf.rows(); ++i)
    for (std::size_t j = 0; j < pf.cols(); ++j) {
      try {
        cells.push_back(poly::parse_polynomial(pf.entries[i][j], ring));
      } catch (const InputError& e) {
        throw InputError("matrix.entries[" + std::to_string(i) + "][" + std::to_string(j) + "] '" +
                         pf.entries[i][j] + "': " + e.what());
      }
    }
  try {
    matrix::PolyMatrix<F> a(ring, pf.rows(), pf.cols(), std::move(cells), pf.kind);
    groebner::require_t_in_range(a, pf.t);
    return a;
  } catch (const InputError& e) {
    throw InputError(e.what());
  }
}

/// Problem file violates the schema; the message names the offending key.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

namespace detail {

[[noreturn]] inline void schema(const std::string& key, const std::string& why) {
  throw SchemaError("problem file: key '" + key + "': " + why);
}

/// Runs `fn`, reporting its InputError against `key`.
template <class Fn>
auto keyed(const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    schema(key, e.what());
  }
}

inline const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) schema(path + key, "missing");
  return j.at(key);
}

inline std::string as_string(const Json& j, const std::string& key) {
  if (!j.is_string()) schema(key, "expected a string");
  return j.get<std::string>();
}

inline Request parse_request(const Json& j, const std::string& key) {
  Request r;
  if (j.is_string()) {
    r.analysis = keyed(key, [&] { return parse_analysis(j.get<std::string>()); });
    return r;
  }
  if (!j.is_object() || j.size() != 1) schema(key, "expected an analysis name or {name: {...}}");
  const auto& [name, params] = *j.items().begin();
  r.analysis = keyed(key, [&] { return parse_analysis(name); });
  if (!params.is_object()) schema(key + "." + name, "expected an object");
  for (const auto& [pk, pv] : params.items()) {
    const std::string sub = key + "." + name + "." + pk;
    const std::string text = pv.is_number_integer() ? std::to_string(pv.get<std::int64_t>()) : as_string(pv, sub);
    if (pk == "s" && r.analysis == Analysis::gs) {
      r.s = keyed(sub, [&] { return parse_s(text); });
    } else if (pk == "k" && r.analysis == Analysis::bounds) {
      r.k = keyed(sub, [&] { return parse_k_range(text); });
    } else {
      schema(sub, "unknown parameter");
    }
  }
  return r;
}

}  // namespace detail

/// Schema check and conversion; does not parse the polynomial entries.
[[nodiscard]] inline ProblemFile problem_from_json(const Json& j) {
  using detail::schema;
  if (!j.is_object()) schema("", "document must be an object");
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known = {"format", "field", "order", "variables",
                                                   "matrix", "t", "requested"};
    if (std::find(known.begin(), known.end(), key) == known.end()) schema(key, "unknown key");
  }
  ProblemFile pf;
  const auto& fmt = detail::require(j, "format", "");
  if (!fmt.is_number_integer() || fmt.get<int>() != 1) schema("format", "only format 1 is supported");
  if (j.contains("field"))
    pf.field = detail::keyed("field", [&] { return parse_field_spec(detail::as_string(j.at("field"), "field")); });
  if (j.contains("order"))
    pf.order = detail::keyed(
        "order", [&] { return poly::parse_monomial_order(detail::as_string(j.at("order"), "order")); });
  const auto& vars = detail::require(j, "variables", "");
  if (!vars.is_array()) schema("variables", "expected a list of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto key = "variables[" + std::to_string(i) + "]";
    const auto name = detail::as_string(vars[i], key);
    if (!poly::is_identifier(name)) schema(key, "'" + name + "' is not an identifier");
    if (std::find(pf.variables.begin(), pf.variables.end(), name) != pf.variables.end())
      schema(key, "duplicate variable '" + name + "'");
    pf.variables.push_back(name);
  }
  const auto& mat = detail::require(j, "matrix", "");
  if (!mat.is_object()) schema("matrix", "expected an object");
  for (const auto& [key, value] : mat.items())
    if (key != "kind" && key != "entries") schema("matrix." + key, "unknown key");
  if (mat.contains("kind"))
    pf.kind = detail::keyed(
        "matrix.kind", [&] { return matrix::parse_matrix_kind(detail::as_string(mat.at("kind"), "matrix.kind")); });
  const auto& rows = detail::require(mat, "entries", "matrix.");
  if (!rows.is_array() || rows.empty()) schema("matrix.entries", "expected a non-empty list of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto key = "matrix.entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].empty()) schema(key, "expected a non-empty list of entries");
    if (i > 0 && rows[i].size() != rows[0].size()) schema(key, "rows have different lengths");
    std::vector<std::string> row;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      const auto& cell = rows[i][c];
      const auto ckey = key + "[" + std::to_string(c) + "]";
      row.push_back(cell.is_number_integer() ? std::to_string(cell.get<std::int64_t>())
                                             : detail::as_string(cell, ckey));
    }
    pf.entries.push_back(std::move(row));
  }
  if (pf.kind != MatrixKind::ordinary && pf.rows() != pf.cols())
    schema("matrix.kind", std::string(matrix::to_string(pf.kind)) + " matrix must be square");
  const auto& t = detail::require(j, "t", "");
  if (!t.is_number_integer()) schema("t", "expected an integer");
  pf.t = t.get<std::int64_t>();
  if (j.contains("requested")) {
    const auto& req = j.at("requested");
    if (!req.is_array()) schema("requested", "expected a list");
    for (std::size_t i = 0; i < req.size(); ++i)
      pf.requested.push_back(detail::parse_request(req[i], "requested[" + std::to_string(i) + "]"));
  }
  return pf;
}

[[nodiscard]] inline Json problem_to_json(const ProblemFile& pf) {
  Json j;
  j["format"] = pf.format;
  j["field"] = pf.field.name();
  j["order"] = std::string(poly::to_string(pf.order));
  j["variables"] = pf.variables;
  j["matrix"]["kind"] = std::string(matrix::to_string(pf.kind));
  j["matrix"]["entries"] = pf.entries;
  j["t"] = pf.t;
  Json req = Json::array();
  for (const auto& r : pf.requested) {
    Json params = Json::object();
    if (r.s) params["s"] = r.s->to_string();
    if (r.k) params["k"] = r.k->to_string();
    if (params.empty()) {
      req.push_back(to_string(r.analysis));
    } else {
      Json o;
      o[to_string(r.analysis)] = params;
      req.push_back(o);
    }
  }
  j["requested"] = req;
  return j;
}

/// Checks the schema and that every entry parses and fits the kind.
inline void validate_problem(const ProblemFile& pf) {
  detail::keyed("matrix", [&] {
    with_field(pf.field, [&](auto field) { (void)build_matrix(pf, std::move(field)); });
  });
}

[[nodiscard]] inline ProblemFile parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  auto pf = problem_from_json(j);
  validate_problem(pf);
  return pf;
}

[[nodiscard]] inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

/// Problem file for the generic matrix of the given shape.
[[nodiscard]] inline ProblemFile generic_problem(MatrixKind kind, std::size_t m, std::size_t n,
                                                 std::int64_t t) {
  const auto g = matrix::generic_matrix<poly::RationalField>(m, n, kind);
  ProblemFile pf;
  pf.variables = g.ring().variables();
  pf.kind = kind;
  pf.t = t;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(poly::to_string(g(i, j)));
    pf.entries.push_back(std::move(row));
  }
  return pf;
}

}  // namespace reesdet::cli
