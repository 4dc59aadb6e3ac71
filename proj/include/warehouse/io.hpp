// Copyright 2026 The Warehouse Solver Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding of instances, solutions and feasibility reports.
// Numbers are JSON integers when integral (and within 64 bits) and "p/q"
// strings otherwise. Decimals are rejected on input and never written.

#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "warehouse/generators.hpp"
#include "warehouse/model.hpp"

namespace warehouse {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    const BigInt n = numerator_of(r);
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
      return Json(n.convert_to<std::int64_t>());
    }
  }
  return Json(to_string(r));
}

inline Rational rational_from_json(const Json& j, std::string_view field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    return Rational(BigInt(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::kParseError,
              "field '" + std::string(field) + "' must be an integer or a \"p/q\" string");
}

inline Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational_to_json(v));
  return arr;
}

inline std::vector<Rational> rationals_from_json(const Json& j, std::string_view field) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParseError, "field '" + std::string(field) + "' must be an array");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e, field));
  return out;
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::kParseError, std::string("missing key '") + key + "'");
  }
  return *it;
}

inline std::vector<int> bits_from_json(const Json& j, const char* field) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParseError, std::string("field '") + field + "' must be an array");
  }
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || (e.get<std::int64_t>() != 0 && e.get<std::int64_t>() != 1)) {
      throw Error(ErrorCode::kParseError, std::string("field '") + field + "' must hold 0/1");
    }
    out.push_back(static_cast<int>(e.get<std::int64_t>()));
  }
  return out;
}

}  // namespace detail

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["variant"] = std::string(variant_name(inst.variant));
  j["T"] = inst.T;
  j["s0"] = rational_to_json(inst.s0);
  j["Ls"] = rationals_to_json(inst.Ls);
  j["Us"] = rationals_to_json(inst.Us);
  j["Lx"] = rationals_to_json(inst.Lx);
  j["Ux"] = rationals_to_json(inst.Ux);
  j["Ly"] = rationals_to_json(inst.Ly);
  j["Uy"] = rationals_to_json(inst.Uy);
  j["revenue"] = rationals_to_json(inst.revenue);
  j["cost"] = rationals_to_json(inst.cost);
  j["holding"] = rationals_to_json(inst.holding);
  j["fixed_purchase"] = rationals_to_json(inst.fixed_purchase);
  j["fixed_sale"] = rationals_to_json(inst.fixed_sale);
  return j;
}

// Parses without validating; callers run validate_instance.
inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "instance must be a JSON object");
  Instance inst;
  const Json& variant = detail::require(j, "variant");
  if (!variant.is_string()) throw Error(ErrorCode::kParseError, "variant must be a string");
  inst.variant = parse_variant(variant.get<std::string>());
  const Json& T = detail::require(j, "T");
  if (!T.is_number_integer()) throw Error(ErrorCode::kParseError, "T must be an integer");
  inst.T = T.get<int>();
  inst.s0 = rational_from_json(detail::require(j, "s0"), "s0");
  inst.Ls = rationals_from_json(detail::require(j, "Ls"), "Ls");
  inst.Us = rationals_from_json(detail::require(j, "Us"), "Us");
  inst.Lx = rationals_from_json(detail::require(j, "Lx"), "Lx");
  inst.Ux = rationals_from_json(detail::require(j, "Ux"), "Ux");
  inst.Ly = rationals_from_json(detail::require(j, "Ly"), "Ly");
  inst.Uy = rationals_from_json(detail::require(j, "Uy"), "Uy");
  inst.revenue = rationals_from_json(detail::require(j, "revenue"), "revenue");
  inst.cost = rationals_from_json(detail::require(j, "cost"), "cost");
  inst.holding = rationals_from_json(detail::require(j, "holding"), "holding");
  inst.fixed_purchase = rationals_from_json(detail::require(j, "fixed_purchase"), "fixed_purchase");
  inst.fixed_sale = rationals_from_json(detail::require(j, "fixed_sale"), "fixed_sale");
  return inst;
}

inline Json solution_to_json(const Solution& sol) {
  Json j;
  j["x"] = rationals_to_json(sol.x);
  j["y"] = rationals_to_json(sol.y);
  j["s"] = rationals_to_json(sol.s);
  j["w"] = sol.w;
  j["z"] = sol.z;
  j["objective"] = rational_to_json(sol.objective);
  return j;
}

inline Solution solution_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "solution must be a JSON object");
  Solution sol;
  sol.x = rationals_from_json(detail::require(j, "x"), "x");
  sol.y = rationals_from_json(detail::require(j, "y"), "y");
  sol.s = rationals_from_json(detail::require(j, "s"), "s");
  sol.w = detail::bits_from_json(detail::require(j, "w"), "w");
  sol.z = detail::bits_from_json(detail::require(j, "z"), "z");
  sol.objective = rational_from_json(detail::require(j, "objective"), "objective");
  return sol;
}

inline Json report_to_json(const FeasibilityReport& report) {
  Json j;
  j["feasible"] = report.feasible;
  Json arr = Json::array();
  for (const auto& v : report.violations) {
    Json e;
    e["period"] = v.period;
    e["constraint"] = v.constraint;
    e["lhs"] = rational_to_json(v.lhs);
    e["rhs"] = rational_to_json(v.rhs);
    arr.push_back(std::move(e));
  }
  j["violations"] = std::move(arr);
  return j;
}

inline FeasibilityReport report_from_json(const Json& j) {
  FeasibilityReport report;
  for (const auto& e : detail::require(j, "violations")) {
    report.add(detail::require(e, "period").get<int>(),
               detail::require(e, "constraint").get<std::string>(),
               rational_from_json(detail::require(e, "lhs"), "lhs"),
               rational_from_json(detail::require(e, "rhs"), "rhs"));
  }
  return report;
}

inline Json lotsizing_to_json(const LotSizingInstance& ls) {
  Json j = Json::object();
  j["T"] = ls.T;
  j["s0"] = rational_to_json(ls.s0);
  j["d"] = rationals_to_json(ls.d);
  j["c"] = rationals_to_json(ls.c);
  j["f"] = rationals_to_json(ls.f);
  j["Ubar_x"] = rationals_to_json(ls.Ubar_x);
  j["Ubar_s"] = rationals_to_json(ls.Ubar_s);
  return j;
}

inline LotSizingInstance lotsizing_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "lot-sizing instance must be a JSON object");
  LotSizingInstance ls;
  const Json& T = detail::require(j, "T");
  if (!T.is_number_integer()) throw Error(ErrorCode::kParseError, "T must be an integer");
  ls.T = T.get<int>();
  ls.s0 = rational_from_json(detail::require(j, "s0"), "s0");
  ls.d = rationals_from_json(detail::require(j, "d"), "d");
  ls.c = rationals_from_json(detail::require(j, "c"), "c");
  ls.f = rationals_from_json(detail::require(j, "f"), "f");
  ls.Ubar_x = rationals_from_json(detail::require(j, "Ubar_x"), "Ubar_x");
  ls.Ubar_s = rationals_from_json(detail::require(j, "Ubar_s"), "Ubar_s");
  return ls;
}

inline std::string serialize(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }
inline std::string serialize(const Solution& sol) { return solution_to_json(sol).dump(2) + "\n"; }
inline std::string serialize(const LotSizingInstance& ls) { return lotsizing_to_json(ls).dump(2) + "\n"; }
inline std::string serialize(const FeasibilityReport& r) { return report_to_json(r).dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

inline Instance parse_instance(const std::string& text) {
  return instance_from_json(parse_json_text(text));
}

inline Solution parse_solution(const std::string& text) {
  return solution_from_json(parse_json_text(text));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace warehouse
