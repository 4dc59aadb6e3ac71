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

#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "warehouse/error.hpp"

namespace warehouse {

// All quantities and payoffs are exact. Nothing in a feasibility or
// optimality decision ever touches floating point.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline bool all_integers(const std::vector<Rational>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& v) { return is_integer(v); });
}

inline BigInt floor_of(const Rational& r) {
  BigInt num = numerator_of(r);
  BigInt den = denominator_of(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

// Canonical text form: "n" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error(ErrorCode::kParseError,
                  "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

}  // namespace detail

// Accepts "n", "-n", "p/q" and "-p/q". The result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  BigInt num = detail::parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  BigInt den = detail::parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

// True when the value has a finite decimal expansion (denominator 2^a 5^b).
inline bool has_exact_decimal(const Rational& r) {
  BigInt den = denominator_of(r);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

// Exact decimal rendering; precondition has_exact_decimal(r).
inline std::string to_decimal_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  BigInt num = abs(numerator_of(r));
  BigInt den = denominator_of(r);
  BigInt int_part = num / den;
  BigInt rem = num % den;
  std::string frac;
  while (rem != 0) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
    rem %= den;
  }
  std::string out = (r < 0 ? "-" : "") + int_part.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace warehouse
