// scalar.hpp
//
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

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace strfun {

using Rational = mpq_class;

enum class ArithmeticKind { kExactRational, kFloat };

// Every zero and rank test in float mode uses the one relative tolerance
// carried here. Exact mode ignores it.
struct ArithmeticMode {
  ArithmeticKind kind = ArithmeticKind::kExactRational;
  double tolerance = 1e-9;

  static ArithmeticMode exact() { return {ArithmeticKind::kExactRational, 0.0}; }
  static ArithmeticMode floating(double tol = 1e-9) { return {ArithmeticKind::kFloat, tol}; }

  bool is_exact() const { return kind == ArithmeticKind::kExactRational; }
  std::string_view name() const { return is_exact() ? "rational" : "float"; }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ArithmeticKind kind = ArithmeticKind::kExactRational;
  static ArithmeticMode default_mode() { return ArithmeticMode::exact(); }
  static bool is_zero(const Rational& v, double /*scale*/, const ArithmeticMode& /*mode*/) {
    return sgn(v) == 0;
  }
  static bool is_negative(const Rational& v, double, const ArithmeticMode&) { return sgn(v) < 0; }
  static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_finite(const Rational&) { return true; }
};

template <>
struct ScalarTraits<double> {
  static constexpr ArithmeticKind kind = ArithmeticKind::kFloat;
  static ArithmeticMode default_mode() { return ArithmeticMode::floating(); }
  static bool is_zero(double v, double scale, const ArithmeticMode& mode) {
    return std::abs(v) <= mode.tolerance * scale;
  }
  static bool is_negative(double v, double scale, const ArithmeticMode& mode) {
    return v < -mode.tolerance * scale;
  }
  static double magnitude(double v) { return std::abs(v); }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static bool is_finite(double v) { return std::isfinite(v); }
};

template <class S>
ArithmeticMode default_mode() {
  return ScalarTraits<S>::default_mode();
}

// Rejects a mode whose kind does not match the scalar type.
template <class S>
ArithmeticMode checked_mode(const ArithmeticMode& mode);
template <>
ArithmeticMode checked_mode<Rational>(const ArithmeticMode& mode);
template <>
ArithmeticMode checked_mode<double>(const ArithmeticMode& mode);

template <class S>
bool is_zero(const S& v, double scale, const ArithmeticMode& mode) {
  return ScalarTraits<S>::is_zero(v, scale, mode);
}

template <class S>
double magnitude(const S& v) {
  return ScalarTraits<S>::magnitude(v);
}

template <class To>
To scalar_cast(const Rational& q) {
  return ScalarTraits<To>::from_rational(q);
}

// Accepts "a/b", integers and decimal notation ("0.125", "-3e-2"); decimals
// are converted exactly.
Rational parse_rational(std::string_view text);

// Canonical "num/den" (or "num" for integers).
std::string format_rational(const Rational& q);

// Converts a double to the rational it represents exactly.
Rational exact_rational(double v);

template <class To, class From>
To convert_scalar(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, double>) {
    return v.get_d();
  } else {
    return exact_rational(v);
  }
}

}  // namespace strfun
