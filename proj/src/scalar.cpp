// scalar.cpp
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

#include "strfun/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "strfun/error.hpp"

namespace strfun {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInvalidAlphabet: return "InvalidAlphabet";
    case Errc::kInvalidWord: return "InvalidWord";
    case Errc::kWordTooLong: return "WordTooLong";
    case Errc::kInvalidTable: return "InvalidTable";
    case Errc::kLengthBudgetExceeded: return "LengthBudgetExceeded";
    case Errc::kConditionAViolated: return "ConditionAViolated";
    case Errc::kConditionBViolated: return "ConditionBViolated";
    case Errc::kDimensionShrink: return "DimensionShrink";
    case Errc::kEmptyTable: return "EmptyTable";
    case Errc::kPathBudgetExceeded: return "PathBudgetExceeded";
    case Errc::kInvalidModel: return "InvalidModel";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

template <>
ArithmeticMode checked_mode<Rational>(const ArithmeticMode& mode) {
  if (!mode.is_exact()) {
    throw Error(Errc::kInvalidArgument, "float mode requested for exact rational scalars");
  }
  return mode;
}

template <>
ArithmeticMode checked_mode<double>(const ArithmeticMode& mode) {
  if (mode.is_exact()) {
    throw Error(Errc::kInvalidArgument, "exact mode requested for floating-point scalars");
  }
  if (!(mode.tolerance >= 0.0) || !std::isfinite(mode.tolerance)) {
    throw Error(Errc::kInvalidArgument, "tolerance must be a finite non-negative number");
  }
  return mode;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(Errc::kParseError, "not an integer: '" + std::string(s) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    mpz_class ez = parse_integer(exp_part);
    if (!ez.fits_slong_p() || std::abs(ez.get_si()) > 4000) {
      throw Error(Errc::kParseError, "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ez.get_si();
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) || (int_part.empty() && frac_part.empty())) {
      throw Error(Errc::kParseError, "malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw Error(Errc::kParseError, "malformed number '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::kParseError, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::kParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational exact_rational(double v) {
  if (!std::isfinite(v)) throw Error(Errc::kParseError, "non-finite value");
  mpq_class q(v);
  q.canonicalize();
  return q;
}

}  // namespace strfun
