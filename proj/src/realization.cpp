// realization.cpp
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

#include "strfun/realization.hpp"

#include <algorithm>
#include <string>

#include "strfun/error.hpp"

namespace strfun {

template <class S>
void QuasiRealization<S>::validate() const {
  const std::size_t d = x.size();
  if (y.size() != d) throw Error(Errc::kInvalidModel, "x and y have different lengths");
  if (T.size() != alphabet.size()) {
    throw Error(Errc::kInvalidModel, "expected one matrix per alphabet symbol");
  }
  for (std::size_t a = 0; a < T.size(); ++a) {
    if (T[a].rows() != d || T[a].cols() != d) {
      throw Error(Errc::kInvalidModel, "T_" + alphabet.symbol(static_cast<Letter>(a)) +
                                           " is not " + std::to_string(d) + "x" + std::to_string(d));
    }
  }
}

namespace {

void require_budget(std::size_t n, std::size_t d) {
  if (d == 0) throw Error(Errc::kInvalidArgument, "dimension bound must be at least 1");
  if (n + 1 < 2 * d) {
    throw Error(Errc::kLengthBudgetExceeded, "table length " + std::to_string(n) +
                                                 " is below 2d-1 = " + std::to_string(2 * d - 1));
  }
}

}  // namespace

template <class S>
GeneratorConditions check_generator_conditions(const DistributionTable<S>& table, std::size_t d,
                                               const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const std::size_t n = table.length();
  require_budget(n, d);
  GeneratorConditions c;
  c.d = d;
  c.n = n;
  c.short_report = rank(build_partial_hankel(table, d - 1, d - 1), m);
  c.rank_short = c.short_report.rank;
  c.condition_a = c.rank_short <= d;

  const std::size_t hi = (n + 1) / 2;
  const std::size_t lo = n / 2;
  const auto rows_long = build_partial_hankel(table, hi, lo);
  const auto cols_long = build_partial_hankel(table, lo, hi);
  const RankReport rows_report = rank(rows_long, m);
  const RankReport cols_report = rank(cols_long, m);
  c.rank_half_rows = rows_report.rank;
  c.rank_half_cols = cols_report.rank;
  c.condition_b = c.rank_half_rows == c.rank_short && c.rank_half_cols == c.rank_short;
  if (!c.condition_b) {
    if (rows_report.rank > c.rank_short) {
      c.offending_word = rows_report.pivot_rows[c.rank_short];
      c.offending_axis = "row";
    } else {
      c.offending_word = cols_report.pivot_cols[c.rank_short];
      c.offending_axis = "column";
    }
  }
  return c;
}

template <class S>
BasisSelection<S> select_basis(const DistributionTable<S>& table, std::size_t d, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  require_budget(table.length(), d);
  const auto h = build_partial_hankel(table, d - 1, d - 1);
  const RankReport report = rank(h, m);
  return {report.pivot_rows, report.pivot_cols,
          submatrix(h.entries, std::span<const std::size_t>(report.pivot_row_indices),
                    std::span<const std::size_t>(report.pivot_col_indices))};
}

template <class S>
QuasiRealization<S> extract_realization(const DistributionTable<S>& table, std::size_t d,
                                        const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const GeneratorConditions cond = check_generator_conditions(table, d, m);
  if (!cond.condition_a) {
    throw Error(Errc::kConditionAViolated, "rk P_{d-1,d-1} = " + std::to_string(cond.rank_short) +
                                               " exceeds d = " + std::to_string(d));
  }
  if (!cond.condition_b) {
    throw Error(Errc::kConditionBViolated,
                "half-split Hankel ranks (" + std::to_string(cond.rank_half_rows) + ", " +
                    std::to_string(cond.rank_half_cols) + ") differ from rk P_{d-1,d-1} = " +
                    std::to_string(cond.rank_short) + "; first independent " + cond.offending_axis +
                    " word '" + table.alphabet().format(*cond.offending_word) + "'");
  }

  const BasisSelection<S> basis = select_basis(table, d, m);
  const std::size_t dstar = basis.v_words.size();
  const Matrix<S> v_inv = inverse(basis.V, m);

  QuasiRealization<S> r;
  r.alphabet = table.alphabet();
  r.x.resize(dstar, S(0));
  std::vector<S> prefix_marginals(dstar, S(0));
  for (std::size_t i = 0; i < dstar; ++i) r.x[i] = table.marginal(basis.v_words[i]);
  for (std::size_t j = 0; j < dstar; ++j) prefix_marginals[j] = table.marginal(basis.w_words[j]);
  // y^T V = (p(w_1), ..., p(w_d*))
  r.y = v_inv.apply_left(prefix_marginals);

  const std::size_t k = table.alphabet().size();
  r.T.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    Matrix<S> w_a(dstar, dstar);
    for (std::size_t i = 0; i < dstar; ++i) {
      const Word suffix = basis.v_words[i].prepend(static_cast<Letter>(a));
      for (std::size_t j = 0; j < dstar; ++j) w_a(i, j) = table.marginal(basis.w_words[j] + suffix);
    }
    r.T.push_back(w_a * v_inv);
  }
  r.gussf = gussf_holds(r, m);
  return r;
}

template <class S>
std::vector<S> verify_gussf(const QuasiRealization<S>& r) {
  r.validate();
  const std::size_t d = r.dim();
  Matrix<S> sum(d, d);
  for (const auto& t : r.T) sum = sum + t;
  std::vector<S> residual = sum.apply_left(r.y);
  for (std::size_t i = 0; i < d; ++i) residual[i] -= r.y[i];
  return residual;
}

template <class S>
bool gussf_holds(const QuasiRealization<S>& r, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const auto residual = verify_gussf(r);
  double scale = 1.0;
  for (const S& v : r.y) scale = std::max(scale, magnitude(v));
  return std::all_of(residual.begin(), residual.end(),
                     [&](const S& v) { return is_zero(v, scale, m); });
}

template <class S>
QuasiRealization<S> embed_dimension(const QuasiRealization<S>& r, std::size_t d) {
  r.validate();
  if (d < r.dim()) {
    throw Error(Errc::kDimensionShrink, "cannot embed dimension " + std::to_string(r.dim()) +
                                            " into " + std::to_string(d));
  }
  QuasiRealization<S> out;
  out.alphabet = r.alphabet;
  out.gussf = r.gussf;
  out.x.assign(d, S(0));
  out.y.assign(d, S(0));
  std::copy(r.x.begin(), r.x.end(), out.x.begin());
  std::copy(r.y.begin(), r.y.end(), out.y.begin());
  for (const auto& t : r.T) {
    Matrix<S> padded(d, d);
    for (std::size_t i = 0; i < t.rows(); ++i) {
      for (std::size_t j = 0; j < t.cols(); ++j) padded(i, j) = t(i, j);
    }
    out.T.push_back(std::move(padded));
  }
  return out;
}

template <class To, class From>
QuasiRealization<To> convert_realization(const QuasiRealization<From>& r) {
  QuasiRealization<To> out;
  out.alphabet = r.alphabet;
  out.gussf = r.gussf;
  for (const auto& t : r.T) out.T.push_back(convert_matrix<To>(t));
  for (const auto& v : r.x) out.x.push_back(convert_scalar<To>(v));
  for (const auto& v : r.y) out.y.push_back(convert_scalar<To>(v));
  return out;
}

#define STRFUN_INSTANTIATE_REALIZATION(S)                                                          \
  template struct QuasiRealization<S>;                                                             \
  template GeneratorConditions check_generator_conditions(const DistributionTable<S>&,             \
                                                          std::size_t, const ArithmeticMode&);     \
  template BasisSelection<S> select_basis(const DistributionTable<S>&, std::size_t,                \
                                          const ArithmeticMode&);                                  \
  template QuasiRealization<S> extract_realization(const DistributionTable<S>&, std::size_t,       \
                                                   const ArithmeticMode&);                         \
  template std::vector<S> verify_gussf(const QuasiRealization<S>&);                                \
  template bool gussf_holds(const QuasiRealization<S>&, const ArithmeticMode&);                    \
  template QuasiRealization<S> embed_dimension(const QuasiRealization<S>&, std::size_t);

STRFUN_INSTANTIATE_REALIZATION(Rational)
STRFUN_INSTANTIATE_REALIZATION(double)

template QuasiRealization<double> convert_realization(const QuasiRealization<Rational>&);
template QuasiRealization<Rational> convert_realization(const QuasiRealization<double>&);
template QuasiRealization<Rational> convert_realization(const QuasiRealization<Rational>&);
template QuasiRealization<double> convert_realization(const QuasiRealization<double>&);

}  // namespace strfun
