// hankel.cpp
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

#include "strfun/hankel.hpp"

#include <algorithm>
#include <string>

#include "strfun/error.hpp"

namespace strfun {

template <class S>
PartialHankel<S> build_partial_hankel(const DistributionTable<S>& table, std::size_t max_row_len,
                                      std::size_t max_col_len) {
  if (max_row_len + max_col_len > table.length()) {
    throw Error(Errc::kLengthBudgetExceeded,
                "Hankel minor with row length " + std::to_string(max_row_len) + " and column length " +
                    std::to_string(max_col_len) + " needs words longer than the table length " +
                    std::to_string(table.length()));
  }
  PartialHankel<S> h{table.alphabet(), max_row_len, max_col_len,
                     shortlex_words(table.alphabet(), max_row_len),
                     shortlex_words(table.alphabet(), max_col_len), {}};
  h.entries = Matrix<S>(h.row_words.size(), h.col_words.size());
  for (std::size_t i = 0; i < h.row_words.size(); ++i) {
    for (std::size_t j = 0; j < h.col_words.size(); ++j) {
      h.entries(i, j) = table.marginal(h.col_words[j] + h.row_words[i]);
    }
  }
  return h;
}

template <class S>
RankReport rank(const PartialHankel<S>& h, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  RankReport report;
  report.mode = m;
  report.pivot_row_indices = greedy_independent_rows(h.entries, m);
  report.pivot_col_indices = greedy_independent_cols(h.entries, m);
  // The two greedy scans agree exactly in rational mode; in float mode a
  // borderline residual can tip one of them.
  const std::size_t r = std::min(report.pivot_row_indices.size(), report.pivot_col_indices.size());
  report.pivot_row_indices.resize(r);
  report.pivot_col_indices.resize(r);
  report.rank = r;
  for (std::size_t i : report.pivot_row_indices) report.pivot_rows.push_back(h.row_words[i]);
  for (std::size_t j : report.pivot_col_indices) report.pivot_cols.push_back(h.col_words[j]);
  return report;
}

template <class S>
std::size_t dimension(const DistributionTable<S>& table, std::size_t d_bound, const ArithmeticMode& mode) {
  if (d_bound == 0) throw Error(Errc::kInvalidArgument, "dimension bound must be at least 1");
  if (table.length() < 2 * (d_bound - 1)) {
    throw Error(Errc::kLengthBudgetExceeded, "table length " + std::to_string(table.length()) +
                                                 " is below 2(d-1) = " +
                                                 std::to_string(2 * (d_bound - 1)));
  }
  return rank(build_partial_hankel(table, d_bound - 1, d_bound - 1), mode).rank;
}

#define STRFUN_INSTANTIATE_HANKEL(S)                                                             \
  template PartialHankel<S> build_partial_hankel(const DistributionTable<S>&, std::size_t,       \
                                                 std::size_t);                                   \
  template RankReport rank(const PartialHankel<S>&, const ArithmeticMode&);                      \
  template std::size_t dimension(const DistributionTable<S>&, std::size_t, const ArithmeticMode&);

STRFUN_INSTANTIATE_HANKEL(Rational)
STRFUN_INSTANTIATE_HANKEL(double)

}  // namespace strfun
