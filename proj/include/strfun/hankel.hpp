// hankel.hpp
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

#include <cstddef>
#include <vector>

#include "strfun/matrix.hpp"
#include "strfun/table.hpp"
#include "strfun/word.hpp"

namespace strfun {

// Finite Hankel minor P_{p,N,M}: rows are suffixes v with |v| <= N, columns
// are prefixes w with |w| <= M, entry(v, w) = p(wv). Both orders are shortlex.
template <class S>
struct PartialHankel {
  Alphabet alphabet;
  std::size_t max_row_len = 0;
  std::size_t max_col_len = 0;
  std::vector<Word> row_words;
  std::vector<Word> col_words;
  Matrix<S> entries;
};

// Requires N + M <= table.length(); throws LengthBudgetExceeded otherwise.
template <class S>
PartialHankel<S> build_partial_hankel(const DistributionTable<S>& table, std::size_t max_row_len,
                                      std::size_t max_col_len);

struct RankReport {
  std::size_t rank = 0;
  // Greedy shortlex-first independent rows and columns; the submatrix on
  // pivot_rows x pivot_cols is invertible.
  std::vector<Word> pivot_rows;
  std::vector<Word> pivot_cols;
  std::vector<std::size_t> pivot_row_indices;
  std::vector<std::size_t> pivot_col_indices;
  ArithmeticMode mode;
};

template <class S>
RankReport rank(const PartialHankel<S>& h, const ArithmeticMode& mode = default_mode<S>());

// rk P_{p,d-1,d-1}, which is dim p whenever dim p <= d_bound.
template <class S>
std::size_t dimension(const DistributionTable<S>& table, std::size_t d_bound,
                      const ArithmeticMode& mode = default_mode<S>());

}  // namespace strfun
