// realization.hpp
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
#include <optional>
#include <string>
#include <vector>

#include "strfun/hankel.hpp"
#include "strfun/matrix.hpp"
#include "strfun/table.hpp"
#include "strfun/word.hpp"

namespace strfun {

// Parameters ((T_a), x, y) of a string function p(a_1...a_n) =
// y^T T_{a_n} ... T_{a_1} x. Letters act on x in reading order.
template <class S>
struct QuasiRealization {
  Alphabet alphabet = Alphabet::of_size(1);
  std::vector<Matrix<S>> T;
  std::vector<S> x;
  std::vector<S> y;
  // Set when y^T sum_a T_a = y^T is known to hold.
  bool gussf = false;

  std::size_t dim() const { return x.size(); }
  // Throws InvalidModel on shape mismatches.
  void validate() const;
};

template <class S>
struct BasisSelection {
  std::vector<Word> v_words;  // row (suffix) basis
  std::vector<Word> w_words;  // column (prefix) basis
  Matrix<S> V;                // V(i, j) = p(w_j v_i)
};

// Both rank conditions that characterize image(g_{n,d}) for n >= 2d-1.
struct GeneratorConditions {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t rank_short = 0;      // rk P_{d-1,d-1}
  std::size_t rank_half_rows = 0;  // rk P_{ceil(n/2),floor(n/2)}
  std::size_t rank_half_cols = 0;  // rk P_{floor(n/2),ceil(n/2)}
  bool condition_a = false;
  bool condition_b = false;
  // First row (suffix) or column (prefix) word that raises the rank of a
  // half-split minor above rank_short.
  std::optional<Word> offending_word;
  std::string offending_axis;  // "row" or "column"
  RankReport short_report;

  bool passed() const { return condition_a && condition_b; }
};

// Requires n >= 2d-1 and d >= 1; throws LengthBudgetExceeded otherwise.
template <class S>
GeneratorConditions check_generator_conditions(const DistributionTable<S>& table, std::size_t d,
                                               const ArithmeticMode& mode = default_mode<S>());

template <class S>
BasisSelection<S> select_basis(const DistributionTable<S>& table, std::size_t d,
                               const ArithmeticMode& mode = default_mode<S>());

// Builds a realization of dimension d* = rk P_{d-1,d-1} <= d reproducing every
// marginal of length <= n. Throws ConditionAViolated / ConditionBViolated when
// the table is not in the image of the dimension-d model.
template <class S>
QuasiRealization<S> extract_realization(const DistributionTable<S>& table, std::size_t d,
                                        const ArithmeticMode& mode = default_mode<S>());

// y^T (sum_a T_a) - y^T.
template <class S>
std::vector<S> verify_gussf(const QuasiRealization<S>& r);

template <class S>
bool gussf_holds(const QuasiRealization<S>& r, const ArithmeticMode& mode = default_mode<S>());

// Zero-pads T_a, x and y up to dimension d; throws DimensionShrink if d < r.dim().
template <class S>
QuasiRealization<S> embed_dimension(const QuasiRealization<S>& r, std::size_t d);

template <class To, class From>
QuasiRealization<To> convert_realization(const QuasiRealization<From>& r);

}  // namespace strfun
