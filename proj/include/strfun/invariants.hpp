// invariants.hpp
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
#include <string_view>
#include <vector>

#include "strfun/realization.hpp"
#include "strfun/table.hpp"
#include "strfun/word.hpp"

namespace strfun {

// A square minor of a Hankel-type matrix, named by its row and column words,
// whose determinant is nonzero under the report's arithmetic mode.
template <class S>
struct MinorWitness {
  std::vector<Word> row_words;
  std::vector<Word> col_words;
  S det_value{};
};

enum class ModelKind { kFiniteDim, kMarkov };

std::string_view model_kind_name(ModelKind kind);

struct ConditionAResult {
  std::size_t rank_found = 0;
  std::size_t bound = 0;
  bool pass = false;
};

struct ConditionBResult {
  std::size_t rank_half_rows = 0;
  std::size_t rank_half_cols = 0;
  std::size_t rank_short = 0;
  bool pass = false;
  std::optional<Word> offending_word;
  std::string offending_axis;
};

template <class S>
struct MembershipReport {
  ModelKind model = ModelKind::kFiniteDim;
  std::size_t d = 0;  // dimension bound, or |alphabet| for the Markov model
  std::size_t n = 0;
  bool passed = false;
  ConditionAResult condition_a;
  ConditionBResult condition_b;
  std::vector<MinorWitness<S>> witnesses;
  // False when a Markov scan runs on n < 2|alphabet| - 1: the determinants
  // are then necessary but not known to be sufficient.
  bool membership_guaranteed = true;
  ArithmeticMode mode;
};

inline constexpr std::size_t kDefaultWitnessLimit = 10;

// Membership in the image of the dimension-d model at length n >= 2d-1.
template <class S>
MembershipReport<S> check_membership_gnd(const DistributionTable<S>& table, std::size_t d,
                                         const ArithmeticMode& mode = default_mode<S>(),
                                         std::size_t limit = kDefaultWitnessLimit);

// Nonzero (d+1)x(d+1) minors of P_{d-1,d-1}, row combinations outermost,
// both in lexicographic combination order over the shortlex-ordered words.
// Empty exactly when rk P_{d-1,d-1} <= d.
template <class S>
std::vector<MinorWitness<S>> enumerate_failing_minors(const DistributionTable<S>& table, std::size_t d,
                                                      std::size_t limit = kDefaultWitnessLimit,
                                                      const ArithmeticMode& mode = default_mode<S>());

// Every det [[p(vau), p(wau)], [p(vau'), p(wau')]] with all four words of
// length <= n must vanish. Witness rows are (u, u') and columns (va, wa).
template <class S>
MembershipReport<S> check_markov_invariants(const DistributionTable<S>& table,
                                            const ArithmeticMode& mode = default_mode<S>(),
                                            std::size_t limit = kDefaultWitnessLimit);

// Looks for tables on which every (d+1)x(d+1) Hankel minor vanishes at every
// split N + M = n while condition (b) still fails.
struct ConjectureProbe {
  std::size_t max_split_rank = 0;
  bool minors_vanish = false;
  bool conditions_pass = false;
  bool hit = false;
};

template <class S>
ConjectureProbe probe_conjecture(const DistributionTable<S>& table, std::size_t d,
                                 const ArithmeticMode& mode = default_mode<S>());

}  // namespace strfun
