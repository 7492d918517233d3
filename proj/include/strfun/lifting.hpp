// lifting.hpp
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

#include "strfun/models.hpp"
#include "strfun/realization.hpp"
#include "strfun/table.hpp"
#include "strfun/word.hpp"

namespace strfun {

// Extends a table over Sigma^n (n >= 2d-1) in the image of the dimension-d
// model to Sigma^{target_n} through its extracted realization. The extension
// is the only one of dimension <= d.
template <class S>
DistributionTable<S> reconstruct_extension(const DistributionTable<S>& table, std::size_t d,
                                           std::size_t target_n,
                                           const ArithmeticMode& mode = default_mode<S>());

// How a membership fact in a lift report was established.
enum class Evidence {
  kDecided,              // exact rank conditions, which characterize the image
  kCertifiedMember,      // explicit HMM parameters reproduce the table
  kNecessaryCondition,   // only the dimension-l rank test was available
  kParametersMismatch,   // supplied parameters do not reproduce the table
};

std::string_view evidence_name(Evidence e);

struct MembershipFact {
  bool in_image = false;
  Evidence evidence = Evidence::kDecided;
};

struct LiftReport {
  std::size_t n = 0;  // the table covers Sigma^{n+1}
  std::size_t d_or_l = 0;
  MembershipFact whole;
  std::vector<MembershipFact> shifts;  // one per letter
  MembershipFact marginal;
  bool whole_in_image = false;
  bool all_shifts_in_image = false;
  bool marginal_in_image = false;
  bool equivalence_holds = false;
  ArithmeticMode mode;
};

// Whole table in the image at n+1 versus every shift and the marginal over
// Sigma^n in the image at n. Requires n + 1 >= 2d + 1.
template <class S>
LiftReport check_lift_finite(const DistributionTable<S>& table, std::size_t d,
                             const ArithmeticMode& mode = default_mode<S>());

// The HMM analogue. With parameters that reproduce the table, every fact is
// certified constructively; otherwise each side falls back to the
// dimension-l rank test, which is only a necessary condition.
template <class S>
LiftReport check_lift_hmm(const DistributionTable<S>& table, std::size_t l,
                          const std::optional<HmmParams<S>>& params = std::nullopt,
                          const ArithmeticMode& mode = default_mode<S>());

struct SlcProbeResult {
  bool holds = true;
  bool agree_short = false;    // agreement on every word of length <= 2d-1
  bool agree_horizon = false;  // agreement on Sigma^horizon
  std::optional<Word> distinguishing_word;
};

// Checks that two realizations of dimension <= d which agree on all words of
// length <= 2d-1 also agree on Sigma^horizon.
template <class S>
SlcProbeResult slc_probe(const QuasiRealization<S>& a, const QuasiRealization<S>& b, std::size_t d,
                         std::size_t horizon, const ArithmeticMode& mode = default_mode<S>());

}  // namespace strfun
