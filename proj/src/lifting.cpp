// lifting.cpp
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

#include "strfun/lifting.hpp"

#include <algorithm>
#include <string>

#include "strfun/error.hpp"

namespace strfun {

std::string_view evidence_name(Evidence e) {
  switch (e) {
    case Evidence::kDecided:
      return "decided";
    case Evidence::kCertifiedMember:
      return "certified-member";
    case Evidence::kNecessaryCondition:
      return "finite-dim-necessary-condition";
    case Evidence::kParametersMismatch:
      return "parameters-mismatch";
  }
  return "unknown";
}

template <class S>
DistributionTable<S> reconstruct_extension(const DistributionTable<S>& table, std::size_t d,
                                           std::size_t target_n, const ArithmeticMode& mode) {
  return realization_to_table(extract_realization(table, d, mode), target_n);
}

namespace {

void require_lift_budget(std::size_t length, std::size_t d) {
  if (d == 0) throw Error(Errc::kInvalidArgument, "model parameter must be at least 1");
  if (length < 2 * d + 1) {
    throw Error(Errc::kLengthBudgetExceeded, "lifting needs a table over Sigma^{n+1} with n >= 2d; got length " +
                                                 std::to_string(length) + " for d = " + std::to_string(d));
  }
}

void finish(LiftReport& r) {
  r.whole_in_image = r.whole.in_image;
  r.all_shifts_in_image =
      std::all_of(r.shifts.begin(), r.shifts.end(), [](const MembershipFact& f) { return f.in_image; });
  r.marginal_in_image = r.marginal.in_image;
  r.equivalence_holds = r.whole_in_image == (r.all_shifts_in_image && r.marginal_in_image);
}

template <class S>
std::optional<Word> first_difference(const DistributionTable<S>& ta, const DistributionTable<S>& tb,
                                     const ArithmeticMode& mode) {
  const auto va = ta.values();
  const auto vb = tb.values();
  double scale = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) scale = std::max({scale, magnitude(va[i]), magnitude(vb[i])});
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (!is_zero(S(va[i] - vb[i]), scale, mode)) return words_of_length(ta.alphabet(), ta.length())[i];
  }
  return std::nullopt;
}

template <class S>
MembershipFact rank_fact(const DistributionTable<S>& table, std::size_t d, const ArithmeticMode& mode,
                         Evidence evidence) {
  return {check_generator_conditions(table, d, mode).passed(), evidence};
}

}  // namespace

template <class S>
LiftReport check_lift_finite(const DistributionTable<S>& table, std::size_t d, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  require_lift_budget(table.length(), d);
  LiftReport r;
  r.n = table.length() - 1;
  r.d_or_l = d;
  r.mode = m;
  r.whole = rank_fact(table, d, m, Evidence::kDecided);
  for (Letter a = 0; a < table.alphabet().size(); ++a) {
    r.shifts.push_back(rank_fact(shift(table, a), d, m, Evidence::kDecided));
  }
  r.marginal = rank_fact(marginal_table(table, r.n), d, m, Evidence::kDecided);
  finish(r);
  return r;
}

template <class S>
LiftReport check_lift_hmm(const DistributionTable<S>& table, std::size_t l,
                          const std::optional<HmmParams<S>>& params, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  require_lift_budget(table.length(), l);
  LiftReport r;
  r.n = table.length() - 1;
  r.d_or_l = l;
  r.mode = m;

  bool certified = false;
  if (params) {
    if (params->states() != l) {
      throw Error(Errc::kInvalidModel, "HMM has " + std::to_string(params->states()) + " states, expected " +
                                           std::to_string(l));
    }
    if (!(params->alphabet == table.alphabet())) {
      throw Error(Errc::kInvalidModel, "HMM alphabet differs from the table alphabet");
    }
    params->validate(m);
    certified = tables_equal(hmm_to_table(*params, table.length()), table, m);
  }

  if (certified) {
    // Each shift is the table of the same chain started from T_a pi, and the
    // marginal is the same chain observed for one step less.
    r.whole = {true, Evidence::kCertifiedMember};
    for (Letter a = 0; a < table.alphabet().size(); ++a) {
      const bool ok = tables_equal(hmm_to_table(shift_hmm(*params, a), r.n), shift(table, a), m);
      r.shifts.push_back({ok, ok ? Evidence::kCertifiedMember : Evidence::kParametersMismatch});
    }
    const bool ok = tables_equal(hmm_to_table(*params, r.n), marginal_table(table, r.n), m);
    r.marginal = {ok, ok ? Evidence::kCertifiedMember : Evidence::kParametersMismatch};
  } else {
    r.whole = rank_fact(table, l, m, Evidence::kNecessaryCondition);
    if (params) r.whole.evidence = Evidence::kParametersMismatch;
    for (Letter a = 0; a < table.alphabet().size(); ++a) {
      r.shifts.push_back(rank_fact(shift(table, a), l, m, Evidence::kNecessaryCondition));
    }
    r.marginal = rank_fact(marginal_table(table, r.n), l, m, Evidence::kNecessaryCondition);
  }
  finish(r);
  return r;
}

template <class S>
SlcProbeResult slc_probe(const QuasiRealization<S>& a, const QuasiRealization<S>& b, std::size_t d,
                         std::size_t horizon, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  a.validate();
  b.validate();
  if (d == 0) throw Error(Errc::kInvalidArgument, "dimension bound must be at least 1");
  if (a.dim() > d || b.dim() > d) {
    throw Error(Errc::kInvalidArgument, "generator dimension exceeds the bound d = " + std::to_string(d));
  }
  if (!(a.alphabet == b.alphabet)) throw Error(Errc::kInvalidModel, "generators use different alphabets");

  SlcProbeResult result;
  // Marginals of an arbitrary realization need not equal shorter evaluations,
  // so each length is tabulated on its own.
  std::optional<Word> short_diff;
  for (std::size_t len = 0; len <= 2 * d - 1 && !short_diff; ++len) {
    short_diff = first_difference(realization_to_table(a, len), realization_to_table(b, len), m);
  }
  result.agree_short = !short_diff;
  const std::optional<Word> horizon_diff =
      first_difference(realization_to_table(a, horizon), realization_to_table(b, horizon), m);
  result.agree_horizon = !horizon_diff;
  result.holds = !result.agree_short || result.agree_horizon;
  result.distinguishing_word = short_diff ? short_diff : horizon_diff;
  return result;
}

#define STRFUN_INSTANTIATE_LIFTING(S)                                                           \
  template DistributionTable<S> reconstruct_extension(const DistributionTable<S>&, std::size_t, \
                                                      std::size_t, const ArithmeticMode&);      \
  template LiftReport check_lift_finite(const DistributionTable<S>&, std::size_t,               \
                                        const ArithmeticMode&);                                 \
  template LiftReport check_lift_hmm(const DistributionTable<S>&, std::size_t,                  \
                                     const std::optional<HmmParams<S>>&, const ArithmeticMode&); \
  template SlcProbeResult slc_probe(const QuasiRealization<S>&, const QuasiRealization<S>&,      \
                                    std::size_t, std::size_t, const ArithmeticMode&);

STRFUN_INSTANTIATE_LIFTING(Rational)
STRFUN_INSTANTIATE_LIFTING(double)

}  // namespace strfun
