// test_lifting.cpp
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

#include <doctest.h>

#include <functional>

#include "strfun/error.hpp"
#include "strfun/hankel.hpp"
#include "strfun/lifting.hpp"
#include "strfun/models.hpp"

using namespace strfun;

namespace {

const Alphabet kBinary = Alphabet::of_size(2);

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::kInvalidArgument;
}

}  // namespace

TEST_CASE("reconstruction extends a short table uniquely") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t d = 1 + seed % 3;
    const auto g = random_realization(d, kBinary, seed, true);
    const auto short_table = realization_to_table(g, 2 * d - 1);
    const auto extended = reconstruct_extension(short_table, d, 2 * d + 3);
    CHECK(tables_equal(extended, realization_to_table(g, 2 * d + 3)));
  }
}

TEST_CASE("reconstruction then marginalization is the identity") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t d = 1 + seed % 2;
    const auto table = hmm_to_table(random_hmm(d, Alphabet::of_size(2 + seed % 2), seed), 2 * d);
    for (std::size_t target = table.length(); target <= table.length() + 2; ++target) {
      CHECK(tables_equal(marginal_table(reconstruct_extension(table, d, target), table.length()), table));
    }
  }
}

TEST_CASE("reconstruction refuses tables outside the image") {
  const auto table = random_stochastic_table(Alphabet::of_size(3), 3, 2);
  CHECK(code_of([&] { reconstruct_extension(table, 2, 6); }) == Errc::kConditionAViolated);
}

TEST_CASE("finite lifting biconditional on members and generic tables") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bool member = seed % 2 == 0;
    const auto table = member ? realization_to_table(random_realization(2, kBinary, seed, true), 5)
                              : random_stochastic_table(kBinary, 5, seed);
    const auto report = check_lift_finite(table, 2);
    CHECK(report.equivalence_holds);
    CHECK(report.n == 4);
    CHECK(report.d_or_l == 2);
    CHECK(report.shifts.size() == 2);
    CHECK(report.whole_in_image == member);
    CHECK(report.whole.evidence == Evidence::kDecided);
    if (member) {
      CHECK(report.all_shifts_in_image);
      CHECK(report.marginal_in_image);
    }
  }
}

TEST_CASE("lifting needs n >= 2d") {
  const auto table = hmm_to_table(random_hmm(2, kBinary, 1), 4);
  CHECK(code_of([&] { check_lift_finite(table, 2); }) == Errc::kLengthBudgetExceeded);
  CHECK(code_of([&] { check_lift_hmm(table, 2); }) == Errc::kLengthBudgetExceeded);
  CHECK(code_of([&] { check_lift_finite(table, 0); }) == Errc::kInvalidArgument);
}

TEST_CASE("HMM lifting with matching parameters is certified") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto h = random_hmm(2, kBinary, seed);
    const auto table = hmm_to_table(h, 5);
    const auto report = check_lift_hmm(table, 2, std::optional<HmmParams<Rational>>(h));
    CHECK(report.whole.evidence == Evidence::kCertifiedMember);
    CHECK(report.whole_in_image);
    CHECK(report.all_shifts_in_image);
    CHECK(report.marginal_in_image);
    CHECK(report.equivalence_holds);
    for (const auto& f : report.shifts) CHECK(f.evidence == Evidence::kCertifiedMember);
  }
}

TEST_CASE("HMM lifting without parameters is only a necessary condition") {
  const auto table = hmm_to_table(random_hmm(2, kBinary, 3), 5);
  const auto report = check_lift_hmm(table, 2);
  CHECK(report.whole.evidence == Evidence::kNecessaryCondition);
  CHECK(report.marginal.evidence == Evidence::kNecessaryCondition);
  CHECK(report.whole_in_image);
  CHECK(report.equivalence_holds);

  const auto generic = random_stochastic_table(kBinary, 5, 3);
  CHECK_FALSE(check_lift_hmm(generic, 2).whole_in_image);
}

TEST_CASE("HMM lifting with the wrong parameters reports a mismatch") {
  const auto table = hmm_to_table(random_hmm(2, kBinary, 3), 5);
  const auto other = random_hmm(2, kBinary, 4);
  const auto report = check_lift_hmm(table, 2, std::optional<HmmParams<Rational>>(other));
  CHECK(report.whole.evidence == Evidence::kParametersMismatch);
  CHECK(report.shifts.front().evidence == Evidence::kNecessaryCondition);
  const auto longer = hmm_to_table(random_hmm(2, kBinary, 3), 7);
  CHECK(code_of([&] { check_lift_hmm(longer, 3, std::optional<HmmParams<Rational>>(other)); }) ==
        Errc::kInvalidModel);
  CHECK(evidence_name(Evidence::kParametersMismatch) == "parameters-mismatch");
  CHECK(evidence_name(Evidence::kNecessaryCondition) == "finite-dim-necessary-condition");
}

TEST_CASE("shifts of members stay in the image") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto table = realization_to_table(random_realization(2, kBinary, 300 + seed, true), 6);
    const std::size_t r = rank(build_partial_hankel(table, 3, 3)).rank;
    for (Letter a = 0; a < 2; ++a) CHECK(rank(build_partial_hankel(shift(table, a), 2, 2)).rank <= r);
  }
}

TEST_CASE("SLC probe on equal and reconstructed generators") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_realization(2, kBinary, seed, true);
    const auto same = slc_probe(g, g, 2, 6);
    CHECK(same.holds);
    CHECK(same.agree_short);
    CHECK(same.agree_horizon);
    CHECK_FALSE(same.distinguishing_word.has_value());

    const auto r = extract_realization(realization_to_table(g, 3), 2);
    const auto probe = slc_probe(g, r, 2, 8);
    CHECK(probe.holds);
    CHECK(probe.agree_horizon);
  }
}

TEST_CASE("SLC probe with a padded generator") {
  const auto iid = extract_realization(random_stochastic_table(kBinary, 1, 4), 1);
  const auto padded = embed_dimension(iid, 2);
  const auto probe = slc_probe(iid, padded, 2, 6);
  CHECK(probe.holds);
  CHECK(probe.agree_short);
  CHECK(probe.agree_horizon);
}

TEST_CASE("SLC probe names a distinguishing word") {
  const auto a = random_realization(2, kBinary, 1, true);
  const auto b = random_realization(2, kBinary, 2, true);
  const auto probe = slc_probe(a, b, 2, 5);
  CHECK(probe.holds);
  CHECK_FALSE(probe.agree_short);
  REQUIRE(probe.distinguishing_word.has_value());
  CHECK(probe.distinguishing_word->size() <= 3);
  CHECK(eval(a, *probe.distinguishing_word) != eval(b, *probe.distinguishing_word));
  CHECK(code_of([&] { slc_probe(a, b, 1, 5); }) == Errc::kInvalidArgument);
}

TEST_CASE("float lifting agrees with exact lifting") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto table = seed % 2 == 0 ? hmm_to_table(random_hmm(2, kBinary, seed), 5)
                                     : random_stochastic_table(kBinary, 5, seed);
    const auto exact = check_lift_finite(table, 2);
    const auto approx = check_lift_finite(convert_table<double>(table), 2, ArithmeticMode::floating(1e-9));
    CHECK(exact.whole_in_image == approx.whole_in_image);
    CHECK(exact.all_shifts_in_image == approx.all_shifts_in_image);
    CHECK(exact.marginal_in_image == approx.marginal_in_image);
    CHECK(approx.equivalence_holds);
  }
}
