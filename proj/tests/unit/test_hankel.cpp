// test_hankel.cpp
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

#include <algorithm>

#include "oracle.hpp"
#include "strfun/error.hpp"
#include "strfun/hankel.hpp"
#include "strfun/models.hpp"

using namespace strfun;

namespace {

const Alphabet kBinary = Alphabet::of_size(2);

DistributionTable<Rational> bernoulli(const Rational& p0, std::size_t n) {
  std::vector<Rational> values;
  for (const Word& w : words_of_length(kBinary, n)) {
    Rational v(1);
    for (Letter a : w) v *= a == 0 ? p0 : Rational(1 - p0);
    values.push_back(v);
  }
  return DistributionTable<Rational>(kBinary, n, values, TableKind::kStochastic);
}

std::size_t row_of(const PartialHankel<Rational>& h, const Word& w) {
  return static_cast<std::size_t>(std::find(h.row_words.begin(), h.row_words.end(), w) - h.row_words.begin());
}

std::size_t col_of(const PartialHankel<Rational>& h, const Word& w) {
  return static_cast<std::size_t>(std::find(h.col_words.begin(), h.col_words.end(), w) - h.col_words.begin());
}

}  // namespace

TEST_CASE("entry(v, w) is the marginal of wv") {
  const auto table = random_stochastic_table(kBinary, 4, 17);
  const auto h = build_partial_hankel(table, 2, 2);
  REQUIRE(h.entries.rows() == 7);
  REQUIRE(h.entries.cols() == 7);
  // Row "0", column "1" holds p(10).
  CHECK(h.entries(row_of(h, Word{0}), col_of(h, Word{1})) == table.marginal(Word{1, 0}));
  CHECK(h.entries(1, 2) == table.marginal(Word{1, 0}));
  for (std::size_t i = 0; i < h.row_words.size(); ++i) {
    for (std::size_t j = 0; j < h.col_words.size(); ++j) {
      CHECK(h.entries(i, j) == oracle::suffix_sum(table, h.col_words[j] + h.row_words[i]));
    }
  }
  CHECK(h.row_words == shortlex_words(kBinary, 2));
}

TEST_CASE("a row collects strings that share its suffix") {
  const auto table = random_stochastic_table(Alphabet::of_size(3), 3, 2);
  const auto h = build_partial_hankel(table, 1, 2);
  for (std::size_t i = 0; i < h.row_words.size(); ++i) {
    for (std::size_t j = 0; j < h.col_words.size(); ++j) {
      const Word s = h.col_words[j] + h.row_words[i];
      CHECK(s.suffix_from(s.size() - h.row_words[i].size()) == h.row_words[i]);
    }
  }
}

TEST_CASE("the empty minor is the total mass") {
  const auto table = bernoulli(Rational(1, 3), 3);
  const auto h = build_partial_hankel(table, 0, 0);
  REQUIRE(h.entries.rows() == 1);
  CHECK(h.entries(0, 0) == 1);
}

TEST_CASE("budget check") {
  const auto table = bernoulli(Rational(1, 3), 3);
  CHECK_THROWS_AS(build_partial_hankel(table, 2, 2), Error);
  try {
    build_partial_hankel(table, 2, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kLengthBudgetExceeded);
  }
  CHECK_NOTHROW(build_partial_hankel(table, 3, 0));
}

TEST_CASE("i.i.d. tables have rank one and vanishing 2x2 minors") {
  const auto table = bernoulli(Rational(1, 3), 4);
  const auto h = build_partial_hankel(table, 2, 2);
  CHECK(rank(h).rank == 1);
  for (const auto& rows : oracle::subsets(7, 2)) {
    for (const auto& cols : oracle::subsets(7, 2)) CHECK(oracle::minor_det(h.entries, rows, cols) == 0);
  }
  CHECK(dimension(table, 3) == 1);
}

TEST_CASE("zero table has rank zero") {
  const DistributionTable<Rational> zero(kBinary, 2, std::vector<Rational>(4, Rational(0)));
  const auto report = rank(build_partial_hankel(zero, 1, 1));
  CHECK(report.rank == 0);
  CHECK(report.pivot_rows.empty());
}

TEST_CASE("HMM Hankel ranks are bounded by the state count") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h3 = random_hmm(3, kBinary, seed);
    const auto table = hmm_to_table(h3, 5);
    const auto hank = build_partial_hankel(table, 2, 2);
    const auto report = rank(hank);
    CHECK(report.rank <= 3);
    CHECK(report.rank == oracle::minor_rank(hank.entries));
    CHECK(rank(build_partial_hankel(convert_table<double>(table), 2, 2), ArithmeticMode::floating()).rank ==
          report.rank);
  }
}

TEST_CASE("rank report pivots") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto table = hmm_to_table(random_hmm(3, kBinary, 100 + seed), 4);
    const auto h = build_partial_hankel(table, 2, 2);
    const auto report = rank(h);
    CHECK(report.pivot_rows.size() == report.rank);
    CHECK(report.pivot_cols.size() == report.rank);
    CHECK(std::is_sorted(report.pivot_rows.begin(), report.pivot_rows.end()));
    CHECK(std::is_sorted(report.pivot_cols.begin(), report.pivot_cols.end()));
    CHECK(oracle::minor_det(h.entries, report.pivot_row_indices, report.pivot_col_indices) != 0);
    CHECK(report.mode.is_exact());
  }
}

TEST_CASE("dimension of small models") {
  HmmParams<Rational> h;
  h.alphabet = kBinary;
  h.A = Matrix<Rational>::from_rows({{Rational(3, 4), Rational(1, 4)}, {Rational(1, 3), Rational(2, 3)}});
  h.E = Matrix<Rational>::from_rows({{Rational(9, 10), Rational(1, 10)}, {Rational(1, 5), Rational(4, 5)}});
  h.pi = {Rational(1, 2), Rational(1, 2)};
  const auto table = hmm_to_table(h, 4);
  CHECK(dimension(table, 2) == 2);
  CHECK(oracle::minor_rank(build_partial_hankel(table, 1, 1).entries) == 2);

  MarkovParams<Rational> m;
  m.alphabet = kBinary;
  m.pi = {Rational(1, 2), Rational(1, 2)};
  m.M = Matrix<Rational>::from_rows({{Rational(9, 10), Rational(1, 10)}, {Rational(1, 20), Rational(19, 20)}});
  CHECK(dimension(markov_to_table(m, 4), 2) == 2);

  CHECK_THROWS_AS(dimension(table, 4), Error);
}

TEST_CASE("rank is monotone in the minor size") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto table = realization_to_table(random_realization(3, kBinary, seed, true), 5);
    for (std::size_t n1 = 0; n1 <= 5; ++n1) {
      for (std::size_t m1 = 0; n1 + m1 <= 5; ++m1) {
        const std::size_t r = rank(build_partial_hankel(table, n1, m1)).rank;
        if (n1 + m1 + 1 <= 5) {
          CHECK(r <= rank(build_partial_hankel(table, n1 + 1, m1)).rank);
          CHECK(r <= rank(build_partial_hankel(table, n1, m1 + 1)).rank);
        }
      }
    }
  }
}

TEST_CASE("rank saturates once n >= 2d") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t d = 1 + seed % 3;
    const auto table = realization_to_table(random_realization(d, kBinary, seed, true), 2 * d);
    CHECK(rank(build_partial_hankel(table, d - 1, d - 1)).rank == rank(build_partial_hankel(table, d, d)).rank);
  }
}

TEST_CASE("shifted tables never gain rank") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto table = hmm_to_table(random_hmm(3, kBinary, seed), 5);
    // The shifted minor is a set of columns of P_{2,3}.
    const std::size_t full = rank(build_partial_hankel(table, 2, 3)).rank;
    for (Letter a = 0; a < 2; ++a) {
      CHECK(rank(build_partial_hankel(shift(table, a), 2, 2)).rank <= full);
    }
  }
}
