// invariants.cpp
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

#include "strfun/invariants.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "strfun/error.hpp"
#include "strfun/hankel.hpp"

namespace strfun {

std::string_view model_kind_name(ModelKind kind) {
  return kind == ModelKind::kMarkov ? "markov" : "finite-dim";
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

double power(double base, std::size_t e) {
  double out = 1.0;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

template <class S>
bool minor_nonzero(const S& det, double scale, std::size_t size, const ArithmeticMode& mode) {
  return !is_zero(det, power(std::max(scale, 1e-300), size), mode);
}

template <class S>
std::vector<Word> pick(const std::vector<Word>& words, const std::vector<std::size_t>& idx) {
  std::vector<Word> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(words[i]);
  return out;
}

}  // namespace

template <class S>
std::vector<MinorWitness<S>> enumerate_failing_minors(const DistributionTable<S>& table, std::size_t d,
                                                      std::size_t limit, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  if (d == 0) throw Error(Errc::kInvalidArgument, "dimension bound must be at least 1");
  if (table.length() + 1 < 2 * d) {
    throw Error(Errc::kLengthBudgetExceeded, "table length is below 2d-1");
  }
  std::vector<MinorWitness<S>> out;
  const auto h = build_partial_hankel(table, d - 1, d - 1);
  const std::size_t size = d + 1;
  if (limit == 0 || h.entries.rows() < size || h.entries.cols() < size) return out;
  if (rank(h, m).rank <= d) return out;

  const double scale = max_magnitude(h.entries);
  std::vector<std::size_t> rows = first_combination(size);
  do {
    std::vector<std::size_t> cols = first_combination(size);
    do {
      S det = determinant(submatrix(h.entries, std::span<const std::size_t>(rows),
                                    std::span<const std::size_t>(cols)));
      if (minor_nonzero(det, scale, size, m)) {
        out.push_back({pick<S>(h.row_words, rows), pick<S>(h.col_words, cols), std::move(det)});
        if (out.size() >= limit) return out;
      }
    } while (next_combination(cols, h.entries.cols()));
  } while (next_combination(rows, h.entries.rows()));
  return out;
}

template <class S>
MembershipReport<S> check_membership_gnd(const DistributionTable<S>& table, std::size_t d,
                                         const ArithmeticMode& mode, std::size_t limit) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const GeneratorConditions c = check_generator_conditions(table, d, m);
  MembershipReport<S> report;
  report.model = ModelKind::kFiniteDim;
  report.d = d;
  report.n = table.length();
  report.mode = m;
  report.condition_a = {c.rank_short, d, c.condition_a};
  report.condition_b = {c.rank_half_rows, c.rank_half_cols, c.rank_short, c.condition_b, c.offending_word,
                        c.offending_axis};
  report.passed = c.passed();
  if (!c.condition_a) {
    report.witnesses = enumerate_failing_minors(table, d, limit, m);
  } else if (!c.condition_b && limit > 0) {
    // The greedy pivots of the larger half-split minor give an invertible
    // submatrix one larger than rk P_{d-1,d-1}.
    const std::size_t n = table.length();
    const std::size_t hi = (n + 1) / 2;
    const std::size_t lo = n / 2;
    const bool by_rows = c.offending_axis == "row";
    const auto h = by_rows ? build_partial_hankel(table, hi, lo) : build_partial_hankel(table, lo, hi);
    const RankReport r = rank(h, m);
    const std::size_t size = c.rank_short + 1;
    std::vector<std::size_t> rows(r.pivot_row_indices.begin(), r.pivot_row_indices.begin() + size);
    std::vector<std::size_t> cols(r.pivot_col_indices.begin(), r.pivot_col_indices.begin() + size);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    S det = determinant(submatrix(h.entries, std::span<const std::size_t>(rows),
                                  std::span<const std::size_t>(cols)));
    if (minor_nonzero(det, max_magnitude(h.entries), size, m)) {
      report.witnesses.push_back({pick<S>(h.row_words, rows), pick<S>(h.col_words, cols), std::move(det)});
    }
  }
  return report;
}

template <class S>
MembershipReport<S> check_markov_invariants(const DistributionTable<S>& table, const ArithmeticMode& mode,
                                            std::size_t limit) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const Alphabet& alphabet = table.alphabet();
  const std::size_t n = table.length();
  const std::size_t k = alphabet.size();

  MembershipReport<S> report;
  report.model = ModelKind::kMarkov;
  report.d = k;
  report.n = n;
  report.mode = m;
  report.membership_guaranteed = n + 1 >= 2 * k;
  report.condition_a.bound = 1;

  std::set<std::pair<std::vector<Word>, std::vector<Word>>> seen;
  bool all_vanish = true;
  for (std::size_t split = 0; split < n; ++split) {
    const auto row_words = shortlex_words(alphabet, n - 1 - split);
    const auto prefixes = shortlex_words(alphabet, split);
    for (Letter a = 0; a < k; ++a) {
      std::vector<Word> col_words;
      col_words.reserve(prefixes.size());
      for (const Word& v : prefixes) col_words.push_back(v.append(a));
      Matrix<S> mat(row_words.size(), col_words.size());
      for (std::size_t i = 0; i < row_words.size(); ++i) {
        for (std::size_t j = 0; j < col_words.size(); ++j) {
          mat(i, j) = table.marginal(col_words[j] + row_words[i]);
        }
      }
      const std::size_t r = matrix_rank(mat, m);
      report.condition_a.rank_found = std::max(report.condition_a.rank_found, r);
      if (r <= 1) continue;
      all_vanish = false;
      if (report.witnesses.size() >= limit) continue;

      const double scale = max_magnitude(mat);
      // Pivot on the first entry that is nonzero; every nonzero 2x2 minor
      // shows up relative to it.
      std::size_t r0 = 0;
      std::size_t c0 = 0;
      bool found = false;
      for (std::size_t i = 0; i < mat.rows() && !found; ++i) {
        for (std::size_t j = 0; j < mat.cols() && !found; ++j) {
          if (!is_zero(mat(i, j), scale, m)) {
            r0 = i;
            c0 = j;
            found = true;
          }
        }
      }
      if (!found) continue;
      for (std::size_t i = 0; i < mat.rows() && report.witnesses.size() < limit; ++i) {
        if (i == r0) continue;
        for (std::size_t j = 0; j < mat.cols() && report.witnesses.size() < limit; ++j) {
          if (j == c0) continue;
          S det = mat(r0, c0) * mat(i, j) - mat(r0, j) * mat(i, c0);
          if (!minor_nonzero(det, scale, 2, m)) continue;
          std::vector<Word> rw{row_words[r0], row_words[i]};
          std::vector<Word> cw{col_words[c0], col_words[j]};
          if (!seen.insert({rw, cw}).second) continue;
          report.witnesses.push_back({std::move(rw), std::move(cw), std::move(det)});
        }
      }
    }
  }
  report.passed = all_vanish;
  report.condition_a.pass = all_vanish;
  return report;
}

template <class S>
ConjectureProbe probe_conjecture(const DistributionTable<S>& table, std::size_t d, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const std::size_t n = table.length();
  ConjectureProbe probe;
  for (std::size_t rows = 0; rows <= n; ++rows) {
    probe.max_split_rank =
        std::max(probe.max_split_rank, rank(build_partial_hankel(table, rows, n - rows), m).rank);
  }
  probe.minors_vanish = probe.max_split_rank <= d;
  probe.conditions_pass = check_generator_conditions(table, d, m).passed();
  probe.hit = probe.minors_vanish && !probe.conditions_pass;
  return probe;
}

#define STRFUN_INSTANTIATE_INVARIANTS(S)                                                            \
  template std::vector<MinorWitness<S>> enumerate_failing_minors(const DistributionTable<S>&,       \
                                                                 std::size_t, std::size_t,          \
                                                                 const ArithmeticMode&);            \
  template MembershipReport<S> check_membership_gnd(const DistributionTable<S>&, std::size_t,       \
                                                    const ArithmeticMode&, std::size_t);            \
  template MembershipReport<S> check_markov_invariants(const DistributionTable<S>&,                 \
                                                       const ArithmeticMode&, std::size_t);         \
  template ConjectureProbe probe_conjecture(const DistributionTable<S>&, std::size_t,               \
                                            const ArithmeticMode&);

STRFUN_INSTANTIATE_INVARIANTS(Rational)
STRFUN_INSTANTIATE_INVARIANTS(double)

}  // namespace strfun
