// table.cpp
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

#include "strfun/table.hpp"

#include <algorithm>

#include "strfun/error.hpp"

namespace strfun {

std::string_view table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::kStochastic: return "stochastic";
    case TableKind::kUnconstrained: return "unconstrained";
    case TableKind::kRaw: return "raw";
  }
  return "raw";
}

TableKind parse_table_kind(std::string_view name) {
  if (name == "stochastic") return TableKind::kStochastic;
  if (name == "unconstrained") return TableKind::kUnconstrained;
  if (name == "raw") return TableKind::kRaw;
  throw Error(Errc::kParseError, "unknown table kind '" + std::string(name) + "'");
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::kSsfConsistent: return "SSF-consistent";
    case Classification::kUssfConsistent: return "USSF-consistent";
    case Classification::kGussfOnly: return "GUSSF-only";
    case Classification::kInconsistent: return "inconsistent";
  }
  return "inconsistent";
}

namespace {

template <class S>
double max_magnitude(std::span<const S> values) {
  double m = 0.0;
  for (const S& v : values) m = std::max(m, magnitude(v));
  return m;
}

}  // namespace

template <class S>
DistributionTable<S>::DistributionTable(Alphabet alphabet, std::size_t n, std::vector<S> values,
                                        TableKind kind, const ArithmeticMode& mode)
    : alphabet_(std::move(alphabet)), n_(n), kind_(kind) {
  const ArithmeticMode m = checked_mode<S>(mode);
  const std::size_t k = alphabet_.size();
  if (values.size() != word_count(k, n)) {
    throw Error(Errc::kInvalidTable, "expected " + std::to_string(word_count(k, n)) +
                                         " values for words of length " + std::to_string(n) +
                                         ", got " + std::to_string(values.size()));
  }
  levels_.resize(n + 1);
  levels_[n] = std::move(values);
  for (std::size_t len = n; len-- > 0;) {
    const auto& finer = levels_[len + 1];
    auto& coarser = levels_[len];
    coarser.assign(finer.size() / k, S(0));
    for (std::size_t i = 0; i < coarser.size(); ++i) {
      S sum(0);
      for (std::size_t a = 0; a < k; ++a) sum += finer[i * k + a];
      coarser[i] = sum;
    }
  }

  if (kind_ == TableKind::kRaw) return;
  const auto vals = std::span<const S>(levels_[n]);
  const double scale = std::max(1.0, max_magnitude(vals));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!ScalarTraits<S>::is_finite(vals[i])) throw Error(Errc::kInvalidTable, "non-finite value");
    if (ScalarTraits<S>::is_negative(vals[i], scale, m)) {
      throw Error(Errc::kInvalidTable, "negative value for word '" +
                                           alphabet_.format(words_of_length(alphabet_, n)[i]) +
                                           "' in a " + std::string(table_kind_name(kind_)) +
                                           " table");
    }
  }
  if (kind_ == TableKind::kStochastic) {
    const S deviation = total() - S(1);
    if (!is_zero(deviation, 1.0, m)) {
      throw Error(Errc::kInvalidTable, "stochastic table values do not sum to one");
    }
  }
}

template <class S>
const S& DistributionTable<S>::marginal(const Word& u) const {
  if (u.size() > n_) {
    throw Error(Errc::kWordTooLong, "word of length " + std::to_string(u.size()) +
                                        " exceeds table length " + std::to_string(n_));
  }
  if (!alphabet_.contains(u)) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  return levels_[u.size()][lex_index(u, alphabet_.size())];
}

template <class S>
DistributionTable<S> marginal_table(const DistributionTable<S>& table, std::size_t m) {
  if (m > table.length()) {
    throw Error(Errc::kWordTooLong, "cannot marginalize to a longer length");
  }
  auto vals = table.level(m);
  const TableKind kind = table.kind();
  return DistributionTable<S>(table.alphabet(), m, std::vector<S>(vals.begin(), vals.end()), kind,
                              default_mode<S>());
}

template <class S>
ClassifyReport classify(const DistributionTable<S>& table, const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  ClassifyReport report{};
  report.finite = true;
  report.nonnegative = true;
  const auto vals = table.values();
  const double scale = std::max(1.0, max_magnitude(vals));
  for (const S& v : vals) {
    if (!ScalarTraits<S>::is_finite(v)) report.finite = false;
    if (ScalarTraits<S>::is_negative(v, scale, m)) report.nonnegative = false;
  }
  report.total_is_one = report.finite && is_zero(S(table.total() - S(1)), 1.0, m);
  if (!report.finite) {
    report.classification = Classification::kInconsistent;
    report.note = "table contains non-finite values";
  } else if (!report.nonnegative) {
    report.classification = Classification::kGussfOnly;
  } else if (report.total_is_one) {
    report.classification = Classification::kSsfConsistent;
  } else {
    report.classification = Classification::kUssfConsistent;
  }
  if (report.note.empty()) {
    report.note =
        "marginal consistency sum_a p(va) = p(v) holds by construction for shorter words";
  }
  return report;
}

template <class To, class From>
DistributionTable<To> convert_table(const DistributionTable<From>& table) {
  std::vector<To> vals;
  vals.reserve(table.values().size());
  for (const From& v : table.values()) vals.push_back(convert_scalar<To>(v));
  return DistributionTable<To>(table.alphabet(), table.length(), std::move(vals), TableKind::kRaw,
                               default_mode<To>());
}

template <class S>
bool tables_equal(const DistributionTable<S>& a, const DistributionTable<S>& b,
                  const ArithmeticMode& mode) {
  const ArithmeticMode m = checked_mode<S>(mode);
  if (!(a.alphabet() == b.alphabet()) || a.length() != b.length()) return false;
  const auto va = a.values();
  const auto vb = b.values();
  const double scale = std::max(max_magnitude(va), max_magnitude(vb));
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (!is_zero(S(va[i] - vb[i]), scale, m)) return false;
  }
  return true;
}

#define STRFUN_INSTANTIATE_TABLE(S)                                                          \
  template class DistributionTable<S>;                                                       \
  template DistributionTable<S> marginal_table(const DistributionTable<S>&, std::size_t);    \
  template ClassifyReport classify(const DistributionTable<S>&, const ArithmeticMode&);      \
  template bool tables_equal(const DistributionTable<S>&, const DistributionTable<S>&,       \
                             const ArithmeticMode&);

STRFUN_INSTANTIATE_TABLE(Rational)
STRFUN_INSTANTIATE_TABLE(double)

template DistributionTable<double> convert_table(const DistributionTable<Rational>&);
template DistributionTable<Rational> convert_table(const DistributionTable<double>&);
template DistributionTable<Rational> convert_table(const DistributionTable<Rational>&);
template DistributionTable<double> convert_table(const DistributionTable<double>&);

}  // namespace strfun
