// table.hpp
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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strfun/scalar.hpp"
#include "strfun/word.hpp"

namespace strfun {

enum class TableKind { kStochastic, kUnconstrained, kRaw };

std::string_view table_kind_name(TableKind kind);
TableKind parse_table_kind(std::string_view name);

// Complete value table p(v) for all v in Sigma^n. Values for shorter words are
// defined by suffix marginalization, p(u) = sum_s p(us), and are precomputed
// level by level at construction. Immutable.
template <class S>
class DistributionTable {
 public:
  // `values` is indexed by lex_index over Sigma^n. A kStochastic table must be
  // non-negative and sum to one; kUnconstrained must be non-negative.
  DistributionTable(Alphabet alphabet, std::size_t n, std::vector<S> values,
                    TableKind kind = TableKind::kRaw,
                    const ArithmeticMode& mode = default_mode<S>());

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t length() const { return n_; }
  TableKind kind() const { return kind_; }

  std::span<const S> values() const { return levels_.back(); }
  // Marginals of all words of length m, indexed by lex_index.
  std::span<const S> level(std::size_t m) const { return levels_.at(m); }

  // p(u) for |u| <= n; throws WordTooLong otherwise.
  const S& marginal(const Word& u) const;
  const S& total() const { return levels_.front().front(); }

 private:
  Alphabet alphabet_;
  std::size_t n_;
  TableKind kind_;
  std::vector<std::vector<S>> levels_;
};

template <class S>
const S& marginal(const DistributionTable<S>& table, const Word& u) {
  return table.marginal(u);
}

// The table of marginals over Sigma^m (m <= n).
template <class S>
DistributionTable<S> marginal_table(const DistributionTable<S>& table, std::size_t m);

enum class Classification { kSsfConsistent, kUssfConsistent, kGussfOnly, kInconsistent };

std::string_view classification_name(Classification c);

struct ClassifyReport {
  Classification classification;
  bool nonnegative;
  bool total_is_one;
  bool finite;
  // A finite table is marginal-consistent by construction of `marginal`.
  bool marginal_consistent = true;
  std::string note;
};

template <class S>
ClassifyReport classify(const DistributionTable<S>& table,
                        const ArithmeticMode& mode = default_mode<S>());

template <class To, class From>
DistributionTable<To> convert_table(const DistributionTable<From>& table);

template <class S>
bool tables_equal(const DistributionTable<S>& a, const DistributionTable<S>& b,
                  const ArithmeticMode& mode = default_mode<S>());

}  // namespace strfun
