// models.hpp
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
#include <cstdint>
#include <vector>

#include "strfun/matrix.hpp"
#include "strfun/realization.hpp"
#include "strfun/table.hpp"
#include "strfun/word.hpp"

namespace strfun {

// Hidden Markov model on l states: A(i, j) = P(i -> j), E(i, a) = P(emit a | i),
// pi the initial vector. Rows of A and E sum to one; pi sums to one only when
// the model is constrained.
template <class S>
struct HmmParams {
  Alphabet alphabet = Alphabet::of_size(1);
  Matrix<S> A;
  Matrix<S> E;
  std::vector<S> pi;

  std::size_t states() const { return pi.size(); }
  bool constrained(const ArithmeticMode& mode = default_mode<S>()) const;
  void validate(const ArithmeticMode& mode = default_mode<S>()) const;
};

// p(a_1...a_n) = pi(a_1) prod M(a_{i-1}, a_i), with pi > 0 and row-stochastic M.
template <class S>
struct MarkovParams {
  Alphabet alphabet = Alphabet::of_size(1);
  std::vector<S> pi;
  Matrix<S> M;

  void validate(const ArithmeticMode& mode = default_mode<S>()) const;
};

// p(a_1...a_n) = tr(X_{a_n} ... X_{a_1}) with square r x r matrices X_a.
template <class S>
struct TraceModel {
  Alphabet alphabet = Alphabet::of_size(1);
  std::vector<Matrix<S>> X;

  std::size_t order() const { return X.empty() ? 0 : X.front().rows(); }
  void validate() const;
};

// T_a = A^T diag(E(., a)), x = pi, y = (1, ..., 1): the state emits from its
// current position and then transitions.
template <class S>
QuasiRealization<S> hmm_to_realization(const HmmParams<S>& h);

inline constexpr std::uint64_t kDefaultPathBudget = std::uint64_t{1} << 24;

// Sum over all hidden paths s_1..s_n of
// pi(s_1) E(s_1, a_1) A(s_1, s_2) E(s_2, a_2) ... E(s_n, a_n).
template <class S>
S hmm_brute_force(const HmmParams<S>& h, const Word& v,
                  std::uint64_t path_budget = kDefaultPathBudget);

template <class S>
S eval(const QuasiRealization<S>& r, const Word& v);

// Tabulates eval over Sigma^n, sharing the state vector of every prefix.
template <class S>
DistributionTable<S> realization_to_table(const QuasiRealization<S>& r, std::size_t n);

template <class S>
DistributionTable<S> hmm_to_table(const HmmParams<S>& h, std::size_t n) {
  return realization_to_table(hmm_to_realization(h), n);
}

template <class S>
DistributionTable<S> markov_to_table(const MarkovParams<S>& m, std::size_t n);

// The column function p^a: v -> p(av) over Sigma^{n-1}, not renormalized.
template <class S>
DistributionTable<S> shift(const DistributionTable<S>& table, Letter a);

// The HMM whose table is the shift of h's table by a: pi' = A^T diag(E(., a)) pi.
template <class S>
HmmParams<S> shift_hmm(const HmmParams<S>& h, Letter a);

template <class S>
S trace_eval(const TraceModel<S>& t, const Word& v);

// Dimension r^2: T_a = X_a (x) Id_r acting on row-major vec(Z), x = y = vec(Id_r).
template <class S>
QuasiRealization<S> trace_to_realization(const TraceModel<S>& t);

// The i-th summand p_i(v) = tr(X_v e_i e_i^T) = e_i^T X_v e_i, of dimension <= r.
template <class S>
QuasiRealization<S> trace_component_realization(const TraceModel<S>& t, std::size_t i);

// Seeded generators. Stochastic rows are positive integers normalized to sum
// to one, so they are exact.
HmmParams<Rational> random_hmm(std::size_t states, const Alphabet& alphabet, std::uint64_t seed);
MarkovParams<Rational> random_markov(const Alphabet& alphabet, std::uint64_t seed);
// With gussf set, y is positive and T_{last} receives a rank-one correction so
// that y^T sum_a T_a = y^T; x is scaled so that y^T x = 1 whenever possible.
QuasiRealization<Rational> random_realization(std::size_t d, const Alphabet& alphabet,
                                              std::uint64_t seed, bool gussf);
TraceModel<Rational> random_trace_model(std::size_t order, const Alphabet& alphabet,
                                        std::uint64_t seed);
// Dirichlet(1, ..., 1) draw over Sigma^n, quantized to exact rationals.
DistributionTable<Rational> random_stochastic_table(const Alphabet& alphabet, std::size_t n,
                                                    std::uint64_t seed);

template <class To, class From>
HmmParams<To> convert_hmm(const HmmParams<From>& h);
template <class To, class From>
MarkovParams<To> convert_markov(const MarkovParams<From>& m);
template <class To, class From>
TraceModel<To> convert_trace(const TraceModel<From>& t);

}  // namespace strfun
