// models.cpp
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

#include "strfun/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "strfun/error.hpp"

namespace strfun {

namespace {

template <class S>
void require_stochastic_rows(const Matrix<S>& m, const std::string& name, const ArithmeticMode& mode) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    S sum(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (ScalarTraits<S>::is_negative(m(i, j), 1.0, mode)) {
        throw Error(Errc::kInvalidModel, name + " has a negative entry in row " + std::to_string(i));
      }
      sum += m(i, j);
    }
    if (!is_zero(S(sum - S(1)), 1.0, mode)) {
      throw Error(Errc::kInvalidModel, "row " + std::to_string(i) + " of " + name + " does not sum to one");
    }
  }
}

template <class S>
std::vector<S> column(const Matrix<S>& m, std::size_t j) {
  std::vector<S> out(m.rows(), S(0));
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

}  // namespace

template <class S>
bool HmmParams<S>::constrained(const ArithmeticMode& mode) const {
  S sum(0);
  for (const S& v : pi) sum += v;
  return is_zero(S(sum - S(1)), 1.0, checked_mode<S>(mode));
}

template <class S>
void HmmParams<S>::validate(const ArithmeticMode& mode) const {
  const ArithmeticMode m = checked_mode<S>(mode);
  const std::size_t l = pi.size();
  if (l == 0) throw Error(Errc::kInvalidModel, "HMM needs at least one hidden state");
  if (A.rows() != l || A.cols() != l) throw Error(Errc::kInvalidModel, "A must be l x l");
  if (E.rows() != l || E.cols() != alphabet.size()) {
    throw Error(Errc::kInvalidModel, "E must be l x |alphabet|");
  }
  require_stochastic_rows(A, "A", m);
  require_stochastic_rows(E, "E", m);
  for (const S& v : pi) {
    if (ScalarTraits<S>::is_negative(v, 1.0, m)) throw Error(Errc::kInvalidModel, "pi has a negative entry");
  }
}

template <class S>
void MarkovParams<S>::validate(const ArithmeticMode& mode) const {
  const ArithmeticMode m = checked_mode<S>(mode);
  const std::size_t k = alphabet.size();
  if (pi.size() != k) throw Error(Errc::kInvalidModel, "pi must have one entry per symbol");
  if (M.rows() != k || M.cols() != k) throw Error(Errc::kInvalidModel, "M must be |alphabet| x |alphabet|");
  for (const S& v : pi) {
    if (ScalarTraits<S>::is_negative(v, 1.0, m) || is_zero(v, 1.0, m)) {
      throw Error(Errc::kInvalidModel, "pi must be strictly positive");
    }
  }
  require_stochastic_rows(M, "M", m);
}

template <class S>
void TraceModel<S>::validate() const {
  if (X.size() != alphabet.size()) throw Error(Errc::kInvalidModel, "expected one matrix per symbol");
  const std::size_t r = order();
  for (const auto& m : X) {
    if (m.rows() != r || m.cols() != r) throw Error(Errc::kInvalidModel, "trace matrices must be r x r");
  }
}

template <class S>
QuasiRealization<S> hmm_to_realization(const HmmParams<S>& h) {
  h.validate(checked_mode<S>(default_mode<S>()));
  const std::size_t l = h.states();
  QuasiRealization<S> r;
  r.alphabet = h.alphabet;
  const Matrix<S> at = h.A.transpose();
  for (std::size_t a = 0; a < h.alphabet.size(); ++a) {
    Matrix<S> t = at;
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) t(i, j) *= h.E(j, a);
    }
    r.T.push_back(std::move(t));
  }
  r.x = h.pi;
  r.y.assign(l, S(1));
  r.gussf = true;
  return r;
}

template <class S>
S hmm_brute_force(const HmmParams<S>& h, const Word& v, std::uint64_t path_budget) {
  const std::size_t l = h.states();
  if (!h.alphabet.contains(v)) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  std::uint64_t paths = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (paths > path_budget / l) {
      throw Error(Errc::kPathBudgetExceeded, "more than " + std::to_string(path_budget) +
                                                 " hidden paths for a word of length " +
                                                 std::to_string(v.size()));
    }
    paths *= l;
  }
  if (v.empty()) {
    S total(0);
    for (const S& p : h.pi) total += p;
    return total;
  }
  S total(0);
  std::function<void(std::size_t, std::size_t, const S&)> walk = [&](std::size_t pos, std::size_t state,
                                                                      const S& weight) {
    if (pos + 1 == v.size()) {
      total += weight;
      return;
    }
    for (std::size_t next = 0; next < l; ++next) {
      S w = weight * h.A(state, next) * h.E(next, v[pos + 1]);
      walk(pos + 1, next, w);
    }
  };
  for (std::size_t s = 0; s < l; ++s) {
    S w = h.pi[s] * h.E(s, v[0]);
    walk(0, s, w);
  }
  return total;
}

template <class S>
S eval(const QuasiRealization<S>& r, const Word& v) {
  r.validate();
  if (!r.alphabet.contains(v)) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  std::vector<S> z = r.x;
  for (Letter a : v) z = r.T[a].apply(z);
  return dot<S>(r.y, z);
}

template <class S>
DistributionTable<S> realization_to_table(const QuasiRealization<S>& r, std::size_t n) {
  r.validate();
  const std::size_t k = r.alphabet.size();
  std::vector<S> values(word_count(k, n), S(0));
  // states[depth] = T_{prefix} x for the current prefix of length depth
  std::vector<std::vector<S>> states(n + 1);
  states[0] = r.x;
  std::size_t next_index = 0;
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == n) {
      values[next_index++] = dot<S>(r.y, states[n]);
      return;
    }
    for (std::size_t a = 0; a < k; ++a) {
      states[depth + 1] = r.T[a].apply(states[depth]);
      descend(depth + 1);
    }
  };
  descend(0);
  return DistributionTable<S>(r.alphabet, n, std::move(values));
}

template <class S>
DistributionTable<S> markov_to_table(const MarkovParams<S>& m, std::size_t n) {
  m.validate(checked_mode<S>(default_mode<S>()));
  if (n == 0) throw Error(Errc::kInvalidArgument, "Markov tables need n >= 1");
  const std::size_t k = m.alphabet.size();
  std::vector<S> values(word_count(k, n), S(0));
  std::size_t next_index = 0;
  std::function<void(std::size_t, std::size_t, const S&)> descend = [&](std::size_t depth, std::size_t last,
                                                                        const S& weight) {
    if (depth == n) {
      values[next_index++] = weight;
      return;
    }
    for (std::size_t a = 0; a < k; ++a) {
      S w = weight * m.M(last, a);
      descend(depth + 1, a, w);
    }
  };
  for (std::size_t a = 0; a < k; ++a) descend(1, a, m.pi[a]);
  return DistributionTable<S>(m.alphabet, n, std::move(values));
}

template <class S>
DistributionTable<S> shift(const DistributionTable<S>& table, Letter a) {
  if (table.length() == 0) throw Error(Errc::kEmptyTable, "cannot shift a table over words of length 0");
  const std::size_t k = table.alphabet().size();
  if (a >= k) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  const std::size_t block = word_count(k, table.length() - 1);
  const auto vals = table.values();
  std::vector<S> out(vals.begin() + static_cast<std::ptrdiff_t>(a * block),
                     vals.begin() + static_cast<std::ptrdiff_t>((a + 1) * block));
  return DistributionTable<S>(table.alphabet(), table.length() - 1, std::move(out));
}

template <class S>
HmmParams<S> shift_hmm(const HmmParams<S>& h, Letter a) {
  if (a >= h.alphabet.size()) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  const auto r = hmm_to_realization(h);
  HmmParams<S> out = h;
  out.pi = r.T[a].apply(h.pi);
  return out;
}

template <class S>
S trace_eval(const TraceModel<S>& t, const Word& v) {
  t.validate();
  if (!t.alphabet.contains(v)) throw Error(Errc::kInvalidWord, "letter outside the alphabet");
  const std::size_t r = t.order();
  Matrix<S> z = Matrix<S>::identity(r);
  for (Letter a : v) z = t.X[a] * z;
  S tr(0);
  for (std::size_t i = 0; i < r; ++i) tr += z(i, i);
  return tr;
}

template <class S>
QuasiRealization<S> trace_to_realization(const TraceModel<S>& t) {
  t.validate();
  const std::size_t r = t.order();
  const Matrix<S> id = Matrix<S>::identity(r);
  QuasiRealization<S> out;
  out.alphabet = t.alphabet;
  for (const auto& x : t.X) out.T.push_back(kronecker(x, id));
  auto vec_id = std::vector<S>(id.data().begin(), id.data().end());
  out.x = vec_id;
  out.y = vec_id;
  out.gussf = gussf_holds(out, default_mode<S>());
  return out;
}

template <class S>
QuasiRealization<S> trace_component_realization(const TraceModel<S>& t, std::size_t i) {
  t.validate();
  const std::size_t r = t.order();
  if (i >= r) throw Error(Errc::kInvalidArgument, "component index out of range");
  QuasiRealization<S> out;
  out.alphabet = t.alphabet;
  out.T = t.X;
  out.x.assign(r, S(0));
  out.y.assign(r, S(0));
  out.x[i] = S(1);
  out.y[i] = S(1);
  out.gussf = gussf_holds(out, default_mode<S>());
  return out;
}

namespace {

// Platform-independent draws; the standard distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  double unit_open() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<Rational> stochastic_row(Draw& draw, std::size_t len) {
  std::vector<Rational> row(len);
  long total = 0;
  std::vector<long> weights(len);
  for (auto& w : weights) {
    w = draw.integer(1, 9);
    total += w;
  }
  for (std::size_t i = 0; i < len; ++i) {
    row[i] = Rational(weights[i], total);
    row[i].canonicalize();
  }
  return row;
}

Matrix<Rational> stochastic_matrix(Draw& draw, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = stochastic_row(draw, cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
  }
  return m;
}

Rational small_rational(Draw& draw, long magnitude, long denominator) {
  Rational q(draw.integer(-magnitude, magnitude), denominator);
  q.canonicalize();
  return q;
}

}  // namespace

HmmParams<Rational> random_hmm(std::size_t states, const Alphabet& alphabet, std::uint64_t seed) {
  if (states == 0) throw Error(Errc::kInvalidArgument, "an HMM needs at least one state");
  Draw draw(seed);
  HmmParams<Rational> h;
  h.alphabet = alphabet;
  h.A = stochastic_matrix(draw, states, states);
  h.E = stochastic_matrix(draw, states, alphabet.size());
  h.pi = stochastic_row(draw, states);
  return h;
}

MarkovParams<Rational> random_markov(const Alphabet& alphabet, std::uint64_t seed) {
  Draw draw(seed);
  MarkovParams<Rational> m;
  m.alphabet = alphabet;
  m.pi = stochastic_row(draw, alphabet.size());
  m.M = stochastic_matrix(draw, alphabet.size(), alphabet.size());
  return m;
}

QuasiRealization<Rational> random_realization(std::size_t d, const Alphabet& alphabet, std::uint64_t seed,
                                              bool gussf) {
  if (d == 0) throw Error(Errc::kInvalidArgument, "dimension must be at least 1");
  Draw draw(seed);
  const std::size_t k = alphabet.size();
  const long denom = static_cast<long>(8 * d * k);
  QuasiRealization<Rational> r;
  r.alphabet = alphabet;
  for (std::size_t a = 0; a < k; ++a) {
    Matrix<Rational> t(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) t(i, j) = small_rational(draw, 8, denom);
    }
    r.T.push_back(std::move(t));
  }
  r.x.resize(d);
  r.y.resize(d);
  for (auto& v : r.x) {
    v = Rational(draw.integer(1, 9), 9);
    v.canonicalize();
  }
  for (auto& v : r.y) v = gussf ? Rational(draw.integer(1, 5)) : small_rational(draw, 5, 1);
  if (gussf) {
    Matrix<Rational> sum(d, d);
    for (const auto& t : r.T) sum = sum + t;
    const std::vector<Rational> yt_sum = sum.apply_left(r.y);
    Matrix<Rational>& last = r.T.back();
    for (std::size_t j = 0; j < d; ++j) {
      Rational correction = (r.y[j] - yt_sum[j]) / r.y[0];
      last(0, j) += correction;
    }
    r.gussf = true;
  }
  Rational total = dot<Rational>(r.y, r.x);
  if (sgn(total) != 0) {
    for (auto& v : r.x) v /= total;
  }
  return r;
}

TraceModel<Rational> random_trace_model(std::size_t order, const Alphabet& alphabet, std::uint64_t seed) {
  if (order == 0) throw Error(Errc::kInvalidArgument, "trace order must be at least 1");
  Draw draw(seed);
  TraceModel<Rational> t;
  t.alphabet = alphabet;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    Matrix<Rational> x(order, order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) x(i, j) = small_rational(draw, 6, static_cast<long>(6 * order));
    }
    t.X.push_back(std::move(x));
  }
  return t;
}

DistributionTable<Rational> random_stochastic_table(const Alphabet& alphabet, std::size_t n,
                                                    std::uint64_t seed) {
  Draw draw(seed);
  const std::size_t count = word_count(alphabet.size(), n);
  std::vector<mpz_class> weights(count);
  mpz_class total = 0;
  for (auto& w : weights) {
    const double e = -std::log(draw.unit_open());
    w = std::max(1L, std::lround(e * 1e6));
    total += w;
  }
  std::vector<Rational> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = Rational(weights[i], total);
    values[i].canonicalize();
  }
  return DistributionTable<Rational>(alphabet, n, std::move(values), TableKind::kStochastic);
}

template <class To, class From>
HmmParams<To> convert_hmm(const HmmParams<From>& h) {
  HmmParams<To> out;
  out.alphabet = h.alphabet;
  out.A = convert_matrix<To>(h.A);
  out.E = convert_matrix<To>(h.E);
  for (const auto& v : h.pi) out.pi.push_back(convert_scalar<To>(v));
  return out;
}

template <class To, class From>
MarkovParams<To> convert_markov(const MarkovParams<From>& m) {
  MarkovParams<To> out;
  out.alphabet = m.alphabet;
  out.M = convert_matrix<To>(m.M);
  for (const auto& v : m.pi) out.pi.push_back(convert_scalar<To>(v));
  return out;
}

template <class To, class From>
TraceModel<To> convert_trace(const TraceModel<From>& t) {
  TraceModel<To> out;
  out.alphabet = t.alphabet;
  for (const auto& x : t.X) out.X.push_back(convert_matrix<To>(x));
  return out;
}

#define STRFUN_INSTANTIATE_MODELS(S)                                                       \
  template struct HmmParams<S>;                                                            \
  template struct MarkovParams<S>;                                                         \
  template struct TraceModel<S>;                                                           \
  template QuasiRealization<S> hmm_to_realization(const HmmParams<S>&);                    \
  template S hmm_brute_force(const HmmParams<S>&, const Word&, std::uint64_t);             \
  template S eval(const QuasiRealization<S>&, const Word&);                                \
  template DistributionTable<S> realization_to_table(const QuasiRealization<S>&, std::size_t); \
  template DistributionTable<S> markov_to_table(const MarkovParams<S>&, std::size_t);      \
  template DistributionTable<S> shift(const DistributionTable<S>&, Letter);                \
  template HmmParams<S> shift_hmm(const HmmParams<S>&, Letter);                            \
  template S trace_eval(const TraceModel<S>&, const Word&);                                \
  template QuasiRealization<S> trace_to_realization(const TraceModel<S>&);                 \
  template QuasiRealization<S> trace_component_realization(const TraceModel<S>&, std::size_t);

STRFUN_INSTANTIATE_MODELS(Rational)
STRFUN_INSTANTIATE_MODELS(double)

#define STRFUN_INSTANTIATE_CONVERT(To, From)                          \
  template HmmParams<To> convert_hmm(const HmmParams<From>&);         \
  template MarkovParams<To> convert_markov(const MarkovParams<From>&); \
  template TraceModel<To> convert_trace(const TraceModel<From>&);

STRFUN_INSTANTIATE_CONVERT(double, Rational)
STRFUN_INSTANTIATE_CONVERT(Rational, double)
STRFUN_INSTANTIATE_CONVERT(Rational, Rational)
STRFUN_INSTANTIATE_CONVERT(double, double)

}  // namespace strfun
