// matrix.cpp
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

#include "strfun/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "strfun/error.hpp"

namespace strfun {

template <class S>
Matrix<S>::Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::kInvalidArgument, "matrix data size does not match its shape");
  }
}

template <class S>
Matrix<S> Matrix<S>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = S(1);
  return out;
}

template <class S>
Matrix<S> Matrix<S>::from_rows(const std::vector<std::vector<S>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::kInvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

template <class S>
Matrix<S> Matrix<S>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

template <class S>
std::vector<S> Matrix<S>::apply(std::span<const S> v) const {
  if (v.size() != cols_) throw Error(Errc::kInvalidArgument, "dimension mismatch in M*v");
  std::vector<S> out(rows_, S(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    S acc(0);
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

template <class S>
std::vector<S> Matrix<S>::apply_left(std::span<const S> v) const {
  if (v.size() != rows_) throw Error(Errc::kInvalidArgument, "dimension mismatch in v^T*M");
  std::vector<S> out(cols_, S(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

template <class S>
Matrix<S> Matrix<S>::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::kInvalidArgument, "dimension mismatch in product");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const S& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

template <class S>
Matrix<S> Matrix<S>::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::kInvalidArgument, "shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

template <class S>
Matrix<S> Matrix<S>::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::kInvalidArgument, "shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

template <class S>
S dot(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw Error(Errc::kInvalidArgument, "dimension mismatch in dot");
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

template <class S>
Matrix<S> submatrix(const Matrix<S>& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  Matrix<S> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

template <class S>
double max_magnitude(const Matrix<S>& m) {
  double out = 0.0;
  for (const S& v : m.data()) out = std::max(out, magnitude(v));
  return out;
}

namespace {

struct IntegerRow {
  std::size_t pivot;
  std::vector<mpz_class> entries;
};

std::vector<mpz_class> clear_denominators(std::span<const Rational> row) {
  mpz_class lcm = 1;
  for (const Rational& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].get_num() * (lcm / row[j].get_den());
  return out;
}

void remove_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<std::size_t> greedy_rows_exact(const Matrix<Rational>& m) {
  std::vector<IntegerRow> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<mpz_class> r = clear_denominators(m.row(i));
    for (const IntegerRow& b : basis) {
      if (r[b.pivot] == 0) continue;
      const mpz_class scale_r = b.entries[b.pivot];
      const mpz_class scale_b = r[b.pivot];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = scale_r * r[j] - scale_b * b.entries[j];
      remove_content(r);
    }
    auto nz = std::find_if(r.begin(), r.end(), [](const mpz_class& v) { return v != 0; });
    if (nz == r.end()) continue;
    basis.push_back({static_cast<std::size_t>(nz - r.begin()), std::move(r)});
    chosen.push_back(i);
    if (basis.size() == m.cols()) break;
  }
  return chosen;
}

std::vector<std::size_t> greedy_rows_float(const Matrix<double>& m, const ArithmeticMode& mode) {
  struct FloatRow {
    std::size_t pivot;
    std::vector<double> entries;
  };
  const double threshold = mode.tolerance * max_magnitude(m);
  std::vector<FloatRow> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    std::vector<double> r(src.begin(), src.end());
    for (const FloatRow& b : basis) {
      const double f = r[b.pivot] / b.entries[b.pivot];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * b.entries[j];
      r[b.pivot] = 0.0;
    }
    std::size_t pivot = 0;
    double best = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (std::abs(r[j]) > best) {
        best = std::abs(r[j]);
        pivot = j;
      }
    }
    if (best <= threshold || best == 0.0) continue;
    basis.push_back({pivot, std::move(r)});
    chosen.push_back(i);
    if (basis.size() == m.cols()) break;
  }
  return chosen;
}

}  // namespace

template <>
std::vector<std::size_t> greedy_independent_rows(const Matrix<Rational>& m, const ArithmeticMode& mode) {
  checked_mode<Rational>(mode);
  return greedy_rows_exact(m);
}

template <>
std::vector<std::size_t> greedy_independent_rows(const Matrix<double>& m, const ArithmeticMode& mode) {
  return greedy_rows_float(m, checked_mode<double>(mode));
}

template <>
Rational determinant(const Matrix<Rational>& m) {
  if (!m.square()) throw Error(Errc::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Matrix<Rational> a = m;
  Rational previous(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  Rational det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

template <>
double determinant(const Matrix<double>& m) {
  if (!m.square()) throw Error(Errc::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<double> a = m;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    }
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m, const ArithmeticMode& mode) {
  const ArithmeticMode md = checked_mode<S>(mode);
  if (!m.square()) throw Error(Errc::kInvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const double scale = max_magnitude(m);
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    if constexpr (std::is_same_v<S, Rational>) {
      for (std::size_t i = k; i < n; ++i) {
        if (sgn(a(i, k)) != 0) {
          p = i;
          break;
        }
      }
    } else {
      double best = 0.0;
      for (std::size_t i = k; i < n; ++i) {
        if (std::abs(a(i, k)) > best) {
          best = std::abs(a(i, k));
          p = i;
        }
      }
      if (p != n && is_zero(a(p, k), scale, md)) p = n;
    }
    if (p == n) throw Error(Errc::kSingularMatrix, "matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const S pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const S f = a(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
  std::vector<To> data;
  data.reserve(m.data().size());
  for (const From& v : m.data()) data.push_back(convert_scalar<To>(v));
  return Matrix<To>(m.rows(), m.cols(), std::move(data));
}

#define STRFUN_INSTANTIATE_MATRIX(S)                                                             \
  template class Matrix<S>;                                                                      \
  template S dot(std::span<const S>, std::span<const S>);                                        \
  template Matrix<S> kronecker(const Matrix<S>&, const Matrix<S>&);                              \
  template Matrix<S> submatrix(const Matrix<S>&, std::span<const std::size_t>,                   \
                               std::span<const std::size_t>);                                    \
  template double max_magnitude(const Matrix<S>&);                                               \
  template Matrix<S> inverse(const Matrix<S>&, const ArithmeticMode&);

STRFUN_INSTANTIATE_MATRIX(Rational)
STRFUN_INSTANTIATE_MATRIX(double)

template Matrix<double> convert_matrix(const Matrix<Rational>&);
template Matrix<Rational> convert_matrix(const Matrix<double>&);
template Matrix<Rational> convert_matrix(const Matrix<Rational>&);
template Matrix<double> convert_matrix(const Matrix<double>&);

}  // namespace strfun
