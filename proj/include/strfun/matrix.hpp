// matrix.hpp
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
#include <vector>

#include "strfun/scalar.hpp"

namespace strfun {

// Dense row-major matrix over an exact or floating scalar type.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<S>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> data() const { return data_; }

  Matrix transpose() const;
  std::vector<S> apply(std::span<const S> v) const;
  // v^T M
  std::vector<S> apply_left(std::span<const S> v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
S dot(std::span<const S> a, std::span<const S> b);

template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b);

template <class S>
Matrix<S> submatrix(const Matrix<S>& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);

template <class S>
double max_magnitude(const Matrix<S>& m);

// Indices of the first maximal linearly independent set of rows, scanning rows
// in index order. Exact scalars use fraction-free integer elimination; floats
// use the largest-magnitude pivot and treat residuals below tol * max|m| as zero.
template <class S>
std::vector<std::size_t> greedy_independent_rows(const Matrix<S>& m, const ArithmeticMode& mode);

template <>
std::vector<std::size_t> greedy_independent_rows(const Matrix<Rational>& m, const ArithmeticMode& mode);
template <>
std::vector<std::size_t> greedy_independent_rows(const Matrix<double>& m, const ArithmeticMode& mode);

template <class S>
std::vector<std::size_t> greedy_independent_cols(const Matrix<S>& m, const ArithmeticMode& mode) {
  return greedy_independent_rows(m.transpose(), mode);
}

template <class S>
std::size_t matrix_rank(const Matrix<S>& m, const ArithmeticMode& mode) {
  return greedy_independent_rows(m, mode).size();
}

// Bareiss elimination for exact scalars, partial-pivot LU for floats.
template <class S>
S determinant(const Matrix<S>& m);
template <>
Rational determinant(const Matrix<Rational>& m);
template <>
double determinant(const Matrix<double>& m);

// Throws SingularMatrix when no inverse exists under the mode's zero test.
template <class S>
Matrix<S> inverse(const Matrix<S>& m, const ArithmeticMode& mode);

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m);

}  // namespace strfun
