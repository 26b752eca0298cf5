/*
 * Copyright 2026 The cyclomq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Dense complex matrices for Vandermonde and Kronecker work. All norms are
// Frobenius norms; Cond(A) = ||A|| * ||A^{-1}||.

#ifndef CYCLOMQ_LINALG_H_
#define CYCLOMQ_LINALG_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclomq {

// Working precision of the numeric kernels. Extended maps to the x87 80-bit
// long double (64-bit significand).
enum class Precision { kDouble, kExtended };

Precision parse_precision(const std::string& name);
std::string to_string(Precision p);

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(size_t column, long double pivot_magnitude);

  size_t column() const { return column_; }
  long double pivot_magnitude() const { return pivot_; }

 private:
  size_t column_;
  long double pivot_;
};

template <typename Real>
class Matrix {
 public:
  using Scalar = std::complex<Real>;

  Matrix() = default;
  Matrix(size_t rows, size_t cols);
  Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(size_t n);
  static Matrix diagonal(std::span<const Scalar> diag);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Scalar> entries() const { return entries_; }
  std::span<Scalar> entries() { return entries_; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix conjugate_transpose() const;

  template <typename Other>
  Matrix<Other> cast() const {
    std::vector<std::complex<Other>> out;
    out.reserve(entries_.size());
    for (const auto& z : entries_) {
      out.emplace_back(static_cast<Other>(z.real()),
                       static_cast<Other>(z.imag()));
    }
    return Matrix<Other>(rows_, cols_, std::move(out));
  }

  // Largest entry magnitude.
  Real max_abs() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

using ComplexMatrix = Matrix<double>;
using ExtendedMatrix = Matrix<long double>;

// Distinct complex nodes. Construction rejects pairs closer than 1e-12
// relative to the larger magnitude (absolute 1e-12 near the origin).
template <typename Real>
class RootSet {
 public:
  using Scalar = std::complex<Real>;

  explicit RootSet(std::vector<Scalar> roots);

  size_t size() const { return roots_.size(); }
  const Scalar& operator[](size_t i) const { return roots_[i]; }
  std::span<const Scalar> roots() const { return roots_; }

 private:
  std::vector<Scalar> roots_;
};

template <typename Real>
Real frobenius(const Matrix<Real>& a);

template <typename Real>
Matrix<Real> kronecker(const Matrix<Real>& a, const Matrix<Real>& b);

// LU with partial pivoting. Throws SingularMatrixError when a pivot falls
// below n * eps * max|a_ij|.
template <typename Real>
Matrix<Real> invert(const Matrix<Real>& a);

// Row i is (1, r_i, r_i^2, ..., r_i^{n-1}).
template <typename Real>
Matrix<Real> vandermonde(const RootSet<Real>& roots);

// Inverse of vandermonde(roots) from the closed form
//   w_ij = (-1)^{m-i} e_{m-i}(roots without r_j) / prod_{k != j} (r_j - r_k).
// The leave-one-out symmetric functions come from synthetic division of
// prod_k (x - r_k) by (x - r_j), O(m^2) overall.
template <typename Real>
Matrix<Real> vandermonde_inverse_explicit(const RootSet<Real>& roots);

template <typename Real>
Real condition_number(const Matrix<Real>& a);

// Cond(A) when A^{-1} is already known.
template <typename Real>
Real condition_number(const Matrix<Real>& a, const Matrix<Real>& inverse);

}  // namespace cyclomq

#endif  // CYCLOMQ_LINALG_H_
