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

#include "cyclomq/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace cyclomq {

namespace {

// row[j] -= f * pivot_row[j] for j in [begin, n), on interleaved re/im data.
template <typename Real>
void AxpyRow(Real* row, const Real* pivot_row, Real fr, Real fi, size_t begin,
             size_t n) {
  for (size_t j = begin; j < n; ++j) {
    const Real br = pivot_row[2 * j];
    const Real bi = pivot_row[2 * j + 1];
    row[2 * j] -= fr * br - fi * bi;
    row[2 * j + 1] -= fr * bi + fi * br;
  }
}

}  // namespace

Precision parse_precision(const std::string& name) {
  if (name == "double") return Precision::kDouble;
  if (name == "extended") return Precision::kExtended;
  throw std::invalid_argument("unknown precision '" + name +
                              "' (expected double or extended)");
}

std::string to_string(Precision p) {
  return p == Precision::kDouble ? "double" : "extended";
}

SingularMatrixError::SingularMatrixError(size_t column,
                                         long double pivot_magnitude)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "matrix is singular to working precision: pivot magnitude "
           << static_cast<double>(pivot_magnitude) << " in column " << column;
        return os.str();
      }()),
      column_(column),
      pivot_(pivot_magnitude) {}

template <typename Real>
Matrix<Real>::Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

template <typename Real>
Matrix<Real>::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

template <typename Real>
Matrix<Real>::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

template <typename Real>
Matrix<Real> Matrix<Real>::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  Matrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    Real* dst = reinterpret_cast<Real*>(&out(i, 0));
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar f = (*this)(i, k);
      if (f == Scalar(0)) continue;
      AxpyRow(dst, reinterpret_cast<const Real*>(&other(k, 0)), -f.real(),
              -f.imag(), 0, other.cols_);
    }
  }
  return out;
}

template <typename Real>
Matrix<Real> Matrix<Real>::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] -= other.entries_[i];
  }
  return out;
}

template <typename Real>
Matrix<Real> Matrix<Real>::conjugate_transpose() const {
  Matrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

template <typename Real>
Real Matrix<Real>::max_abs() const {
  Real best = 0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

template <typename Real>
RootSet<Real>::RootSet(std::vector<Scalar> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw std::invalid_argument("root set is empty");
  for (size_t i = 0; i < roots_.size(); ++i) {
    for (size_t j = i + 1; j < roots_.size(); ++j) {
      const Real scale =
          std::max({std::abs(roots_[i]), std::abs(roots_[j]), Real(1)});
      if (std::abs(roots_[i] - roots_[j]) <= Real(1e-12) * scale) {
        throw std::invalid_argument("duplicate roots at positions " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
}

template <typename Real>
Real frobenius(const Matrix<Real>& a) {
  Real sum = 0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

template <typename Real>
Matrix<Real> kronecker(const Matrix<Real>& a, const Matrix<Real>& b) {
  Matrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      for (size_t k = 0; k < b.rows(); ++k) {
        for (size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

template <typename Real>
Matrix<Real> invert(const Matrix<Real>& a) {
  if (!a.is_square()) throw std::invalid_argument("cannot invert non-square");
  const size_t n = a.rows();
  Matrix<Real> w = a;
  const Real tiny = static_cast<Real>(n) *
                    std::numeric_limits<Real>::epsilon() * a.max_abs();
  std::vector<size_t> swaps(n);

  // In-place Gauss-Jordan with partial pivoting.
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    Real best = std::abs(w(k, k));
    for (size_t i = k + 1; i < n; ++i) {
      const Real v = std::abs(w(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > tiny)) throw SingularMatrixError(k, best);
    swaps[k] = p;
    if (p != k) {
      std::swap_ranges(&w(k, 0), &w(k, 0) + n, &w(p, 0));
    }
    const std::complex<Real> inv_pivot = Real(1) / w(k, k);
    w(k, k) = 1;
    for (size_t j = 0; j < n; ++j) w(k, j) *= inv_pivot;
    const Real* pivot_row = reinterpret_cast<const Real*>(&w(k, 0));
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const std::complex<Real> f = w(i, k);
      if (f == std::complex<Real>(0)) continue;
      w(i, k) = 0;
      AxpyRow(reinterpret_cast<Real*>(&w(i, 0)), pivot_row, f.real(), f.imag(),
              0, n);
    }
  }
  // Row swaps on A become column swaps on A^{-1}, undone in reverse.
  for (size_t k = n; k-- > 0;) {
    if (swaps[k] == k) continue;
    for (size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, swaps[k]));
  }
  return w;
}

template <typename Real>
Matrix<Real> vandermonde(const RootSet<Real>& roots) {
  const size_t n = roots.size();
  Matrix<Real> v(n, n);
  for (size_t i = 0; i < n; ++i) {
    std::complex<Real> power(1);
    for (size_t j = 0; j < n; ++j) {
      v(i, j) = power;
      power *= roots[i];
    }
  }
  return v;
}

// Greedy ordering maximizing the product of distances to the nodes already
// chosen; sums of logs avoid overflow.
template <typename Real>
std::vector<size_t> LejaOrder(const RootSet<Real>& roots) {
  const size_t m = roots.size();
  std::vector<size_t> order;
  order.reserve(m);
  std::vector<bool> used(m, false);
  std::vector<Real> score(m, 0);
  size_t next = 0;
  for (size_t i = 1; i < m; ++i) {
    if (std::abs(roots[i]) > std::abs(roots[next])) next = i;
  }
  for (size_t step = 0; step < m; ++step) {
    order.push_back(next);
    used[next] = true;
    size_t best = m;
    for (size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      score[i] += std::log(std::abs(roots[i] - roots[next]));
      if (best == m || score[i] > score[best]) best = i;
    }
    next = best;
  }
  return order;
}

template <typename Real>
Matrix<Real> vandermonde_inverse_explicit(const RootSet<Real>& roots) {
  using C = std::complex<Real>;
  const size_t m = roots.size();

  // prod_k (x - r_k), ascending coefficients. Expanding in Leja order keeps
  // the partial products' coefficients small; in angular order they grow
  // exponentially and cancel.
  std::vector<C> full(m + 1, C(0));
  full[0] = 1;
  size_t k = 0;
  for (const size_t idx : LejaOrder(roots)) {
    const C r = roots[idx];
    for (size_t i = k + 1; i > 0; --i) full[i] = full[i - 1] - r * full[i];
    full[0] = -r * full[0];
    ++k;
  }

  Matrix<Real> w(m, m);
  std::vector<C> quotient(m);
  for (size_t j = 0; j < m; ++j) {
    const C rj = roots[j];
    // Coefficient i of prod_{k != j}(x - r_k) is (-1)^{m-1-i} e_{m-1-i}.
    quotient[m - 1] = 1;
    for (size_t i = m - 1; i > 0; --i) {
      quotient[i - 1] = full[i] + rj * quotient[i];
    }
    C denom(1);
    for (size_t k = 0; k < m; ++k) {
      if (k != j) denom *= rj - roots[k];
    }
    const C inv_denom = Real(1) / denom;
    for (size_t i = 0; i < m; ++i) w(i, j) = quotient[i] * inv_denom;
  }
  return w;
}

template <typename Real>
Real condition_number(const Matrix<Real>& a, const Matrix<Real>& inverse) {
  return frobenius(a) * frobenius(inverse);
}

template <typename Real>
Real condition_number(const Matrix<Real>& a) {
  return condition_number(a, invert(a));
}

#define CYCLOMQ_INSTANTIATE(Real)                                          \
  template class Matrix<Real>;                                             \
  template class RootSet<Real>;                                            \
  template Real frobenius(const Matrix<Real>&);                            \
  template Matrix<Real> kronecker(const Matrix<Real>&, const Matrix<Real>&); \
  template Matrix<Real> invert(const Matrix<Real>&);                       \
  template Matrix<Real> vandermonde(const RootSet<Real>&);                 \
  template Matrix<Real> vandermonde_inverse_explicit(const RootSet<Real>&); \
  template Real condition_number(const Matrix<Real>&);                     \
  template Real condition_number(const Matrix<Real>&, const Matrix<Real>&);

CYCLOMQ_INSTANTIATE(double)
CYCLOMQ_INSTANTIATE(long double)

#undef CYCLOMQ_INSTANTIATE

}  // namespace cyclomq
