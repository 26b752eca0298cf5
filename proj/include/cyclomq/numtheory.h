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

#ifndef CYCLOMQ_NUMTHEORY_H_
#define CYCLOMQ_NUMTHEORY_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclomq {

using BigInt = mpz_class;

struct PrimePower {
  uint64_t prime;
  int exponent;

  uint64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

// A positive integer together with its factorization and the arithmetic
// functions derived from it. Immutable after construction.
class Conductor {
 public:
  // Throws std::invalid_argument for n == 0.
  explicit Conductor(uint64_t n);

  uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  uint64_t phi() const { return phi_; }
  uint64_t rad() const { return rad_; }
  int omega() const { return static_cast<int>(factors_.size()); }

  // Distinct primes in ascending order.
  std::vector<uint64_t> primes() const;
  bool is_prime_power() const { return factors_.size() == 1; }
  bool is_squarefree() const { return n_ == rad_; }
  bool divisible_by(uint64_t d) const { return d != 0 && n_ % d == 0; }

  std::string to_string() const;

 private:
  uint64_t n_;
  std::vector<PrimePower> factors_;
  uint64_t phi_ = 1;
  uint64_t rad_ = 1;
};

Conductor factorize(uint64_t n);

// Deterministic primality for the full 64-bit range.
bool is_prime(uint64_t n);

// All primes <= limit, ascending.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Moebius function.
int mobius(uint64_t n);

// Divisors of n in ascending order.
std::vector<uint64_t> divisors(const Conductor& n);

// Exact integer polynomial, coefficients in ascending degree, no trailing
// zeros. The zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial from_int64(std::span<const int64_t> coeffs);

  // -1 for the zero polynomial.
  int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  BigInt coeff(size_t i) const;

  // Max absolute coefficient.
  BigInt height() const;
  // Number of nonzero coefficients.
  size_t weight() const;

  // p(x) -> p(x^k).
  IntPolynomial substitute_power(uint64_t k) const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

// Exact quotient a / b for monic b. Throws std::domain_error if the
// division leaves a nonzero remainder.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// x^n - 1.
IntPolynomial binomial(uint64_t n);

// n-th cyclotomic polynomial. The squarefree core Phi_rad(n) is built one
// prime at a time with Phi_{rp}(x) = Phi_r(x^p) / Phi_r(x) (exact division),
// then x is replaced by x^{n / rad(n)}.
IntPolynomial cyclotomic_poly(uint64_t n);

// Same polynomial through the Moebius product of binomials
// prod_{d | n} (1 - x^d)^{mu(n/d)}. Used as an independent route in tests
// and by height().
IntPolynomial cyclotomic_poly_mobius(uint64_t n);

// A(n): the largest absolute coefficient of Phi_n. Computed on rad(n) over
// half of the (palindromic) coefficient range.
BigInt height(uint64_t n);

}  // namespace cyclomq

#endif  // CYCLOMQ_NUMTHEORY_H_
