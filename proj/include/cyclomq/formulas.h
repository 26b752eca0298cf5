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

// Closed forms and upper bounds for Frobenius condition numbers of the
// cyclotomic, twisted, quadratic and cyclo-multiquadratic embeddings.
//
// Every evaluator returns a BoundReport. Values that are an integer, a
// rational, or a rational times the square root of a rational also carry
// that exact form, so callers can compare against numerics without
// accumulating formula-side rounding.

#ifndef CYCLOMQ_FORMULAS_H_
#define CYCLOMQ_FORMULAS_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclomq/numtheory.h"

namespace cyclomq {

using BigRational = mpq_class;

// coefficient * sqrt(radicand) with radicand >= 0.
struct Surd {
  BigRational coefficient = 1;
  BigRational radicand = 1;

  long double value() const;
  double log10() const;
  Surd operator*(const Surd& other) const;
  std::string to_string() const;
};

enum class BoundKind {
  kExactClosed,
  kExactTwisted,
  kExactQuadratic,
  kExactCycloMQ,
  kBoundGeneral,
  kBoundRefined,
  kBoundQuadratic,
  kBoundCycloMQ,
  kBoundHybrid,
  kBoundHeight,
};

std::string to_string(BoundKind kind);

struct BoundReport {
  // Conductor, or 0 for the purely quadratic evaluators.
  uint64_t n = 0;
  std::vector<uint64_t> quad_primes;
  BoundKind kind = BoundKind::kExactClosed;
  bool applicable = true;
  // Why the formula does not apply; empty when applicable.
  std::string reason;
  // NaN when not applicable, +inf when the value exceeds double range.
  double value = 0;
  double log10_value = 0;
  std::optional<Surd> exact;
  // Polynomial growth exponent k in O((2^r m)^k), metadata only.
  std::optional<int> growth_exponent;

  bool overflow() const;
};

// phi(n) sqrt(2 (1 - 1/p)); applicable for n = p^k or n = 2^k p^l.
BoundReport cond_exact_prime_power(const Conductor& n);

// phi(n) sqrt(2)^r sqrt(prod (1 - 1/p_i)) over the r distinct primes of n.
BoundReport cond_exact_twisted(const Conductor& n);

// 2 rad(n) n^{2^k + k + 2} A with k = omega(n). Evaluated exactly, reported
// in log space when beyond double range.
BoundReport cond_bound_general(const Conductor& n, const BigInt& height);

// Refined bound dispatched on omega(n) in [1, 6]; not applicable above.
BoundReport cond_bound_refined(const Conductor& n);

// Exponent of phi(rad(n)) in the refined bound, omega in [1, 6].
int refined_exponent(int omega);

BoundReport cond_quadratic(uint64_t p);
BoundReport cond_bound_quadratic(uint64_t p);

// phi(n) 2^{omega(n)/2} prod (2 + sqrt p_i).
BoundReport cond_bound_cyclomq(const Conductor& n,
                               std::span<const uint64_t> primes);

// cond_exact_twisted(n) * prod cond_quadratic(p_i).
BoundReport cond_exact_cyclomq_twisted(const Conductor& n,
                                       std::span<const uint64_t> primes);

// Upper bound on A(n) for 4 <= omega(n) <= 6.
BoundReport height_bound_56(const Conductor& n);

// 1.3841 ln n / ln ln n, n >= 3.
double omega_upper_bound(uint64_t n);

// cond_bound_refined(n) * prod cond_bound_quadratic(p_i), with the growth
// exponent 1 + omega (omega <= 3), 6, 9, 13 as metadata.
BoundReport hybrid_bound(const Conductor& n, std::span<const uint64_t> primes);

// Checks that primes are distinct primes not dividing n; throws
// std::invalid_argument otherwise.
void validate_quad_primes(const Conductor& n, std::span<const uint64_t> primes);

}  // namespace cyclomq

#endif  // CYCLOMQ_FORMULAS_H_
