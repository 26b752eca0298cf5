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

// Change-of-basis matrices from coordinate to canonical embeddings for
// cyclotomic fields K_n and their composita with real quadratic fields
// Q(sqrt p_1, ..., sqrt p_r).
//
// Conventions: primitive roots e^{2 pi i k / n} are taken with k ascending
// over residues coprime to n; Kronecker factors are ordered by ascending
// prime. Condition numbers do not depend on these choices, entries do.

#ifndef CYCLOMQ_EMBEDDINGS_H_
#define CYCLOMQ_EMBEDDINGS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cyclomq/linalg.h"
#include "cyclomq/numtheory.h"

namespace cyclomq {

enum class Basis {
  // Power basis of a single generator; no quadratic factors.
  kPower,
  // Twisted basis on the cyclotomic part, tensored with the quadratic blocks.
  kTwisted,
  // Power basis on the cyclotomic part, tensored with the quadratic blocks.
  kHybrid,
};

Basis parse_basis(const std::string& name);
std::string to_string(Basis b);

constexpr size_t kDefaultDimensionCap = 4096;

struct EmbeddingSpec {
  Conductor conductor;
  std::vector<uint64_t> quad_primes;
  Basis basis = Basis::kPower;

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  // phi(n) * 2^r.
  uint64_t dimension() const;
};

// Residues 1 <= k < n with gcd(k, n) = 1, ascending.
std::vector<uint64_t> primitive_residues(uint64_t n);

template <typename Real>
RootSet<Real> cyclotomic_roots(const Conductor& n);

// phi(n) x phi(n) Vandermonde matrix on the primitive n-th roots of unity.
template <typename Real>
Matrix<Real> cyclotomic_vandermonde(const Conductor& n);

// Kronecker product of the cyclotomic Vandermonde matrices of the prime
// power parts of n.
template <typename Real>
Matrix<Real> twisted_vandermonde(const Conductor& n);

// Embedding of the integral basis {1, eps} of Q(sqrt p): eps = sqrt p when
// p = 2, 3 mod 4 and eps = (1 + sqrt p) / 2 when p = 1 mod 4.
template <typename Real>
Matrix<Real> quadratic_block(uint64_t p);

// Throws std::length_error when the dimension exceeds `cap`.
template <typename Real>
Matrix<Real> embedding_matrix(const EmbeddingSpec& spec,
                              size_t cap = kDefaultDimensionCap);

double numeric_cond(const EmbeddingSpec& spec,
                    Precision precision = Precision::kDouble,
                    size_t cap = kDefaultDimensionCap);

}  // namespace cyclomq

#endif  // CYCLOMQ_EMBEDDINGS_H_
