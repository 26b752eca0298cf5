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

#include "cyclomq/embeddings.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclomq {

namespace {

// e^{2 pi i t / n} for t in [0, n).
template <typename Real>
std::vector<std::complex<Real>> UnitCircleTable(uint64_t n) {
  std::vector<std::complex<Real>> table(n);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  for (uint64_t t = 0; t < n; ++t) {
    const Real angle = two_pi * static_cast<Real>(t) / static_cast<Real>(n);
    table[t] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

void RequireConductor(const Conductor& n) {
  if (n.n() < 2) throw std::invalid_argument("conductor must be at least 2");
}

}  // namespace

Basis parse_basis(const std::string& name) {
  if (name == "power") return Basis::kPower;
  if (name == "twisted") return Basis::kTwisted;
  if (name == "hybrid") return Basis::kHybrid;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::kPower:
      return "power";
    case Basis::kTwisted:
      return "twisted";
    case Basis::kHybrid:
      return "hybrid";
  }
  return "unknown";
}

void EmbeddingSpec::validate() const {
  RequireConductor(conductor);
  std::set<uint64_t> seen;
  for (uint64_t p : quad_primes) {
    if (!is_prime(p)) {
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (conductor.divisible_by(p)) {
      throw std::invalid_argument("quadratic prime " + std::to_string(p) +
                                  " divides the conductor " +
                                  std::to_string(conductor.n()));
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("quadratic prime " + std::to_string(p) +
                                  " repeated");
    }
  }
  if (basis == Basis::kHybrid && quad_primes.empty()) {
    throw std::invalid_argument("hybrid basis needs at least one quadratic prime");
  }
  if (basis == Basis::kPower && !quad_primes.empty()) {
    throw std::invalid_argument(
        "power basis is only defined for the cyclotomic field; use the "
        "twisted or hybrid basis with quadratic primes");
  }
}

uint64_t EmbeddingSpec::dimension() const {
  return conductor.phi() << quad_primes.size();
}

std::vector<uint64_t> primitive_residues(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Real>
RootSet<Real> cyclotomic_roots(const Conductor& n) {
  RequireConductor(n);
  const auto table = UnitCircleTable<Real>(n.n());
  std::vector<std::complex<Real>> roots;
  for (uint64_t k : primitive_residues(n.n())) roots.push_back(table[k]);
  return RootSet<Real>(std::move(roots));
}

template <typename Real>
Matrix<Real> cyclotomic_vandermonde(const Conductor& n) {
  RequireConductor(n);
  const uint64_t order = n.n();
  const auto table = UnitCircleTable<Real>(order);
  const auto residues = primitive_residues(order);
  const size_t m = residues.size();
  Matrix<Real> v(m, m);
  // Exponents reduced mod n so every entry is a table lookup.
  for (size_t i = 0; i < m; ++i) {
    uint64_t t = 0;
    for (size_t j = 0; j < m; ++j) {
      v(i, j) = table[t];
      t = (t + residues[i]) % order;
    }
  }
  return v;
}

template <typename Real>
Matrix<Real> twisted_vandermonde(const Conductor& n) {
  RequireConductor(n);
  Matrix<Real> out = Matrix<Real>::identity(1);
  for (const auto& f : n.factors()) {
    out = kronecker(out, cyclotomic_vandermonde<Real>(Conductor(f.value())));
  }
  return out;
}

template <typename Real>
Matrix<Real> quadratic_block(uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const Real s = std::sqrt(static_cast<Real>(p));
  if (p % 4 == 1) {
    return Matrix<Real>{{Real(1), (1 + s) / 2}, {Real(1), (1 - s) / 2}};
  }
  return Matrix<Real>{{Real(1), s}, {Real(1), -s}};
}

template <typename Real>
Matrix<Real> embedding_matrix(const EmbeddingSpec& spec, size_t cap) {
  spec.validate();
  if (spec.dimension() > cap) {
    throw std::length_error("embedding dimension " +
                            std::to_string(spec.dimension()) +
                            " exceeds the cap " + std::to_string(cap));
  }
  Matrix<Real> out = spec.basis == Basis::kTwisted
                         ? twisted_vandermonde<Real>(spec.conductor)
                         : cyclotomic_vandermonde<Real>(spec.conductor);
  for (uint64_t p : spec.quad_primes) {
    out = kronecker(out, quadratic_block<Real>(p));
  }
  return out;
}

double numeric_cond(const EmbeddingSpec& spec, Precision precision,
                    size_t cap) {
  if (precision == Precision::kExtended) {
    return static_cast<double>(
        condition_number(embedding_matrix<long double>(spec, cap)));
  }
  return condition_number(embedding_matrix<double>(spec, cap));
}

#define CYCLOMQ_INSTANTIATE(Real)                                      \
  template RootSet<Real> cyclotomic_roots(const Conductor&);           \
  template Matrix<Real> cyclotomic_vandermonde(const Conductor&);      \
  template Matrix<Real> twisted_vandermonde(const Conductor&);         \
  template Matrix<Real> quadratic_block(uint64_t);                     \
  template Matrix<Real> embedding_matrix(const EmbeddingSpec&, size_t);

CYCLOMQ_INSTANTIATE(double)
CYCLOMQ_INSTANTIATE(long double)

#undef CYCLOMQ_INSTANTIATE

}  // namespace cyclomq
