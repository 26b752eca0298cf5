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

// Residue number system over several NTT-friendly primes sharing one ring
// shape. Limbs are independent and may be transformed in parallel.

#ifndef CYCLOMQ_RNS_H_
#define CYCLOMQ_RNS_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclomq/numtheory.h"
#include "cyclomq/ringarith.h"

namespace cyclomq {

class RnsContext {
 public:
  // Throws std::invalid_argument for repeated moduli or any modulus that
  // does not admit a RingContext with the given shape.
  RnsContext(std::vector<uint64_t> moduli, uint64_t m_cyclo,
             std::vector<uint64_t> quad_d,
             QuadRelation relation = QuadRelation::kSquareIsD);

  const std::vector<uint64_t>& moduli() const { return moduli_; }
  size_t size() const { return moduli_.size(); }
  const BigInt& product() const { return q_product_; }
  uint64_t dimension() const { return limbs_.front()->dimension(); }
  const std::shared_ptr<const RingContext>& limb(size_t i) const {
    return limbs_.at(i);
  }

  // Q / q_i and (Q / q_i)^{-1} mod q_i.
  const BigInt& cofactor(size_t i) const { return cofactors_.at(i); }
  uint64_t cofactor_inverse(size_t i) const { return cofactor_inv_.at(i); }

 private:
  std::vector<uint64_t> moduli_;
  std::vector<std::shared_ptr<const RingContext>> limbs_;
  BigInt q_product_;
  std::vector<BigInt> cofactors_;
  std::vector<uint64_t> cofactor_inv_;
};

// One coefficient-domain PolyVec per limb. Inputs may be any integers,
// negative ones included; each is reduced into [0, q_i).
std::vector<PolyVec> rns_decompose(const std::vector<BigInt>& coeffs,
                                   const RnsContext& ctx);

// Explicit CRT into [0, Q). Throws std::invalid_argument when the limbs do
// not match the context's moduli or are not in the coefficient domain.
std::vector<BigInt> rns_reconstruct(const std::vector<PolyVec>& limbs,
                                    const RnsContext& ctx);

}  // namespace cyclomq

#endif  // CYCLOMQ_RNS_H_
