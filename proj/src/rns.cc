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

#include "cyclomq/rns.h"

#include <set>
#include <stdexcept>
#include <string>

namespace cyclomq {

namespace {

BigInt FromU64(uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

uint64_t ToU64(const BigInt& v) {
  uint64_t out = 0;
  size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

RnsContext::RnsContext(std::vector<uint64_t> moduli, uint64_t m_cyclo,
                       std::vector<uint64_t> quad_d, QuadRelation relation)
    : moduli_(std::move(moduli)), q_product_(1) {
  if (moduli_.empty()) throw std::invalid_argument("no RNS moduli given");
  std::set<uint64_t> seen;
  for (uint64_t q : moduli_) {
    if (!seen.insert(q).second) {
      throw std::invalid_argument("RNS modulus " + std::to_string(q) +
                                  " repeated");
    }
    limbs_.push_back(make_context(q, m_cyclo, quad_d, relation));
    q_product_ *= FromU64(q);
  }
  for (uint64_t q : moduli_) {
    const BigInt cofactor = q_product_ / FromU64(q);
    const BigInt reduced = cofactor % FromU64(q);
    cofactors_.push_back(cofactor);
    cofactor_inv_.push_back(inv_mod(ToU64(reduced), q));
  }
}

std::vector<PolyVec> rns_decompose(const std::vector<BigInt>& coeffs,
                                   const RnsContext& ctx) {
  if (coeffs.size() != ctx.dimension()) {
    throw std::invalid_argument("expected " + std::to_string(ctx.dimension()) +
                                " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  std::vector<PolyVec> out;
  out.reserve(ctx.size());
  for (size_t i = 0; i < ctx.size(); ++i) {
    const BigInt q = FromU64(ctx.moduli()[i]);
    std::vector<uint64_t> residues(coeffs.size());
    BigInt r;
    for (size_t j = 0; j < coeffs.size(); ++j) {
      // mpz_fdiv_r keeps the sign of the divisor, so negatives land in [0, q).
      mpz_fdiv_r(r.get_mpz_t(), coeffs[j].get_mpz_t(), q.get_mpz_t());
      residues[j] = ToU64(r);
    }
    out.emplace_back(ctx.limb(i), std::move(residues), Domain::kCoefficient);
  }
  return out;
}

std::vector<BigInt> rns_reconstruct(const std::vector<PolyVec>& limbs,
                                    const RnsContext& ctx) {
  if (limbs.size() != ctx.size()) {
    throw std::invalid_argument("expected " + std::to_string(ctx.size()) +
                                " limbs, got " + std::to_string(limbs.size()));
  }
  for (size_t i = 0; i < limbs.size(); ++i) {
    if (limbs[i].context().modulus() != ctx.moduli()[i] ||
        limbs[i].values().size() != ctx.dimension()) {
      throw std::invalid_argument("limb " + std::to_string(i) +
                                  " does not match RNS modulus " +
                                  std::to_string(ctx.moduli()[i]));
    }
    if (limbs[i].domain() != Domain::kCoefficient) {
      throw std::invalid_argument("rns_reconstruct expects coefficient-domain limbs");
    }
  }
  std::vector<BigInt> out(ctx.dimension(), 0);
  for (size_t i = 0; i < limbs.size(); ++i) {
    const uint64_t q = ctx.moduli()[i];
    const uint64_t inv = ctx.cofactor_inverse(i);
    for (size_t j = 0; j < out.size(); ++j) {
      const uint64_t t = mul_mod(limbs[i].values()[j], inv, q);
      out[j] += ctx.cofactor(i) * FromU64(t);
    }
  }
  for (auto& v : out) v %= ctx.product();
  return out;
}

}  // namespace cyclomq
