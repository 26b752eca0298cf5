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

#ifndef CYCLOMQ_MODARITH_H_
#define CYCLOMQ_MODARITH_H_

#include <cstdint>
#include <optional>

namespace cyclomq {

// Moduli are odd primes below 2^62.
constexpr int kMaxModulusBits = 62;

// The conditional corrections use masks rather than branches: on random
// residues a branch mispredicts half the time.
inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t q) {
  const uint64_t s = a + b;
  return s - (q & (uint64_t{0} - static_cast<uint64_t>(s >= q)));
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t q) {
  const uint64_t d = a - b;
  return d + (q & (uint64_t{0} - static_cast<uint64_t>(a < b)));
}

inline uint64_t neg_mod(uint64_t a, uint64_t q) { return a == 0 ? 0 : q - a; }

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

// Multiplication by a fixed operand w with precomputed
// w_shoup = floor(w * 2^64 / q). Requires q < 2^63.
struct ShoupConstant {
  uint64_t value = 0;
  uint64_t quotient = 0;

  ShoupConstant() = default;
  ShoupConstant(uint64_t w, uint64_t q)
      : value(w),
        quotient(static_cast<uint64_t>(
            (static_cast<unsigned __int128>(w) << 64) / q)) {}
};

inline uint64_t mul_shoup(uint64_t a, const ShoupConstant& w, uint64_t q) {
  const uint64_t hi = static_cast<uint64_t>(
      (static_cast<unsigned __int128>(a) * w.quotient) >> 64);
  const uint64_t r = a * w.value - hi * q;
  return r - (q & (uint64_t{0} - static_cast<uint64_t>(r >= q)));
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t q);

// Inverse modulo a prime q; throws std::domain_error for a == 0 mod q.
uint64_t inv_mod(uint64_t a, uint64_t q);

// Legendre symbol (a/q) for an odd prime q: 1, -1 or 0.
int legendre(uint64_t a, uint64_t q);

// Square root modulo an odd prime via Tonelli-Shanks. Returns the smaller of
// the two roots, or nullopt for a non-residue.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t q);

// Smallest generator of the multiplicative group of F_q.
uint64_t primitive_root(uint64_t q);

// Smallest element of multiplicative order exactly `order` in F_q, where
// order divides q - 1.
uint64_t min_root_of_unity(uint64_t order, uint64_t q);

}  // namespace cyclomq

#endif  // CYCLOMQ_MODARITH_H_
