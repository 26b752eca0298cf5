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

#include "cyclomq/modarith.h"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclomq/numtheory.h"

namespace cyclomq {

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, q);
    base = mul_mod(base, base, q);
    exp >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t q) {
  a %= q;
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow_mod(a, q - 2, q);
}

int legendre(uint64_t a, uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  return pow_mod(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  if (legendre(a, q) != 1) return std::nullopt;

  // q - 1 = odd * 2^s
  uint64_t odd = q - 1;
  int s = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++s;
  }
  uint64_t z = 2;
  while (legendre(z, q) != -1) ++z;

  uint64_t c = pow_mod(z, odd, q);
  uint64_t x = pow_mod(a, (odd + 1) / 2, q);
  uint64_t t = pow_mod(a, odd, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, q);
      ++i;
    }
    uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, q);
    x = mul_mod(x, b, q);
    c = mul_mod(b, b, q);
    t = mul_mod(t, c, q);
    m = i;
  }
  return std::min(x, q - x);
}

uint64_t primitive_root(uint64_t q) {
  if (q == 2) return 1;
  const auto primes = Conductor(q - 1).primes();
  for (uint64_t g = 2; g < q; ++g) {
    bool generator = true;
    for (uint64_t p : primes) {
      if (pow_mod(g, (q - 1) / p, q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::domain_error("no primitive root modulo " + std::to_string(q));
}

uint64_t min_root_of_unity(uint64_t order, uint64_t q) {
  if (order == 0 || (q - 1) % order != 0) {
    throw std::domain_error("order " + std::to_string(order) +
                            " does not divide q - 1");
  }
  const uint64_t w = pow_mod(primitive_root(q), (q - 1) / order, q);
  uint64_t best = w;
  uint64_t power = 1;
  for (uint64_t k = 1; k < order; ++k) {
    power = mul_mod(power, w, q);
    if (std::gcd(k, order) == 1 && power < best) best = power;
  }
  return order == 1 ? 1 : best;
}

}  // namespace cyclomq
