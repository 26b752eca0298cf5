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

#include <random>

#include "doctest.h"
#include "oracles.h"

namespace cyclomq {
namespace {

TEST_CASE("pow_mod and inv_mod against brute force") {
  for (uint64_t q : {3ULL, 17ULL, 97ULL, 257ULL}) {
    for (uint64_t a = 1; a < q; ++a) {
      CHECK(pow_mod(a, 13, q) == oracle::pow_slow(a, 13, q));
      CHECK(mul_mod(a, inv_mod(a, q), q) == 1);
    }
    CHECK_THROWS_AS(inv_mod(0, q), std::domain_error);
  }
}

TEST_CASE("Shoup multiplication matches __int128 reduction") {
  std::mt19937_64 rng(3);
  const uint64_t q = (1ULL << 61) - 1;
  for (int i = 0; i < 10000; ++i) {
    const uint64_t a = rng() % q;
    const uint64_t w = rng() % q;
    CHECK(mul_shoup(a, ShoupConstant(w, q), q) == mul_mod(a, w, q));
  }
}

TEST_CASE("legendre follows Euler's criterion") {
  const uint64_t q = 17;
  CHECK(legendre(3, q) == -1);
  CHECK(oracle::pow_slow(3, 8, q) == q - 1);
  CHECK(legendre(2, q) == 1);
  CHECK(legendre(0, q) == 0);
}

TEST_CASE("sqrt_mod returns the smaller root") {
  CHECK(sqrt_mod(2, 17) == 6u);
  CHECK_FALSE(sqrt_mod(3, 17).has_value());
  for (uint64_t q : {17ULL, 97ULL, 7681ULL, 12289ULL}) {
    for (uint64_t a = 1; a < 300 && a < q; ++a) {
      uint64_t smallest = 0;
      for (uint64_t s = 1; s < q; ++s) {
        if (mul_mod(s, s, q) == a) {
          smallest = s;
          break;
        }
      }
      const auto got = sqrt_mod(a, q);
      if (smallest == 0) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == smallest);
      }
    }
  }
}

TEST_CASE("roots of unity have the requested order") {
  CHECK(min_root_of_unity(8, 17) == 2);
  CHECK(primitive_root(17) == 3);
  for (uint64_t q : {17ULL, 97ULL, 257ULL, 7681ULL}) {
    CHECK(oracle::order_slow(primitive_root(q), q) == q - 1);
    for (uint64_t k = 2; k <= q - 1; ++k) {
      if ((q - 1) % k != 0) continue;
      const uint64_t w = min_root_of_unity(k, q);
      CHECK(oracle::order_slow(w, q) == k);
      for (uint64_t x = 2; x < w; ++x) CHECK(oracle::order_slow(x, q) != k);
    }
  }
}

}  // namespace
}  // namespace cyclomq
