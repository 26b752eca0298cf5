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

#include "cyclomq/ringarith.h"

#include <random>

#include "cyclomq/numtheory.h"
#include "doctest.h"

namespace cyclomq {
namespace {

// Smallest prime q = 1 mod step with every d a residue.
uint64_t FindPrime(uint64_t step, const std::vector<uint64_t>& d) {
  for (uint64_t q = step + 1;; q += step) {
    if (!is_prime(q)) continue;
    bool ok = true;
    for (uint64_t x : d) ok = ok && legendre(x % q, q) == 1;
    if (ok) return q;
  }
}

std::vector<uint64_t> FirstOddPrimes(size_t r) {
  std::vector<uint64_t> out;
  for (uint64_t p = 3; out.size() < r; p += 2) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::shared_ptr<const RingContext> Context(uint64_t m_cyclo, size_t r,
                                           QuadRelation rel = QuadRelation::kSquareIsD) {
  const auto d = FirstOddPrimes(r);
  std::vector<uint64_t> signed_d = d;
  uint64_t q = 2 * m_cyclo + 1;
  for (;; q += 2 * m_cyclo) {
    if (!is_prime(q)) continue;
    bool ok = true;
    for (uint64_t x : d) {
      const uint64_t c = rel == QuadRelation::kSquareIsD ? x % q : q - x % q;
      ok = ok && x % q != 0 && legendre(c, q) == 1;
    }
    if (ok) break;
  }
  return make_context(q, m_cyclo, d, rel);
}

TEST_CASE("context construction examples") {
  CHECK(make_context(17, 4, {})->psi() == 2);
  CHECK(pow_mod(2, 4, 17) == 16);
  const auto c = make_context(17, 1, {2});
  REQUIRE(c->quad_roots().size() == 1);
  CHECK(c->quad_roots()[0] == 6);
  CHECK_THROWS_AS(make_context(17, 4, {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_context(17, 16, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_context(15, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_context(17, 1, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_context(17, 1, {8}), std::invalid_argument);
  CHECK_THROWS_AS(make_context(17, 3, {}), std::invalid_argument);

  const uint64_t q = FindPrime(64, {});
  const auto ctx = make_context(q, 32, {});
  CHECK(pow_mod(ctx->psi(), 32, q) == q - 1);
  CHECK(ctx->count_report() == OpCount{0, 0});
}

TEST_CASE("ntt negacyclic square of 1 + x") {
  const auto ctx = make_context(17, 4, {});
  PolyVec a(ctx, {1, 1, 0, 0});
  ntt_forward(a);
  PolyVec p = pointwise_mul(a, a);
  ntt_inverse(p);
  CHECK(p.values() == std::vector<uint64_t>{1, 2, 1, 0});
}

TEST_CASE("ntt evaluates at odd powers of psi") {
  const uint64_t q = FindPrime(32, {});
  const auto ctx = make_context(q, 16, {});
  std::mt19937_64 rng(1);
  PolyVec a = PolyVec::random(ctx, rng);
  const auto coeffs = a.values();
  ntt_forward(a);
  // Output slot i holds the evaluation at psi^{2 bitrev(i) + 1}.
  for (uint64_t i = 0; i < 16; ++i) {
    uint64_t rev = 0;
    for (int b = 0; b < 4; ++b) rev |= ((i >> b) & 1) << (3 - b);
    const uint64_t x = pow_mod(ctx->psi(), 2 * rev + 1, q);
    uint64_t acc = 0;
    for (size_t j = coeffs.size(); j-- > 0;) acc = add_mod(mul_mod(acc, x, q), coeffs[j], q);
    CHECK(a.values()[i] == acc);
  }
}

TEST_CASE("wht hand example mod 17") {
  const auto ctx = make_context(17, 1, {2});
  PolyVec a(ctx, {3, 2});
  wht_forward(a);
  CHECK(a.values() == std::vector<uint64_t>{15, 8});
  PolyVec p = pointwise_mul(a, a);
  CHECK(p.values() == std::vector<uint64_t>{4, 13});
  wht_inverse(p);
  CHECK(p.values() == std::vector<uint64_t>{0, 12});
}

TEST_CASE("schoolbook reduction rules") {
  const auto cyc = make_context(17, 4, {});
  const PolyVec x3 = PolyVec::monomial(cyc, 3, 0);
  const PolyVec x = PolyVec::monomial(cyc, 1, 0);
  CHECK(schoolbook_mul(x3, x).values() == std::vector<uint64_t>{16, 0, 0, 0});
  std::mt19937_64 rng(5);
  const PolyVec a = PolyVec::random(cyc, rng);
  CHECK(schoolbook_mul(a, PolyVec::monomial(cyc, 0, 0)) == a);

  const auto mq = make_context(17, 1, {2});
  const PolyVec x1 = PolyVec::monomial(mq, 0, 1);
  CHECK(schoolbook_mul(x1, x1).values() == std::vector<uint64_t>{2, 0});

  const auto neg = make_context(17, 1, {2}, QuadRelation::kSquareIsMinusD);
  const PolyVec y1 = PolyVec::monomial(neg, 0, 1);
  CHECK(schoolbook_mul(y1, y1).values() == std::vector<uint64_t>{15, 0});
}

void CheckRoundTripAndHomomorphism(const std::shared_ptr<const RingContext>& ctx,
                                   int pairs, std::mt19937_64& rng) {
  for (int t = 0; t < pairs; ++t) {
    const PolyVec a = PolyVec::random(ctx, rng);
    const PolyVec b = PolyVec::random(ctx, rng);
    PolyVec fa = a;
    PolyVec fb = b;
    forward(fa);
    forward(fb);
    PolyVec back = fa;
    inverse(back);
    REQUIRE(back == a);
    PolyVec prod = pointwise_mul(fa, fb);
    inverse(prod);
    REQUIRE(prod == schoolbook_mul(a, b));
  }
}

TEST_CASE("round trip and homomorphism for every transform family") {
  std::mt19937_64 rng(11);
  for (uint64_t mc : {2, 4, 8, 16, 64, 128}) {
    CAPTURE(mc);
    CheckRoundTripAndHomomorphism(Context(mc, 0), 100, rng);
  }
  for (size_t r : {1, 2, 3, 4, 6, 7}) {
    CAPTURE(r);
    CheckRoundTripAndHomomorphism(Context(1, r), 100, rng);
    CheckRoundTripAndHomomorphism(Context(1, r, QuadRelation::kSquareIsMinusD), 20, rng);
  }
  for (auto [mc, r] : std::vector<std::pair<uint64_t, size_t>>{
           {2, 1}, {4, 2}, {2, 3}, {8, 1}, {16, 2}, {4, 4}, {8, 3}, {32, 2}}) {
    CAPTURE(mc);
    CAPTURE(r);
    CheckRoundTripAndHomomorphism(Context(mc, r), 100, rng);
    CheckRoundTripAndHomomorphism(Context(mc, r, QuadRelation::kSquareIsMinusD), 20, rng);
  }
}

TEST_CASE("wht round trip up to r = 10") {
  std::mt19937_64 rng(13);
  for (size_t r = 1; r <= 10; ++r) {
    const auto ctx = Context(1, r);
    for (int t = 0; t < 5; ++t) {
      const PolyVec a = PolyVec::random(ctx, rng);
      PolyVec b = a;
      wht_forward(b);
      wht_inverse(b);
      CHECK(b == a);
    }
  }
}

TEST_CASE("counted multiplications match the closed forms") {
  std::mt19937_64 rng(17);
  for (int u = 1; u <= 10; ++u) {
    const uint64_t mc = uint64_t{1} << u;
    const auto ctx = Context(mc, 0);
    PolyVec a = PolyVec::random(ctx, rng);
    ntt_forward(a);
    CHECK(ctx->count_report().muls == mc / 2 * u);
    CHECK(ctx->count_report().adds == mc * u);
    ctx->reset_counter();
    ntt_inverse(a);
    CHECK(ctx->count_report().muls == mc / 2 * u + mc);
    ctx->reset_counter();
  }
  {
    const auto ctx = Context(8, 0);
    PolyVec a = PolyVec::random(ctx, rng);
    ntt_forward(a);
    CHECK(count_report(*ctx).muls == 12);
  }
  for (size_t r = 1; r <= 10; ++r) {
    const auto ctx = Context(1, r);
    PolyVec a = PolyVec::random(ctx, rng);
    wht_forward(a);
    const OpCount c = ctx->count_report();
    CHECK(c.muls <= (uint64_t{1} << r));
    CHECK(c.muls == (uint64_t{1} << r));
    CHECK(c.adds == r * (uint64_t{1} << r));
    ctx->reset_counter();
  }
  for (int u = 1; u <= 6; ++u) {
    for (size_t r = 1; r <= 5; ++r) {
      const uint64_t mc = uint64_t{1} << u;
      const uint64_t m = mc << r;
      const auto ctx = Context(mc, r);
      PolyVec a = PolyVec::random(ctx, rng);
      hybrid_forward(a);
      CHECK(ctx->count_report().muls == m / 2 * u + m);
      ctx->reset_counter();
      hybrid_inverse(a);
      CHECK(ctx->count_report().muls == m / 2 * u + m);
      ctx->reset_counter();
    }
  }
  const auto h = Context(4, 2);
  PolyVec a = PolyVec::random(h, rng);
  hybrid_forward(a);
  CHECK(h->count_report().muls == 32);
  PolyVec b = a;
  pointwise_mul(a, b);
  CHECK(h->count_report().muls == 48);
}

TEST_CASE("domain and shape errors") {
  const auto cyc = make_context(17, 4, {});
  PolyVec a = PolyVec::zero(cyc);
  CHECK_THROWS_AS(ntt_inverse(a), std::invalid_argument);
  CHECK_THROWS_AS(wht_forward(a), std::invalid_argument);
  CHECK_THROWS_AS(hybrid_forward(a), std::invalid_argument);
  CHECK_THROWS_AS(pointwise_mul(a, a), std::invalid_argument);
  CHECK_THROWS_AS(PolyVec(cyc, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PolyVec(cyc, {1, 2, 3, 17}), std::invalid_argument);
  const auto mq = make_context(17, 1, {2});
  PolyVec b = PolyVec::zero(mq);
  CHECK_THROWS_AS(ntt_forward(b), std::invalid_argument);
}

TEST_CASE("fault injection breaks the round trip") {
  const uint64_t q = FindPrime(32, {});
  auto ctx = std::make_shared<RingContext>(q, 16, std::vector<uint64_t>{});
  ctx->inject_twiddle_fault();
  std::shared_ptr<const RingContext> c = ctx;
  std::mt19937_64 rng(19);
  const PolyVec a = PolyVec::random(c, rng);
  PolyVec b = a;
  ntt_forward(b);
  ntt_inverse(b);
  CHECK_FALSE(b == a);
}

TEST_CASE("clone carries the tables with a fresh counter") {
  const auto ctx = Context(8, 2);
  std::mt19937_64 rng(23);
  PolyVec a = PolyVec::random(ctx, rng);
  hybrid_forward(a);
  const auto copy = ctx->clone();
  CHECK(copy->count_report() == OpCount{0, 0});
  CHECK(copy->psi() == ctx->psi());
  CHECK(copy->quad_roots() == ctx->quad_roots());
}

}  // namespace
}  // namespace cyclomq
