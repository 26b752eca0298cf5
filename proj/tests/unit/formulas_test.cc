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

#include "cyclomq/formulas.h"

#include <cmath>

#include "cyclomq/embeddings.h"
#include "doctest.h"

namespace cyclomq {
namespace {

double Rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST_CASE("closed form for prime powers and 2^k p^l") {
  CHECK(cond_exact_prime_power(Conductor(16)).value == 8.0);
  CHECK(cond_exact_prime_power(Conductor(16)).exact->radicand == 1);
  CHECK(Rel(cond_exact_prime_power(Conductor(3)).value, 2 * std::sqrt(4.0 / 3)) < 1e-15);
  CHECK(Rel(cond_exact_prime_power(Conductor(12)).value, 4 * std::sqrt(4.0 / 3)) < 1e-15);
  const auto r = cond_exact_prime_power(Conductor(15));
  CHECK_FALSE(r.applicable);
  CHECK(std::isnan(r.value));
  CHECK_FALSE(r.reason.empty());
  CHECK_FALSE(cond_exact_prime_power(Conductor(45)).applicable);
  CHECK(cond_exact_prime_power(Conductor(36)).applicable);
}

TEST_CASE("twisted closed form") {
  for (int k = 1; k <= 12; ++k) {
    const uint64_t n = uint64_t{1} << k;
    CHECK(cond_exact_twisted(Conductor(n)).value == double(n / 2));
  }
  CHECK(Rel(cond_exact_twisted(Conductor(12)).value, 8 / std::sqrt(3.0)) < 1e-15);
  const double v105 = 48 * std::pow(std::sqrt(2.0), 3) *
                      std::sqrt((2.0 / 3) * (4.0 / 5) * (6.0 / 7));
  CHECK(Rel(cond_exact_twisted(Conductor(105)).value, v105) < 1e-15);
  CHECK(cond_exact_twisted(Conductor(105)).value == doctest::Approx(91.79).epsilon(1e-3));
  EmbeddingSpec spec{Conductor(105), {}, Basis::kTwisted};
  CHECK(Rel(numeric_cond(spec), v105) < 1e-9);
}

TEST_CASE("general bound") {
  CHECK(cond_bound_general(Conductor(3), 1).value == 1458.0);
  CHECK(cond_bound_general(Conductor(8), 1).value == 131072.0);
  // omega = 6 pushes the exponent to 72.
  const auto big = cond_bound_general(Conductor(30030), 1);
  CHECK(big.overflow());
  const double lg = std::log10(2.0 * 30030) + 72 * std::log10(30030.0);
  CHECK(std::abs(big.log10_value - lg) < 1e-9);
  CHECK_THROWS_AS(cond_bound_general(Conductor(3), 0), std::invalid_argument);
}

TEST_CASE("refined bound") {
  CHECK(cond_bound_refined(Conductor(8)).value == 64.0);
  CHECK(cond_bound_refined(Conductor(12)).value == 128.0);
  CHECK(cond_bound_refined(Conductor(1155)).value == 4 * std::pow(480.0, 6));
  CHECK(cond_bound_refined(Conductor(30030)).applicable);
  CHECK_FALSE(cond_bound_refined(Conductor(510510)).applicable);
  CHECK(refined_exponent(5) == 7);
  CHECK_THROWS_AS(refined_exponent(7), std::invalid_argument);
}

TEST_CASE("quadratic fields") {
  CHECK(Rel(cond_quadratic(2).value, 3 / std::sqrt(2.0)) < 1e-15);
  CHECK(Rel(cond_quadratic(5).value, std::sqrt(5.0)) < 1e-15);
  CHECK(Rel(cond_quadratic(3).value, std::sqrt(3.0) + 1 / std::sqrt(3.0)) < 1e-15);
  CHECK(Rel(cond_bound_quadratic(2).value, 2 + std::sqrt(2.0)) < 1e-15);
  CHECK(Rel(cond_bound_quadratic(97).value, 11.848857801796104) < 1e-12);
  for (uint64_t p : primes_up_to(10000)) {
    CHECK(cond_bound_quadratic(p).value >= cond_quadratic(p).value);
  }
  CHECK_THROWS_AS(cond_quadratic(4), std::invalid_argument);
}

TEST_CASE("cyclo-multiquadratic formulas") {
  const std::vector<uint64_t> three{3};
  CHECK(Rel(cond_bound_cyclomq(Conductor(4), three).value,
            2 * std::sqrt(2.0) * (2 + std::sqrt(3.0))) < 1e-15);
  CHECK(Rel(cond_bound_cyclomq(Conductor(4), {}).value, 2 * std::sqrt(2.0)) < 1e-15);
  CHECK(Rel(cond_exact_cyclomq_twisted(Conductor(4), three).value,
            2 * (std::sqrt(3.0) + 1 / std::sqrt(3.0))) < 1e-15);
  const std::vector<uint64_t> two{2};
  CHECK_THROWS_AS(cond_exact_cyclomq_twisted(Conductor(4), two), std::invalid_argument);
  const std::vector<uint64_t> ps{3, 5};
  const auto r = cond_exact_cyclomq_twisted(Conductor(8), ps);
  CHECK(Rel(r.value, 20.65591117977289) < 1e-14);
  EmbeddingSpec spec{Conductor(8), ps, Basis::kTwisted};
  CHECK(Rel(numeric_cond(spec), r.value) < 1e-9);
}

TEST_CASE("height bounds") {
  const auto h4 = height_bound_56(Conductor(1155));
  CHECK(h4.value == 84.0);
  CHECK(h4.value >= height(1155).get_d());
  const auto h5 = height_bound_56(Conductor(15015));
  CHECK(h5.exact->coefficient == BigRational(135 * 2187 * 125 * 7, 512));
  const auto h6 = height_bound_56(Conductor(255255));
  BigRational expect(BigInt(18225) * 14348907 * 78125 * 343 * 11, 262144);
  expect.canonicalize();
  CHECK(h6.exact->coefficient == expect);
  CHECK_FALSE(height_bound_56(Conductor(105)).applicable);
}

TEST_CASE("omega upper bound") {
  CHECK(omega_upper_bound(30) == doctest::Approx(3.87).epsilon(1e-2));
  CHECK(omega_upper_bound(210) == doctest::Approx(4.41).epsilon(1e-2));
  CHECK(omega_upper_bound(3) == doctest::Approx(16.1).epsilon(1e-2));
  for (uint64_t n = 3; n <= 100000; ++n) {
    CHECK(Conductor(n).omega() <= omega_upper_bound(n));
  }
  CHECK_THROWS_AS(omega_upper_bound(2), std::invalid_argument);
}

TEST_CASE("hybrid bound") {
  const std::vector<uint64_t> three{3};
  const auto a = hybrid_bound(Conductor(8), three);
  CHECK(Rel(a.value, 64 * (2 + std::sqrt(3.0))) < 1e-15);
  CHECK(a.growth_exponent == 2);
  const std::vector<uint64_t> five{5};
  const auto b = hybrid_bound(Conductor(12), five);
  CHECK(b.value == doctest::Approx(542.2).epsilon(1e-3));
  CHECK(b.growth_exponent == 3);
  CHECK(hybrid_bound(Conductor(1155), {}).growth_exponent == 6);
  CHECK(hybrid_bound(Conductor(15015), {}).growth_exponent == 9);
  CHECK(hybrid_bound(Conductor(255255), {}).growth_exponent == 13);
  CHECK_FALSE(hybrid_bound(Conductor(9699690), {}).applicable);
  for (auto [n, ps] : std::vector<std::pair<uint64_t, std::vector<uint64_t>>>{
           {8, {3}}, {12, {5}}, {15, {2, 7}}, {20, {3}}}) {
    EmbeddingSpec spec{Conductor(n), ps, Basis::kHybrid};
    CHECK(numeric_cond(spec) <= hybrid_bound(Conductor(n), ps).value);
  }
}

TEST_CASE("dominance chain for small conductors") {
  for (uint64_t n = 2; n <= 120; ++n) {
    const Conductor c(n);
    const double numeric = numeric_cond(EmbeddingSpec{c, {}, Basis::kPower});
    const auto refined = cond_bound_refined(c);
    const auto general = cond_bound_general(c, height(n));
    CHECK_MESSAGE(numeric <= refined.value, "n = " << n);
    CHECK_MESSAGE(refined.value <= general.value, "n = " << n);
  }
}

TEST_CASE("surd helpers") {
  Surd a{2, BigRational(3)};
  Surd b{BigRational(1, 2), BigRational(1, 3)};
  CHECK((a * b).value() == doctest::Approx(1.0));
  CHECK(a.to_string() == "2 * sqrt(3)");
  CHECK(to_string(BoundKind::kBoundRefined) == "BoundRefined");
}

}  // namespace
}  // namespace cyclomq
