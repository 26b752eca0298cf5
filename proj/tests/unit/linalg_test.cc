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

#include "cyclomq/linalg.h"

#include <cmath>
#include <numbers>
#include <random>

#include "cyclomq/embeddings.h"
#include "doctest.h"
#include "oracles.h"

namespace cyclomq {
namespace {

using C = std::complex<double>;
const C kI(0, 1);

ComplexMatrix Random(size_t r, size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (auto& z : m.entries()) z = {g(rng), g(rng)};
  return m;
}

double MaxDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

oracle::CMat ToNested(const ComplexMatrix& a) {
  oracle::CMat out(a.rows(), std::vector<C>(a.cols()));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

TEST_CASE("frobenius examples") {
  CHECK(frobenius(ComplexMatrix::identity(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius(ComplexMatrix{{1, kI}, {1, -kI}}) == doctest::Approx(2.0));
  CHECK(frobenius(ComplexMatrix(3, 3)) == 0.0);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto a = Random(2, 3, rng);
    const auto b = Random(3, 2, rng);
    CHECK(frobenius(kronecker(a, b)) ==
          doctest::Approx(frobenius(a) * frobenius(b)).epsilon(1e-13));
  }
}

TEST_CASE("kronecker identities") {
  CHECK(MaxDiff(kronecker(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                ComplexMatrix::identity(4)) == 0.0);
  std::mt19937_64 rng(2);
  for (size_t n : {2, 3}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = Random(n, n, rng), b = Random(n, n, rng);
      const auto c = Random(n, n, rng), d = Random(n, n, rng);
      const auto lhs = kronecker(a, b) * kronecker(c, d);
      const auto rhs = kronecker(a * c, b * d);
      CHECK(MaxDiff(lhs, rhs) <= 1e-12 * std::max(1.0, rhs.max_abs()));
    }
  }
  for (int t = 0; t < 20; ++t) {
    const auto a = Random(2, 2, rng), b = Random(2, 2, rng);
    const auto ia = ToNested(invert(a));
    const auto oa = oracle::inverse2(ToNested(a));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(ia[i][j] - oa[i][j]) < 1e-10 * std::abs(oa[i][j]) + 1e-14);
    const auto lhs = invert(kronecker(a, b));
    const auto rhs = kronecker(invert(a), invert(b));
    CHECK(MaxDiff(lhs, rhs) <= 1e-9 * rhs.max_abs());
    CHECK(condition_number(kronecker(a, b)) ==
          doctest::Approx(condition_number(a) * condition_number(b)).epsilon(1e-10));
  }
}

TEST_CASE("invert examples") {
  CHECK(MaxDiff(invert(ComplexMatrix::identity(5)), ComplexMatrix::identity(5)) == 0.0);
  const ComplexMatrix h{{1, 1}, {1, -1}};
  CHECK(MaxDiff(invert(h), ComplexMatrix{{0.5, 0.5}, {0.5, -0.5}}) < 1e-15);
  const ComplexMatrix d{{2, 0}, {0, 4}};
  CHECK(MaxDiff(invert(d), ComplexMatrix{{0.5, 0}, {0, 0.25}}) == 0.0);
  const ComplexMatrix s{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(invert(s), SingularMatrixError);
  CHECK_THROWS_AS(invert(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("invert residual scales with the condition number") {
  std::mt19937_64 rng(3);
  const double u = std::numeric_limits<double>::epsilon();
  for (size_t n : {4, 16, 40}) {
    const auto a = Random(n, n, rng);
    const auto inv = invert(a);
    const double cond = condition_number(a, inv);
    const auto res = a * inv - ComplexMatrix::identity(n);
    CHECK(res.max_abs() <= 1e8 * cond * u);
    CHECK(cond >= static_cast<double>(n) * (1 - 1e-12));
  }
}

TEST_CASE("vandermonde examples") {
  CHECK(MaxDiff(vandermonde(RootSet<double>({1})), ComplexMatrix{{1}}) == 0.0);
  CHECK(MaxDiff(vandermonde(RootSet<double>({1, -1})), ComplexMatrix{{1, 1}, {1, -1}}) == 0.0);
  const C z = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(MaxDiff(vandermonde(RootSet<double>({z, z * z})), ComplexMatrix{{1, z}, {1, z * z}}) < 1e-15);
  CHECK_THROWS_AS(RootSet<double>({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootSet<double>({kI, kI * (1 + 1e-14)}), std::invalid_argument);
}

TEST_CASE("explicit inverse examples") {
  const auto w = vandermonde_inverse_explicit(RootSet<double>({1, -1}));
  CHECK(w(0, 0) == C(0.5));
  CHECK(MaxDiff(w, ComplexMatrix{{0.5, 0.5}, {0.5, -0.5}}) < 1e-15);
  const auto w4 = vandermonde_inverse_explicit(RootSet<double>({kI, -kI}));
  for (const auto& e : w4.entries()) CHECK(std::abs(e) == doctest::Approx(0.5));
  const auto expect = oracle::inverse2(ToNested(ComplexMatrix{{1, kI}, {1, -kI}}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(w4(i, j) - expect[i][j]) < 1e-15);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (size_t m : {1, 2, 5, 9}) {
    std::vector<C> r;
    for (size_t i = 0; i < m; ++i) r.emplace_back(g(rng), g(rng));
    const RootSet<double> roots(r);
    const auto prod = vandermonde(roots) * vandermonde_inverse_explicit(roots);
    CHECK(MaxDiff(prod, ComplexMatrix::identity(m)) < 1e-9);
  }
}

TEST_CASE("explicit inverse agrees with LU per entry on cyclotomic roots") {
  for (uint64_t n : {3, 12, 105, 210, 255, 385, 512, 1155}) {
    const Conductor c(n);
    const auto roots = cyclotomic_roots<double>(c);
    const auto e = vandermonde_inverse_explicit(roots);
    const auto l = invert(vandermonde(roots));
    double worst = 0;
    for (size_t i = 0; i < e.entries().size(); ++i) {
      worst = std::max(worst, std::abs(e.entries()[i] - l.entries()[i]) /
                                  std::abs(l.entries()[i]));
    }
    CHECK_MESSAGE(worst <= 1e-8, "n = " << n << " worst = " << worst);
  }
}

TEST_CASE("condition number examples") {
  CHECK(condition_number(ComplexMatrix::identity(6)) == doctest::Approx(6.0));
  CHECK(condition_number(cyclotomic_vandermonde<double>(Conductor(3))) ==
        doctest::Approx(4 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(condition_number(ComplexMatrix{{1, kI}, {1, -kI}}) == doctest::Approx(2.0));
}

TEST_CASE("precision names") {
  CHECK(parse_precision("double") == Precision::kDouble);
  CHECK(parse_precision("extended") == Precision::kExtended);
  CHECK(to_string(Precision::kExtended) == "extended");
  CHECK_THROWS_AS(parse_precision("quad"), std::invalid_argument);
}

}  // namespace
}  // namespace cyclomq
