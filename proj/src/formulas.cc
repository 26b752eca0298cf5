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
#include <limits>
#include <set>
#include <stdexcept>

namespace cyclomq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Largest decimal exponent reported as a finite double.
constexpr double kMaxLog10 = 308.0;

double Log10(const BigInt& z) {
  if (z <= 0) throw std::domain_error("log of a non-positive integer");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log10(mantissa) + static_cast<double>(exp) * std::log10(2.0);
}

double Log10(const BigRational& q) {
  return Log10(BigInt(q.get_num())) - Log10(BigInt(q.get_den()));
}

BigInt Pow(uint64_t base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

BigInt U64(uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BoundReport Report(uint64_t n, BoundKind kind) {
  BoundReport r;
  r.n = n;
  r.kind = kind;
  return r;
}

BoundReport NotApplicable(BoundReport r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
  r.value = kNaN;
  r.log10_value = kNaN;
  return r;
}

void SetFromLog10(BoundReport& r, double log10_value) {
  r.log10_value = log10_value;
  r.value = log10_value > kMaxLog10 ? std::numeric_limits<double>::infinity()
                                    : std::pow(10.0, log10_value);
}

void SetExact(BoundReport& r, Surd s) {
  const double lg = s.log10();
  if (lg > kMaxLog10) {
    SetFromLog10(r, lg);
  } else {
    r.value = static_cast<double>(s.value());
    r.log10_value = std::log10(r.value);
  }
  r.exact = std::move(s);
}

void SetValue(BoundReport& r, long double v) {
  r.value = static_cast<double>(v);
  r.log10_value = static_cast<double>(std::log10(v));
}

void RequireConductor(const Conductor& n) {
  if (n.n() < 2) throw std::invalid_argument("conductor must be at least 2");
}

void RequirePrime(uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

// prod_{p | n} (1 - 1/p) as an exact rational.
BigRational EulerProduct(const Conductor& n) {
  BigRational out = 1;
  for (uint64_t p : n.primes()) out *= BigRational(U64(p - 1), U64(p));
  return out;
}

Surd QuadraticSurd(uint64_t p) {
  // ||V_p||^2 / |det V_p|, with det = -sqrt(p) or -2 sqrt(p).
  Surd s;
  s.radicand = BigRational(1, U64(p));
  s.coefficient = p % 4 == 1 ? BigRational(U64(p + 5), 2) : BigRational(U64(p + 1));
  s.coefficient.canonicalize();
  return s;
}

}  // namespace

long double Surd::value() const {
  const long double c = static_cast<long double>(coefficient.get_d());
  const long double r = static_cast<long double>(radicand.get_d());
  return c * std::sqrt(r);
}

double Surd::log10() const {
  if (coefficient == 0 || radicand == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  return Log10(BigRational(abs(coefficient))) + 0.5 * Log10(radicand);
}

Surd Surd::operator*(const Surd& other) const {
  Surd out;
  out.coefficient = coefficient * other.coefficient;
  out.radicand = radicand * other.radicand;
  return out;
}

std::string Surd::to_string() const {
  std::string out = coefficient.get_str();
  if (radicand != 1) out += " * sqrt(" + radicand.get_str() + ")";
  return out;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExactClosed:
      return "ExactClosed";
    case BoundKind::kExactTwisted:
      return "ExactTwisted";
    case BoundKind::kExactQuadratic:
      return "ExactQuadratic";
    case BoundKind::kExactCycloMQ:
      return "ExactCycloMQ";
    case BoundKind::kBoundGeneral:
      return "BoundGeneral";
    case BoundKind::kBoundRefined:
      return "BoundRefined";
    case BoundKind::kBoundQuadratic:
      return "BoundQuadratic";
    case BoundKind::kBoundCycloMQ:
      return "BoundCycloMQ";
    case BoundKind::kBoundHybrid:
      return "BoundHybrid";
    case BoundKind::kBoundHeight:
      return "BoundHeight";
  }
  return "Unknown";
}

bool BoundReport::overflow() const { return applicable && std::isinf(value); }

void validate_quad_primes(const Conductor& n, std::span<const uint64_t> primes) {
  std::set<uint64_t> seen;
  for (uint64_t p : primes) {
    RequirePrime(p);
    if (n.divisible_by(p)) {
      throw std::invalid_argument("quadratic prime " + std::to_string(p) +
                                  " divides the conductor " +
                                  std::to_string(n.n()));
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("quadratic prime " + std::to_string(p) +
                                  " repeated");
    }
  }
}

BoundReport cond_exact_prime_power(const Conductor& n) {
  BoundReport r = Report(n.n(), BoundKind::kExactClosed);
  RequireConductor(n);
  const auto primes = n.primes();
  uint64_t p = 0;
  if (primes.size() == 1) {
    p = primes[0];
  } else if (primes.size() == 2 && primes[0] == 2) {
    p = primes[1];
  } else {
    return NotApplicable(std::move(r),
                         "closed form needs n = p^k or n = 2^k p^l");
  }
  Surd s;
  s.coefficient = U64(n.phi());
  s.radicand = BigRational(U64(2 * (p - 1)), U64(p));
  s.radicand.canonicalize();
  SetExact(r, std::move(s));
  return r;
}

BoundReport cond_exact_twisted(const Conductor& n) {
  BoundReport r = Report(n.n(), BoundKind::kExactTwisted);
  RequireConductor(n);
  Surd s;
  s.coefficient = U64(n.phi());
  s.radicand = EulerProduct(n) * BigRational(Pow(2, n.omega()));
  s.radicand.canonicalize();
  SetExact(r, std::move(s));
  return r;
}

BoundReport cond_bound_general(const Conductor& n, const BigInt& height) {
  BoundReport r = Report(n.n(), BoundKind::kBoundGeneral);
  RequireConductor(n);
  if (height <= 0) throw std::invalid_argument("height must be positive");
  const int k = n.omega();
  const unsigned long exponent = (1UL << k) + k + 2;
  Surd s;
  s.coefficient = BigRational(2 * U64(n.rad()) * Pow(n.n(), exponent) * height);
  SetExact(r, std::move(s));
  return r;
}

int refined_exponent(int omega) {
  switch (omega) {
    case 1:
      return 0;
    case 2:
      return 1;
    case 3:
      return 2;
    case 4:
      return 4;
    case 5:
      return 7;
    case 6:
      return 11;
  }
  throw std::invalid_argument("refined bound covers 1 <= omega <= 6");
}

BoundReport cond_bound_refined(const Conductor& n) {
  BoundReport r = Report(n.n(), BoundKind::kBoundRefined);
  RequireConductor(n);
  if (n.omega() > 6) {
    return NotApplicable(std::move(r), "refined bound covers omega(n) <= 6");
  }
  const uint64_t phi_rad = Conductor(n.rad()).phi();
  const BigInt m = U64(n.phi());
  Surd s;
  s.coefficient =
      BigRational(4 * Pow(phi_rad, refined_exponent(n.omega())) * m * m);
  SetExact(r, std::move(s));
  return r;
}

BoundReport cond_quadratic(uint64_t p) {
  RequirePrime(p);
  BoundReport r = Report(0, BoundKind::kExactQuadratic);
  r.quad_primes = {p};
  SetExact(r, QuadraticSurd(p));
  return r;
}

BoundReport cond_bound_quadratic(uint64_t p) {
  RequirePrime(p);
  BoundReport r = Report(0, BoundKind::kBoundQuadratic);
  r.quad_primes = {p};
  SetValue(r, 2 + std::sqrt(static_cast<long double>(p)));
  return r;
}

BoundReport cond_bound_cyclomq(const Conductor& n,
                               std::span<const uint64_t> primes) {
  RequireConductor(n);
  validate_quad_primes(n, primes);
  BoundReport r = Report(n.n(), BoundKind::kBoundCycloMQ);
  r.quad_primes.assign(primes.begin(), primes.end());
  long double v = static_cast<long double>(n.phi()) *
                  std::pow(2.0L, static_cast<long double>(n.omega()) / 2);
  for (uint64_t p : primes) v *= 2 + std::sqrt(static_cast<long double>(p));
  SetValue(r, v);
  return r;
}

BoundReport cond_exact_cyclomq_twisted(const Conductor& n,
                                       std::span<const uint64_t> primes) {
  RequireConductor(n);
  validate_quad_primes(n, primes);
  BoundReport r = Report(n.n(), BoundKind::kExactCycloMQ);
  r.quad_primes.assign(primes.begin(), primes.end());
  Surd s = *cond_exact_twisted(n).exact;
  for (uint64_t p : primes) s = s * QuadraticSurd(p);
  s.coefficient.canonicalize();
  s.radicand.canonicalize();
  SetExact(r, std::move(s));
  return r;
}

BoundReport height_bound_56(const Conductor& n) {
  BoundReport r = Report(n.n(), BoundKind::kBoundHeight);
  const auto ps = n.primes();
  Surd s;
  switch (ps.size()) {
    case 4: {
      // p (p - 1) (p q - 1)
      s.coefficient =
          BigRational(U64(ps[0]) * U64(ps[0] - 1) * U64(ps[0] * ps[1] - 1));
      break;
    }
    case 5:
      s.coefficient = BigRational(
          135 * Pow(ps[0], 7) * Pow(ps[1], 3) * U64(ps[2]), 512);
      break;
    case 6:
      s.coefficient = BigRational(18225 * Pow(ps[0], 15) * Pow(ps[1], 7) *
                                      Pow(ps[2], 3) * U64(ps[3]),
                                  262144);
      break;
    default:
      return NotApplicable(std::move(r),
                           "height bound covers 4 <= omega(n) <= 6");
  }
  s.coefficient.canonicalize();
  SetExact(r, std::move(s));
  return r;
}

double omega_upper_bound(uint64_t n) {
  if (n < 3) throw std::invalid_argument("omega bound needs n >= 3");
  const double ln = std::log(static_cast<double>(n));
  return 1.3841 * ln / std::log(ln);
}

BoundReport hybrid_bound(const Conductor& n, std::span<const uint64_t> primes) {
  RequireConductor(n);
  validate_quad_primes(n, primes);
  BoundReport r = Report(n.n(), BoundKind::kBoundHybrid);
  r.quad_primes.assign(primes.begin(), primes.end());
  const BoundReport refined = cond_bound_refined(n);
  if (!refined.applicable) {
    return NotApplicable(std::move(r), refined.reason);
  }
  if (refined.overflow()) {
    double lg = refined.log10_value;
    for (uint64_t p : primes) lg += cond_bound_quadratic(p).log10_value;
    SetFromLog10(r, lg);
  } else {
    long double v = static_cast<long double>(refined.exact->value());
    for (uint64_t p : primes) v *= 2 + std::sqrt(static_cast<long double>(p));
    SetValue(r, v);
  }
  const int omega = n.omega();
  r.growth_exponent = omega <= 3 ? 1 + omega : omega == 4 ? 6 : omega == 5 ? 9 : 13;
  return r;
}

}  // namespace cyclomq
