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

#include "cyclomq/numtheory.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclomq {

namespace {

constexpr uint64_t kSieveLimit = 1000000;

// Smallest prime factor for every integer up to kSieveLimit.
const std::vector<uint32_t>& SmallestPrimeFactors() {
  static const std::vector<uint32_t> spf = [] {
    std::vector<uint32_t> table(kSieveLimit + 1, 0);
    for (uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (table[i] != 0) continue;
      table[i] = static_cast<uint32_t>(i);
      for (uint64_t j = i * i; j <= kSieveLimit; j += i) {
        if (table[j] == 0) table[j] = static_cast<uint32_t>(i);
      }
    }
    return table;
  }();
  return spf;
}

const std::vector<uint64_t>& SievePrimes() {
  static const std::vector<uint64_t> primes = [] {
    const auto& spf = SmallestPrimeFactors();
    std::vector<uint64_t> out;
    for (uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (spf[i] == i) out.push_back(i);
    }
    return out;
  }();
  return primes;
}

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

struct Int64Overflow {};

// Coefficient arithmetic shared by the int64 fast path and the BigInt path.
inline void SubMul(int64_t& acc, int64_t q, int64_t d) {
  int64_t prod;
  if (__builtin_mul_overflow(q, d, &prod) ||
      __builtin_sub_overflow(acc, prod, &acc)) {
    throw Int64Overflow{};
  }
}
inline void SubMul(BigInt& acc, const BigInt& q, const BigInt& d) {
  acc -= q * d;
}
inline void Sub(int64_t& acc, int64_t v) {
  if (__builtin_sub_overflow(acc, v, &acc)) throw Int64Overflow{};
}
inline void Sub(BigInt& acc, const BigInt& v) { acc -= v; }
inline void Add(int64_t& acc, int64_t v) {
  if (__builtin_add_overflow(acc, v, &acc)) throw Int64Overflow{};
}
inline void Add(BigInt& acc, const BigInt& v) { acc += v; }

// Quotient of num by the monic polynomial den; the remainder must vanish.
template <typename T>
std::vector<T> DivideMonic(std::vector<T> num, const std::vector<T>& den) {
  const size_t b = den.size() - 1;
  const size_t qdeg = num.size() - 1 - b;
  std::vector<std::pair<size_t, T>> lower;
  for (size_t j = 0; j < b; ++j) {
    if (den[j] != 0) lower.emplace_back(j, den[j]);
  }
  std::vector<T> quot(qdeg + 1, T(0));
  for (size_t i = qdeg + 1; i-- > 0;) {
    const T q = num[i + b];
    quot[i] = q;
    if (q == 0) continue;
    for (const auto& [j, dj] : lower) SubMul(num[i + j], q, dj);
  }
  for (size_t j = 0; j < b; ++j) {
    if (num[j] != 0) {
      throw std::domain_error("polynomial division is not exact");
    }
  }
  return quot;
}

template <typename T>
std::vector<T> SquarefreeCyclotomic(const std::vector<uint64_t>& primes) {
  std::vector<T> phi = {T(-1), T(1)};
  for (uint64_t p : primes) {
    std::vector<T> num((phi.size() - 1) * p + 1, T(0));
    for (size_t i = 0; i < phi.size(); ++i) num[i * p] = phi[i];
    phi = DivideMonic(std::move(num), phi);
  }
  return phi;
}

// First `keep` coefficients of prod_{d | n} (1 - x^d)^{mu(n/d)}, n > 1.
template <typename T>
std::vector<T> MobiusProduct(const Conductor& n, size_t keep) {
  std::vector<T> c(keep, T(0));
  c[0] = T(1);
  std::vector<uint64_t> up, down;
  for (uint64_t d : divisors(n)) {
    const int mu = mobius(n.n() / d);
    if (mu > 0) up.push_back(d);
    if (mu < 0) down.push_back(d);
  }
  for (uint64_t d : up) {
    for (size_t i = keep; i-- > d;) Sub(c[i], c[i - d]);
  }
  for (uint64_t d : down) {
    for (size_t i = d; i < keep; ++i) Add(c[i], c[i - d]);
  }
  return c;
}

template <typename T>
IntPolynomial ToPolynomial(const std::vector<T>& coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if constexpr (std::is_same_v<T, int64_t>) {
      out.emplace_back(static_cast<long>(c));
    } else {
      out.push_back(c);
    }
  }
  return IntPolynomial(std::move(out));
}

BigInt MaxAbs(const std::vector<int64_t>& c) {
  int64_t best = 0;
  for (int64_t v : c) best = std::max(best, v < 0 ? -v : v);
  return BigInt(static_cast<long>(best));
}

BigInt MaxAbs(const std::vector<BigInt>& c) {
  BigInt best = 0;
  for (const auto& v : c) {
    BigInt a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace

uint64_t PrimePower::value() const {
  uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

Conductor::Conductor(uint64_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  uint64_t rest = n;
  auto take = [&](uint64_t p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors_.push_back({p, e});
  };
  if (n <= kSieveLimit) {
    const auto& spf = SmallestPrimeFactors();
    while (rest > 1) take(spf[rest]);
  } else {
    for (uint64_t p : SievePrimes()) {
      if (p * p > rest) break;
      if (rest % p == 0) take(p);
    }
    if (rest > 1) {
      if (rest > kSieveLimit * kSieveLimit && !is_prime(rest)) {
        throw std::domain_error("conductor " + std::to_string(n) +
                                " has no prime factor below the sieve limit");
      }
      factors_.push_back({rest, 1});
    }
  }
  for (const auto& f : factors_) {
    phi_ *= (f.value() / f.prime) * (f.prime - 1);
    rad_ *= f.prime;
  }
}

std::vector<uint64_t> Conductor::primes() const {
  std::vector<uint64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::string Conductor::to_string() const {
  std::ostringstream os;
  os << n_ << " = ";
  if (factors_.empty()) os << "1";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].prime;
    if (factors_[i].exponent > 1) os << "^" << factors_[i].exponent;
  }
  return os.str();
}

Conductor factorize(uint64_t n) { return Conductor(n); }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
  if (limit <= kSieveLimit) {
    const auto& all = SievePrimes();
    return {all.begin(), std::upper_bound(all.begin(), all.end(), limit)};
  }
  std::vector<uint64_t> out = SievePrimes();
  for (uint64_t k = kSieveLimit + 1; k <= limit; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

int mobius(uint64_t n) {
  const Conductor c(n);
  if (!c.is_squarefree()) return 0;
  return c.omega() % 2 == 0 ? 1 : -1;
}

std::vector<uint64_t> divisors(const Conductor& n) {
  std::vector<uint64_t> out = {1};
  for (const auto& f : n.factors()) {
    const size_t base = out.size();
    uint64_t pk = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::from_int64(std::span<const int64_t> coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (int64_t c : coeffs) out.emplace_back(static_cast<long>(c));
  return IntPolynomial(std::move(out));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPolynomial::height() const { return MaxAbs(coeffs_); }

size_t IntPolynomial::weight() const {
  return static_cast<size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(),
                    [](const BigInt& c) { return c != 0; }));
}

IntPolynomial IntPolynomial::substitute_power(uint64_t k) const {
  if (k == 0) throw std::invalid_argument("substitution exponent must be >= 1");
  if (coeffs_.empty() || k == 1) return *this;
  std::vector<BigInt> out((coeffs_.size() - 1) * k + 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (!b.is_monic()) throw std::invalid_argument("divisor must be monic");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  return IntPolynomial(DivideMonic(a.coeffs(), b.coeffs()));
}

IntPolynomial binomial(uint64_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic_poly(uint64_t n) {
  const Conductor c(n);
  const auto primes = c.primes();
  IntPolynomial core;
  try {
    core = ToPolynomial(SquarefreeCyclotomic<int64_t>(primes));
  } catch (const Int64Overflow&) {
    core = ToPolynomial(SquarefreeCyclotomic<BigInt>(primes));
  }
  return core.substitute_power(n / c.rad());
}

IntPolynomial cyclotomic_poly_mobius(uint64_t n) {
  const Conductor c(n);
  if (n == 1) return binomial(1);
  const size_t keep = c.phi() + 1;
  try {
    return ToPolynomial(MobiusProduct<int64_t>(c, keep));
  } catch (const Int64Overflow&) {
    return ToPolynomial(MobiusProduct<BigInt>(c, keep));
  }
}

BigInt height(uint64_t n) {
  const Conductor c(n);
  const Conductor core(c.rad());
  if (core.n() <= 2) return 1;
  // Phi_r is palindromic for r >= 2, so half the coefficients suffice.
  const size_t keep = core.phi() / 2 + 1;
  try {
    return MaxAbs(MobiusProduct<int64_t>(core, keep));
  } catch (const Int64Overflow&) {
    return MaxAbs(MobiusProduct<BigInt>(core, keep));
  }
}

}  // namespace cyclomq
