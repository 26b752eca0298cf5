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

#include "cyclomq/cli.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cyclomq/formulas.h"
#include "cyclomq/numtheory.h"
#include "cyclomq/ringarith.h"
#include "cyclomq/rns.h"

namespace cyclomq {

namespace {

constexpr size_t kMaxNumericCap = 4096;

std::string Join(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

std::string FormatReport(const BoundReport& r) {
  if (!r.applicable) return "";
  return format_value(r.value, r.log10_value);
}

std::string JoinPrimes(const std::vector<uint64_t>& ps, char sep) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ps[i]);
  }
  return out;
}

void WriteFile(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) throw std::invalid_argument("no output path given");
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::invalid_argument("cannot open " + path + " for writing");
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing " + path);
}

bool QuadPrimesValid(const Conductor& c, const std::vector<uint64_t>& primes) {
  for (uint64_t p : primes) {
    if (c.divisible_by(p)) return false;
  }
  return true;
}

}  // namespace

std::string format_value(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string format_value(double value, double log10_value) {
  if (std::isnan(value)) return "";
  if (std::isfinite(value)) return format_value(value);
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.11f", mantissa);
  if (buf[0] == '1' && buf[1] == '0') {
    // Rounded up to 10.
    exponent += 1;
    mantissa /= 10;
    std::snprintf(buf, sizeof(buf), "%.11f", mantissa);
  }
  return std::string(buf) + "e+" + std::to_string(static_cast<long long>(exponent));
}

void SweepConfig::validate() const {
  if (n_min < 2) throw std::invalid_argument("--min must be at least 2");
  if (n_min > n_max) throw std::invalid_argument("--min exceeds --max");
  if (omega_filter && (*omega_filter < 1 || *omega_filter > 6)) {
    throw std::invalid_argument("--omega must lie in 1..6");
  }
  if (numeric_cap > kMaxNumericCap) {
    throw std::invalid_argument("--numeric-cap is limited to 4096");
  }
  std::vector<uint64_t> seen;
  for (uint64_t p : quad_primes) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) {
      throw std::invalid_argument("quadratic prime " + std::to_string(p) + " repeated");
    }
    seen.push_back(p);
  }
}

void cmd_cond(const SweepConfig& config, std::ostream& out) {
  config.validate();
  const bool quad = !config.quad_primes.empty();
  std::vector<std::string> header = {
      "n", "omega", "phi", "rad", "A_n", "exact_closed", "exact_twisted",
      "bound_refined", "bound_general_over_A", "numeric_power",
      "numeric_twisted"};
  if (quad) {
    for (const char* h : {"exact_cyclomq_twisted", "bound_cyclomq",
                          "bound_hybrid", "hybrid_exponent",
                          "numeric_cyclomq_twisted", "numeric_hybrid"}) {
      header.emplace_back(h);
    }
  }
  out << Join(header) << '\n';

  std::unordered_map<uint64_t, std::string> heights;
  for (uint64_t n = config.n_min; n <= config.n_max; ++n) {
    const Conductor c(n);
    if (config.omega_filter && c.omega() != *config.omega_filter) continue;
    auto it = heights.find(c.rad());
    if (it == heights.end()) {
      it = heights.emplace(c.rad(), height(c.rad()).get_str()).first;
    }
    const bool numeric = c.phi() <= config.numeric_cap;
    std::vector<std::string> row = {
        std::to_string(n),
        std::to_string(c.omega()),
        std::to_string(c.phi()),
        std::to_string(c.rad()),
        it->second,
        FormatReport(cond_exact_prime_power(c)),
        FormatReport(cond_exact_twisted(c)),
        FormatReport(cond_bound_refined(c)),
        FormatReport(cond_bound_general(c, 1)),
        numeric ? format_value(numeric_cond({c, {}, Basis::kPower},
                                            config.precision, config.numeric_cap))
                : "",
        numeric ? format_value(numeric_cond({c, {}, Basis::kTwisted},
                                            config.precision, config.numeric_cap))
                : ""};
    if (quad) {
      if (QuadPrimesValid(c, config.quad_primes)) {
        const auto& ps = config.quad_primes;
        const BoundReport hybrid = hybrid_bound(c, ps);
        const bool fits = (c.phi() << ps.size()) <= config.numeric_cap;
        row.push_back(FormatReport(cond_exact_cyclomq_twisted(c, ps)));
        row.push_back(FormatReport(cond_bound_cyclomq(c, ps)));
        row.push_back(FormatReport(hybrid));
        row.push_back(hybrid.growth_exponent ? std::to_string(*hybrid.growth_exponent) : "");
        row.push_back(fits ? format_value(numeric_cond({c, ps, Basis::kTwisted},
                                                       config.precision, config.numeric_cap))
                           : "");
        row.push_back(fits ? format_value(numeric_cond({c, ps, Basis::kHybrid},
                                                       config.precision, config.numeric_cap))
                           : "");
      } else {
        row.insert(row.end(), 6, "");
      }
    }
    out << Join(row) << '\n';
  }
}

void cmd_cond(const SweepConfig& config) {
  config.validate();
  WriteFile(config.output, [&](std::ostream& out) { cmd_cond(config, out); });
}

void BenchConfig::validate() const {
  if (m_cyclo == 0 || !std::has_single_bit(m_cyclo)) {
    throw std::invalid_argument("--mcyclo must be a power of two");
  }
  if (r > 20) throw std::invalid_argument("--r is limited to 20");
  if (std::countr_zero(m_cyclo) + r > 24) {
    throw std::invalid_argument("m_cyclo * 2^r is limited to 2^24");
  }
  if ((m_cyclo << r) < 2) throw std::invalid_argument("ring dimension must be at least 2");
  if (q_bits < 0 || q_bits > kMaxModulusBits) {
    throw std::invalid_argument("--qbits must lie in 0..62");
  }
  if (trials < 1) throw std::invalid_argument("--trials must be positive");
}

BenchPrime find_bench_prime(uint64_t m_cyclo, size_t r, int q_bits) {
  BenchPrime out;
  for (uint64_t p = 3; out.d.size() < r; p += 2) {
    if (is_prime(p)) out.d.push_back(p);
  }
  const uint64_t step = 2 * (m_cyclo << r);
  const uint64_t limit = uint64_t{1} << kMaxModulusBits;
  uint64_t start = q_bits > 1 ? uint64_t{1} << (q_bits - 1) : 0;
  uint64_t q = (start / step) * step + 1;
  if (q < start) q += step;
  for (; q < limit; q += step) {
    if (q < 3 || !is_prime(q)) continue;
    bool ok = true;
    for (uint64_t d : out.d) ok = ok && d % q != 0 && legendre(d % q, q) == 1;
    if (ok) {
      out.q = q;
      return out;
    }
  }
  throw std::runtime_error("no suitable prime below 2^62 for this configuration");
}

double BenchResult::ratio_forward() const {
  return static_cast<double>(ntt_fwd_muls) / static_cast<double>(hyb_fwd_muls);
}

double BenchResult::ratio_round_trip() const {
  return static_cast<double>(ntt_fwd_muls + ntt_inv_muls) /
         static_cast<double>(hyb_fwd_muls + hyb_inv_muls);
}

std::optional<double> BenchResult::ratio_asymptotic() const {
  const int u = std::countr_zero(config.m_cyclo);
  if (u == 0) return std::nullopt;
  return static_cast<double>(u + config.r) / u;
}

namespace {

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

// Counts from the first trial, median wall-clock over all.
void Measure(const std::shared_ptr<const RingContext>& ctx, int trials,
             std::mt19937_64& rng, uint64_t& fwd_muls, uint64_t& fwd_adds,
             uint64_t& inv_muls, uint64_t& inv_adds, double& fwd_us,
             double& inv_us) {
  using Clock = std::chrono::steady_clock;
  // Untimed round trips until the clock has settled.
  {
    PolyVec w = PolyVec::random(ctx, rng);
    const auto until = Clock::now() + std::chrono::milliseconds(50);
    do {
      forward(w);
      inverse(w);
    } while (Clock::now() < until);
  }
  std::vector<double> fwd, inv;
  for (int t = 0; t < trials; ++t) {
    PolyVec a = PolyVec::random(ctx, rng);
    const PolyVec original = a;
    ctx->reset_counter();
    auto t0 = Clock::now();
    forward(a);
    auto t1 = Clock::now();
    const OpCount f = ctx->count_report();
    ctx->reset_counter();
    auto t2 = Clock::now();
    inverse(a);
    auto t3 = Clock::now();
    const OpCount i = ctx->count_report();
    if (!(a == original)) throw std::logic_error("benchmark round trip failed");
    if (t == 0) {
      fwd_muls = f.muls;
      fwd_adds = f.adds;
      inv_muls = i.muls;
      inv_adds = i.adds;
    }
    fwd.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    inv.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
  }
  fwd_us = Median(fwd);
  inv_us = Median(inv);
}

}  // namespace

BenchResult run_bench(const BenchConfig& config) {
  config.validate();
  BenchResult res;
  res.config = config;
  res.prime = find_bench_prime(config.m_cyclo, config.r, config.q_bits);
  const uint64_t m = config.m_cyclo << config.r;
  std::mt19937_64 rng(m * 131 + config.r);
  const auto baseline = make_context(res.prime.q, m, {});
  Measure(baseline, config.trials, rng, res.ntt_fwd_muls, res.ntt_fwd_adds,
          res.ntt_inv_muls, res.ntt_inv_adds, res.ntt_fwd_us, res.ntt_inv_us);
  const auto hybrid = make_context(res.prime.q, config.m_cyclo, res.prime.d);
  Measure(hybrid, config.trials, rng, res.hyb_fwd_muls, res.hyb_fwd_adds,
          res.hyb_inv_muls, res.hyb_inv_adds, res.hyb_fwd_us, res.hyb_inv_us);
  return res;
}

void cmd_bench(const BenchConfig& config, std::ostream& out) {
  const BenchResult r = run_bench(config);
  const uint64_t m = config.m_cyclo << config.r;
  out << Join({"m_cyclo", "u", "r", "m", "q", "d", "ntt_fwd_muls",
               "ntt_fwd_adds", "ntt_inv_muls", "ntt_inv_adds", "hyb_fwd_muls",
               "hyb_fwd_adds", "hyb_inv_muls", "hyb_inv_adds", "ratio_forward",
               "ratio_round_trip", "ratio_asymptotic", "ntt_fwd_median_us",
               "ntt_inv_median_us", "hyb_fwd_median_us", "hyb_inv_median_us"})
      << '\n';
  const auto asym = r.ratio_asymptotic();
  out << Join({std::to_string(config.m_cyclo),
               std::to_string(std::countr_zero(config.m_cyclo)),
               std::to_string(config.r), std::to_string(m),
               std::to_string(r.prime.q), JoinPrimes(r.prime.d, ' '),
               std::to_string(r.ntt_fwd_muls), std::to_string(r.ntt_fwd_adds),
               std::to_string(r.ntt_inv_muls), std::to_string(r.ntt_inv_adds),
               std::to_string(r.hyb_fwd_muls), std::to_string(r.hyb_fwd_adds),
               std::to_string(r.hyb_inv_muls), std::to_string(r.hyb_inv_adds),
               format_value(r.ratio_forward()), format_value(r.ratio_round_trip()),
               asym ? format_value(*asym) : "", format_value(r.ntt_fwd_us),
               format_value(r.ntt_inv_us), format_value(r.hyb_fwd_us),
               format_value(r.hyb_inv_us)})
      << '\n';
}

void cmd_bench(const BenchConfig& config) {
  config.validate();
  WriteFile(config.output, [&](std::ostream& out) { cmd_bench(config, out); });
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct Outcome {
  size_t instances = 0;
  std::optional<std::string> failure;
};

class Checker {
 public:
  explicit Checker(std::ostream& log) : log_(log) {}

  void Run(const std::string& name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.failure = std::string("exception: ") + e.what();
    }
    if (o.failure) {
      ok_ = false;
      log_ << "FAIL " << name << ": " << *o.failure << '\n';
    } else {
      log_ << "PASS " << name << " (" << o.instances << " instances)\n";
    }
    log_.flush();
  }

  bool ok() const { return ok_; }

 private:
  std::ostream& log_;
  bool ok_ = true;
};

double Rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string Describe(uint64_t n, double got, double want) {
  std::ostringstream s;
  s.precision(15);
  s << "n = " << n << ": got " << got << ", expected " << want;
  return s.str();
}

// |Phi_n'(z)| at every primitive n-th root z (ascending residues), as the
// product of distances to the other primitive roots.
std::vector<long double> DerivativeMagnitudes(uint64_t n) {
  // |e^{2 pi i a/n} - e^{2 pi i b/n}| = |2 sin(pi (a - b) / n)|.
  std::vector<long double> log_dist(n);
  for (uint64_t t = 1; t < n; ++t) {
    log_dist[t] = std::log(2 * std::abs(std::sin(
        std::numbers::pi_v<long double> * static_cast<long double>(t) / n)));
  }
  const auto residues = primitive_residues(n);
  std::vector<long double> out;
  out.reserve(residues.size());
  for (uint64_t a : residues) {
    long double log_mag = 0;
    for (uint64_t b : residues) {
      if (a != b) log_mag += log_dist[a > b ? a - b : b - a];
    }
    out.push_back(std::exp(log_mag));
  }
  return out;
}

struct Limits {
  uint64_t n_formula;    // closed-form and twisted checks
  uint64_t n_dominance;  // bound chain
  uint64_t n_identity;   // cyclotomic identities
  size_t numeric_cap;
  int cyclomq_specs;
  size_t cyclomq_dim;
  uint64_t max_m;        // transform sizes
  int pairs;
};

Outcome CheckIdentities(const Limits& lim) {
  Outcome o;
  for (uint64_t n = 1; n <= lim.n_identity; ++n) {
    const Conductor c(n);
    IntPolynomial prod = IntPolynomial::from_int64(std::vector<int64_t>{1});
    for (uint64_t d : divisors(c)) prod = prod * cyclotomic_poly(d);
    if (!(prod == binomial(n))) {
      o.failure = "product of Phi_d differs from x^n - 1 at n = " + std::to_string(n);
      return o;
    }
    if (cyclotomic_poly(n).degree() != static_cast<int64_t>(c.phi())) {
      o.failure = "deg Phi_n != phi(n) at n = " + std::to_string(n);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckHeights(const Limits& lim) {
  Outcome o;
  for (uint64_t n = 1; n <= lim.n_identity; ++n) {
    const Conductor c(n);
    const BigInt a = cyclotomic_poly(n).height();
    if (a != height(c.rad()) || a != height(n)) {
      o.failure = "A(n) != A(rad(n)) at n = " + std::to_string(n);
      return o;
    }
    if (c.omega() <= 2 && a != 1) {
      o.failure = "non-flat Phi_n with omega <= 2 at n = " + std::to_string(n);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckClosedForm(const Limits& lim, Precision prec) {
  Outcome o;
  for (uint64_t n = 2; n <= lim.n_formula; ++n) {
    const Conductor c(n);
    if (c.phi() > lim.numeric_cap) continue;
    const BoundReport exact = cond_exact_prime_power(c);
    if (!exact.applicable) continue;
    const double num = numeric_cond({c, {}, Basis::kPower}, prec, lim.numeric_cap);
    if (Rel(num, exact.value) > 1e-9) {
      o.failure = Describe(n, num, exact.value);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckTwisted(const Limits& lim, Precision prec) {
  Outcome o;
  for (uint64_t n = 2; n <= lim.n_formula; ++n) {
    const Conductor c(n);
    if (c.phi() > lim.numeric_cap) continue;
    const double want = cond_exact_twisted(c).value;
    const double num = numeric_cond({c, {}, Basis::kTwisted}, prec, lim.numeric_cap);
    if (Rel(num, want) > 1e-9) {
      o.failure = Describe(n, num, want);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckDominance(const Limits& lim, Precision prec) {
  Outcome o;
  for (uint64_t n = 2; n <= lim.n_dominance; ++n) {
    const Conductor c(n);
    if (c.phi() > lim.numeric_cap) continue;
    const double num = numeric_cond({c, {}, Basis::kPower}, prec, lim.numeric_cap);
    const BoundReport refined = cond_bound_refined(c);
    const BoundReport general = cond_bound_general(c, height(n));
    if (refined.applicable && num > refined.value) {
      o.failure = "numeric above refined bound, " + Describe(n, num, refined.value);
      return o;
    }
    if (num > general.value) {
      o.failure = "numeric above general bound, " + Describe(n, num, general.value);
      return o;
    }
    if (refined.applicable && refined.value > general.value) {
      o.failure = "refined bound above general bound at n = " + std::to_string(n);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckCycloMQ(const Limits& lim, Precision prec) {
  Outcome o;
  std::mt19937_64 rng(2026);
  const auto small_primes = primes_up_to(60);
  while (static_cast<int>(o.instances) < lim.cyclomq_specs) {
    const uint64_t n = 2 + rng() % 200;
    const Conductor c(n);
    std::vector<uint64_t> candidates;
    for (uint64_t p : small_primes)
      if (!c.divisible_by(p)) candidates.push_back(p);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const size_t r = 1 + rng() % 3;
    std::vector<uint64_t> ps(candidates.begin(), candidates.begin() + r);
    std::sort(ps.begin(), ps.end());
    if ((c.phi() << r) > lim.cyclomq_dim) continue;
    const double twisted = numeric_cond({c, ps, Basis::kTwisted}, prec, lim.cyclomq_dim);
    const double hybrid = numeric_cond({c, ps, Basis::kHybrid}, prec, lim.cyclomq_dim);
    const double exact = cond_exact_cyclomq_twisted(c, ps).value;
    const double bound = cond_bound_cyclomq(c, ps).value;
    const BoundReport hb = hybrid_bound(c, ps);
    const std::string where = "n = " + std::to_string(n) + ", primes {" + JoinPrimes(ps, ' ') + "}";
    if (Rel(twisted, exact) > 1e-9) {
      o.failure = "twisted product law fails at " + where;
      return o;
    }
    if (twisted > bound) {
      o.failure = "twisted bound violated at " + where;
      return o;
    }
    if (hb.applicable && hybrid > hb.value) {
      o.failure = "hybrid bound violated at " + where;
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckExplicitInverse(const Limits& lim) {
  Outcome o;
  for (uint64_t n = 2; n <= lim.n_formula; ++n) {
    const Conductor c(n);
    if (c.phi() > lim.numeric_cap) continue;
    // Full sweep for small degrees, every seventh conductor above.
    if (c.phi() > 64 && n % 7 != 0) continue;
    const auto roots = cyclotomic_roots<double>(c);
    const auto e = vandermonde_inverse_explicit(roots);
    const auto l = invert(vandermonde(roots));
    for (size_t i = 0; i < e.entries().size(); ++i) {
      const double ref = std::abs(l.entries()[i]);
      if (std::abs(e.entries()[i] - l.entries()[i]) > 1e-8 * ref) {
        o.failure = "explicit inverse entry off at n = " + std::to_string(n);
        return o;
      }
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckEntryBound(const Limits& lim) {
  Outcome o;
  std::unordered_map<uint64_t, std::vector<long double>> dmag;
  for (uint64_t n = 2; n <= lim.n_formula; ++n) {
    const Conductor c(n);
    if (c.phi() > lim.numeric_cap) continue;
    auto it = dmag.find(c.rad());
    if (it == dmag.end()) it = dmag.emplace(c.rad(), DerivativeMagnitudes(c.rad())).first;
    const auto rad_residues = primitive_residues(c.rad());
    const auto residues = primitive_residues(n);
    const auto w = vandermonde_inverse_explicit(cyclotomic_roots<long double>(c));
    const long double a = height(c.rad()).get_d();
    for (size_t j = 0; j < residues.size(); ++j) {
      const uint64_t k = residues[j] % c.rad();
      const size_t idx =
          std::lower_bound(rad_residues.begin(), rad_residues.end(), k) - rad_residues.begin();
      const long double bound = c.rad() * (a + 1) / it->second[idx];
      for (size_t i = 0; i < residues.size(); ++i) {
        if (std::abs(w(i, j)) > bound) {
          o.failure = "|w_ij| above the radical bound at n = " + std::to_string(n);
          return o;
        }
      }
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckLemmaDens() {
  Outcome o;
  for (uint64_t n = 2; n <= 3000 * 6; ++n) {
    const Conductor c(n);
    if (c.omega() < 4 || c.phi() > 3000) continue;
    const long double bound = 2 * std::pow(static_cast<long double>(c.phi()), c.omega() - 3);
    for (long double mag : DerivativeMagnitudes(n)) {
      if (1 / mag > bound) {
        o.failure = "1/|Phi_n'(zeta)| above 2 phi^{omega-3} at n = " + std::to_string(n);
        return o;
      }
    }
    ++o.instances;
  }
  return o;
}

std::shared_ptr<const RingContext> TransformContext(uint64_t m_cyclo, size_t r,
                                                    bool fault) {
  const BenchPrime bp = find_bench_prime(m_cyclo, r, 0);
  auto ctx = std::make_shared<RingContext>(bp.q, m_cyclo, bp.d);
  if (fault && m_cyclo >= 2) ctx->inject_twiddle_fault();
  return ctx;
}

std::vector<std::pair<uint64_t, size_t>> TransformShapes(uint64_t max_m) {
  std::vector<std::pair<uint64_t, size_t>> shapes;
  for (uint64_t m = 2; m <= max_m; m <<= 1) {
    const size_t logm = std::countr_zero(m);
    for (size_t r = 0; r <= logm; ++r) shapes.emplace_back(m >> r, r);
  }
  return shapes;
}

Outcome CheckRoundTrip(const Limits& lim, bool fault) {
  Outcome o;
  std::mt19937_64 rng(41);
  for (auto [mc, r] : TransformShapes(lim.max_m)) {
    const auto ctx = TransformContext(mc, r, fault);
    for (int t = 0; t < lim.pairs; ++t) {
      const PolyVec a = PolyVec::random(ctx, rng);
      PolyVec b = a;
      forward(b);
      inverse(b);
      if (!(a == b)) {
        o.failure = "inverse(forward(a)) != a for m_cyclo = " + std::to_string(mc) +
                    ", r = " + std::to_string(r) + ", q = " + std::to_string(ctx->modulus());
        return o;
      }
      ++o.instances;
    }
  }
  return o;
}

Outcome CheckHomomorphism(const Limits& lim, bool fault) {
  Outcome o;
  std::mt19937_64 rng(43);
  for (auto [mc, r] : TransformShapes(std::min<uint64_t>(lim.max_m, 128))) {
    const auto ctx = TransformContext(mc, r, fault);
    for (int t = 0; t < lim.pairs; ++t) {
      const PolyVec a = PolyVec::random(ctx, rng);
      const PolyVec b = PolyVec::random(ctx, rng);
      PolyVec fa = a, fb = b;
      forward(fa);
      forward(fb);
      PolyVec p = pointwise_mul(fa, fb);
      inverse(p);
      if (!(p == schoolbook_mul(a, b))) {
        o.failure = "transform product differs from schoolbook for m_cyclo = " +
                    std::to_string(mc) + ", r = " + std::to_string(r);
        return o;
      }
      ++o.instances;
    }
  }
  return o;
}

Outcome CheckCounts(const Limits& lim) {
  Outcome o;
  std::mt19937_64 rng(47);
  for (auto [mc, r] : TransformShapes(lim.max_m)) {
    const auto ctx = TransformContext(mc, r, false);
    const uint64_t m = mc << r;
    const uint64_t u = std::countr_zero(mc);
    PolyVec a = PolyVec::random(ctx, rng);
    ctx->reset_counter();
    forward(a);
    const uint64_t fwd = ctx->count_report().muls;
    ctx->reset_counter();
    inverse(a);
    const uint64_t inv = ctx->count_report().muls;
    uint64_t want_fwd, want_inv;
    if (r == 0) {
      want_fwd = m / 2 * u;
      want_inv = m / 2 * u + m;
    } else if (mc == 1) {
      want_fwd = want_inv = m;
    } else {
      want_fwd = want_inv = m / 2 * u + m;
    }
    if (fwd != want_fwd || inv != want_inv) {
      o.failure = "counted multiplications " + std::to_string(fwd) + "/" +
                  std::to_string(inv) + " differ from " + std::to_string(want_fwd) +
                  "/" + std::to_string(want_inv) + " at m_cyclo = " +
                  std::to_string(mc) + ", r = " + std::to_string(r);
      return o;
    }
    ++o.instances;
  }
  return o;
}

Outcome CheckRns(int rounds) {
  Outcome o;
  gmp_randclass rand(gmp_randinit_mt);
  rand.seed(53);
  for (size_t L : {2, 3, 5}) {
    std::vector<uint64_t> moduli;
    for (uint64_t q = (uint64_t{1} << 40) + 1; moduli.size() < L; q += 32) {
      if (is_prime(q)) moduli.push_back(q);
    }
    const RnsContext ctx(moduli, 16, {});
    for (int t = 0; t < rounds; ++t) {
      std::vector<BigInt> coeffs(ctx.dimension());
      for (auto& c : coeffs) c = rand.get_z_range(ctx.product());
      if (rns_reconstruct(rns_decompose(coeffs, ctx), ctx) != coeffs) {
        o.failure = "RNS round trip failed with L = " + std::to_string(L);
        return o;
      }
      o.instances += coeffs.size();
    }
  }
  return o;
}

}  // namespace

bool cmd_verify(const VerifyOptions& options, std::ostream& log) {
  const bool full = options.level == VerifyLevel::kFull;
  const Limits lim = full ? Limits{2000, 500, 2000, 512, 50, 1024, 512, 20}
                          : Limits{200, 200, 200, 128, 10, 128, 64, 10};
  const Precision prec = options.precision;
  const bool fault = options.inject_fault;
  Checker check(log);
  log << "verify level " << (full ? "full" : "quick") << ", precision "
      << to_string(prec) << '\n';
  check.Run("transform round trip", [&] { return CheckRoundTrip(lim, fault); });
  check.Run("transform homomorphism", [&] { return CheckHomomorphism(lim, fault); });
  check.Run("transform multiplication counts", [&] { return CheckCounts(lim); });
  check.Run("rns round trip", [&] { return CheckRns(full ? 100 : 10); });
  check.Run("cyclotomic product identity", [&] { return CheckIdentities(lim); });
  check.Run("height radical invariance", [&] { return CheckHeights(lim); });
  check.Run("closed form vs numeric", [&] { return CheckClosedForm(lim, prec); });
  check.Run("twisted formula vs numeric", [&] { return CheckTwisted(lim, prec); });
  check.Run("bound dominance", [&] { return CheckDominance(lim, prec); });
  check.Run("cyclo-multiquadratic bounds", [&] { return CheckCycloMQ(lim, prec); });
  check.Run("explicit inverse vs LU", [&] { return CheckExplicitInverse(lim); });
  if (full) {
    check.Run("inverse entry bound", [&] { return CheckEntryBound(lim); });
    check.Run("derivative lower bound", [&] { return CheckLemmaDens(); });
  }
  log << (check.ok() ? "all invariants hold" : "invariant violation") << '\n';
  return check.ok();
}

}  // namespace cyclomq
