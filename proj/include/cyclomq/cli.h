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

// Command implementations behind the cyclomq tool: conductor sweeps,
// transform benchmarks and the invariant checker. Kept in the library so
// tests can drive them without a subprocess.

#ifndef CYCLOMQ_CLI_H_
#define CYCLOMQ_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cyclomq/embeddings.h"
#include "cyclomq/linalg.h"

namespace cyclomq {

struct SweepConfig {
  uint64_t n_min = 2;
  uint64_t n_max = 100000;
  // Keep only conductors with this many distinct primes; nullopt keeps all.
  std::optional<int> omega_filter;
  // Adds the cyclo-multiquadratic columns when nonempty.
  std::vector<uint64_t> quad_primes;
  size_t numeric_cap = 512;
  Precision precision = Precision::kDouble;
  std::string output;

  // Throws std::invalid_argument.
  void validate() const;
};

// One CSV row per conductor in [n_min, n_max] passing the filter.
void cmd_cond(const SweepConfig& config, std::ostream& out);
// Same, written to config.output. Throws std::runtime_error when the file
// cannot be written.
void cmd_cond(const SweepConfig& config);

struct BenchConfig {
  uint64_t m_cyclo = 256;
  size_t r = 8;
  // Minimum bit length of the modulus; 0 picks the smallest suitable prime.
  int q_bits = 0;
  int trials = 5;
  std::string output;

  void validate() const;
};

struct BenchPrime {
  uint64_t q = 0;
  std::vector<uint64_t> d;
};

// Smallest prime q >= 2^{q_bits - 1} with q = 1 mod 2 m_cyclo 2^r, so the
// same q serves the full-size NTT baseline and the hybrid ring, and with
// each d_i a residue. The d_i are the first r odd primes. Throws
// std::runtime_error when no such q exists below 2^62.
BenchPrime find_bench_prime(uint64_t m_cyclo, size_t r, int q_bits);

struct BenchResult {
  BenchConfig config;
  BenchPrime prime;
  uint64_t ntt_fwd_muls = 0, ntt_fwd_adds = 0, ntt_inv_muls = 0, ntt_inv_adds = 0;
  uint64_t hyb_fwd_muls = 0, hyb_fwd_adds = 0, hyb_inv_muls = 0, hyb_inv_adds = 0;
  double ntt_fwd_us = 0, ntt_inv_us = 0, hyb_fwd_us = 0, hyb_inv_us = 0;

  double ratio_forward() const;
  double ratio_round_trip() const;
  // (u + r) / u, nullopt when u = 0.
  std::optional<double> ratio_asymptotic() const;
};

BenchResult run_bench(const BenchConfig& config);
void cmd_bench(const BenchConfig& config, std::ostream& out);
void cmd_bench(const BenchConfig& config);

enum class VerifyLevel { kQuick, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kQuick;
  Precision precision = Precision::kDouble;
  // Corrupts one NTT twiddle before the transform checks.
  bool inject_fault = false;
};

// Runs the invariant suites, one PASS/FAIL line each; a failure names the
// first offending instance. Returns true when everything holds.
bool cmd_verify(const VerifyOptions& options, std::ostream& log);

// Decimal with 12 significant digits; empty for NaN. Values beyond double
// range are printed from their base-10 logarithm.
std::string format_value(double value, double log10_value);
std::string format_value(double value);

}  // namespace cyclomq

#endif  // CYCLOMQ_CLI_H_
