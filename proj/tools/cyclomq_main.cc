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

// cyclomq: condition-number sweeps, transform benchmarks and invariant
// checks. Exit status 0 on success, 1 on an invariant violation, 2 on a
// usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cyclomq/cli.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic and multiquadratic condition numbers and transforms"};
  app.require_subcommand(1);
  std::string precision = "double";
  app.add_option("--precision", precision, "Numeric working precision")
      ->check(CLI::IsMember({"double", "extended"}))
      ->capture_default_str();

  cyclomq::SweepConfig sweep;
  int omega = 0;
  auto* cond = app.add_subcommand("cond", "Formula, bound and numeric table per conductor");
  cond->add_option("--min", sweep.n_min, "Smallest conductor")->required();
  cond->add_option("--max", sweep.n_max, "Largest conductor")->required();
  cond->add_option("--omega", omega, "Keep conductors with this many primes (1..6)");
  cond->add_option("--numeric-cap", sweep.numeric_cap,
                   "Largest matrix dimension for numeric columns")
      ->capture_default_str();
  cond->add_option("--quad-primes", sweep.quad_primes,
                   "Adjoin square roots of these primes (extra columns)")
      ->delimiter(',');
  cond->add_option("--out", sweep.output, "Output CSV path")->required();

  cyclomq::BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Full NTT versus hybrid transform costs");
  bench_cmd->add_option("--mcyclo", bench.m_cyclo, "Cyclotomic size, a power of two")->required();
  bench_cmd->add_option("--r", bench.r, "Number of quadratic relations")->required();
  bench_cmd->add_option("--qbits", bench.q_bits, "Minimum modulus bit length")
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Timing repetitions")->capture_default_str();
  bench_cmd->add_option("--out", bench.output, "Output CSV path")->required();

  cyclomq::VerifyOptions verify;
  bool full = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_flag("--full", full, "Larger sweeps, minutes instead of seconds");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto prec = cyclomq::parse_precision(precision);
  try {
    if (*cond) {
      if (omega != 0) sweep.omega_filter = omega;
      sweep.precision = prec;
      cyclomq::cmd_cond(sweep);
      return kOk;
    }
    if (*bench_cmd) {
      cyclomq::cmd_bench(bench);
      return kOk;
    }
    if (*verify_cmd) {
      verify.level = full ? cyclomq::VerifyLevel::kFull : cyclomq::VerifyLevel::kQuick;
      verify.precision = prec;
      return cyclomq::cmd_verify(verify, std::cout) ? kOk : kViolation;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
