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

// Exact arithmetic in
//
//   R_q = F_q[x, x_1, ..., x_r] / (x^{m_cyclo} + 1, x_1^2 - c_1, ..., x_r^2 - c_r)
//
// with m_cyclo a power of two and c_i = d_i (or -d_i, see QuadRelation).
// The coefficient of x^j x_1^{e_1} ... x_r^{e_r} lives at index
// e * m_cyclo + j where bit i of e is e_{i+1}.
//
// Three transform families move between coefficient and evaluation
// representations:
//   ntt_*     negacyclic NTT, pure cyclotomic contexts (r = 0)
//   wht_*     diagonal-scaled Walsh-Hadamard, pure multiquadratic (m_cyclo = 1)
//   hybrid_*  NTT along x, scaled WHT along x_1..x_r
// Every data-dependent modular multiplication and addition is tallied in the
// context's counter; table precomputation is not.

#ifndef CYCLOMQ_RINGARITH_H_
#define CYCLOMQ_RINGARITH_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "cyclomq/modarith.h"

namespace cyclomq {

// Sign convention for the quadratic relations.
enum class QuadRelation {
  kSquareIsD,       // x_i^2 = d_i
  kSquareIsMinusD,  // x_i^2 + d_i = 0
};

enum class Domain { kCoefficient, kEvaluation };

struct OpCount {
  uint64_t muls = 0;
  uint64_t adds = 0;

  bool operator==(const OpCount&) const = default;
};

class RingContext {
 public:
  // Throws std::invalid_argument when q is not an odd prime below 2^62,
  // when 2 m_cyclo does not divide q - 1, or when some relation value is
  // zero or a non-residue mod q, or repeated.
  RingContext(uint64_t q, uint64_t m_cyclo, std::vector<uint64_t> quad_d,
              QuadRelation relation = QuadRelation::kSquareIsD);

  RingContext(const RingContext&) = delete;
  RingContext& operator=(const RingContext&) = delete;

  // Same parameters and tables with a fresh counter, for per-thread use.
  std::shared_ptr<RingContext> clone() const;

  uint64_t modulus() const { return q_; }
  uint64_t m_cyclo() const { return m_cyclo_; }
  int log_m_cyclo() const { return log_m_cyclo_; }
  size_t r() const { return quad_d_.size(); }
  uint64_t dimension() const { return m_cyclo_ << quad_d_.size(); }
  const std::vector<uint64_t>& quad_d() const { return quad_d_; }
  QuadRelation relation() const { return relation_; }

  // Smallest primitive 2 m_cyclo-th root of unity.
  uint64_t psi() const { return psi_; }
  // s_i with s_i^2 = c_i, the smaller of the two roots.
  const std::vector<uint64_t>& quad_roots() const { return quad_roots_; }
  // c_i: d_i or q - d_i depending on the relation.
  const std::vector<uint64_t>& relation_values() const { return relation_values_; }

  // psi^{bitrev(i)} and psi^{-bitrev(i)} for i in [0, m_cyclo).
  std::span<const ShoupConstant> ntt_twiddles() const { return twiddles_; }
  std::span<const ShoupConstant> ntt_inverse_twiddles() const {
    return inv_twiddles_;
  }
  const ShoupConstant& m_cyclo_inverse() const { return m_cyclo_inv_; }
  // prod_i s_i^{e_i}, indexed by e.
  std::span<const ShoupConstant> wht_scale() const { return wht_scale_; }
  // (2^r prod_i s_i^{e_i})^{-1}.
  std::span<const ShoupConstant> wht_unscale() const { return wht_unscale_; }
  // (2^r m_cyclo prod_i s_i^{e_i})^{-1}; folds the NTT scaling into the
  // hybrid inverse.
  std::span<const ShoupConstant> hybrid_unscale() const {
    return hybrid_unscale_;
  }
  // prod_{i in mask} c_i, indexed by mask.
  std::span<const uint64_t> relation_products() const {
    return relation_products_;
  }

  OpCount count_report() const;
  void reset_counter() const;
  void record(uint64_t muls, uint64_t adds) const;

  // Testing hook: perturbs one forward twiddle so round trips fail.
  void inject_twiddle_fault();

 private:
  uint64_t q_;
  uint64_t m_cyclo_;
  int log_m_cyclo_ = 0;
  std::vector<uint64_t> quad_d_;
  QuadRelation relation_;
  uint64_t psi_ = 0;
  std::vector<uint64_t> quad_roots_;
  std::vector<uint64_t> relation_values_;
  std::vector<ShoupConstant> twiddles_;
  std::vector<ShoupConstant> inv_twiddles_;
  ShoupConstant m_cyclo_inv_;
  std::vector<ShoupConstant> wht_scale_;
  std::vector<ShoupConstant> wht_unscale_;
  std::vector<ShoupConstant> hybrid_unscale_;
  std::vector<uint64_t> relation_products_;
  mutable std::atomic<uint64_t> muls_{0};
  mutable std::atomic<uint64_t> adds_{0};
};

std::shared_ptr<const RingContext> make_context(
    uint64_t q, uint64_t m_cyclo, std::vector<uint64_t> quad_d,
    QuadRelation relation = QuadRelation::kSquareIsD);

// A ring element in one of the two representations.
class PolyVec {
 public:
  // Throws std::invalid_argument on a length mismatch or a residue >= q.
  PolyVec(std::shared_ptr<const RingContext> ctx, std::vector<uint64_t> values,
          Domain domain = Domain::kCoefficient);

  static PolyVec zero(std::shared_ptr<const RingContext> ctx);
  static PolyVec random(std::shared_ptr<const RingContext> ctx,
                        std::mt19937_64& rng);
  // coeff * x^cyclo_exponent * prod_{i in quad_mask} x_{i+1}.
  static PolyVec monomial(std::shared_ptr<const RingContext> ctx,
                          uint64_t cyclo_exponent, uint64_t quad_mask,
                          uint64_t coeff = 1);

  const std::vector<uint64_t>& values() const { return values_; }
  std::vector<uint64_t>& mutable_values() { return values_; }
  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }
  const RingContext& context() const { return *ctx_; }
  const std::shared_ptr<const RingContext>& context_ptr() const { return ctx_; }

  bool operator==(const PolyVec& other) const {
    return ctx_ == other.ctx_ && domain_ == other.domain_ &&
           values_ == other.values_;
  }

 private:
  std::shared_ptr<const RingContext> ctx_;
  std::vector<uint64_t> values_;
  Domain domain_;
};

// All transforms throw std::invalid_argument on a wrong domain tag or a
// context of the wrong shape.

// Forward: (m_cyclo/2) log2(m_cyclo) multiplications, output in bit-reversed
// order of the odd powers psi^{2k+1}. Inverse adds m_cyclo scalings.
void ntt_forward(PolyVec& a);
void ntt_inverse(PolyVec& a);

// Forward: 2^r diagonal multiplications, then r 2^r additions.
void wht_forward(PolyVec& a);
void wht_inverse(PolyVec& a);

// Forward: (m/2) log2(m_cyclo) + m multiplications, m = m_cyclo 2^r.
void hybrid_forward(PolyVec& a);
void hybrid_inverse(PolyVec& a);

// Dispatches on the context shape.
void forward(PolyVec& a);
void inverse(PolyVec& a);

// Entry-wise product in the evaluation domain; m counted multiplications.
PolyVec pointwise_mul(const PolyVec& a, const PolyVec& b);

// O(m^2) product with x^{m_cyclo} -> -1 and x_i^2 -> c_i. Reference path;
// not counted.
PolyVec schoolbook_mul(const PolyVec& a, const PolyVec& b);

OpCount count_report(const RingContext& ctx);

}  // namespace cyclomq

#endif  // CYCLOMQ_RINGARITH_H_
