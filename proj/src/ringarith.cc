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

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "cyclomq/numtheory.h"

namespace cyclomq {

namespace {

constexpr size_t kMaxQuadraticRelations = 24;

uint64_t BitReverse(uint64_t x, int bits) {
  uint64_t out = 0;
  for (int i = 0; i < bits; ++i) {
    out = (out << 1) | (x & 1);
    x >>= 1;
  }
  return out;
}

// Cooley-Tukey, decimation in time, natural order in, bit-reversed out.
OpCount NttForwardKernel(uint64_t* a, const RingContext& ctx) {
  const uint64_t q = ctx.modulus();
  const uint64_t n = ctx.m_cyclo();
  const auto psi = ctx.ntt_twiddles();
  OpCount count;
  uint64_t t = n;
  for (uint64_t m = 1; m < n; m <<= 1) {
    t >>= 1;
    for (uint64_t i = 0; i < m; ++i) {
      const uint64_t j1 = 2 * i * t;
      const ShoupConstant& w = psi[m + i];
      for (uint64_t j = j1; j < j1 + t; ++j) {
        const uint64_t u = a[j];
        const uint64_t v = mul_shoup(a[j + t], w, q);
        a[j] = add_mod(u, v, q);
        a[j + t] = sub_mod(u, v, q);
      }
    }
    // One multiplication and two additions per butterfly, n / 2 butterflies.
    count.muls += n / 2;
    count.adds += n;
  }
  return count;
}

// Gentleman-Sande, bit-reversed in, natural order out. Scaling by
// m_cyclo^{-1} is optional so callers can fold it into another diagonal.
OpCount NttInverseKernel(uint64_t* a, const RingContext& ctx, bool scale) {
  const uint64_t q = ctx.modulus();
  const uint64_t n = ctx.m_cyclo();
  const auto psi_inv = ctx.ntt_inverse_twiddles();
  OpCount count;
  uint64_t t = 1;
  for (uint64_t m = n; m > 1; m >>= 1) {
    const uint64_t h = m >> 1;
    uint64_t j1 = 0;
    for (uint64_t i = 0; i < h; ++i) {
      const ShoupConstant& w = psi_inv[h + i];
      for (uint64_t j = j1; j < j1 + t; ++j) {
        const uint64_t u = a[j];
        const uint64_t v = a[j + t];
        a[j] = add_mod(u, v, q);
        a[j + t] = mul_shoup(sub_mod(u, v, q), w, q);
      }
      j1 += 2 * t;
    }
    count.muls += n / 2;
    count.adds += n;
    t <<= 1;
  }
  if (scale) {
    const ShoupConstant& inv = ctx.m_cyclo_inverse();
    for (uint64_t j = 0; j < n; ++j) a[j] = mul_shoup(a[j], inv, q);
    count.muls += n;
  }
  return count;
}

// The multiquadratic kernels act on 2^r contiguous blocks of `block`
// residues each, block e holding the coefficients of x_1^{e_1}...x_r^{e_r}.
// block = 1 is the plain transform; block = m_cyclo applies it to every
// cyclotomic slot at once with unit-stride inner loops.

// Sign-only butterflies.
void HadamardKernel(uint64_t* a, size_t block, size_t r, uint64_t q,
                    OpCount& count) {
  const size_t size = size_t{1} << r;
  for (size_t h = 1; h < size; h <<= 1) {
    for (size_t base = 0; base < size; base += 2 * h) {
      for (size_t e = base; e < base + h; ++e) {
        uint64_t* x = a + e * block;
        uint64_t* y = a + (e + h) * block;
        for (size_t j = 0; j < block; ++j) {
          const uint64_t u = x[j];
          const uint64_t v = y[j];
          x[j] = add_mod(u, v, q);
          y[j] = sub_mod(u, v, q);
        }
      }
    }
    count.adds += size * block;
  }
}

void ScaleBlocks(uint64_t* a, size_t block, std::span<const ShoupConstant> diag,
                 uint64_t q, OpCount& count) {
  for (size_t e = 0; e < diag.size(); ++e) {
    uint64_t* x = a + e * block;
    for (size_t j = 0; j < block; ++j) x[j] = mul_shoup(x[j], diag[e], q);
  }
  count.muls += diag.size() * block;
}

OpCount WhtForwardKernel(uint64_t* a, size_t block, const RingContext& ctx) {
  OpCount count;
  ScaleBlocks(a, block, ctx.wht_scale(), ctx.modulus(), count);
  HadamardKernel(a, block, ctx.r(), ctx.modulus(), count);
  return count;
}

OpCount WhtInverseKernel(uint64_t* a, size_t block,
                         std::span<const ShoupConstant> unscale,
                         const RingContext& ctx) {
  OpCount count;
  HadamardKernel(a, block, ctx.r(), ctx.modulus(), count);
  ScaleBlocks(a, block, unscale, ctx.modulus(), count);
  return count;
}

void Expect(const PolyVec& a, Domain domain, const char* op) {
  if (a.domain() != domain) {
    throw std::invalid_argument(
        std::string(op) + " expects a " +
        (domain == Domain::kCoefficient ? "coefficient" : "evaluation") +
        "-domain input");
  }
}

void ExpectPureCyclotomic(const RingContext& ctx, const char* op) {
  if (ctx.m_cyclo() < 2 || ctx.r() != 0) {
    throw std::invalid_argument(std::string(op) +
                                " needs m_cyclo >= 2 and no quadratic part");
  }
}

void ExpectPureMultiquadratic(const RingContext& ctx, const char* op) {
  if (ctx.r() == 0 || ctx.m_cyclo() != 1) {
    throw std::invalid_argument(std::string(op) +
                                " needs r >= 1 and m_cyclo = 1");
  }
}

void ExpectHybrid(const RingContext& ctx, const char* op) {
  if (ctx.r() == 0 || ctx.m_cyclo() < 2) {
    throw std::invalid_argument(
        std::string(op) +
        " needs both parts; use the ntt or wht transforms directly");
  }
}

}  // namespace

RingContext::RingContext(uint64_t q, uint64_t m_cyclo,
                         std::vector<uint64_t> quad_d, QuadRelation relation)
    : q_(q), m_cyclo_(m_cyclo), quad_d_(std::move(quad_d)), relation_(relation) {
  if (q < 3 || q % 2 == 0 || std::bit_width(q) > kMaxModulusBits ||
      !is_prime(q)) {
    throw std::invalid_argument("modulus " + std::to_string(q) +
                                " is not an odd prime below 2^62");
  }
  if (m_cyclo == 0 || !std::has_single_bit(m_cyclo)) {
    throw std::invalid_argument("m_cyclo must be a power of two");
  }
  if ((q - 1) % (2 * m_cyclo) != 0) {
    throw std::invalid_argument("2 * m_cyclo = " + std::to_string(2 * m_cyclo) +
                                " does not divide q - 1");
  }
  if (quad_d_.size() > kMaxQuadraticRelations) {
    throw std::invalid_argument("too many quadratic relations");
  }
  log_m_cyclo_ = std::countr_zero(m_cyclo);

  std::set<uint64_t> seen;
  for (uint64_t d : quad_d_) {
    if (d == 0) throw std::invalid_argument("d_i must be positive");
    if (d > 1 && !Conductor(d).is_squarefree()) {
      throw std::invalid_argument("d_i = " + std::to_string(d) +
                                  " is not squarefree");
    }
    if (!seen.insert(d).second) {
      throw std::invalid_argument("d_i = " + std::to_string(d) + " repeated");
    }
    if (d % q == 0) {
      throw std::invalid_argument("d_i = " + std::to_string(d) +
                                  " vanishes mod q");
    }
    const uint64_t c = relation_ == QuadRelation::kSquareIsD ? d % q
                                                             : q - d % q;
    const auto s = sqrt_mod(c, q);
    if (!s) {
      throw std::invalid_argument(
          std::string(relation_ == QuadRelation::kSquareIsD ? "" : "-") +
          std::to_string(d) + " is a quadratic non-residue mod " +
          std::to_string(q));
    }
    relation_values_.push_back(c);
    quad_roots_.push_back(*s);
  }

  // Negacyclic twiddles.
  psi_ = min_root_of_unity(2 * m_cyclo_, q_);
  const uint64_t psi_inv = inv_mod(psi_, q_);
  twiddles_.resize(m_cyclo_);
  inv_twiddles_.resize(m_cyclo_);
  for (uint64_t i = 0; i < m_cyclo_; ++i) {
    const uint64_t k = BitReverse(i, log_m_cyclo_);
    twiddles_[i] = ShoupConstant(pow_mod(psi_, k, q_), q_);
    inv_twiddles_[i] = ShoupConstant(pow_mod(psi_inv, k, q_), q_);
  }
  m_cyclo_inv_ = ShoupConstant(inv_mod(m_cyclo_ % q_, q_), q_);

  // Walsh-Hadamard diagonals.
  const size_t size = size_t{1} << quad_d_.size();
  const uint64_t two_r_inv = inv_mod(pow_mod(2, quad_d_.size(), q_), q_);
  const uint64_t m_inv = m_cyclo_inv_.value;
  wht_scale_.resize(size);
  wht_unscale_.resize(size);
  hybrid_unscale_.resize(size);
  relation_products_.resize(size);
  for (size_t e = 0; e < size; ++e) {
    uint64_t s = 1;
    uint64_t c = 1;
    for (size_t i = 0; i < quad_d_.size(); ++i) {
      if ((e >> i) & 1) {
        s = mul_mod(s, quad_roots_[i], q_);
        c = mul_mod(c, relation_values_[i], q_);
      }
    }
    const uint64_t unscale = mul_mod(inv_mod(s, q_), two_r_inv, q_);
    wht_scale_[e] = ShoupConstant(s, q_);
    wht_unscale_[e] = ShoupConstant(unscale, q_);
    hybrid_unscale_[e] = ShoupConstant(mul_mod(unscale, m_inv, q_), q_);
    relation_products_[e] = c;
  }
}

std::shared_ptr<RingContext> RingContext::clone() const {
  return std::make_shared<RingContext>(q_, m_cyclo_, quad_d_, relation_);
}

OpCount RingContext::count_report() const {
  return {muls_.load(std::memory_order_relaxed),
          adds_.load(std::memory_order_relaxed)};
}

void RingContext::reset_counter() const {
  muls_.store(0, std::memory_order_relaxed);
  adds_.store(0, std::memory_order_relaxed);
}

void RingContext::record(uint64_t muls, uint64_t adds) const {
  muls_.fetch_add(muls, std::memory_order_relaxed);
  adds_.fetch_add(adds, std::memory_order_relaxed);
}

void RingContext::inject_twiddle_fault() {
  const size_t i = twiddles_.size() > 1 ? 1 : 0;
  twiddles_[i] = ShoupConstant(add_mod(twiddles_[i].value, 1, q_), q_);
}

std::shared_ptr<const RingContext> make_context(uint64_t q, uint64_t m_cyclo,
                                                std::vector<uint64_t> quad_d,
                                                QuadRelation relation) {
  return std::make_shared<const RingContext>(q, m_cyclo, std::move(quad_d),
                                             relation);
}

PolyVec::PolyVec(std::shared_ptr<const RingContext> ctx,
                 std::vector<uint64_t> values, Domain domain)
    : ctx_(std::move(ctx)), values_(std::move(values)), domain_(domain) {
  if (!ctx_) throw std::invalid_argument("null ring context");
  if (values_.size() != ctx_->dimension()) {
    throw std::invalid_argument("expected " +
                                std::to_string(ctx_->dimension()) +
                                " residues, got " +
                                std::to_string(values_.size()));
  }
  for (uint64_t v : values_) {
    if (v >= ctx_->modulus()) {
      throw std::invalid_argument("residue " + std::to_string(v) +
                                  " not reduced mod q");
    }
  }
}

PolyVec PolyVec::zero(std::shared_ptr<const RingContext> ctx) {
  const size_t m = ctx->dimension();
  return PolyVec(std::move(ctx), std::vector<uint64_t>(m, 0));
}

PolyVec PolyVec::random(std::shared_ptr<const RingContext> ctx,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(0, ctx->modulus() - 1);
  std::vector<uint64_t> v(ctx->dimension());
  for (auto& x : v) x = dist(rng);
  return PolyVec(std::move(ctx), std::move(v));
}

PolyVec PolyVec::monomial(std::shared_ptr<const RingContext> ctx,
                          uint64_t cyclo_exponent, uint64_t quad_mask,
                          uint64_t coeff) {
  if (cyclo_exponent >= ctx->m_cyclo() || quad_mask >> ctx->r() != 0) {
    throw std::invalid_argument("monomial outside the ring's basis");
  }
  PolyVec out = zero(ctx);
  out.values_[quad_mask * ctx->m_cyclo() + cyclo_exponent] =
      coeff % ctx->modulus();
  return out;
}

void ntt_forward(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectPureCyclotomic(ctx, "ntt_forward");
  Expect(a, Domain::kCoefficient, "ntt_forward");
  const OpCount c = NttForwardKernel(a.mutable_values().data(), ctx);
  ctx.record(c.muls, c.adds);
  a.set_domain(Domain::kEvaluation);
}

void ntt_inverse(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectPureCyclotomic(ctx, "ntt_inverse");
  Expect(a, Domain::kEvaluation, "ntt_inverse");
  const OpCount c = NttInverseKernel(a.mutable_values().data(), ctx, true);
  ctx.record(c.muls, c.adds);
  a.set_domain(Domain::kCoefficient);
}

void wht_forward(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectPureMultiquadratic(ctx, "wht_forward");
  Expect(a, Domain::kCoefficient, "wht_forward");
  const OpCount c = WhtForwardKernel(a.mutable_values().data(), 1, ctx);
  ctx.record(c.muls, c.adds);
  a.set_domain(Domain::kEvaluation);
}

void wht_inverse(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectPureMultiquadratic(ctx, "wht_inverse");
  Expect(a, Domain::kEvaluation, "wht_inverse");
  const OpCount c =
      WhtInverseKernel(a.mutable_values().data(), 1, ctx.wht_unscale(), ctx);
  ctx.record(c.muls, c.adds);
  a.set_domain(Domain::kCoefficient);
}

void hybrid_forward(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectHybrid(ctx, "hybrid_forward");
  Expect(a, Domain::kCoefficient, "hybrid_forward");
  uint64_t* data = a.mutable_values().data();
  const uint64_t mc = ctx.m_cyclo();
  const size_t blocks = size_t{1} << ctx.r();
  OpCount total;
  for (size_t e = 0; e < blocks; ++e) {
    const OpCount c = NttForwardKernel(data + e * mc, ctx);
    total.muls += c.muls;
    total.adds += c.adds;
  }
  {
    const OpCount c = WhtForwardKernel(data, mc, ctx);
    total.muls += c.muls;
    total.adds += c.adds;
  }
  ctx.record(total.muls, total.adds);
  a.set_domain(Domain::kEvaluation);
}

void hybrid_inverse(PolyVec& a) {
  const RingContext& ctx = a.context();
  ExpectHybrid(ctx, "hybrid_inverse");
  Expect(a, Domain::kEvaluation, "hybrid_inverse");
  uint64_t* data = a.mutable_values().data();
  const uint64_t mc = ctx.m_cyclo();
  const size_t blocks = size_t{1} << ctx.r();
  OpCount total;
  {
    const OpCount c = WhtInverseKernel(data, mc, ctx.hybrid_unscale(), ctx);
    total.muls += c.muls;
    total.adds += c.adds;
  }
  for (size_t e = 0; e < blocks; ++e) {
    const OpCount c = NttInverseKernel(data + e * mc, ctx, false);
    total.muls += c.muls;
    total.adds += c.adds;
  }
  ctx.record(total.muls, total.adds);
  a.set_domain(Domain::kCoefficient);
}

void forward(PolyVec& a) {
  const RingContext& ctx = a.context();
  if (ctx.r() == 0) {
    if (ctx.m_cyclo() == 1) {
      Expect(a, Domain::kCoefficient, "forward");
      a.set_domain(Domain::kEvaluation);
      return;
    }
    ntt_forward(a);
  } else if (ctx.m_cyclo() == 1) {
    wht_forward(a);
  } else {
    hybrid_forward(a);
  }
}

void inverse(PolyVec& a) {
  const RingContext& ctx = a.context();
  if (ctx.r() == 0) {
    if (ctx.m_cyclo() == 1) {
      Expect(a, Domain::kEvaluation, "inverse");
      a.set_domain(Domain::kCoefficient);
      return;
    }
    ntt_inverse(a);
  } else if (ctx.m_cyclo() == 1) {
    wht_inverse(a);
  } else {
    hybrid_inverse(a);
  }
}

PolyVec pointwise_mul(const PolyVec& a, const PolyVec& b) {
  if (a.context_ptr() != b.context_ptr()) {
    throw std::invalid_argument("operands belong to different contexts");
  }
  Expect(a, Domain::kEvaluation, "pointwise_mul");
  Expect(b, Domain::kEvaluation, "pointwise_mul");
  const RingContext& ctx = a.context();
  const uint64_t q = ctx.modulus();
  std::vector<uint64_t> out(a.values().size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = mul_mod(a.values()[i], b.values()[i], q);
  }
  ctx.record(out.size(), 0);
  return PolyVec(a.context_ptr(), std::move(out), Domain::kEvaluation);
}

PolyVec schoolbook_mul(const PolyVec& a, const PolyVec& b) {
  if (a.context_ptr() != b.context_ptr()) {
    throw std::invalid_argument("operands belong to different contexts");
  }
  Expect(a, Domain::kCoefficient, "schoolbook_mul");
  Expect(b, Domain::kCoefficient, "schoolbook_mul");
  const RingContext& ctx = a.context();
  const uint64_t q = ctx.modulus();
  const uint64_t mc = ctx.m_cyclo();
  const auto rel = ctx.relation_products();
  const size_t m = a.values().size();
  std::vector<uint64_t> out(m, 0);
  for (size_t i = 0; i < m; ++i) {
    const uint64_t ai = a.values()[i];
    if (ai == 0) continue;
    const uint64_t e1 = i / mc;
    const uint64_t j1 = i % mc;
    for (size_t k = 0; k < m; ++k) {
      const uint64_t bk = b.values()[k];
      if (bk == 0) continue;
      const uint64_t e2 = k / mc;
      const uint64_t j2 = k % mc;
      uint64_t term = mul_mod(mul_mod(ai, bk, q), rel[e1 & e2], q);
      uint64_t j = j1 + j2;
      if (j >= mc) {
        j -= mc;
        term = neg_mod(term, q);
      }
      const size_t idx = (e1 ^ e2) * mc + j;
      out[idx] = add_mod(out[idx], term, q);
    }
  }
  return PolyVec(a.context_ptr(), std::move(out), Domain::kCoefficient);
}

OpCount count_report(const RingContext& ctx) { return ctx.count_report(); }

}  // namespace cyclomq
