// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2/FMA variant of the sampling/classification kernel. It replays the
// scalar reference pipeline four lanes wide using only operations with
// IEEE-defined single-rounding semantics (add, sub, mul, div, sqrt, fmadd,
// floor, bitwise sign games), in the same order, so its output is required
// to be bit-identical to run_batch_scalar. No approximate reciprocal or
// rsqrt instructions appear here for exactly that reason.
#include "hexprob/mc_kernel.hpp"

#if defined(HEXPROB_HAVE_AVX2)

#include <immintrin.h>

#include <cstdint>

#include "hexprob/detmath.hpp"
#include "hexprob/monte_carlo.hpp"
#include "hexprob/rng.hpp"

namespace hexprob::mc {

namespace {

// 64x64 -> low-64 product; AVX2 has no _mm256_mullo_epi64.
inline __m256i mullo64(__m256i a, __m256i b) {
    const __m256i lo = _mm256_mul_epu32(a, b);
    const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), b),
                                           _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i splitmix_mix_v(__m256i z) {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mullo64(z, _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ull)));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mullo64(z, _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBull)));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

// Exact conversion of uint64 lanes < 2^52 (exponent-bias overlay trick).
inline __m256d small_u64_to_double(__m256i v) {
    const __m256i bias = _mm256_set1_epi64x(0x4330000000000000ll);  // 2^52
    return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, bias)),
                         _mm256_set1_pd(0x1.0p52));
}

// Exact conversion of uint64 lanes <= 2^53 via split halves.
inline __m256d u64_to_double(__m256i v) {
    const __m256i lo = _mm256_and_si256(v, _mm256_set1_epi64x(0xFFFFFFFFll));
    const __m256i hi = _mm256_srli_epi64(v, 32);
    const __m256d dlo = small_u64_to_double(lo);
    const __m256d dhi =
        _mm256_sub_pd(_mm256_castsi256_pd(
                          _mm256_or_si256(hi, _mm256_set1_epi64x(0x4530000000000000ll))),
                      _mm256_set1_pd(0x1.0p84));  // hi * 2^32, exactly
    return _mm256_add_pd(dhi, dlo);
}

inline __m256d unit_open_v(__m256i bits) {
    const __m256i top =
        _mm256_add_epi64(_mm256_srli_epi64(bits, 11), _mm256_set1_epi64x(1));
    return _mm256_mul_pd(u64_to_double(top), _mm256_set1_pd(0x1.0p-53));
}

inline __m256d unit_half_v(__m256i bits) {
    return _mm256_mul_pd(u64_to_double(_mm256_srli_epi64(bits, 11)),
                         _mm256_set1_pd(0x1.0p-53));
}

inline __m256d log_deterministic_v(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i efield =
        _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
    __m256d ed = _mm256_sub_pd(small_u64_to_double(efield), _mm256_set1_pd(1022.0));
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
                        _mm256_set1_epi64x(0x3FE0000000000000ll)));
    const __m256d need_double =
        _mm256_cmp_pd(m, _mm256_set1_pd(detmath::kSqrtHalf), _CMP_LT_OQ);
    m = _mm256_blendv_pd(m, _mm256_add_pd(m, m), need_double);
    ed = _mm256_blendv_pd(ed, _mm256_sub_pd(ed, _mm256_set1_pd(1.0)), need_double);

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z = _mm256_mul_pd(s, s);
    __m256d poly = _mm256_set1_pd(detmath::kLogCoeffs[11]);
    for (int i = 10; i >= 0; --i) {
        poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(detmath::kLogCoeffs[i]));
    }
    const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);
    return _mm256_fmadd_pd(
        ed, _mm256_set1_pd(detmath::kLn2Hi),
        _mm256_fmadd_pd(ed, _mm256_set1_pd(detmath::kLn2Lo), log_m));
}

struct SinCosV {
    __m256d s, c;
};

inline SinCosV sincos_two_pi_v(__m256d u) {
    const __m256d t = _mm256_mul_pd(_mm256_set1_pd(4.0), u);
    const __m256d k = _mm256_floor_pd(_mm256_add_pd(t, _mm256_set1_pd(0.5)));
    const __m256d x =
        _mm256_mul_pd(_mm256_sub_pd(t, k), _mm256_set1_pd(detmath::kHalfPi));
    const __m256d w = _mm256_mul_pd(x, x);
    __m256d sp = _mm256_set1_pd(detmath::kSinCoeffs[8]);
    for (int i = 7; i >= 0; --i) {
        sp = _mm256_fmadd_pd(sp, w, _mm256_set1_pd(detmath::kSinCoeffs[i]));
    }
    __m256d cp = _mm256_set1_pd(detmath::kCosCoeffs[9]);
    for (int i = 8; i >= 0; --i) {
        cp = _mm256_fmadd_pd(cp, w, _mm256_set1_pd(detmath::kCosCoeffs[i]));
    }
    const __m256d sx = _mm256_mul_pd(x, sp);
    const __m256d cx = cp;

    // Quadrant selection, branchless twin of the scalar switch on int(k) & 3:
    // bit0 swaps the sin/cos sources, bit1 negates sin, bit0 XOR bit1 negates cos.
    const __m256i k64 = _mm256_cvtepi32_epi64(_mm256_cvttpd_epi32(k));
    const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
        _mm256_and_si256(k64, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1)));
    const __m256d neg_sin = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
        _mm256_and_si256(k64, _mm256_set1_epi64x(2)), _mm256_set1_epi64x(2)));
    const __m256d neg_cos = _mm256_xor_pd(swap, neg_sin);
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    SinCosV out;
    out.s = _mm256_xor_pd(_mm256_blendv_pd(sx, cx, swap),
                          _mm256_and_pd(neg_sin, sign_bit));
    out.c = _mm256_xor_pd(_mm256_blendv_pd(cx, sx, swap),
                          _mm256_and_pd(neg_cos, sign_bit));
    return out;
}

// Mirror of detail::sorted_abs_components + detail::classify_sorted.
inline void classify_v(__m256d x, __m256d y, __m256d z, double eps_boundary,
                       __m256d& hex_mask, __m256d& boundary_mask) {
    const __m256d abs_mask =
        _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
    const __m256d aa = _mm256_and_pd(x, abs_mask);
    const __m256d ab = _mm256_and_pd(y, abs_mask);
    const __m256d ac = _mm256_and_pd(z, abs_mask);
    const __m256d m = _mm256_max_pd(aa, _mm256_max_pd(ab, ac));
    const __m256d na = _mm256_div_pd(aa, m);
    const __m256d nb = _mm256_div_pd(ab, m);
    const __m256d nc = _mm256_div_pd(ac, m);
    const __m256d p = _mm256_max_pd(na, _mm256_max_pd(nb, nc));
    const __m256d r = _mm256_min_pd(na, _mm256_min_pd(nb, nc));
    const __m256d q = _mm256_max_pd(_mm256_min_pd(na, nb),
                                    _mm256_min_pd(_mm256_max_pd(na, nb), nc));
    const __m256d qr = _mm256_add_pd(q, r);
    const __m256d eps = _mm256_set1_pd(eps_boundary);
    hex_mask = _mm256_cmp_pd(p, _mm256_sub_pd(qr, eps), _CMP_LT_OQ);
    boundary_mask = _mm256_cmp_pd(_mm256_and_pd(_mm256_sub_pd(p, qr), abs_mask),
                                  eps, _CMP_LE_OQ);
}

inline __m256i kind_codes(__m256d hex_mask, __m256d boundary_mask) {
    return _mm256_or_si256(
        _mm256_and_si256(_mm256_castpd_si256(hex_mask), _mm256_set1_epi64x(2)),
        _mm256_and_si256(_mm256_castpd_si256(boundary_mask), _mm256_set1_epi64x(1)));
}

}  // namespace

BatchResult run_batch_avx2(std::uint64_t first, std::uint64_t count,
                           const BatchOptions& opt, SampleRecord* records) {
    BatchResult res;
    const std::uint64_t vec_count = count & ~std::uint64_t{3};
    const __m256i gamma = _mm256_set1_epi64x(static_cast<long long>(kSplitMixGamma));
    const __m256i lane = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256d neg_two = _mm256_set1_pd(-2.0);

    for (std::uint64_t k = 0; k < vec_count; k += 4) {
        const __m256i idx =
            _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(first + k)), lane);
        const __m256i pre = _mm256_add_epi64(
            _mm256_set1_epi64x(static_cast<long long>(opt.seed)),
            mullo64(_mm256_add_epi64(idx, _mm256_set1_epi64x(1)), gamma));
        const __m256i stream = splitmix_mix_v(pre);
        const __m256i s1 = _mm256_add_epi64(stream, gamma);
        const __m256i s2 = _mm256_add_epi64(s1, gamma);
        const __m256i s3 = _mm256_add_epi64(s2, gamma);
        const __m256i s4 = _mm256_add_epi64(s3, gamma);

        const __m256d u1 = unit_open_v(splitmix_mix_v(s1));
        const __m256d u2 = unit_half_v(splitmix_mix_v(s2));
        const __m256d u3 = unit_open_v(splitmix_mix_v(s3));
        const __m256d u4 = unit_half_v(splitmix_mix_v(s4));

        const __m256d r1 = _mm256_sqrt_pd(_mm256_mul_pd(neg_two, log_deterministic_v(u1)));
        const SinCosV sc1 = sincos_two_pi_v(u2);
        const __m256d r2 = _mm256_sqrt_pd(_mm256_mul_pd(neg_two, log_deterministic_v(u3)));
        const SinCosV sc2 = sincos_two_pi_v(u4);  // sc2.s is the discarded fourth normal

        const __m256d z1 = _mm256_mul_pd(r1, sc1.c);
        const __m256d z2 = _mm256_mul_pd(r1, sc1.s);
        const __m256d z3 = _mm256_mul_pd(r2, sc2.c);

        // Same association as the scalar sum: (z1*z1 + z2*z2) + z3*z3,
        // deliberately not fused.
        const __m256d nsq = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(z1, z1), _mm256_mul_pd(z2, z2)),
            _mm256_mul_pd(z3, z3));
        const __m256d len = _mm256_sqrt_pd(nsq);

        __m256d x = _mm256_div_pd(z1, len);
        __m256d y = _mm256_div_pd(z2, len);
        __m256d z = _mm256_div_pd(z3, len);

        // Redraw lanes (norm below threshold) are recomputed by the scalar
        // reference from the start of their streams; identical by definition.
        const int redraw_bits = _mm256_movemask_pd(
            _mm256_cmp_pd(len, _mm256_set1_pd(opt.redraw_threshold), _CMP_LT_OQ));
        if (redraw_bits != 0) {
            alignas(32) double xs[4], ys[4], zs[4];
            _mm256_store_pd(xs, x);
            _mm256_store_pd(ys, y);
            _mm256_store_pd(zs, z);
            for (int j = 0; j < 4; ++j) {
                if (redraw_bits & (1 << j)) {
                    SplitMix64 rng(sample_stream_seed(opt.seed, first + k + j));
                    const Vec3 v = detail::draw_unit_vector(rng, opt.redraw_threshold);
                    xs[j] = v.x;
                    ys[j] = v.y;
                    zs[j] = v.z;
                }
            }
            x = _mm256_load_pd(xs);
            y = _mm256_load_pd(ys);
            z = _mm256_load_pd(zs);
        }

        __m256d hex_mask, boundary_mask;
        classify_v(x, y, z, opt.eps_boundary, hex_mask, boundary_mask);
        res.hits += static_cast<std::uint64_t>(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(hex_mask))));

        if (opt.check_negation) {
            const __m256d sign_bit = _mm256_set1_pd(-0.0);
            __m256d hex_neg, boundary_neg;
            classify_v(_mm256_xor_pd(x, sign_bit), _mm256_xor_pd(y, sign_bit),
                       _mm256_xor_pd(z, sign_bit), opt.eps_boundary, hex_neg,
                       boundary_neg);
            // Mask lanes are all-ones/all-zeros; compare as integers (the
            // all-ones pattern is a NaN, so _CMP_EQ would always fail).
            const __m256i same = _mm256_and_si256(
                _mm256_cmpeq_epi64(_mm256_castpd_si256(hex_mask),
                                   _mm256_castpd_si256(hex_neg)),
                _mm256_cmpeq_epi64(_mm256_castpd_si256(boundary_mask),
                                   _mm256_castpd_si256(boundary_neg)));
            const int same_bits = _mm256_movemask_pd(_mm256_castsi256_pd(same));
            res.negation_mismatches +=
                static_cast<std::uint64_t>(__builtin_popcount(~same_bits & 0xF));
        }

        if (records != nullptr) {
            alignas(32) double xs[4], ys[4], zs[4];
            alignas(32) std::uint64_t kinds[4];
            _mm256_store_pd(xs, x);
            _mm256_store_pd(ys, y);
            _mm256_store_pd(zs, z);
            _mm256_store_si256(reinterpret_cast<__m256i*>(kinds),
                               kind_codes(hex_mask, boundary_mask));
            for (int j = 0; j < 4; ++j) {
                records[k + j] = {xs[j], ys[j], zs[j], static_cast<std::uint8_t>(kinds[j])};
            }
        }
    }

    if (vec_count < count) {
        const BatchResult tail =
            run_batch_scalar(first + vec_count, count - vec_count, opt,
                             records != nullptr ? records + vec_count : nullptr);
        res.hits += tail.hits;
        res.negation_mismatches += tail.negation_mismatches;
    }
    return res;
}

}  // namespace hexprob::mc

#endif  // HEXPROB_HAVE_AVX2
