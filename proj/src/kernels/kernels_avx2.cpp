// AVX2 variants of the transform kernels. Compiled with -mavx2 in its own
// translation unit; only reached after the runtime CPU check in kernels.cpp.
//
// Bit-identity with the scalar reference relies on:
//   * identical association order (mul, mul, add/sub: never FMA),
//   * IEEE addition commutativity where lane layout swaps operand order,
//   * pass-through lanes copied verbatim (blends), never recomputed as x+0.

#include "fock/kernels.hpp"

#if defined(FOCK_HAVE_AVX2_TU)

#include <immintrin.h>

namespace fock::kernels {

namespace {

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// [x, y] -> [y, x] (complex halves of one 256-bit vector).
inline __m256d swap_halves(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x01); }

void fwht_avx2(cplx* data, std::size_t len) {
    if (len < 2) return;
    // h == 1: both butterfly operands sit in one vector.
    for (std::size_t i = 0; i < len; i += 2) {
        const __m256d v = load2(data + i);          // [x, y]
        const __m256d t = swap_halves(v);           // [y, x]
        const __m256d s = _mm256_add_pd(v, t);      // [x+y, ...]
        const __m256d d = _mm256_sub_pd(v, t);      // [x-y, ...]
        store2(data + i, _mm256_permute2f128_pd(s, d, 0x20));
    }
    for (std::size_t h = 2; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; j += 2) {
                cplx* lo = data + base + j;
                cplx* hi = lo + h;
                const __m256d x = load2(lo);
                const __m256d y = load2(hi);
                store2(lo, _mm256_add_pd(x, y));
                store2(hi, _mm256_sub_pd(x, y));
            }
        }
    }
}

void two_point_stage_avx2(cplx* data, std::size_t len, std::size_t h,
                          double a00, double a01, double a10, double a11) {
    if (h == 1) {
        // out = [a00*x + a01*y, a10*x + a11*y] from v = [x, y], t = [y, x]:
        // lanewise v*[a00,a00,a11,a11] + t*[a01,a01,a10,a10].
        const __m256d cv = _mm256_set_pd(a11, a11, a00, a00);
        const __m256d ct = _mm256_set_pd(a10, a10, a01, a01);
        for (std::size_t i = 0; i < len; i += 2) {
            const __m256d v = load2(data + i);
            const __m256d t = swap_halves(v);
            store2(data + i, _mm256_add_pd(_mm256_mul_pd(v, cv), _mm256_mul_pd(t, ct)));
        }
        return;
    }
    const __m256d c00 = _mm256_set1_pd(a00);
    const __m256d c01 = _mm256_set1_pd(a01);
    const __m256d c10 = _mm256_set1_pd(a10);
    const __m256d c11 = _mm256_set1_pd(a11);
    for (std::size_t base = 0; base < len; base += 2 * h) {
        for (std::size_t j = 0; j < h; j += 2) {
            cplx* lo = data + base + j;
            cplx* hi = lo + h;
            const __m256d x = load2(lo);
            const __m256d y = load2(hi);
            store2(lo, _mm256_add_pd(_mm256_mul_pd(c00, x), _mm256_mul_pd(c01, y)));
            store2(hi, _mm256_add_pd(_mm256_mul_pd(c10, x), _mm256_mul_pd(c11, y)));
        }
    }
}

void subset_zeta_avx2(cplx* data, std::size_t len) {
    if (len < 2) return;
    for (std::size_t i = 0; i < len; i += 2) {
        const __m256d v = load2(data + i);                   // [lo, hi]
        const __m256d s = _mm256_add_pd(v, swap_halves(v));  // [.., hi+lo]
        store2(data + i, _mm256_blend_pd(v, s, 0b1100));     // [lo, hi+lo]
    }
    for (std::size_t h = 2; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; j += 2) {
                cplx* lo = data + base + j;
                cplx* hi = lo + h;
                store2(hi, _mm256_add_pd(load2(hi), load2(lo)));
            }
        }
    }
}

void subset_mobius_avx2(cplx* data, std::size_t len) {
    if (len < 2) return;
    for (std::size_t i = 0; i < len; i += 2) {
        const __m256d v = load2(data + i);                   // [lo, hi]
        const __m256d d = _mm256_sub_pd(v, swap_halves(v));  // [.., hi-lo]
        store2(data + i, _mm256_blend_pd(v, d, 0b1100));
    }
    for (std::size_t h = 2; h < len; h <<= 1) {
        for (std::size_t base = 0; base < len; base += 2 * h) {
            for (std::size_t j = 0; j < h; j += 2) {
                cplx* lo = data + base + j;
                cplx* hi = lo + h;
                store2(hi, _mm256_sub_pd(load2(hi), load2(lo)));
            }
        }
    }
}

void cmul_add_avx2(cplx* acc, const cplx* a, const cplx* b, std::size_t len) {
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d va = load2(a + i);
        const __m256d vb = load2(b + i);
        const __m256d b_re = _mm256_movedup_pd(vb);             // [br, br, ...]
        const __m256d b_im = _mm256_permute_pd(vb, 0b1111);     // [bi, bi, ...]
        const __m256d a_sw = _mm256_permute_pd(va, 0b0101);     // [ai, ar, ...]
        // even lanes: ar*br - ai*bi ; odd lanes: ai*br + ar*bi
        const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(va, b_re),
                                              _mm256_mul_pd(a_sw, b_im));
        store2(acc + i, _mm256_add_pd(load2(acc + i), prod));
    }
    for (; i < len; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        const double re = (ar * br) - (ai * bi);
        const double im = (ar * bi) + (ai * br);
        acc[i] = cplx(acc[i].real() + re, acc[i].imag() + im);
    }
}

}  // namespace

const Ops& avx2_ops_table() {
    static const Ops table{
        Isa::avx2,
        "avx2",
        &fwht_avx2,
        &two_point_stage_avx2,
        &subset_zeta_avx2,
        &subset_mobius_avx2,
        &cmul_add_avx2,
    };
    return table;
}

}  // namespace fock::kernels

#endif  // FOCK_HAVE_AVX2_TU
