// AVX2/FMA variants of the arithmetic kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; callers go through the dispatch table
// so the binary still runs on CPUs without AVX2.
#include "rdsnet/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define RDSNET_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define RDSNET_HAVE_AVX2_TU 0
#endif

namespace rdsnet::kernels {

#if RDSNET_HAVE_AVX2_TU
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(double alpha, double* x, size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void csr_matvec_avx2(const uint64_t* offsets, const uint32_t* cols,
                     const double* weights, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        const uint64_t begin = offsets[i], end = offsets[i + 1];
        uint64_t r = begin;
        __m256d acc = _mm256_setzero_pd();
        for (; r + 4 <= end; r += 4) {
            const __m128i idx =
                _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + r));
            const __m256d gathered = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(weights + r), gathered, acc);
        }
        double s = hsum(acc);
        for (; r < end; ++r) s += weights[r] * x[cols[r]];
        y[i] = s;
    }
}

InvDegreeSums inv_degree_sums_avx2(const uint32_t* degrees, const uint8_t* infected,
                                   size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d num = _mm256_setzero_pd();
    __m256d den = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(degrees + i));
        const __m256d recip = _mm256_div_pd(one, _mm256_cvtepi32_pd(d32));
        den = _mm256_add_pd(den, recip);
        // widen the 4 infection bytes to a 64-bit lane mask
        const __m128i b8 = _mm_cvtsi32_si128(
            *reinterpret_cast<const int*>(infected + i));
        const __m256i b64 = _mm256_cvtepu8_epi64(b8);
        const __m256d mask =
            _mm256_castsi256_pd(_mm256_cmpgt_epi64(b64, _mm256_setzero_si256()));
        num = _mm256_add_pd(num, _mm256_and_pd(recip, mask));
    }
    InvDegreeSums out{hsum(num), hsum(den)};
    for (; i < n; ++i) {
        const double w = 1.0 / static_cast<double>(degrees[i]);
        out.all += w;
        if (infected[i]) out.infected += w;
    }
    return out;
}

const Ops avx2 = {"avx2",    dot_avx2,
                  axpy_avx2, scal_avx2,
                  csr_matvec_avx2, inv_degree_sums_avx2};

} // namespace

const Ops* avx2_ops() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2;
    return nullptr;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif // RDSNET_HAVE_AVX2_TU

} // namespace rdsnet::kernels
