// AVX2 variants of the sweep kernels. This translation unit is compiled with
// -mavx2 -mfma on x86-64; dispatch happens at runtime via cpuid, so the rest
// of the library stays baseline.

#include "influmax/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define INFLUMAX_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define INFLUMAX_HAVE_AVX2_BUILD 0
#endif

namespace influmax::kernels {

#if INFLUMAX_HAVE_AVX2_BUILD

namespace {

// Node ids stay below 2^31, so reading uint32 columns as int32 gather
// indices is safe.
inline __m256d gather4(const double* x, const NodeId* cols) {
    const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols));
    return _mm256_i32gather_pd(x, idx, 8);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void rank_sweep_avx2(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                     std::uint32_t n, double alpha, const double* damp,
                     const double* x, double* y) {
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint64_t begin = offsets[u], end = offsets[u + 1];
        __m256d vacc = _mm256_setzero_pd();
        std::uint64_t j = begin;
        for (; j + 4 <= end; j += 4) {
            vacc = _mm256_fmadd_pd(_mm256_loadu_pd(w + j), gather4(x, cols + j), vacc);
        }
        double acc = hsum(vacc);
        for (; j < end; ++j) acc += w[j] * x[cols[j]];
        double r = 1.0 + alpha * acc;
        y[u] = damp ? damp[u] * r : r;
    }
}

void icn_sweep_avx2(const std::uint64_t* offsets, const NodeId* cols, const double* w,
                    std::uint32_t n, double alpha, double q, const double* damp,
                    const double* gp_in, const double* gn_in, const double* h_in,
                    double* gp_out, double* gn_out, double* h_out) {
    const double nq = 1.0 - q;
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint64_t begin = offsets[u], end = offsets[u + 1];
        __m256d vp = _mm256_setzero_pd();
        __m256d vn = _mm256_setzero_pd();
        __m256d vh = _mm256_setzero_pd();
        std::uint64_t j = begin;
        for (; j + 4 <= end; j += 4) {
            const __m256d wj = _mm256_loadu_pd(w + j);
            vp = _mm256_fmadd_pd(wj, gather4(gp_in, cols + j), vp);
            vn = _mm256_fmadd_pd(wj, gather4(gn_in, cols + j), vn);
            vh = _mm256_fmadd_pd(wj, gather4(h_in, cols + j), vh);
        }
        double sp = hsum(vp), sn = hsum(vn), sh = hsum(vh);
        for (; j < end; ++j) {
            const double wj = w[j];
            const NodeId v = cols[j];
            sp += wj * gp_in[v];
            sn += wj * gn_in[v];
            sh += wj * h_in[v];
        }
        const double d = damp ? damp[u] : 1.0;
        gp_out[u] = d * q * (1.0 + alpha * sp);
        gn_out[u] = d * (nq + alpha * (nq * sh + q * sn));
        h_out[u] = d * (1.0 + alpha * sh);
    }
}

void spmv_avx2(const std::uint64_t* offsets, const NodeId* cols, const double* w,
               std::uint32_t n, const double* x, double* y) {
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint64_t begin = offsets[u], end = offsets[u + 1];
        __m256d vacc = _mm256_setzero_pd();
        std::uint64_t j = begin;
        for (; j + 4 <= end; j += 4) {
            vacc = _mm256_fmadd_pd(_mm256_loadu_pd(w + j), gather4(x, cols + j), vacc);
        }
        double acc = hsum(vacc);
        for (; j < end; ++j) acc += w[j] * x[cols[j]];
        y[u] = acc;
    }
}

inline __m256d abs4(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

double max_abs_diff_avx2(const double* a, const double* b, std::uint32_t n) {
    __m256d vm = _mm256_setzero_pd();
    std::uint32_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vm = _mm256_max_pd(vm, abs4(_mm256_sub_pd(_mm256_loadu_pd(a + i),
                                                  _mm256_loadu_pd(b + i))));
    }
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(vm), _mm256_extractf128_pd(vm, 1));
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) {
        double d = a[i] - b[i];
        if (d < 0) d = -d;
        if (d > m) m = d;
    }
    return m;
}

double max_abs_avx2(const double* a, std::uint32_t n) {
    __m256d vm = _mm256_setzero_pd();
    std::uint32_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vm = _mm256_max_pd(vm, abs4(_mm256_loadu_pd(a + i)));
    }
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(vm), _mm256_extractf128_pd(vm, 1));
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) {
        double d = a[i] < 0 ? -a[i] : a[i];
        if (d > m) m = d;
    }
    return m;
}

constexpr Table kAvx2Table{
    rank_sweep_avx2, icn_sweep_avx2, spmv_avx2,
    max_abs_diff_avx2, max_abs_avx2, "avx2",
};

}  // namespace

bool avx2_available() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
}

const Table& avx2_table() { return kAvx2Table; }

#else  // !INFLUMAX_HAVE_AVX2_BUILD

bool avx2_available() { return false; }

const Table& avx2_table() {
    throw ValidationError("avx2 kernels not compiled into this build");
}

#endif

}  // namespace influmax::kernels
