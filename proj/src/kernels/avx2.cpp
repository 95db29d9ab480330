#include "isd/kernels.hpp"

#include <immintrin.h>

namespace isd::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4), _mm256_loadu_pd(b.data() + i + 4),
                               acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double sum = hsum(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void scale(std::span<double> x, double factor) {
    const std::size_t n = x.size();
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i), f));
    }
    for (; i < n; ++i) {
        x[i] *= factor;
    }
}

void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y) {
    const std::size_t n = g.offsets.size() - 1;
    const auto* idx = reinterpret_cast<const int*>(g.targets.data());
    for (std::size_t u = 0; u < n; ++u) {
        std::uint32_t e = g.offsets[u];
        const std::uint32_t end = g.offsets[u + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; e + 4 <= end; e += 4) {
            const __m128i cols = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + e));
            acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x.data(), cols, 8));
        }
        double sum = hsum(acc);
        for (; e < end; ++e) {
            sum += x[g.targets[e]];
        }
        y[u] = sum + shift * x[u];
    }
}

void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out) {
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double* row = rows.data() + i * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            const __m256d r = _mm256_loadu_pd(row + j);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(r, r), _mm256_loadu_pd(weights.data() + j), acc);
        }
        double sum = hsum(acc);
        for (; j < n; ++j) {
            sum += row[j] * row[j] * weights[j];
        }
        out[i] = sum;
    }
}

void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out) {
    const std::size_t n = values.size();
    const __m256d vlo = _mm256_set1_pd(lo);
    const __m256d vinv = _mm256_set1_pd(inv_width);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d top = _mm256_set1_pd(static_cast<double>(n_bins - 1));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(values.data() + i), vlo), vinv);
        t = _mm256_min_pd(_mm256_max_pd(t, zero), top);
        const __m128i bins = _mm256_cvttpd_epi32(_mm256_floor_pd(t));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i), bins);
    }
    if (i < n) {
        scalar::bin_guess(values.subspan(i), lo, inv_width, n_bins, out.subspan(i));
    }
}

} // namespace isd::kernels::avx2
