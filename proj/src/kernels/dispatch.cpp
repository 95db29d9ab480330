#include "isd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace isd::kernels {

namespace {

bool detect_avx2() {
#if defined(ISD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() {
    if (const char* env = std::getenv("ISD_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return Backend::Scalar;
    }
    return detect_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

} // namespace

bool avx2_available() {
    static const bool available = detect_avx2();
    return available;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

Backend set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) {
        b = Backend::Scalar;
    }
    current().store(b, std::memory_order_relaxed);
    return b;
}

#if defined(ISD_HAVE_AVX2)
#define ISD_DISPATCH(call)                         \
    if (active_backend() == Backend::Avx2) {       \
        return avx2::call;                         \
    }                                              \
    return scalar::call
#else
#define ISD_DISPATCH(call) return scalar::call
#endif

double dot(std::span<const double> a, std::span<const double> b) { ISD_DISPATCH(dot(a, b)); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
    ISD_DISPATCH(squared_distance(a, b));
}

void scale(std::span<double> x, double factor) { ISD_DISPATCH(scale(x, factor)); }

void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y) {
    ISD_DISPATCH(spmv_shifted(g, x, shift, y));
}

void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out) {
    ISD_DISPATCH(weighted_square_rowsum(rows, weights, out));
}

void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out) {
    ISD_DISPATCH(bin_guess(values, lo, inv_width, n_bins, out));
}

#undef ISD_DISPATCH

} // namespace isd::kernels
