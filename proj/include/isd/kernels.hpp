#pragma once

// Data-parallel inner loops shared by the metric and histogram code.
//
// Every kernel has a scalar reference implementation (isd::kernels::scalar)
// and, on x86-64 builds, an AVX2/FMA variant (isd::kernels::avx2). The
// free functions in isd::kernels dispatch to the best variant supported by
// the running CPU. Set ISD_SIMD=scalar in the environment, or call
// set_backend(), to force the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace isd::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend currently used by the dispatching entry points.
Backend active_backend();
std::string_view backend_name(Backend b);
/// True when the AVX2 variant is compiled in and the CPU supports AVX2+FMA.
bool avx2_available();
/// Force a backend. Requesting Avx2 when unavailable falls back to Scalar.
/// Returns the backend actually selected.
Backend set_backend(Backend b);

/// Compressed sparse row adjacency of an undirected graph (no weights).
struct CsrView {
    std::span<const std::uint32_t> offsets; // size n + 1
    std::span<const std::uint32_t> targets;
};

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
void scale(std::span<double> x, double factor);

/// y = A x + shift * x, where A is the 0/1 adjacency given by `g`.
void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y);

/// out[i] = sum_j rows[i * n + j]^2 * weights[j] for a row-major n x n matrix.
void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out);

/// Raw equi-width bin guess: clamp(floor((v - lo) * inv_width), 0, n_bins - 1).
/// Callers correct boundary cases against the exact edges.
void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
void scale(std::span<double> x, double factor);
void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y);
void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out);
void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out);
} // namespace scalar

#if defined(ISD_HAVE_AVX2)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
void scale(std::span<double> x, double factor);
void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y);
void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out);
void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out);
} // namespace avx2
#endif

} // namespace isd::kernels
