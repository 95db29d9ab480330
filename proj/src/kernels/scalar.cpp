#include "isd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace isd::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void scale(std::span<double> x, double factor) {
    for (double& v : x) {
        v *= factor;
    }
}

void spmv_shifted(CsrView g, std::span<const double> x, double shift, std::span<double> y) {
    const std::size_t n = g.offsets.size() - 1;
    for (std::size_t u = 0; u < n; ++u) {
        double acc = 0.0;
        for (std::uint32_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            acc += x[g.targets[e]];
        }
        y[u] = acc + shift * x[u];
    }
}

void weighted_square_rowsum(std::span<const double> rows, std::span<const double> weights,
                            std::span<double> out) {
    const std::size_t n = weights.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double* row = rows.data() + i * n;
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += row[j] * row[j] * weights[j];
        }
        out[i] = acc;
    }
}

void bin_guess(std::span<const double> values, double lo, double inv_width, std::int32_t n_bins,
               std::span<std::int32_t> out) {
    const double top = static_cast<double>(n_bins - 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double t = std::clamp((values[i] - lo) * inv_width, 0.0, top);
        out[i] = static_cast<std::int32_t>(std::floor(t));
    }
}

} // namespace isd::kernels::scalar
