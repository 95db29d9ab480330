#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "isd/compare.hpp"
#include "isd/error.hpp"
#include "isd/kernels.hpp"

namespace isd {

std::int64_t Histogram::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

namespace {

bool strictly_ascending(std::span<const double> edges) {
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (!(edges[i] > edges[i - 1])) {
            return false;
        }
    }
    return true;
}

std::vector<double> equi_width_edges(double lo, double hi, std::size_t n) {
    std::vector<double> edges(n + 1);
    const double width = (hi - lo) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges[i] = lo + static_cast<double>(i) * width;
    }
    edges[n] = hi;
    return edges;
}

std::vector<double> edges_for(std::span<const double> values, std::size_t n_bins) {
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    std::vector<double> edges;
    if (*mx > *mn) {
        edges = equi_width_edges(*mn, *mx, n_bins);
    }
    if (edges.empty() || !strictly_ascending(edges)) {
        const double centre = *mn + (*mx - *mn) / 2.0;
        edges = equi_width_edges(centre - 0.5, centre + 0.5, n_bins);
    }
    return edges;
}

} // namespace

Histogram cut2bin(std::span<const double> values, std::size_t n_bins, std::optional<std::span<const double>> edges) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DataError("cut2bin: non-finite value");
        }
    }
    Histogram h;
    if (edges) {
        if (edges->size() < 2 || !strictly_ascending(*edges)) {
            throw std::invalid_argument("cut2bin: bin edges must be strictly ascending");
        }
        h.edges.assign(edges->begin(), edges->end());
    } else {
        if (n_bins == 0) {
            throw std::invalid_argument("cut2bin: n_bins must be positive");
        }
        if (values.empty()) {
            throw std::invalid_argument("cut2bin: values must be non-empty when no edges are given");
        }
        h.edges = edges_for(values, n_bins);
    }

    const std::size_t n = h.edges.size() - 1;
    h.counts.assign(n, 0);
    std::vector<std::int32_t> bins(values.size());
    const double lo = h.edges.front();
    const double inv_width = static_cast<double>(n) / (h.edges.back() - lo);
    kernels::bin_guess(values, lo, inv_width, static_cast<std::int32_t>(n), bins);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::size_t b = static_cast<std::size_t>(bins[i]);
        const double v = values[i];
        while (b > 0 && v < h.edges[b]) {
            --b;
        }
        while (b + 1 < n && v >= h.edges[b + 1]) {
            ++b;
        }
        ++h.counts[b];
    }

    const auto total = static_cast<double>(h.total());
    h.normalized.assign(n, 0.0);
    if (total > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            h.normalized[i] = static_cast<double>(h.counts[i]) / total;
        }
    }
    return h;
}

double js_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("incompatible histograms");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        if (p[i] > 0.0) {
            sum += p[i] * std::log2(p[i] / m);
        }
        if (q[i] > 0.0) {
            sum += q[i] * std::log2(q[i] / m);
        }
    }
    return std::clamp(0.5 * sum, 0.0, 1.0);
}

double js_divergence(const Histogram& p, const Histogram& q) {
    if (p.edges != q.edges) {
        throw std::invalid_argument("incompatible histograms");
    }
    return js_divergence(std::span<const double>(p.normalized), std::span<const double>(q.normalized));
}

HistogramComparison compare_histograms(std::span<const double> candidate, std::span<const double> reference,
                                       std::size_t n_bins) {
    if (candidate.empty() || reference.empty()) {
        throw std::invalid_argument("compare_histograms: both value lists must be non-empty");
    }
    HistogramComparison out;
    out.reference = cut2bin(reference, n_bins);
    out.edges = out.reference.edges;
    out.candidate = cut2bin(candidate, n_bins, std::span<const double>(out.edges));
    out.jsd = js_divergence(out.candidate, out.reference);
    return out;
}

void write_histogram_csv(const Histogram& h, std::ostream& out) {
    out << "edge_low,edge_high,count,normalized\n";
    const auto old = out.precision(17);
    for (std::size_t i = 0; i < h.bins(); ++i) {
        out << h.edges[i] << ',' << h.edges[i + 1] << ',' << h.counts[i] << ',' << h.normalized[i] << '\n';
    }
    out.precision(old);
}

} // namespace isd
