#pragma once

// Comparable histograms (cut2bin), Jensen-Shannon divergence, random-walk
// background samples and per-candidate divergence records.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isd/graph.hpp"
#include "isd/metrics.hpp"

namespace isd {

struct Histogram {
    std::vector<double> edges;          // n + 1, strictly ascending
    std::vector<std::int64_t> counts;   // n
    std::vector<double> normalized;     // n, sums to 1 when total() > 0

    std::size_t bins() const { return counts.size(); }
    std::int64_t total() const;
};

/// Without `edges`: `n_bins` equi-width bins over [min, max] of `values`; a
/// zero-width range is widened to [v - 0.5, v + 0.5]. With `edges`: values are
/// binned into them and anything outside is clamped into the first/last bin.
/// Bins are half-open except the last, which is closed.
Histogram cut2bin(std::span<const double> values, std::size_t n_bins,
                  std::optional<std::span<const double>> edges = std::nullopt);

/// Base-2 JSD of the normalized histograms, in [0, 1]. Throws
/// std::invalid_argument("incompatible histograms") if the edges differ.
double js_divergence(const Histogram& p, const Histogram& q);
/// Base-2 JSD of two probability vectors of equal length.
double js_divergence(std::span<const double> p, std::span<const double> q);

struct HistogramComparison {
    double jsd = 0.0;
    Histogram candidate;
    Histogram reference;
    std::vector<double> edges;
};

/// Bins the reference equi-width, then the candidate on the reference's edges.
HistogramComparison compare_histograms(std::span<const double> candidate, std::span<const double> reference,
                                       std::size_t n_bins);

/// CSV rows: edge_low,edge_high,count,normalized (with header).
void write_histogram_csv(const Histogram& h, std::ostream& out);

struct WalkOptions {
    double teleport = 0.15;
    std::size_t step_cap_factor = 50;
};

/// `n_walks` random-walk samples of `g`. Each is the largest component of the
/// subgraph induced on the nodes a walk visited before reaching `target_size`
/// distinct nodes or step_cap_factor * target_size steps.
std::vector<PropertyGraph> sample_background(const PropertyGraph& g, std::size_t target_size, std::size_t n_walks,
                                             std::uint64_t seed, const WalkOptions& options = {});

struct DivergenceRecord {
    std::string candidate_id;
    std::array<double, 6> jsd{};                    // mean over samples, indexed by Metric
    std::array<std::vector<double>, 6> per_sample{};
    std::array<double, 6> median_shift{};           // mean of median(candidate) - median(sample)
    std::size_t sample_count = 0;
    double diversity = 0.0;
    double background_diversity = 0.0;
    double diversity_ratio = 1.0;

    double operator[](Metric m) const { return jsd[static_cast<std::size_t>(m)]; }
    double& operator[](Metric m) { return jsd[static_cast<std::size_t>(m)]; }
    double total() const;
};

/// Mean JSD per metric between the candidate bundle and each sample bundle.
/// diversity_ratio = bundle.diversity / background_diversity (1 when the
/// background diversity is 0).
DivergenceRecord divergence_profile(const std::string& candidate_id, const MetricBundle& bundle,
                                    std::span<const MetricBundle> samples, double background_diversity,
                                    std::size_t n_bins);

/// Same, computing the sample bundles from graphs.
DivergenceRecord divergence_profile(const CandidateSubgraph& candidate, const MetricBundle& bundle,
                                    const std::vector<PropertyGraph>& samples, double background_diversity,
                                    std::size_t n_bins, const StopwordSet& stopwords);

} // namespace isd
