#include <algorithm>
#include <numeric>

#include "isd/compare.hpp"
#include "isd/error.hpp"

namespace isd {

double DivergenceRecord::total() const { return std::accumulate(jsd.begin(), jsd.end(), 0.0); }

namespace {

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

} // namespace

DivergenceRecord divergence_profile(const std::string& candidate_id, const MetricBundle& bundle,
                                    std::span<const MetricBundle> samples, double background_diversity,
                                    std::size_t n_bins) {
    if (samples.empty()) {
        throw std::invalid_argument("divergence_profile: at least one background sample is required");
    }
    DivergenceRecord rec;
    rec.candidate_id = candidate_id;
    rec.sample_count = samples.size();
    for (Metric m : kMetrics) {
        const auto idx = static_cast<std::size_t>(m);
        const std::vector<double> cand = bundle.values(m);
        const double cand_median = median(cand);
        double shift = 0.0;
        for (const MetricBundle& s : samples) {
            const std::vector<double> ref = s.values(m);
            // A metric with no values on either side (edgeless graph) contributes 0.
            const double jsd = cand.empty() || ref.empty() ? 0.0 : compare_histograms(cand, ref, n_bins).jsd;
            rec.per_sample[idx].push_back(jsd);
            shift += cand_median - median(ref);
        }
        const auto& ps = rec.per_sample[idx];
        rec.jsd[idx] = std::accumulate(ps.begin(), ps.end(), 0.0) / static_cast<double>(ps.size());
        rec.median_shift[idx] = shift / static_cast<double>(samples.size());
    }
    rec.diversity = bundle.diversity;
    rec.background_diversity = background_diversity;
    rec.diversity_ratio = background_diversity > 0.0 ? bundle.diversity / background_diversity : 1.0;
    return rec;
}

DivergenceRecord divergence_profile(const CandidateSubgraph& candidate, const MetricBundle& bundle,
                                    const std::vector<PropertyGraph>& samples, double background_diversity,
                                    std::size_t n_bins, const StopwordSet& stopwords) {
    std::vector<MetricBundle> sample_bundles;
    sample_bundles.reserve(samples.size());
    for (const auto& s : samples) {
        sample_bundles.push_back(compute_metrics(s, tweet_corpus(s), stopwords));
    }
    return divergence_profile(candidate.id, bundle, sample_bundles, background_diversity, n_bins);
}

} // namespace isd
