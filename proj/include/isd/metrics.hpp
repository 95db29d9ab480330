#pragma once

// Per-node / per-edge network metrics on the undirected projection of a graph,
// plus the vocabulary-diversity measure over a text corpus.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "isd/candidates.hpp"
#include "isd/graph.hpp"

namespace isd {

enum class Metric { Ev, Ec, Nc, Sc, Z, Mu };

inline constexpr std::array<Metric, 6> kMetrics = {Metric::Ev, Metric::Ec, Metric::Nc,
                                                   Metric::Sc, Metric::Z,  Metric::Mu};

std::string_view metric_name(Metric m);

using NodeScores = std::map<std::string, double>;
using EdgeScores = std::map<std::string, double>;

struct MetricBundle {
    NodeScores ev; // eigenvector centrality
    EdgeScores ec; // edge betweenness
    NodeScores nc; // node betweenness
    NodeScores sc; // subgraph centrality
    NodeScores z;  // average neighbor degree
    std::map<std::string, std::int64_t> mu; // core number
    double diversity = 0.0;

    /// Metric values in key order, as fed to the histograms.
    std::vector<double> values(Metric m) const;
};

struct PowerIterationOptions {
    double tolerance = 1e-10; // on the Euclidean distance between iterates
    int max_iterations = 1000;
    double shift = 0.1; // iterate on A + shift*I to damp bipartite oscillation
};

struct EigenvectorResult {
    std::vector<double> centrality; // unit Euclidean norm, non-negative
    double eigenvalue = 0.0;        // Rayleigh quotient of A
    int iterations = 0;
    bool converged = false;
};

/// Principal eigenvector by power iteration. Throws GraphError on empty or
/// disconnected input. A single node gets centrality 1.
EigenvectorResult eigenvector_centrality(const UndirectedGraph& g, const PowerIterationOptions& options = {});
NodeScores eigenvector_centrality(const PropertyGraph& g);

/// Shortest-path betweenness over unordered pairs, unit edge lengths (Brandes).
struct BetweennessResult {
    std::vector<double> node; // per node, endpoints excluded
    std::vector<double> pair; // per UndirectedGraph::pairs entry
};

BetweennessResult betweenness(const UndirectedGraph& g);
/// Keyed by edge id; edges collapsing onto one undirected pair share its value.
EdgeScores edge_betweenness(const PropertyGraph& g);
NodeScores node_betweenness(const PropertyGraph& g);

enum class SubgraphCentralityMethod { Auto, Spectral, Series };

/// Dense eigendecomposition up to this many nodes under Auto; series beyond.
inline constexpr std::size_t kSpectralNodeLimit = 2000;
/// Highest power kept by the series method. Per-node truncation error is
/// bounded by lambda_max^31 / 31!.
inline constexpr int kSeriesTerms = 30;

std::vector<double> subgraph_centrality(const UndirectedGraph& g,
                                        SubgraphCentralityMethod method = SubgraphCentralityMethod::Auto);
NodeScores subgraph_centrality(const PropertyGraph& g);

std::vector<double> average_neighbor_degree(const UndirectedGraph& g);
NodeScores average_neighbor_degree(const PropertyGraph& g);

std::vector<std::int64_t> core_number(const UndirectedGraph& g);
std::map<std::string, std::int64_t> core_number(const PropertyGraph& g);

using StopwordSet = std::unordered_set<std::string>;

/// Bundled English stopword list.
const StopwordSet& default_stopwords();
/// One word per line; '#' starts a comment.
StopwordSet load_stopwords(const std::string& path);

/// Type-token ratio of the corpus after lowercasing, dropping stopwords and
/// tokens shorter than 2 characters. 0 for an empty result.
double vocabulary_diversity(const std::vector<std::string>& corpus, const StopwordSet& stopwords);

/// All six network metrics over `g` plus the diversity of `corpus`.
/// Throws GraphError when `g` is empty or disconnected.
MetricBundle compute_metrics(const PropertyGraph& g, const std::vector<std::string>& corpus,
                             const StopwordSet& stopwords);
MetricBundle compute_metrics(const CandidateSubgraph& c, const StopwordSet& stopwords);

} // namespace isd
