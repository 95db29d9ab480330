#include "isd/error.hpp"
#include "isd/metrics.hpp"

namespace isd {

std::string_view metric_name(Metric m) {
    switch (m) {
    case Metric::Ev: return "ev";
    case Metric::Ec: return "ec";
    case Metric::Nc: return "nc";
    case Metric::Sc: return "sc";
    case Metric::Z: return "z";
    case Metric::Mu: return "mu";
    }
    return "?";
}

std::vector<double> MetricBundle::values(Metric m) const {
    std::vector<double> out;
    auto collect = [&](const auto& map) {
        out.reserve(map.size());
        for (const auto& [_, v] : map) {
            out.push_back(static_cast<double>(v));
        }
    };
    switch (m) {
    case Metric::Ev: collect(ev); break;
    case Metric::Ec: collect(ec); break;
    case Metric::Nc: collect(nc); break;
    case Metric::Sc: collect(sc); break;
    case Metric::Z: collect(z); break;
    case Metric::Mu: collect(mu); break;
    }
    return out;
}

MetricBundle compute_metrics(const PropertyGraph& g, const std::vector<std::string>& corpus,
                             const StopwordSet& stopwords) {
    const UndirectedGraph u = project_undirected(g);
    if (!is_connected(u)) {
        throw GraphError("metrics need a connected, non-empty graph");
    }
    const auto ev = eigenvector_centrality(u);
    const auto bt = betweenness(u);
    const auto sc = subgraph_centrality(u);
    const auto z = average_neighbor_degree(u);
    const auto mu = core_number(u);

    MetricBundle b;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::string& id = u.ids[i];
        b.ev[id] = ev.centrality[i];
        b.nc[id] = bt.node[i];
        b.sc[id] = sc[i];
        b.z[id] = z[i];
        b.mu[id] = mu[i];
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto p = u.pair_of_edge[i];
        b.ec[g.edges()[i].id] = p < 0 ? 0.0 : bt.pair[static_cast<std::size_t>(p)];
    }
    b.diversity = vocabulary_diversity(corpus, stopwords);
    return b;
}

MetricBundle compute_metrics(const CandidateSubgraph& c, const StopwordSet& stopwords) {
    return compute_metrics(c.graph, c.corpus, stopwords);
}

} // namespace isd
