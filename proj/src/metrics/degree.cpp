#include "isd/metrics.hpp"

namespace isd {

std::vector<double> average_neighbor_degree(const UndirectedGraph& g) {
    std::vector<double> out(g.size(), 0.0);
    for (std::size_t u = 0; u < g.size(); ++u) {
        const std::uint32_t d = g.degree(u);
        if (d == 0) {
            continue;
        }
        double sum = 0.0;
        for (std::uint32_t v : g.row(u)) {
            sum += g.degree(v);
        }
        out[u] = sum / d;
    }
    return out;
}

NodeScores average_neighbor_degree(const PropertyGraph& g) {
    const UndirectedGraph u = project_undirected(g);
    const auto values = average_neighbor_degree(u);
    NodeScores scores;
    for (std::size_t i = 0; i < u.size(); ++i) {
        scores[u.ids[i]] = values[i];
    }
    return scores;
}

} // namespace isd
