#include <algorithm>

#include "isd/error.hpp"
#include "isd/metrics.hpp"

namespace isd {

BetweennessResult betweenness(const UndirectedGraph& g) {
    const std::size_t n = g.size();
    BetweennessResult result;
    result.node.assign(n, 0.0);
    result.pair.assign(g.pairs.size(), 0.0);

    // Pair index for every CSR slot.
    std::vector<std::uint32_t> slot_pair(g.targets.size());
    for (std::size_t u = 0; u < n; ++u) {
        for (std::uint32_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
            const std::uint32_t v = g.targets[e];
            const std::pair<std::uint32_t, std::uint32_t> key{std::min<std::uint32_t>(u, v),
                                                              std::max<std::uint32_t>(u, v)};
            slot_pair[e] = static_cast<std::uint32_t>(
                std::lower_bound(g.pairs.begin(), g.pairs.end(), key) - g.pairs.begin());
        }
    }

    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::uint32_t> order;
    order.reserve(n);

    for (std::uint32_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::uint32_t u = order[head];
            for (std::uint32_t v : g.row(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    order.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                }
            }
        }

        for (std::size_t k = order.size(); k-- > 1;) {
            const std::uint32_t w = order[k];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (std::uint32_t e = g.offsets[w]; e < g.offsets[w + 1]; ++e) {
                const std::uint32_t v = g.targets[e];
                if (dist[v] == dist[w] - 1) {
                    const double c = sigma[v] * coeff;
                    result.pair[slot_pair[e]] += c;
                    delta[v] += c;
                }
            }
            result.node[w] += delta[w];
        }
    }

    // Every unordered pair was counted from both endpoints.
    for (double& v : result.node) {
        v *= 0.5;
    }
    for (double& v : result.pair) {
        v *= 0.5;
    }
    return result;
}

namespace {

const UndirectedGraph connected_projection(const PropertyGraph& g, const char* what) {
    UndirectedGraph u = project_undirected(g);
    if (!is_connected(u)) {
        throw GraphError(std::string(what) + " needs a connected, non-empty graph");
    }
    return u;
}

} // namespace

EdgeScores edge_betweenness(const PropertyGraph& g) {
    const UndirectedGraph u = connected_projection(g, "edge betweenness");
    const auto r = betweenness(u);
    EdgeScores scores;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto p = u.pair_of_edge[i];
        scores[g.edges()[i].id] = p < 0 ? 0.0 : r.pair[static_cast<std::size_t>(p)];
    }
    return scores;
}

NodeScores node_betweenness(const PropertyGraph& g) {
    const UndirectedGraph u = connected_projection(g, "node betweenness");
    const auto r = betweenness(u);
    NodeScores scores;
    for (std::size_t i = 0; i < u.size(); ++i) {
        scores[u.ids[i]] = r.node[i];
    }
    return scores;
}

} // namespace isd
