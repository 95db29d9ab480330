#include <algorithm>
#include <map>
#include <span>

#include "isd/graph.hpp"

namespace isd {

UndirectedGraph project_undirected(const PropertyGraph& g) {
    UndirectedGraph u;
    const std::size_t n = g.node_count();
    u.ids.reserve(n);
    for (const Node& node : g.nodes()) {
        u.ids.push_back(node.id);
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
    raw.reserve(g.edge_count());
    u.pair_of_edge.assign(g.edge_count(), -1);
    for (const Edge& e : g.edges()) {
        auto a = static_cast<std::uint32_t>(g.node_index(e.source));
        auto b = static_cast<std::uint32_t>(g.node_index(e.target));
        if (a == b) {
            continue;
        }
        raw.emplace_back(std::min(a, b), std::max(a, b));
    }
    u.pairs = raw;
    std::sort(u.pairs.begin(), u.pairs.end());
    u.pairs.erase(std::unique(u.pairs.begin(), u.pairs.end()), u.pairs.end());

    std::size_t r = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if (e.source == e.target) {
            continue;
        }
        auto it = std::lower_bound(u.pairs.begin(), u.pairs.end(), raw[r++]);
        u.pair_of_edge[i] = it - u.pairs.begin();
    }

    std::vector<std::uint32_t> degree(n, 0);
    for (auto [a, b] : u.pairs) {
        ++degree[a];
        ++degree[b];
    }
    u.offsets.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        u.offsets[i + 1] = u.offsets[i] + degree[i];
    }
    u.targets.assign(u.offsets[n], 0);
    std::vector<std::uint32_t> fill(u.offsets.begin(), u.offsets.end() - 1);
    for (auto [a, b] : u.pairs) {
        u.targets[fill[a]++] = b;
        u.targets[fill[b]++] = a;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(u.targets.begin() + u.offsets[i], u.targets.begin() + u.offsets[i + 1]);
    }
    return u;
}

} // namespace isd

namespace isd {

bool is_connected(const UndirectedGraph& g) {
    const std::size_t n = g.size();
    if (n == 0) {
        return false;
    }
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v : g.row(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

} // namespace isd
