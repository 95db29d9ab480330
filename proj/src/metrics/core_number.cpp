#include <algorithm>

#include "isd/metrics.hpp"

namespace isd {

// Bucket-sorted minimum-degree peeling (Batagelj & Zaversnik), O(n + m).
std::vector<std::int64_t> core_number(const UndirectedGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::int64_t> core(n, 0);
    if (n == 0) {
        return core;
    }
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        max_deg = std::max(max_deg, deg[u]);
    }

    std::vector<std::uint32_t> bin(max_deg + 1, 0);
    for (std::uint32_t d : deg) {
        ++bin[d];
    }
    std::uint32_t start = 0;
    for (auto& b : bin) {
        const std::uint32_t count = b;
        b = start;
        start += count;
    }
    std::vector<std::uint32_t> vert(n);
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        pos[u] = bin[deg[u]]++;
        vert[pos[u]] = u;
    }
    for (std::uint32_t d = max_deg; d > 0; --d) {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = vert[i];
        for (std::uint32_t u : g.row(v)) {
            if (deg[u] > deg[v]) {
                const std::uint32_t du = deg[u];
                const std::uint32_t pu = pos[u];
                const std::uint32_t pw = bin[du];
                const std::uint32_t w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        core[u] = deg[u];
    }
    return core;
}

std::map<std::string, std::int64_t> core_number(const PropertyGraph& g) {
    const UndirectedGraph u = project_undirected(g);
    const auto values = core_number(u);
    std::map<std::string, std::int64_t> scores;
    for (std::size_t i = 0; i < u.size(); ++i) {
        scores[u.ids[i]] = values[i];
    }
    return scores;
}

} // namespace isd
