#include <stdexcept>

#include "isd/compare.hpp"
#include "isd/random.hpp"

namespace isd {

std::vector<PropertyGraph> sample_background(const PropertyGraph& g, std::size_t target_size, std::size_t n_walks,
                                             std::uint64_t seed, const WalkOptions& options) {
    if (g.empty()) {
        throw std::invalid_argument("sample_background: empty graph");
    }
    if (target_size == 0 || target_size > g.node_count()) {
        throw std::invalid_argument("sample_background: target size must be in [1, node count]");
    }
    const UndirectedGraph u = project_undirected(g);
    const std::size_t n = u.size();
    const std::size_t step_cap = options.step_cap_factor * target_size;

    Rng rng(seed);
    std::vector<PropertyGraph> samples;
    samples.reserve(n_walks);
    std::vector<char> visited(n);
    for (std::size_t w = 0; w < n_walks; ++w) {
        std::fill(visited.begin(), visited.end(), 0);
        std::size_t current = uniform_index(rng, n);
        visited[current] = 1;
        std::size_t distinct = 1;
        for (std::size_t step = 0; distinct < target_size && step < step_cap; ++step) {
            const std::uint32_t deg = u.degree(current);
            if (deg == 0 || uniform01(rng) < options.teleport) {
                current = uniform_index(rng, n);
            } else {
                current = u.row(current)[uniform_index(rng, deg)];
            }
            if (!visited[current]) {
                visited[current] = 1;
                ++distinct;
            }
        }
        std::vector<std::string> ids;
        ids.reserve(distinct);
        for (std::size_t i = 0; i < n; ++i) {
            if (visited[i]) {
                ids.push_back(u.ids[i]);
            }
        }
        samples.push_back(largest_component(induced_subgraph(g, ids)));
    }
    return samples;
}

} // namespace isd
