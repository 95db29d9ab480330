#include <cmath>

#include "isd/error.hpp"
#include "isd/kernels.hpp"
#include "isd/metrics.hpp"

namespace isd {

namespace {

kernels::CsrView csr(const UndirectedGraph& g) { return {g.offsets, g.targets}; }

} // namespace

EigenvectorResult eigenvector_centrality(const UndirectedGraph& g, const PowerIterationOptions& options) {
    const std::size_t n = g.size();
    if (n == 0) {
        throw GraphError("eigenvector centrality needs at least one node");
    }
    if (!is_connected(g)) {
        throw GraphError("eigenvector centrality needs a connected graph");
    }
    EigenvectorResult result;
    if (n == 1) {
        result.centrality = {1.0};
        result.converged = true;
        return result;
    }

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    for (int it = 1; it <= options.max_iterations; ++it) {
        kernels::spmv_shifted(csr(g), x, options.shift, y);
        const double norm = std::sqrt(kernels::dot(y, y));
        kernels::scale(y, 1.0 / norm);
        const double step = std::sqrt(kernels::squared_distance(x, y));
        x.swap(y);
        result.iterations = it;
        if (step < options.tolerance) {
            result.converged = true;
            break;
        }
    }

    kernels::spmv_shifted(csr(g), x, 0.0, y);
    result.eigenvalue = kernels::dot(x, y);
    result.centrality = std::move(x);
    return result;
}

NodeScores eigenvector_centrality(const PropertyGraph& g) {
    const UndirectedGraph u = project_undirected(g);
    const auto r = eigenvector_centrality(u);
    NodeScores scores;
    for (std::size_t i = 0; i < u.size(); ++i) {
        scores[u.ids[i]] = r.centrality[i];
    }
    return scores;
}

} // namespace isd
