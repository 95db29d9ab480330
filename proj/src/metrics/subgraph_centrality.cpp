#include <cmath>

#include <Eigen/Dense>

#include "isd/error.hpp"
#include "isd/kernels.hpp"
#include "isd/metrics.hpp"

namespace isd {

namespace {

// SC(i) = sum_j v_j(i)^2 exp(lambda_j) over the eigenpairs of A.
std::vector<double> spectral(const UndirectedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.pairs) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw GraphError("subgraph centrality: eigendecomposition failed");
    }
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = solver.eigenvectors();
    std::vector<double> weights(g.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        weights[static_cast<std::size_t>(j)] = std::exp(solver.eigenvalues()(j));
    }
    std::vector<double> out(g.size());
    kernels::weighted_square_rowsum({rows.data(), static_cast<std::size_t>(rows.size())}, weights, out);
    return out;
}

// SC(i) = sum_{k <= kSeriesTerms} (A^k)_ii / k!, one propagation chain per node.
std::vector<double> series(const UndirectedGraph& g) {
    const std::size_t n = g.size();
    const kernels::CsrView view{g.offsets, g.targets};
    std::vector<double> out(n);
    std::vector<double> cur(n);
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(cur.begin(), cur.end(), 0.0);
        cur[i] = 1.0;
        double acc = 1.0;
        for (int k = 1; k <= kSeriesTerms; ++k) {
            kernels::spmv_shifted(view, cur, 0.0, next);
            kernels::scale(next, 1.0 / k);
            acc += next[i];
            cur.swap(next);
        }
        out[i] = acc;
    }
    return out;
}

} // namespace

std::vector<double> subgraph_centrality(const UndirectedGraph& g, SubgraphCentralityMethod method) {
    if (g.size() == 0) {
        throw GraphError("subgraph centrality needs at least one node");
    }
    if (method == SubgraphCentralityMethod::Auto) {
        method = g.size() <= kSpectralNodeLimit ? SubgraphCentralityMethod::Spectral
                                                : SubgraphCentralityMethod::Series;
    }
    return method == SubgraphCentralityMethod::Spectral ? spectral(g) : series(g);
}

NodeScores subgraph_centrality(const PropertyGraph& g) {
    const UndirectedGraph u = project_undirected(g);
    const auto values = subgraph_centrality(u);
    NodeScores scores;
    for (std::size_t i = 0; i < u.size(); ++i) {
        scores[u.ids[i]] = values[i];
    }
    return scores;
}

} // namespace isd
