#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "isd/error.hpp"
#include "isd/kernels.hpp"
#include "isd/metrics.hpp"
#include "oracles.hpp"

using namespace isd;

namespace {

PropertyGraph graph_of(int n, std::vector<std::pair<int, int>> edges) {
    PropertyGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node(std::string(1, static_cast<char>('a' + i)), "x");
    }
    for (auto [u, v] : edges) {
        g.add_edge(std::string(1, static_cast<char>('a' + u)), std::string(1, static_cast<char>('a' + v)), "e");
    }
    return g;
}

PropertyGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return graph_of(n, e);
}

PropertyGraph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return graph_of(n, e);
}

const PropertyGraph kStar3 = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});

} // namespace

TEST(Eigenvector, TriangleAndPath) {
    for (const auto& [id, v] : eigenvector_centrality(complete(3))) {
        EXPECT_NEAR(v, 1.0 / std::sqrt(3.0), 1e-9) << id;
    }
    const auto p = eigenvector_centrality(path(3));
    EXPECT_NEAR(p.at("b"), 1.0 / std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(p.at("a"), 0.5, 1e-9);
    EXPECT_NEAR(p.at("c"), 0.5, 1e-9);
}

TEST(Eigenvector, SingleNodeAndDisconnected) {
    EXPECT_DOUBLE_EQ(eigenvector_centrality(graph_of(1, {})).at("a"), 1.0);
    EXPECT_THROW(eigenvector_centrality(graph_of(2, {})), GraphError);
}

TEST(Eigenvector, BipartiteConverges) {
    const auto r = eigenvector_centrality(project_undirected(path(6)));
    EXPECT_TRUE(r.converged);
    EXPECT_LT(r.iterations, 1000);
}

TEST(Eigenvector, MatchesDenseEigensolver) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        const auto g = project_undirected(oracle::random_connected_graph(rng, n, 0.15));
        const auto a = oracle::adjacency(g);
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = a[i][j];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        Eigen::VectorXd top = es.eigenvectors().col(n - 1).cwiseAbs();
        const double gap = es.eigenvalues()(n - 1) - es.eigenvalues()(n - 2);
        const auto r = eigenvector_centrality(g);
        EXPECT_NEAR(r.eigenvalue, es.eigenvalues()(n - 1), 1e-8);
        if (gap > 1e-3) {
            for (int i = 0; i < n; ++i) {
                EXPECT_NEAR(r.centrality[i], top(i), 1e-6);
            }
        }
        EXPECT_LE(oracle::eigen_residual(a, r.centrality), 1e-6);
    }
}

TEST(Betweenness, HandCountedExamples) {
    EXPECT_DOUBLE_EQ(edge_betweenness(graph_of(2, {{0, 1}})).begin()->second, 1.0);

    const auto pe = edge_betweenness(path(3));
    EXPECT_DOUBLE_EQ(pe.at(edge_id("a", "b", "e")), 2.0);
    EXPECT_DOUBLE_EQ(pe.at(edge_id("b", "c", "e")), 2.0);
    for (const auto& [id, v] : edge_betweenness(complete(3))) {
        EXPECT_DOUBLE_EQ(v, 1.0) << id;
    }

    const auto pn = node_betweenness(path(3));
    EXPECT_DOUBLE_EQ(pn.at("b"), 1.0);
    EXPECT_DOUBLE_EQ(pn.at("a"), 0.0);
    for (const auto& [id, v] : node_betweenness(complete(3))) {
        EXPECT_DOUBLE_EQ(v, 0.0);
    }
    EXPECT_DOUBLE_EQ(node_betweenness(kStar3).at("a"), 3.0);
}

TEST(Betweenness, ParallelEdgesShareThePairValue) {
    PropertyGraph g = path(3);
    g.add_edge("b", "a", "e");
    const auto eb = edge_betweenness(g);
    EXPECT_EQ(eb.size(), 3u);
    EXPECT_DOUBLE_EQ(eb.at(edge_id("b", "a", "e")), eb.at(edge_id("a", "b", "e")));
}

TEST(Betweenness, MatchesShortestPathEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = project_undirected(oracle::random_connected_graph(rng, n, 0.3));
        const auto ref = oracle::brute_force_betweenness(oracle::adjacency(g));
        const auto got = betweenness(g);
        for (int i = 0; i < n; ++i) {
            EXPECT_NEAR(got.node[i], ref.node[i], 1e-9);
        }
        for (std::size_t p = 0; p < g.pairs.size(); ++p) {
            const auto [u, v] = g.pairs[p];
            EXPECT_NEAR(got.pair[p], ref.edge.at({static_cast<int>(u), static_cast<int>(v)}), 1e-9);
        }
    }
}

TEST(SubgraphCentrality, ClosedForms) {
    EXPECT_DOUBLE_EQ(subgraph_centrality(graph_of(1, {})).at("a"), 1.0);
    for (const auto& [id, v] : subgraph_centrality(graph_of(2, {{0, 1}}))) {
        EXPECT_NEAR(v, std::cosh(1.0), 1e-12);
    }
    const double k3 = (std::exp(2.0) + 2.0 * std::exp(-1.0)) / 3.0;
    for (const auto& [id, v] : subgraph_centrality(complete(3))) {
        EXPECT_NEAR(v, k3, 1e-12);
    }
}

TEST(SubgraphCentrality, SpectralAndSeriesAgreeWithOracle) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = project_undirected(oracle::random_connected_graph(rng, n, 0.4));
        const auto ref = oracle::series_subgraph_centrality(oracle::adjacency(g));
        const auto spectral = subgraph_centrality(g, SubgraphCentralityMethod::Spectral);
        const auto series = subgraph_centrality(g, SubgraphCentralityMethod::Series);
        for (int i = 0; i < n; ++i) {
            EXPECT_NEAR(spectral[i], ref[i], 1e-6 * ref[i]);
            EXPECT_NEAR(series[i], ref[i], 1e-9 * ref[i]);
        }
    }
}

TEST(SubgraphCentrality, BackendsAgree) {
    if (!kernels::avx2_available()) {
        GTEST_SKIP();
    }
    std::mt19937_64 rng(3);
    const auto g = project_undirected(oracle::random_connected_graph(rng, 120, 0.05));
    const auto saved = kernels::active_backend();
    kernels::set_backend(kernels::Backend::Scalar);
    const auto s = subgraph_centrality(g);
    const auto e = eigenvector_centrality(g);
    kernels::set_backend(kernels::Backend::Avx2);
    const auto v = subgraph_centrality(g);
    const auto f = eigenvector_centrality(g);
    kernels::set_backend(saved);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(s[i], v[i], 1e-10 * s[i]);
        EXPECT_NEAR(e.centrality[i], f.centrality[i], 1e-9);
    }
}

TEST(AverageNeighborDegree, Examples) {
    for (const auto& [id, v] : average_neighbor_degree(complete(3))) {
        EXPECT_DOUBLE_EQ(v, 2.0);
    }
    const auto s = average_neighbor_degree(kStar3);
    EXPECT_DOUBLE_EQ(s.at("a"), 1.0);
    EXPECT_DOUBLE_EQ(s.at("b"), 3.0);
    const auto p = average_neighbor_degree(path(3));
    EXPECT_DOUBLE_EQ(p.at("a"), 2.0);
    EXPECT_DOUBLE_EQ(p.at("b"), 1.0);
    EXPECT_DOUBLE_EQ(average_neighbor_degree(graph_of(1, {})).at("a"), 0.0);
}

TEST(CoreNumber, Examples) {
    for (const auto& [id, v] : core_number(complete(3))) {
        EXPECT_EQ(v, 2);
    }
    for (const auto& [id, v] : core_number(path(5))) {
        EXPECT_EQ(v, 1);
    }
    auto k4 = complete(4);
    k4.add_node("p", "x");
    k4.add_edge("a", "p", "e");
    const auto c = core_number(k4);
    EXPECT_EQ(c.at("a"), 3);
    EXPECT_EQ(c.at("d"), 3);
    EXPECT_EQ(c.at("p"), 1);
}

TEST(CoreNumber, KCoreHasMinimumDegreeK) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = project_undirected(oracle::random_connected_graph(rng, 30, 0.2));
        const auto mu = core_number(g);
        for (std::size_t u = 0; u < g.size(); ++u) {
            EXPECT_LE(mu[u], static_cast<std::int64_t>(g.degree(u)));
            std::int64_t inside = 0;
            for (auto v : g.row(u)) {
                inside += mu[v] >= mu[u];
            }
            EXPECT_GE(inside, mu[u]);
        }
    }
}

TEST(Diversity, TypeTokenRatio) {
    const auto& sw = default_stopwords();
    EXPECT_DOUBLE_EQ(vocabulary_diversity({"alpha beta", "gamma delta"}, sw), 1.0);
    EXPECT_DOUBLE_EQ(vocabulary_diversity({"alpha alpha alpha alpha"}, sw), 0.25);
    EXPECT_DOUBLE_EQ(vocabulary_diversity({}, sw), 0.0);
    EXPECT_DOUBLE_EQ(vocabulary_diversity({"the and of a"}, sw), 0.0);
    EXPECT_DOUBLE_EQ(vocabulary_diversity({"Alpha, ALPHA! beta x"}, sw), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(vocabulary_diversity({"gamma delta", "alpha beta"}, sw),
                     vocabulary_diversity({"alpha beta", "gamma delta"}, sw));
}

TEST(ComputeMetrics, TriangleBundle) {
    const auto b = compute_metrics(complete(3), {}, default_stopwords());
    for (const auto& [id, v] : b.ev) {
        EXPECT_NEAR(v, 1.0 / std::sqrt(3.0), 1e-9);
    }
    for (const auto& [id, v] : b.nc) {
        EXPECT_EQ(v, 0.0);
    }
    for (const auto& [id, v] : b.mu) {
        EXPECT_EQ(v, 2);
    }
    EXPECT_EQ(b.ec.size(), 3u);
    EXPECT_EQ(b.diversity, 0.0);
    EXPECT_EQ(b.values(Metric::Mu), (std::vector<double>{2, 2, 2}));
    EXPECT_THROW(compute_metrics(graph_of(2, {}), {}, default_stopwords()), GraphError);
}
