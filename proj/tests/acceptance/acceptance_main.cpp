// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "isd/compare.hpp"
#include "isd/discover.hpp"
#include "isd/log.hpp"
#include "isd/metrics.hpp"
#include "isd/pipeline.hpp"

using namespace isd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int n, const char* title, double limit_s, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s budget)";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s -- %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", n, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1 ---------------------------------------------------------------------------

Outcome centrality_oracles() {
    std::mt19937_64 rng(20240101);
    double worst_bt = 0, worst_sc = 0, worst_res = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto pg = oracle::random_connected_graph(rng, n, 0.35);
        const auto g = project_undirected(pg);
        const auto a = oracle::adjacency(g);

        const auto ref = oracle::brute_force_betweenness(a);
        const auto eb = edge_betweenness(pg);
        const auto nb = node_betweenness(pg);
        for (int i = 0; i < n; ++i) {
            worst_bt = std::max(worst_bt, std::abs(nb.at(g.ids[i]) - ref.node[i]));
        }
        for (std::size_t e = 0; e < pg.edge_count(); ++e) {
            const auto p = g.pair_of_edge[e];
            if (p < 0) {
                continue;
            }
            const auto [u, v] = g.pairs[static_cast<std::size_t>(p)];
            worst_bt = std::max(worst_bt, std::abs(eb.at(pg.edges()[e].id) -
                                                   ref.edge.at({static_cast<int>(u), static_cast<int>(v)})));
        }

        const auto series = oracle::series_subgraph_centrality(a);
        const auto sc = subgraph_centrality(pg);
        for (int i = 0; i < n; ++i) {
            worst_sc = std::max(worst_sc, std::abs(sc.at(g.ids[i]) - series[i]));
        }

        const auto ev = eigenvector_centrality(pg);
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) {
            x[i] = ev.at(g.ids[i]);
        }
        worst_res = std::max(worst_res, oracle::eigen_residual(a, x));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "200 graphs; max |betweenness err| %.2e, max |sc err| %.2e, max residual %.2e",
                  worst_bt, worst_sc, worst_res);
    return {worst_bt <= 1e-9 && worst_sc <= 1e-6 && worst_res <= 1e-6, buf};
}

// 2 ---------------------------------------------------------------------------

std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n, std::size_t lo, std::size_t hi) {
    std::uniform_real_distribution<double> d(0, 1);
    std::vector<double> p(n, 0.0);
    for (std::size_t i = lo; i < hi; ++i) {
        p[i] = d(rng) < 0.2 ? 0.0 : d(rng);
    }
    p[lo + rng() % (hi - lo)] += 0.5;
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) {
        x /= s;
    }
    return p;
}

Outcome jsd_properties() {
    std::mt19937_64 rng(77);
    double worst_sym = 0, worst_self = 0, worst_disjoint = 0, max_jsd = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        const auto p = random_distribution(rng, n, 0, n);
        const auto q = random_distribution(rng, n, 0, n);
        const double pq = js_divergence(p, q);
        worst_sym = std::max(worst_sym, std::abs(pq - js_divergence(q, p)));
        worst_self = std::max(worst_self, std::abs(js_divergence(p, p)));
        max_jsd = std::max(max_jsd, pq);

        const std::size_t cut = 1 + rng() % (n - 1);
        const auto a = random_distribution(rng, n, 0, cut);
        const auto b = random_distribution(rng, n, cut, n);
        worst_disjoint = std::max(worst_disjoint, std::abs(js_divergence(a, b) - 1.0));
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "1000 pairs; max asymmetry %.1e, max JSD(p,p) %.1e, max JSD %.6f, max |disjoint - 1| %.1e", worst_sym,
                  worst_self, max_jsd, worst_disjoint);
    return {worst_sym <= 1e-12 && worst_self <= 1e-12 && max_jsd <= 1.0 && worst_disjoint <= 1e-12, buf};
}

// 3 ---------------------------------------------------------------------------

std::vector<double> random_values(std::mt19937_64& rng) {
    const std::size_t n = 1 + rng() % 300;
    std::vector<double> v(n);
    const int kind = static_cast<int>(rng() % 4);
    std::normal_distribution<double> normal(rng() % 100, 1 + rng() % 20);
    std::exponential_distribution<double> expo(0.1);
    for (auto& x : v) {
        switch (kind) {
        case 0: x = normal(rng); break;
        case 1: x = expo(rng); break;
        case 2: x = static_cast<double>(rng() % 5); break; // heavy ties, integer-valued (core numbers)
        default: x = 3.25; break;                           // degenerate range
        }
    }
    return v;
}

Outcome cut2bin_compatibility() {
    std::mt19937_64 rng(31337);
    int bad = 0;
    double worst_sum = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto cand = random_values(rng);
        const auto ref = random_values(rng);
        const std::size_t bins = 1 + rng() % 30;
        const auto r = compare_histograms(cand, ref, bins);
        const double sc = std::accumulate(r.candidate.normalized.begin(), r.candidate.normalized.end(), 0.0);
        const double sr = std::accumulate(r.reference.normalized.begin(), r.reference.normalized.end(), 0.0);
        worst_sum = std::max({worst_sum, std::abs(sc - 1.0), std::abs(sr - 1.0)});
        if (r.candidate.edges != r.reference.edges || r.candidate.edges != r.edges ||
            r.candidate.total() != static_cast<std::int64_t>(cand.size()) ||
            r.reference.total() != static_cast<std::int64_t>(ref.size()) || r.jsd < 0 || r.jsd > 1) {
            ++bad;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "1000 trials; %d edge/mass violations, max |sum - 1| %.1e", bad, worst_sum);
    return {bad == 0 && worst_sum <= 1e-9, buf};
}

// 4 ---------------------------------------------------------------------------

Outcome nesting_invariant() {
    std::mt19937_64 rng(4242);
    int nesting = 0, perm = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng() % 15;
        std::vector<DivergenceRecord> rs(n);
        std::uniform_real_distribution<double> d(0, 1);
        for (std::size_t i = 0; i < n; ++i) {
            rs[i].candidate_id = "c" + std::to_string(i);
            for (auto& x : rs[i].jsd) {
                x = trial % 2 ? std::round(d(rng) * 5) / 5 : d(rng);
            }
            rs[i].diversity_ratio = d(rng);
            rs[i].sample_count = 3;
        }
        const auto v = discover(rs, 3, 0.5);
        for (const auto& r : rs) {
            const auto& id = r.candidate_id;
            if (!(v.v3.at(id) <= v.v2.at(id) && v.v2.at(id) <= v.v1.at(id))) {
                ++nesting;
            }
        }
        auto shuffled = rs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto w = discover(shuffled, 3, 0.5);
        if (v.v1 != w.v1 || v.v2 != w.v2 || v.v3 != w.v3 || v.l != w.l || v.top_k != w.top_k ||
            v.interesting != w.interesting || v.diversity_flags != w.diversity_flags) {
            ++perm;
        }
    }
    return {nesting == 0 && perm == 0, "500 record sets; " + std::to_string(nesting) + " nesting violations, " +
                                           std::to_string(perm) + " permutation mismatches"};
}

// 5, 6, 8 ---------------------------------------------------------------------

const fs::path kWork = fs::temp_directory_path() / "isd-acceptance";

PipelineConfig pipeline_config(const fs::path& input, const fs::path& out, std::uint64_t seed) {
    PipelineConfig c;
    c.input = input.string();
    c.keywords = {"ados"};
    c.group_pattern = "(:tweet)-[:uses]->(:hashtag{text})";
    c.rule = ConstructionKind::G1;
    c.seed = seed;
    c.output_dir = out.string();
    c.write_histograms = false;
    c.report_metric_values = false;
    return c; // 3 walks, 20 bins, k = 3, tau_d = 0.5
}

fs::path write_dataset(const SynthSpec& spec, const std::string& name) {
    const auto p = kWork / (name + ".jsonl");
    std::ofstream out(p);
    write_tweets_jsonl(synth_generate(spec), out);
    return p;
}

std::string id_of(const PipelineResult& r, const std::string& hashtag) {
    for (const auto& c : r.candidates) {
        if (!c.group_key.empty() && c.group_key.back().second == hashtag) {
            return c.id;
        }
    }
    return {};
}

SynthSpec planted_spec(std::uint64_t seed) {
    SynthSpec s;
    s.background_tweets = 5000;
    s.seed = seed;
    s.planted = {{Archetype::DenseCore, 30, 1.0, 5},
                 {Archetype::BroadStar, 20, 0.3, 400},
                 {Archetype::Bridge, 20, 0.5, 400}};
    return s;
}

Outcome planted_recovery() {
    int core_hits = 0, bridge_hits = 0, both = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto input = write_dataset(planted_spec(seed), "planted");
        const auto r = run_pipeline(pipeline_config(input, kWork / "planted-out", seed));
        const auto core = id_of(r, planted_hashtag(Archetype::DenseCore, 0));
        const auto bridge = id_of(r, planted_hashtag(Archetype::Bridge, 0));
        const auto& v2 = r.verdict.top_k[1];
        const bool c = !core.empty() && r.verdict.interesting.contains(core);
        const bool b = !bridge.empty() && std::find(v2.begin(), v2.end(), bridge) != v2.end();
        core_hits += c;
        bridge_hits += b;
        both += c && b;
    }
    return {both >= 18, "20 seeds; dense core interesting in " + std::to_string(core_hits) +
                            ", bridge in v2 top-k in " + std::to_string(bridge_hits) + ", both in " +
                            std::to_string(both) + " (need >= 18)"};
}

Outcome negative_control() {
    int empty = 0;
    std::size_t groups = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SynthSpec s;
        s.background_tweets = 5000;
        s.seed = 1000 + seed;
        const auto input = write_dataset(s, "control");
        const auto r = run_pipeline(pipeline_config(input, kWork / "control-out", seed));
        empty += r.verdict.interesting.empty();
        groups += r.candidates.size();
    }
    return {empty >= 18, "20 seeds (" + std::to_string(groups / 20) + " random-hashtag groups each); interesting "
                         "empty in " + std::to_string(empty) + " (need >= 18)"};
}

Outcome determinism() {
    SynthSpec s = planted_spec(99);
    s.background_tweets = 2000;
    const auto input = write_dataset(s, "determinism");
    auto cfg = pipeline_config(input, kWork / "det-a", 123);
    cfg.write_histograms = true;
    cfg.report_metric_values = true;
    const auto a = run_pipeline(cfg);
    cfg.output_dir = (kWork / "det-b").string();
    const auto b = run_pipeline(cfg);
    const std::string ra = slurp(a.report_path);
    const std::string rb = slurp(b.report_path);
    bool same_hist = true;
    for (const auto& f : a.report["histograms"]) {
        same_hist &= slurp(kWork / "det-a" / f.get<std::string>()) == slurp(kWork / "det-b" / f.get<std::string>());
    }
    const bool ok = !ra.empty() && ra == rb && same_hist;
    return {ok, "two runs, " + std::to_string(ra.size()) + "-byte reports " + (ra == rb ? "identical" : "differ") +
                    ", " + std::to_string(a.report["histograms"].size()) + " histogram files " +
                    (same_hist ? "identical" : "differ")};
}

// 7 ---------------------------------------------------------------------------

Outcome soft_partition() {
    std::vector<TweetRecord> fixture(3);
    fixture[0] = {"1", "alice", "ados two tags", "2019-02-01", {"ados", "news"}, {"bob"}, {}, 4, 10};
    fixture[1] = {"2", "bob", "ados one tag", "2019-02-01", {"ados"}, {}, {}, 1, 3};
    fixture[2] = {"3", "carol", "other day", "2019-02-02", {"news"}, {"alice"}, {}, 0, 1};
    const auto g = ingest_tweets(fixture);
    const auto groups = group_nodes(g, parse_group_pattern("(:tweet{date})-[:uses]->(:hashtag{text})"));
    const auto memberships = std::count_if(groups.begin(), groups.end(), [](const NodeGroup& grp) {
        return std::find(grp.members.begin(), grp.members.end(), "tweet:1") != grp.members.end();
    });

    // G2 subset of G1 over random groups drawn from a synthetic background.
    SynthSpec s;
    s.background_tweets = 1500;
    s.seed = 5;
    s.hashtag_pool = 60;
    const auto bg = ingest_tweets(synth_generate(s));
    std::mt19937_64 rng(8);
    std::vector<std::string> tweets;
    for (const auto& n : bg.nodes()) {
        if (n.label == label::tweet) {
            tweets.push_back(n.id);
        }
    }
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        NodeGroup grp;
        grp.key = {{"random", std::to_string(trial)}};
        const std::size_t size = 1 + rng() % 40;
        for (std::size_t i = 0; i < size; ++i) {
            grp.members.push_back(tweets[rng() % tweets.size()]);
        }
        std::sort(grp.members.begin(), grp.members.end());
        grp.members.erase(std::unique(grp.members.begin(), grp.members.end()), grp.members.end());
        const auto g1 = construct_candidate(bg, grp, ConstructionKind::G1);
        const auto g2 = construct_candidate(bg, grp, ConstructionKind::G2);
        for (const auto& n : g2.graph.nodes()) {
            violations += !g1.graph.has_node(n.id);
        }
    }
    return {memberships == 2 && violations == 0, "two-hashtag tweet in " + std::to_string(memberships) +
                                                      " groups; G2-not-in-G1 nodes over 100 groups: " +
                                                      std::to_string(violations)};
}

} // namespace

int main() {
    log::set_level(log::Level::Warning);
    fs::remove_all(kWork);
    fs::create_directories(kWork);

    report(1, "centrality oracle equivalence", 30, centrality_oracles);
    report(2, "JSD properties", 5, jsd_properties);
    report(3, "cut2bin compatibility", 0, cut2bin_compatibility);
    report(4, "discover nesting and permutation invariance", 0, nesting_invariant);
    report(5, "planted-structure recovery", 300, planted_recovery);
    report(6, "negative control", 0, negative_control);
    report(7, "soft-partition semantics", 0, soft_partition);
    report(8, "determinism", 0, determinism);

    fs::remove_all(kWork);
    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
