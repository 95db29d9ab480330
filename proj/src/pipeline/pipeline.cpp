#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "isd/log.hpp"
#include "isd/pipeline.hpp"
#include "isd/random.hpp"

namespace isd {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

// Runs one stage, prefixing any failure with the stage name. Config and data
// errors keep their category so the CLI can map them to exit codes.
template <typename F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    } catch (const DataError& e) {
        throw DataError(std::string(name) + ": " + e.what());
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(std::string(name) + ": " + e.what());
    }
}

ordered_json graph_summary(const PropertyGraph& g) {
    ordered_json j;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    ordered_json by_label = ordered_json::object();
    for (const char* l : {label::tweet, label::user, label::hashtag, label::url}) {
        by_label[l] = g.count_label(l);
    }
    j["node_labels"] = by_label;
    return j;
}

ordered_json key_json(const GroupKey& key) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : key) {
        j[k] = v;
    }
    return j;
}

template <typename Map>
ordered_json scores_json(const Map& m) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : m) {
        j[k] = v;
    }
    return j;
}

ordered_json bundle_json(const MetricBundle& b, bool values) {
    ordered_json j;
    j["diversity"] = b.diversity;
    ordered_json summary = ordered_json::object();
    for (const Metric m : kMetrics) {
        auto v = b.values(m);
        ordered_json s;
        s["count"] = v.size();
        if (!v.empty()) {
            std::sort(v.begin(), v.end());
            double sum = 0;
            for (double x : v) {
                sum += x;
            }
            s["min"] = v.front();
            s["max"] = v.back();
            s["mean"] = sum / static_cast<double>(v.size());
        }
        summary[std::string(metric_name(m))] = s;
    }
    j["summary"] = summary;
    if (values) {
        ordered_json vals;
        vals["ev"] = scores_json(b.ev);
        vals["ec"] = scores_json(b.ec);
        vals["nc"] = scores_json(b.nc);
        vals["sc"] = scores_json(b.sc);
        vals["z"] = scores_json(b.z);
        vals["mu"] = scores_json(b.mu);
        j["values"] = vals;
    }
    return j;
}

ordered_json record_json(const DivergenceRecord& r) {
    ordered_json j;
    ordered_json mean = ordered_json::object();
    ordered_json per = ordered_json::object();
    ordered_json shift = ordered_json::object();
    for (const Metric m : kMetrics) {
        const auto i = static_cast<std::size_t>(m);
        const std::string name(metric_name(m));
        mean[name] = r.jsd[i];
        per[name] = r.per_sample[i];
        shift[name] = r.median_shift[i] > 0 ? "higher" : (r.median_shift[i] < 0 ? "lower" : "same");
    }
    j["jsd"] = mean;
    j["per_sample"] = per;
    j["median_vs_background"] = shift;
    j["total"] = r.total();
    j["diversity"] = r.diversity;
    j["background_diversity"] = r.background_diversity;
    j["diversity_ratio"] = r.diversity_ratio;
    return j;
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::vector<std::string> annotate(const std::string& id, const DivergenceRecord& r, const Verdict& v,
                                  double tau_d) {
    std::vector<std::string> why;
    static constexpr const char* kAxis[3] = {"influence", "navigability", "propagativeness"};
    static constexpr Metric kLead[3] = {Metric::Ev, Metric::Ec, Metric::Nc};
    for (std::size_t a = 0; a < 3; ++a) {
        const auto& top = v.top_k[a];
        const auto it = std::find(top.begin(), top.end(), id);
        if (it != top.end()) {
            const auto rank = static_cast<std::size_t>(it - top.begin()) + 1;
            const double shift = r.median_shift[static_cast<std::size_t>(kLead[a])];
            why.push_back("top-" + std::to_string(top.size()) + " " + kAxis[a] + " (rank " + std::to_string(rank) +
                          ", " + std::string(metric_name(kLead[a])) + " jsd " +
                          fmt_double(r[kLead[a]]) + ", " + (shift >= 0 ? "above" : "below") + " background)");
        }
    }
    if (v.diversity_flags.at(id)) {
        why.push_back("low vocabulary diversity (ratio " + fmt_double(r.diversity_ratio) + " <= " +
                      fmt_double(tau_d) + ")");
    }
    if (v.l.contains(id)) {
        why.push_back("subgroup metrics (sc + mu) also diverge: uninterpretable, repartition recommended");
    }
    if (v.interesting.contains(id)) {
        why.push_back("interesting: ranks on every axis with a homogeneous vocabulary");
    }
    return why;
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) {
        throw PipelineError("cannot write '" + p.string() + "'");
    }
    out << content;
    if (!out) {
        throw PipelineError("write failed for '" + p.string() + "'");
    }
}

} // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    stage("config", [&] { validate(cfg); });

    const StopwordSet stopwords = stage("config", [&] {
        return cfg.stopwords_file ? load_stopwords(*cfg.stopwords_file) : default_stopwords();
    });
    const GroupPattern pattern = stage("config", [&] {
        try {
            return parse_group_pattern(cfg.group_pattern);
        } catch (const ParseError& e) {
            throw ConfigError(std::string("group_pattern: ") + e.what());
        }
    });
    const std::vector<ConstructionRule> rules = stage("config", [&] {
        if (!cfg.rules_file) {
            return std::vector<ConstructionRule>{};
        }
        std::ifstream in(*cfg.rules_file);
        if (!in) {
            throw ConfigError("cannot open rules file '" + *cfg.rules_file + "'");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            return parse_rule_file(ss.str());
        } catch (const ParseError& e) {
            throw ConfigError(std::string("rules: ") + e.what());
        }
    });

    const PropertyGraph g0 = stage("ingest", [&] { return ingest_tweets(read_tweets_jsonl_file(cfg.input)); });
    log::info("ingest: " + std::to_string(g0.node_count()) + " nodes, " + std::to_string(g0.edge_count()) + " edges");

    PropertyGraph background = stage("query", [&] { return initial_query(g0, cfg.keywords, cfg.date_from); });
    stage("rules", [&] {
        for (const auto& r : rules) {
            add_derived_edges(background, apply_rule(background, r));
        }
    });
    log::info("query: background graph: " + std::to_string(background.node_count()) + " nodes");

    const auto groups = stage("group", [&] { return group_nodes(background, pattern); });
    log::info("group: " + std::to_string(groups.size()) + " groups");

    std::vector<CandidateSubgraph> constructed = stage("construct", [&] {
        std::vector<CandidateSubgraph> out;
        out.reserve(groups.size());
        for (std::size_t i = 0; i < groups.size(); ++i) {
            char id[16];
            std::snprintf(id, sizeof id, "c%03zu", i);
            out.push_back(construct_candidate(background, groups[i], cfg.rule, cfg.construction, id));
        }
        return out;
    });

    FilterResult filtered = stage("filter", [&] {
        return filter_candidates(std::move(constructed), cfg.theta_n, cfg.predicates);
    });
    log::info("filter: " + std::to_string(filtered.kept.size()) + " kept, " + std::to_string(filtered.dropped.size()) +
                            " dropped");
    if (filtered.kept.size() < 2) {
        throw PipelineError("filter: fewer than two candidates survive filtering (" +
                            std::to_string(filtered.kept.size()) + ")");
    }
    auto& candidates = filtered.kept;

    const auto bundles = stage("metrics", [&] {
        std::vector<MetricBundle> out;
        out.reserve(candidates.size());
        for (const auto& c : candidates) {
            out.push_back(compute_metrics(c, stopwords));
        }
        return out;
    });

    std::size_t mean_size = 0;
    for (const auto& c : candidates) {
        mean_size += c.graph.node_count();
    }
    const double target_real = cfg.walk_target_factor * static_cast<double>(mean_size) /
                               static_cast<double>(candidates.size());
    const std::size_t target = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(target_real)), 1,
                                                       background.node_count());

    const auto samples = stage("sample", [&] {
        return sample_background(background, target, cfg.n_walks, derive_seed(cfg.seed, 1));
    });
    const auto sample_bundles = stage("sample", [&] {
        std::vector<MetricBundle> out;
        for (const auto& s : samples) {
            out.push_back(compute_metrics(s, tweet_corpus(s), stopwords));
        }
        return out;
    });
    double background_diversity = 0.0;
    for (const auto& b : sample_bundles) {
        background_diversity += b.diversity;
    }
    background_diversity /= static_cast<double>(sample_bundles.size());

    std::vector<DivergenceRecord> records = stage("compare", [&] {
        std::vector<DivergenceRecord> out;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            out.push_back(
                divergence_profile(candidates[i].id, bundles[i], sample_bundles, background_diversity, cfg.n_bins));
        }
        return out;
    });

    Verdict verdict = stage("discover", [&] { return discover(records, cfg.k, cfg.tau_d); });

    PipelineResult result;
    const fs::path out_dir(cfg.output_dir);
    stage("report", [&] {
        ordered_json report;
        ordered_json c;
        c["keywords"] = cfg.keywords;
        c["date_from"] = cfg.date_from ? ordered_json(*cfg.date_from) : ordered_json(nullptr);
        c["group_pattern"] = cfg.group_pattern;
        c["construction_rule"] = std::string(to_string(cfg.rule));
        c["hop_budget"] = cfg.construction.hop_budget;
        c["theta_n"] = cfg.theta_n;
        c["n_bins"] = cfg.n_bins;
        c["n_walks"] = cfg.n_walks;
        c["walk_target_factor"] = cfg.walk_target_factor;
        c["k"] = cfg.k;
        c["tau_d"] = cfg.tau_d;
        c["seed"] = cfg.seed;
        report["config"] = c;

        report["input_graph"] = graph_summary(g0);
        report["background"] = graph_summary(background);
        report["group_count"] = groups.size();

        ordered_json sj;
        sj["target_size"] = target;
        sj["diversity"] = background_diversity;
        ordered_json list = ordered_json::array();
        for (std::size_t s = 0; s < samples.size(); ++s) {
            ordered_json e = graph_summary(samples[s]);
            e["diversity"] = sample_bundles[s].diversity;
            list.push_back(e);
        }
        sj["walks"] = list;
        report["samples"] = sj;

        ordered_json cands = ordered_json::array();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& cand = candidates[i];
            ordered_json e;
            e["id"] = cand.id;
            e["group_key"] = key_json(cand.group_key);
            e["rule"] = std::string(to_string(cand.rule));
            e["graph"] = graph_summary(cand.graph);
            e["metrics"] = bundle_json(bundles[i], cfg.report_metric_values);
            e["divergence"] = record_json(records[i]);
            e["why"] = annotate(cand.id, records[i], verdict, cfg.tau_d);
            if (verdict.l.contains(cand.id)) {
                e["repartition"] = recommend_repartition(cand, cfg.keywords);
            }
            cands.push_back(e);
        }
        report["candidates"] = cands;

        ordered_json dropped = ordered_json::array();
        for (const auto& d : filtered.dropped) {
            dropped.push_back({{"id", d.id}, {"reason", d.reason}});
        }
        report["dropped"] = dropped;

        ordered_json vj;
        vj["v1"] = verdict.v1;
        vj["v2"] = verdict.v2;
        vj["v3"] = verdict.v3;
        vj["l"] = verdict.l;
        vj["top_k"] = {{"v1", verdict.top_k[0]}, {"v2", verdict.top_k[1]}, {"v3", verdict.top_k[2]}};
        vj["interesting"] = verdict.interesting;
        vj["diversity_flags"] = verdict.diversity_flags;
        report["verdict"] = vj;

        if (cfg.write_histograms) {
            ordered_json files = ordered_json::array();
            auto csv = [&](const fs::path& rel, const Histogram& h) {
                std::ostringstream os;
                write_histogram_csv(h, os);
                write_file(out_dir / rel, os.str());
                files.push_back(rel.generic_string());
            };
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                for (std::size_t s = 0; s < sample_bundles.size(); ++s) {
                    for (const Metric m : kMetrics) {
                        const auto cv = bundles[i].values(m);
                        const auto rv = sample_bundles[s].values(m);
                        if (cv.empty() || rv.empty()) {
                            continue;
                        }
                        const auto cmp = compare_histograms(cv, rv, cfg.n_bins);
                        const std::string stem =
                            "sample" + std::to_string(s) + "_" + std::string(metric_name(m)) + ".csv";
                        csv(fs::path("histograms") / candidates[i].id / stem, cmp.candidate);
                        csv(fs::path("histograms") / candidates[i].id / ("ref_" + stem), cmp.reference);
                    }
                }
            }
            report["histograms"] = files;
        }

        result.report_path = out_dir / "report.json";
        write_file(result.report_path, report.dump(2) + "\n");
        result.report = std::move(report);
    });

    result.candidates = std::move(candidates);
    result.records = std::move(records);
    result.verdict = std::move(verdict);
    log::info("report: wrote " + result.report_path.string());
    return result;
}

} // namespace isd
