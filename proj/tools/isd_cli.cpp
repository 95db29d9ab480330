// isd: interesting-subgraph discovery over tweet graphs.
//
//   isd synth   --config synth.json --out tweets.jsonl [--seed N]
//   isd ingest  --input tweets.jsonl [--out graph.json]
//   isd run     --config run.json [--seed N] [--out DIR]
//   isd metrics --input tweets.jsonl | --graph graph.json [--largest] [--out metrics.json]
//   isd compare --candidate a.txt --reference b.txt [--bins N] [--out DIR]
//
// Exit codes: 0 ok, 2 config error, 3 data error, 4 pipeline error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isd/compare.hpp"
#include "isd/kernels.hpp"
#include "isd/log.hpp"
#include "isd/metrics.hpp"
#include "isd/pipeline.hpp"

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kConfig = 2, kData = 3, kPipeline = 4 };

std::vector<double> read_numbers(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw isd::DataError("cannot open '" + path + "'");
    }
    std::vector<double> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception&) {
            throw isd::DataError("'" + path + "': not a number: '" + tok + "'");
        }
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw isd::DataError("cannot write '" + path + "'");
    }
    out << text;
}

isd::PropertyGraph load_graph(const std::string& input, const std::string& graph) {
    if (!graph.empty()) {
        std::ifstream in(graph);
        if (!in) {
            throw isd::DataError("cannot open '" + graph + "'");
        }
        return isd::read_graph_json(in);
    }
    return isd::ingest_tweets(isd::read_tweets_jsonl_file(input));
}

ordered_json summary(const isd::PropertyGraph& g) {
    ordered_json j;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    for (const char* l : {isd::label::tweet, isd::label::user, isd::label::hashtag, isd::label::url}) {
        j[l] = g.count_label(l);
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interesting-subgraph discovery over tweet property graphs"};
    app.require_subcommand(1);

    bool verbose = false;
    bool quiet = false;
    std::string simd = "auto";
    app.add_flag("-v,--verbose", verbose, "Debug logging");
    app.add_flag("-q,--quiet", quiet, "Only warnings and errors");
    app.add_option("--simd", simd, "Kernel backend")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    std::string config;
    std::string synth_out = "-";
    std::string ingest_out;
    std::string run_out;
    std::string metrics_out = "-";
    std::string compare_out;
    std::string input;
    std::string graph;
    std::string candidate;
    std::string reference;
    std::optional<std::uint64_t> seed;
    std::size_t bins = 20;
    bool largest = false;

    auto* synth = app.add_subcommand("synth", "Generate a synthetic tweet dataset (JSON lines)");
    synth->add_option("--config", config, "Synth spec JSON")->check(CLI::ExistingFile);
    synth->add_option("--seed", seed, "Override the spec seed");
    synth->add_option("--out", synth_out, "Output file ('-' for stdout)")->capture_default_str();

    auto* ingest = app.add_subcommand("ingest", "Build the tweet graph and print a summary");
    ingest->add_option("--input", input, "Tweets JSON lines")->required();
    ingest->add_option("--out", ingest_out, "Write a graph snapshot JSON");

    auto* run = app.add_subcommand("run", "Run the full discovery pipeline");
    run->add_option("--config", config, "Pipeline config JSON")->required();
    run->add_option("--seed", seed, "Override the config seed");
    run->add_option("--out", run_out, "Override the output directory");

    auto* metrics = app.add_subcommand("metrics", "Compute the metric bundle of one graph");
    auto* in_opt = metrics->add_option("--input", input, "Tweets JSON lines");
    metrics->add_option("--graph", graph, "Graph snapshot JSON")->excludes(in_opt);
    metrics->add_flag("--largest", largest, "Reduce to the largest connected component first");
    metrics->add_option("--out", metrics_out, "Output file ('-' for stdout)")->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Bin two value files on shared edges and report their JSD");
    compare->add_option("--candidate", candidate, "Whitespace-separated numbers")->required();
    compare->add_option("--reference", reference, "Whitespace-separated numbers")->required();
    compare->add_option("--bins", bins, "Number of bins")->check(CLI::PositiveNumber);
    compare->add_option("--out", compare_out, "Directory for the two histogram CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    isd::log::set_level(verbose ? isd::log::Level::Debug : quiet ? isd::log::Level::Warning : isd::log::Level::Info);
    if (simd == "scalar") {
        isd::kernels::set_backend(isd::kernels::Backend::Scalar);
    } else if (simd == "avx2") {
        if (!isd::kernels::avx2_available()) {
            std::cerr << "error: AVX2 backend unavailable on this machine\n";
            return kConfig;
        }
        isd::kernels::set_backend(isd::kernels::Backend::Avx2);
    }

    try {
        if (*synth) {
            isd::SynthSpec spec = config.empty() ? isd::SynthSpec{} : isd::load_synth_spec(config);
            if (seed) {
                spec.seed = *seed;
            }
            std::ostringstream os;
            isd::write_tweets_jsonl(isd::synth_generate(spec), os);
            write_text(synth_out, os.str());
        } else if (*ingest) {
            const auto g = isd::ingest_tweets(isd::read_tweets_jsonl_file(input));
            if (!ingest_out.empty()) {
                std::ostringstream os;
                isd::write_graph_json(g, os);
                write_text(ingest_out, os.str());
            }
            std::cout << summary(g).dump(2) << '\n';
        } else if (*run) {
            isd::PipelineConfig cfg = isd::load_config(config);
            if (seed) {
                cfg.seed = *seed;
            }
            if (!run_out.empty()) {
                cfg.output_dir = run_out;
            }
            const auto result = isd::run_pipeline(cfg);
            std::cout << result.report_path.string() << '\n';
        } else if (*metrics) {
            if (input.empty() && graph.empty()) {
                std::cerr << "error: metrics needs --input or --graph\n";
                return kConfig;
            }
            auto g = load_graph(input, graph);
            if (largest) {
                g = isd::largest_component(g);
            }
            const auto bundle = isd::compute_metrics(g, isd::tweet_corpus(g), isd::default_stopwords());
            ordered_json j;
            j["graph"] = summary(g);
            j["diversity"] = bundle.diversity;
            for (const auto m : isd::kMetrics) {
                const auto v = bundle.values(m);
                j["metrics"][std::string(isd::metric_name(m))] = v;
            }
            write_text(metrics_out, j.dump(2) + "\n");
        } else if (*compare) {
            const auto c = read_numbers(candidate);
            const auto r = read_numbers(reference);
            if (c.empty() || r.empty()) {
                throw isd::DataError("both value files must hold at least one number");
            }
            const auto cmp = isd::compare_histograms(c, r, bins);
            if (!compare_out.empty()) {
                std::filesystem::create_directories(compare_out);
                std::ofstream cf(std::filesystem::path(compare_out) / "candidate.csv");
                isd::write_histogram_csv(cmp.candidate, cf);
                std::ofstream rf(std::filesystem::path(compare_out) / "reference.csv");
                isd::write_histogram_csv(cmp.reference, rf);
            }
            ordered_json j;
            j["jsd"] = cmp.jsd;
            j["edges"] = cmp.edges;
            j["candidate"] = cmp.candidate.counts;
            j["reference"] = cmp.reference.counts;
            std::cout << j.dump() << '\n';
        }
    } catch (const isd::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const isd::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const isd::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPipeline;
    }
    return kOk;
}
