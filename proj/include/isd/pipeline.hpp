#pragma once

// End-to-end discovery run (ingest -> query -> group -> construct -> filter ->
// metrics -> compare -> discover -> report) and the synthetic dataset generator.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isd/candidates.hpp"
#include "isd/compare.hpp"
#include "isd/discover.hpp"
#include "isd/error.hpp"
#include "isd/tweets.hpp"

namespace isd {

/// A stage failed for a reason other than bad config or bad data.
class PipelineError : public Error {
public:
    using Error::Error;
};

struct PipelineConfig {
    std::string input;
    std::vector<std::string> keywords;
    std::optional<std::string> date_from;
    std::string group_pattern;
    ConstructionKind rule = ConstructionKind::G1;
    ConstructionOptions construction;
    std::size_t theta_n = 10;
    PredicateSpec predicates;
    std::size_t n_bins = 20;
    std::size_t n_walks = 3;
    double walk_target_factor = 3.0;
    std::size_t k = 3;
    double tau_d = 0.5;
    std::uint64_t seed = 0;
    std::string output_dir = "isd-out";
    std::optional<std::string> stopwords_file;
    std::optional<std::string> rules_file;
    bool write_histograms = true;
    bool report_metric_values = true;
};

/// Relative paths in the JSON are resolved against `base_dir`. Throws ConfigError.
PipelineConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
void validate(const PipelineConfig& cfg);

struct PipelineResult {
    std::filesystem::path report_path;
    std::vector<CandidateSubgraph> candidates;
    std::vector<DivergenceRecord> records;
    Verdict verdict;
    nlohmann::ordered_json report;
};

/// Runs every stage and writes <output_dir>/report.json (plus histogram CSVs).
/// Errors are rethrown as ConfigError / DataError / PipelineError with the
/// stage name prefixed to the message.
PipelineResult run_pipeline(const PipelineConfig& cfg);

enum class Archetype { DenseCore, Bridge, BroadStar };

std::string_view to_string(Archetype a);
Archetype parse_archetype(std::string_view s);

struct PlantedSpec {
    Archetype archetype = Archetype::DenseCore;
    std::size_t size = 20;             // tweets in the planted group
    double edge_probability = 1.0;     // mention probability inside the structure
    std::size_t vocabulary = 5;        // distinct words the group's texts draw from
};

struct SynthSpec {
    std::size_t background_tweets = 1000;
    std::size_t attachment = 2;          // mentions per background tweet
    double new_user_probability = 0.3;   // chance a tweet comes from a new account
    std::size_t hashtag_pool = 25;       // topical hashtags shared by background tweets
    double hashtag_probability = 0.5;
    std::size_t background_vocabulary = 2000;
    std::size_t min_words = 6;
    std::size_t max_words = 12;
    std::string keyword = "ados";        // seed term present in every tweet's text
    std::vector<PlantedSpec> planted;
    std::uint64_t seed = 0;
};

SynthSpec parse_synth_spec(const nlohmann::json& j);
SynthSpec load_synth_spec(const std::filesystem::path& path);

/// Hashtag carried by the i-th planted group of archetype `a` (e.g. "dense0").
std::string planted_hashtag(Archetype a, std::size_t index);

/// Background tweets follow a preferential-attachment mention process with
/// Zipf-distributed text; planted groups are appended after them.
std::vector<TweetRecord> synth_generate(const SynthSpec& spec);
void write_tweets_jsonl(const std::vector<TweetRecord>& records, std::ostream& out);

} // namespace isd
