#include <fstream>

#include "isd/pipeline.hpp"

namespace isd {

using nlohmann::json;

namespace {

std::string resolve(const std::string& p, const std::filesystem::path& base) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base.empty()) {
        path = base / path;
    }
    return path.lexically_normal().string();
}

PropertyValue to_property(const json& v) {
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return std::monostate{};
    }
    throw ConfigError("predicate value must be a number, string or null");
}

template <typename T>
T positive(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number()) {
        throw ConfigError(std::string("'") + key + "' must be a number");
    }
    const double d = v.get<double>();
    if (!(d > 0)) {
        throw ConfigError(std::string("'") + key + "' must be positive");
    }
    return v.get<T>();
}

} // namespace

PipelineConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    PipelineConfig c;
    try {
        if (!j.contains("input") || !j.at("input").is_string()) {
            throw ConfigError("config needs an 'input' path");
        }
        c.input = resolve(j.at("input").get<std::string>(), base_dir);
        if (!j.contains("keywords") || !j.at("keywords").is_array()) {
            throw ConfigError("config needs a 'keywords' array");
        }
        c.keywords = j.at("keywords").get<std::vector<std::string>>();
        if (j.contains("date_from") && !j.at("date_from").is_null()) {
            c.date_from = j.at("date_from").get<std::string>();
        }
        if (!j.contains("group_pattern") || !j.at("group_pattern").is_string()) {
            throw ConfigError("config needs a 'group_pattern' string");
        }
        c.group_pattern = j.at("group_pattern").get<std::string>();
        c.rule = parse_construction_kind(j.value("construction_rule", std::string("G1")));
        c.construction.g3_base = parse_construction_kind(j.value("g3_base", std::string("G1")));
        c.construction.hop_budget = positive<int>(j, "hop_budget", 1);
        c.theta_n = positive<std::size_t>(j, "theta_n", c.theta_n);
        c.n_bins = positive<std::size_t>(j, "n_bins", c.n_bins);
        c.n_walks = positive<std::size_t>(j, "n_walks", c.n_walks);
        c.walk_target_factor = positive<double>(j, "walk_target_factor", c.walk_target_factor);
        c.k = positive<std::size_t>(j, "k", c.k);
        c.tau_d = positive<double>(j, "tau_d", c.tau_d);
        c.seed = j.value("seed", std::uint64_t{0});
        c.output_dir = resolve(j.value("output_dir", c.output_dir), base_dir);
        if (j.contains("stopwords_file") && !j.at("stopwords_file").is_null()) {
            c.stopwords_file = resolve(j.at("stopwords_file").get<std::string>(), base_dir);
        }
        if (j.contains("rules_file") && !j.at("rules_file").is_null()) {
            c.rules_file = resolve(j.at("rules_file").get<std::string>(), base_dir);
        }
        c.write_histograms = j.value("write_histograms", true);
        c.report_metric_values = j.value("report_metric_values", true);

        for (const auto& p : j.value("predicates", json::array())) {
            const std::string scope = p.at("scope").get<std::string>();
            Predicate pred;
            pred.type = p.value("type", std::string());
            pred.property = p.at("property").get<std::string>();
            if (pred.property.empty()) {
                throw ConfigError("predicate property must be non-empty");
            }
            pred.op = parse_comparator(p.at("op").get<std::string>());
            pred.value = to_property(p.at("value"));
            if (scope == "node") {
                c.predicates.node.push_back(std::move(pred));
            } else if (scope == "edge") {
                c.predicates.edge.push_back(std::move(pred));
            } else {
                throw ConfigError("predicate scope must be 'node' or 'edge'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    validate(c);
    return c;
}

void validate(const PipelineConfig& c) {
    if (c.keywords.empty()) {
        throw ConfigError("config: 'keywords' must be non-empty");
    }
    if (c.n_bins == 0 || c.n_walks == 0 || c.k == 0 || c.theta_n == 0) {
        throw ConfigError("config: n_bins, n_walks, k and theta_n must be positive");
    }
    if (!(c.tau_d > 0) || !(c.walk_target_factor > 0)) {
        throw ConfigError("config: tau_d and walk_target_factor must be positive");
    }
    if (c.construction.hop_budget < 1) {
        throw ConfigError("config: hop_budget must be positive");
    }
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path.string() + "': " + e.what());
    }
    return parse_config(j, path.parent_path());
}

} // namespace isd
