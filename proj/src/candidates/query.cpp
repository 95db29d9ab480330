#include <algorithm>

#include "isd/candidates.hpp"
#include "isd/error.hpp"
#include "isd/text.hpp"
#include "isd/tweets.hpp"

namespace isd {

namespace {

struct Keyword {
    std::string hashtag;             // normalized, for substring matching
    std::vector<std::string> tokens; // for whole-token text matching
};

std::string text_of(const Node& n, const char* key) {
    auto it = n.props.find(key);
    if (it == n.props.end()) {
        return {};
    }
    if (const auto* s = std::get_if<std::string>(&it->second)) {
        return *s;
    }
    return {};
}

} // namespace

PropertyGraph initial_query(const PropertyGraph& g, const std::vector<std::string>& keywords,
                            const std::optional<std::string>& date_from) {
    if (keywords.empty()) {
        throw ConfigError("initial query needs at least one keyword");
    }
    std::vector<Keyword> kws;
    for (const auto& k : keywords) {
        Keyword kw{normalize_hashtag(k), tokenize_words(k)};
        if (!kw.hashtag.empty()) {
            kws.push_back(std::move(kw));
        }
    }
    const std::string since = date_from ? date_from->substr(0, 10) : std::string();

    std::vector<char> keep(g.node_count(), 0);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const Node& n = g.nodes()[i];
        if (n.label != label::tweet) {
            continue;
        }
        if (!since.empty() && text_of(n, "date") < since) {
            continue;
        }
        bool hit = false;
        const auto tokens = tokenize_words(text_of(n, "text"));
        for (const auto& kw : kws) {
            if (contains_token_sequence(tokens, kw.tokens)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            for (std::size_t e : g.out_edges(i)) {
                const Edge& edge = g.edges()[e];
                if (edge.label != label::uses) {
                    continue;
                }
                const std::string tag = normalize_hashtag(text_of(g.node(edge.target), "text"));
                hit = std::any_of(kws.begin(), kws.end(),
                                  [&](const Keyword& kw) { return tag.find(kw.hashtag) != std::string::npos; });
                if (hit) {
                    break;
                }
            }
        }
        if (!hit) {
            continue;
        }
        ++matched;
        keep[i] = 1;
        for (std::size_t e : g.in_edges(i)) {
            if (g.edges()[e].label == label::authors) {
                keep[g.node_index(g.edges()[e].source)] = 1;
            }
        }
        for (std::size_t e : g.out_edges(i)) {
            const Edge& edge = g.edges()[e];
            if (edge.label == label::mentions || edge.label == label::uses || edge.label == label::contains) {
                keep[g.node_index(edge.target)] = 1;
            }
        }
    }
    if (matched == 0) {
        throw DataError("empty background graph: no tweet matches the query");
    }
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (keep[i]) {
            ids.push_back(g.nodes()[i].id);
        }
    }
    return induced_subgraph(g, ids);
}

} // namespace isd
