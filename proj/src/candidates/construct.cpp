#include <algorithm>

#include "isd/candidates.hpp"
#include "isd/error.hpp"
#include "isd/tweets.hpp"

namespace isd {

std::string_view to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::G1: return "G1";
    case ConstructionKind::G2: return "G2";
    case ConstructionKind::G3: return "G3";
    }
    return "?";
}

ConstructionKind parse_construction_kind(std::string_view s) {
    if (s == "G1" || s == "g1") return ConstructionKind::G1;
    if (s == "G2" || s == "g2") return ConstructionKind::G2;
    if (s == "G3" || s == "g3") return ConstructionKind::G3;
    throw ConfigError("unknown construction rule '" + std::string(s) + "' (expected G1, G2 or G3)");
}

std::vector<std::string> tweet_corpus(const PropertyGraph& g) {
    std::vector<std::string> corpus;
    for (const Node& n : g.nodes()) {
        if (n.label != label::tweet) {
            continue;
        }
        auto it = n.props.find("text");
        const auto* s = it == n.props.end() ? nullptr : std::get_if<std::string>(&it->second);
        corpus.push_back(s ? *s : std::string());
    }
    return corpus;
}

namespace {

// Node-index set over `g` with insertion by index.
struct Selection {
    std::vector<char> in;
    explicit Selection(std::size_t n) : in(n, 0) {}
    void add(std::size_t i) { in[i] = 1; }
    bool has(std::size_t i) const { return in[i] != 0; }

    std::vector<std::string> ids(const PropertyGraph& g) const {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (in[i]) {
                out.push_back(g.nodes()[i].id);
            }
        }
        return out;
    }
};

bool has_mention(const PropertyGraph& g, std::size_t tweet) {
    const auto& out = g.out_edges(tweet);
    return std::any_of(out.begin(), out.end(), [&](std::size_t e) { return g.edges()[e].label == label::mentions; });
}

// Tweet plus its author, mentioned users, hashtags and urls.
void add_associated(const PropertyGraph& g, std::size_t tweet, Selection& sel) {
    sel.add(tweet);
    for (std::size_t e : g.in_edges(tweet)) {
        if (g.edges()[e].label == label::authors) {
            sel.add(g.node_index(g.edges()[e].source));
        }
    }
    for (std::size_t e : g.out_edges(tweet)) {
        const Edge& edge = g.edges()[e];
        if (edge.label == label::mentions || edge.label == label::uses || edge.label == label::contains) {
            sel.add(g.node_index(edge.target));
        }
    }
}

} // namespace

CandidateSubgraph construct_candidate(const PropertyGraph& g, const NodeGroup& group, ConstructionKind rule,
                                      const ConstructionOptions& options, std::string id) {
    if (options.hop_budget < 1) {
        throw ConfigError("hop budget must be positive");
    }
    std::vector<std::size_t> tweets;
    for (const auto& m : group.members) {
        const std::size_t i = g.node_index(m);
        if (g.nodes()[i].label == label::tweet) {
            tweets.push_back(i);
        }
    }

    const ConstructionKind base = rule == ConstructionKind::G3 ? options.g3_base : rule;
    if (base == ConstructionKind::G3) {
        throw ConfigError("G3 must expand G1 or G2");
    }
    Selection sel(g.node_count());
    for (std::size_t t : tweets) {
        if (base == ConstructionKind::G2 && !has_mention(g, t)) {
            continue;
        }
        add_associated(g, t, sel);
    }

    if (rule == ConstructionKind::G3) {
        std::vector<std::size_t> frontier;
        for (std::size_t t : tweets) {
            if (!sel.has(t)) {
                continue;
            }
            for (std::size_t e : g.out_edges(t)) {
                const Edge& edge = g.edges()[e];
                if (edge.label == label::mentions || edge.label == label::uses) {
                    frontier.push_back(g.node_index(edge.target));
                }
            }
        }
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        for (int hop = 0; hop < options.hop_budget && !frontier.empty(); ++hop) {
            std::vector<std::size_t> next;
            for (std::size_t u : frontier) {
                for (std::size_t e : g.out_edges(u)) {
                    next.push_back(g.node_index(g.edges()[e].target));
                }
                for (std::size_t e : g.in_edges(u)) {
                    next.push_back(g.node_index(g.edges()[e].source));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            frontier.clear();
            for (std::size_t v : next) {
                if (!sel.has(v)) {
                    sel.add(v);
                    frontier.push_back(v);
                }
            }
        }
    }

    CandidateSubgraph c;
    c.id = std::move(id);
    c.graph = induced_subgraph(g, sel.ids(g));
    c.group_key = group.key;
    c.rule = rule;
    c.corpus = tweet_corpus(c.graph);
    return c;
}

} // namespace isd
