#include "isd/candidates.hpp"
#include "isd/error.hpp"
#include "isd/log.hpp"

namespace isd {

Comparator parse_comparator(std::string_view s) {
    if (s == "<") return Comparator::Less;
    if (s == "<=" || s == "≤") return Comparator::LessEq;
    if (s == "=" || s == "==") return Comparator::Eq;
    if (s == ">=" || s == "≥") return Comparator::GreaterEq;
    if (s == ">") return Comparator::Greater;
    if (s == "!=" || s == "≠" || s == "<>") return Comparator::NotEq;
    throw ConfigError("unknown comparator '" + std::string(s) + "'");
}

std::string_view to_string(Comparator c) {
    switch (c) {
    case Comparator::Less: return "<";
    case Comparator::LessEq: return "<=";
    case Comparator::Eq: return "=";
    case Comparator::GreaterEq: return ">=";
    case Comparator::Greater: return ">";
    case Comparator::NotEq: return "!=";
    }
    return "?";
}

namespace {

template <typename T>
bool apply(const T& a, Comparator op, const T& b) {
    switch (op) {
    case Comparator::Less: return a < b;
    case Comparator::LessEq: return a <= b;
    case Comparator::Eq: return a == b;
    case Comparator::GreaterEq: return a >= b;
    case Comparator::Greater: return a > b;
    case Comparator::NotEq: return a != b;
    }
    return false;
}

bool satisfies(const PropertyMap& props, const Predicate& p) {
    auto it = props.find(p.property);
    if (it == props.end()) {
        return false;
    }
    return compare_values(it->second, p.op, p.value);
}

} // namespace

bool compare_values(const PropertyValue& lhs, Comparator op, const PropertyValue& rhs) {
    const auto ln = as_number(lhs);
    const auto rn = as_number(rhs);
    if (ln && rn) {
        return apply(*ln, op, *rn);
    }
    const auto* ls = std::get_if<std::string>(&lhs);
    const auto* rs = std::get_if<std::string>(&rhs);
    if (ls && rs) {
        return apply(*ls, op, *rs);
    }
    return false;
}

FilterResult filter_candidates(std::vector<CandidateSubgraph> candidates, std::size_t min_nodes,
                               const PredicateSpec& predicates) {
    FilterResult result;
    auto drop = [&](const CandidateSubgraph& c, std::string reason) {
        log::debug("dropping candidate " + c.id + ": " + reason);
        result.dropped.push_back({c.id, std::move(reason)});
    };

    for (auto& c : candidates) {
        if (c.graph.empty()) {
            drop(c, "empty");
            continue;
        }
        if (!is_connected(c.graph)) {
            c.graph = largest_component(c.graph);
            c.corpus = tweet_corpus(c.graph);
        }
        if (c.graph.node_count() < min_nodes) {
            drop(c, "size");
            continue;
        }
        bool ok = true;
        for (const Node& n : c.graph.nodes()) {
            for (const auto& p : predicates.node) {
                if ((p.type.empty() || p.type == n.label) && !satisfies(n.props, p)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                break;
            }
        }
        if (!ok) {
            drop(c, "node predicate");
            continue;
        }
        for (const Edge& e : c.graph.edges()) {
            for (const auto& p : predicates.edge) {
                if ((p.type.empty() || p.type == e.label) && !satisfies(e.props, p)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                break;
            }
        }
        if (!ok) {
            drop(c, "edge predicate");
            continue;
        }
        result.kept.push_back(std::move(c));
    }
    return result;
}

} // namespace isd
