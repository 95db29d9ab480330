#pragma once

// Two small Cypher-like languages over linear paths.
//
// Grouping patterns name the properties whose values partition the matches:
//     (:tweet{date})-[:uses]->(:hashtag{text})
//     (:tweet{popularity})
//
// Construction rules derive an edge whenever a body path matches:
//     (a:user)-[:mentions]->(b:user) if (a)-[:authors]->(t:tweet)-[:mentions]->(b:user)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isd/graph.hpp"

namespace isd {

struct NodePattern {
    std::string variable; // may be empty
    std::string label;    // may be empty in rule bodies
    std::vector<std::string> keys;

    friend bool operator==(const NodePattern&, const NodePattern&) = default;
};

enum class Arrow { Forward, Backward }; // -[..]->  /  <-[..]-

struct PathStep {
    std::string edge_label;
    Arrow arrow = Arrow::Forward;
    NodePattern node;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct PathPattern {
    NodePattern start;
    std::vector<PathStep> steps;

    friend bool operator==(const PathPattern&, const PathPattern&) = default;
};

struct GroupPattern {
    NodePattern left;
    std::optional<PathStep> edge; // the right node lives in edge->node

    bool single_node() const { return !edge.has_value(); }
    friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

struct ConstructionRule {
    NodePattern head_source;
    std::string head_label;
    NodePattern head_target;
    PathPattern body;

    friend bool operator==(const ConstructionRule&, const ConstructionRule&) = default;
};

/// Throws ParseError with the offending offset.
GroupPattern parse_group_pattern(std::string_view text);
ConstructionRule parse_construction_rule(std::string_view text);
/// One rule per line; blank lines and '#' comments ignored. Errors carry the line number.
std::vector<ConstructionRule> parse_rule_file(std::string_view text);

std::string to_string(const GroupPattern& p);
std::string to_string(const ConstructionRule& r);

struct DerivedEdge {
    std::string source;
    std::string target;
    std::string label;
    std::int64_t weight = 0; // number of body bindings

    friend bool operator==(const DerivedEdge&, const DerivedEdge&) = default;
};

/// Evaluates the rule body over `g` (homomorphic matching; head endpoints must
/// differ). Output ordered by (source, target) graph order.
std::vector<DerivedEdge> apply_rule(const PropertyGraph& g, const ConstructionRule& rule);

/// Adds derived edges to `g`, accumulating weights on existing edges.
void add_derived_edges(PropertyGraph& g, const std::vector<DerivedEdge>& edges);

} // namespace isd
