#pragma once

// Generate step: background query, soft grouping, candidate construction
// (G1/G2/G3) and the connectivity/size/predicate filter.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isd/graph.hpp"
#include "isd/pattern.hpp"

namespace isd {

/// Background graph: tweets matching any keyword (hashtag substring, or
/// whole-token text match; case-insensitive, leading '#' ignored) on or after
/// `date_from` (YYYY-MM-DD), plus their authors, mentioned users, hashtags and
/// urls. Throws DataError("empty background graph") when nothing matches.
PropertyGraph initial_query(const PropertyGraph& g, const std::vector<std::string>& keywords,
                            const std::optional<std::string>& date_from = std::nullopt);

/// Ordered (qualified key, value) pairs, e.g. {"hashtag.text", "ados"}.
using GroupKey = std::vector<std::pair<std::string, std::string>>;

std::string to_string(const GroupKey& key);

struct NodeGroup {
    GroupKey key;
    std::vector<std::string> members; // graph order
};

/// Value used for a grouping property the node does not carry.
inline constexpr const char* kNullGroupValue = "null";

/// One group per distinct key combination over all matches of `p`, ordered by key.
std::vector<NodeGroup> group_nodes(const PropertyGraph& g, const GroupPattern& p);

enum class ConstructionKind { G1, G2, G3 };

std::string_view to_string(ConstructionKind k);
ConstructionKind parse_construction_kind(std::string_view s);

struct CandidateSubgraph {
    std::string id;
    PropertyGraph graph;
    GroupKey group_key;
    ConstructionKind rule = ConstructionKind::G1;
    std::vector<std::string> corpus; // texts of the tweets in `graph`
};

std::vector<std::string> tweet_corpus(const PropertyGraph& g);

struct ConstructionOptions {
    int hop_budget = 1;
    ConstructionKind g3_base = ConstructionKind::G1;
};

/// G1: group tweets plus authors, mentioned users, hashtags and urls (relaxed induced).
/// G2: group tweets carrying mentions with their authors and mentioned users,
///     then hashtags/urls of those tweets re-attached. Node set is a subset of G1's.
/// G3: G1 (or G2) grown by `hop_budget` rounds of neighborhood expansion around
///     its mentioned users and hashtags, within `g`.
CandidateSubgraph construct_candidate(const PropertyGraph& g, const NodeGroup& group, ConstructionKind rule,
                                      const ConstructionOptions& options = {}, std::string id = {});

enum class Comparator { Less, LessEq, Eq, GreaterEq, Greater, NotEq };

Comparator parse_comparator(std::string_view s);
std::string_view to_string(Comparator c);
bool compare_values(const PropertyValue& lhs, Comparator op, const PropertyValue& rhs);

struct Predicate {
    std::string type; // element label it applies to; empty means every element
    std::string property;
    Comparator op = Comparator::Eq;
    PropertyValue value;
};

struct PredicateSpec {
    std::vector<Predicate> node;
    std::vector<Predicate> edge;
};

struct DroppedCandidate {
    std::string id;
    std::string reason;
};

struct FilterResult {
    std::vector<CandidateSubgraph> kept;
    std::vector<DroppedCandidate> dropped;
};

/// Reduces each candidate to its largest component, then drops it if it has
/// fewer than `min_nodes` nodes or violates a node/edge predicate.
FilterResult filter_candidates(std::vector<CandidateSubgraph> candidates, std::size_t min_nodes,
                               const PredicateSpec& predicates);

} // namespace isd
