#pragma once

// Typed property graph: nodes and directed edges carry a type label and a
// property map. Parallel edges with the same (source, target, label) are
// collapsed into one edge whose integer `weight` property counts them.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace isd {

using PropertyValue = std::variant<std::monostate, std::int64_t, double, std::string>;
using PropertyMap = std::map<std::string, PropertyValue, std::less<>>;

std::string to_string(const PropertyValue& v);
/// Numeric view of a value; nullopt for strings and null.
std::optional<double> as_number(const PropertyValue& v);

struct Node {
    std::string id;
    std::string label;
    PropertyMap props;

    friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
    std::string id;
    std::string source;
    std::string target;
    std::string label;
    PropertyMap props;

    std::int64_t weight() const;
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Direction { Out, In, Both };

class PropertyGraph {
public:
    /// Adds a node; throws GraphError if the id is taken.
    void add_node(std::string id, std::string label, PropertyMap props = {});
    /// Adds the node unless present; returns true if it was inserted.
    bool ensure_node(const std::string& id, const std::string& label, PropertyMap props = {});

    /// Adds an edge between existing nodes. A repeated (source, target, label)
    /// increments the stored edge's weight by `weight` instead.
    void add_edge(const std::string& source, const std::string& target, const std::string& label,
                  std::int64_t weight = 1, PropertyMap props = {});

    bool has_node(std::string_view id) const;
    const Node& node(std::string_view id) const;
    Node& node_mut(std::string_view id);
    std::size_t node_index(std::string_view id) const;
    std::optional<std::size_t> find_edge(std::string_view source, std::string_view target,
                                         std::string_view label) const;

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return nodes_.empty(); }

    /// Indices into edges() of the edges leaving / entering node `idx`.
    const std::vector<std::size_t>& out_edges(std::size_t idx) const { return out_[idx]; }
    const std::vector<std::size_t>& in_edges(std::size_t idx) const { return in_[idx]; }

    std::size_t count_label(std::string_view label) const;

    friend bool operator==(const PropertyGraph& a, const PropertyGraph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::unordered_map<std::string, std::size_t> node_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

std::string edge_id(std::string_view source, std::string_view target, std::string_view label);

/// Endpoints of the edges incident to `id` matching the label filter and direction.
/// Sorted, without duplicates. Throws GraphError on an unknown id.
std::vector<std::string> neighbors(const PropertyGraph& g, std::string_view id,
                                   std::optional<std::string_view> edge_type = std::nullopt,
                                   Direction direction = Direction::Both);

/// Strict induced subgraph; node and edge order follows `g`.
PropertyGraph induced_subgraph(const PropertyGraph& g, const std::vector<std::string>& ids);

/// Components under undirected reachability, largest first (ties: first node order).
/// Node ids inside a component follow graph order.
std::vector<std::vector<std::string>> connected_components(const PropertyGraph& g);

/// Induced subgraph on the largest component (empty graph stays empty).
PropertyGraph largest_component(const PropertyGraph& g);

bool is_connected(const PropertyGraph& g);

/// Undirected simple projection in CSR form, used by the metric and sampling code.
/// Self loops are dropped; parallel and anti-parallel edges merge into one pair.
struct UndirectedGraph {
    std::vector<std::string> ids; // graph node order
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets; // sorted per row
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs; // u < v, one per undirected edge
    std::vector<std::int64_t> pair_of_edge; // per PropertyGraph edge: index into pairs or -1

    std::size_t size() const { return ids.size(); }
    std::uint32_t degree(std::size_t u) const { return offsets[u + 1] - offsets[u]; }
    std::span<const std::uint32_t> row(std::size_t u) const {
        return {targets.data() + offsets[u], targets.data() + offsets[u + 1]};
    }
};

UndirectedGraph project_undirected(const PropertyGraph& g);
bool is_connected(const UndirectedGraph& g);

/// JSON snapshot with "nodes" and "edges" arrays.
void write_graph_json(const PropertyGraph& g, std::ostream& out);
PropertyGraph read_graph_json(std::istream& in);

} // namespace isd
