#include "isd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "isd/error.hpp"

namespace isd {

std::string to_string(const PropertyValue& v) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const {
            std::ostringstream os;
            os.precision(17);
            os << d;
            return os.str();
        }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

std::optional<double> as_number(const PropertyValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
        return static_cast<double>(*i);
    }
    if (const auto* d = std::get_if<double>(&v)) {
        return *d;
    }
    return std::nullopt;
}

std::int64_t Edge::weight() const {
    auto it = props.find("weight");
    if (it == props.end()) {
        return 1;
    }
    if (auto n = as_number(it->second)) {
        return static_cast<std::int64_t>(std::llround(*n));
    }
    return 1;
}

std::string edge_id(std::string_view source, std::string_view target, std::string_view label) {
    std::string id;
    id.reserve(source.size() + target.size() + label.size() + 4);
    id.append(label).append(":").append(source).append("->").append(target);
    return id;
}

void PropertyGraph::add_node(std::string id, std::string label, PropertyMap props) {
    if (id.empty()) {
        throw GraphError("node id must be non-empty");
    }
    if (node_index_.contains(id)) {
        throw GraphError("duplicate node id '" + id + "'");
    }
    node_index_.emplace(id, nodes_.size());
    nodes_.push_back(Node{std::move(id), std::move(label), std::move(props)});
    out_.emplace_back();
    in_.emplace_back();
}

bool PropertyGraph::ensure_node(const std::string& id, const std::string& label, PropertyMap props) {
    if (node_index_.contains(id)) {
        return false;
    }
    add_node(id, label, std::move(props));
    return true;
}

void PropertyGraph::add_edge(const std::string& source, const std::string& target,
                             const std::string& label, std::int64_t weight, PropertyMap props) {
    const std::size_t s = node_index(source);
    const std::size_t t = node_index(target);
    std::string id = edge_id(source, target, label);
    if (auto it = edge_index_.find(id); it != edge_index_.end()) {
        Edge& e = edges_[it->second];
        e.props["weight"] = e.weight() + weight;
        return;
    }
    props["weight"] = weight;
    edge_index_.emplace(id, edges_.size());
    out_[s].push_back(edges_.size());
    in_[t].push_back(edges_.size());
    edges_.push_back(Edge{std::move(id), source, target, label, std::move(props)});
}

bool PropertyGraph::has_node(std::string_view id) const {
    return node_index_.find(std::string(id)) != node_index_.end();
}

std::size_t PropertyGraph::node_index(std::string_view id) const {
    auto it = node_index_.find(std::string(id));
    if (it == node_index_.end()) {
        throw GraphError("unknown node id '" + std::string(id) + "'");
    }
    return it->second;
}

const Node& PropertyGraph::node(std::string_view id) const { return nodes_[node_index(id)]; }

Node& PropertyGraph::node_mut(std::string_view id) { return nodes_[node_index(id)]; }

std::optional<std::size_t> PropertyGraph::find_edge(std::string_view source, std::string_view target,
                                                    std::string_view label) const {
    auto it = edge_index_.find(edge_id(source, target, label));
    if (it == edge_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t PropertyGraph::count_label(std::string_view label) const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.label == label; }));
}

std::vector<std::string> neighbors(const PropertyGraph& g, std::string_view id,
                                   std::optional<std::string_view> edge_type, Direction direction) {
    const std::size_t idx = g.node_index(id);
    std::vector<std::string> result;
    auto take = [&](const std::vector<std::size_t>& incident, bool outgoing) {
        for (std::size_t e : incident) {
            const Edge& edge = g.edges()[e];
            if (edge_type && edge.label != *edge_type) {
                continue;
            }
            result.push_back(outgoing ? edge.target : edge.source);
        }
    };
    if (direction != Direction::In) {
        take(g.out_edges(idx), true);
    }
    if (direction != Direction::Out) {
        take(g.in_edges(idx), false);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

PropertyGraph induced_subgraph(const PropertyGraph& g, const std::vector<std::string>& ids) {
    std::vector<char> keep(g.node_count(), 0);
    for (const auto& id : ids) {
        keep[g.node_index(id)] = 1;
    }
    PropertyGraph sub;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (keep[i]) {
            const Node& n = g.nodes()[i];
            sub.add_node(n.id, n.label, n.props);
        }
    }
    for (const Edge& e : g.edges()) {
        if (keep[g.node_index(e.source)] && keep[g.node_index(e.target)]) {
            PropertyMap props = e.props;
            const std::int64_t w = e.weight();
            sub.add_edge(e.source, e.target, e.label, w, std::move(props));
        }
    }
    return sub;
}

std::vector<std::vector<std::string>> connected_components(const PropertyGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::int64_t> comp(n, -1);
    std::vector<std::vector<std::size_t>> members;
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) {
            continue;
        }
        const auto c = static_cast<std::int64_t>(members.size());
        members.emplace_back();
        comp[start] = c;
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            members.back().push_back(u);
            auto visit = [&](std::size_t v) {
                if (comp[v] < 0) {
                    comp[v] = c;
                    queue.push_back(v);
                }
            };
            for (std::size_t e : g.out_edges(u)) {
                visit(g.node_index(g.edges()[e].target));
            }
            for (std::size_t e : g.in_edges(u)) {
                visit(g.node_index(g.edges()[e].source));
            }
        }
    }
    std::stable_sort(members.begin(), members.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<std::string>> result;
    result.reserve(members.size());
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        std::vector<std::string> ids;
        ids.reserve(m.size());
        for (std::size_t i : m) {
            ids.push_back(g.nodes()[i].id);
        }
        result.push_back(std::move(ids));
    }
    return result;
}

PropertyGraph largest_component(const PropertyGraph& g) {
    if (g.empty()) {
        return g;
    }
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        return g;
    }
    return induced_subgraph(g, comps.front());
}

bool is_connected(const PropertyGraph& g) {
    return !g.empty() && connected_components(g).size() == 1;
}

} // namespace isd
