#include <map>
#include <set>

#include "isd/candidates.hpp"
#include "isd/error.hpp"

namespace isd {

std::string to_string(const GroupKey& key) {
    std::string s;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) {
            s += '|';
        }
        s += key[i].first + "=" + key[i].second;
    }
    return s;
}

namespace {

void append_key(const Node& n, const NodePattern& p, std::vector<std::string>& values) {
    for (const auto& k : p.keys) {
        auto it = n.props.find(k);
        values.push_back(it == n.props.end() || std::holds_alternative<std::monostate>(it->second)
                             ? std::string(kNullGroupValue)
                             : to_string(it->second));
    }
}

void append_names(const NodePattern& p, GroupKey& key) {
    for (const auto& k : p.keys) {
        key.emplace_back(p.label + "." + k, std::string());
    }
}

} // namespace

std::vector<NodeGroup> group_nodes(const PropertyGraph& g, const GroupPattern& p) {
    std::map<std::vector<std::string>, std::set<std::size_t>> cells;

    if (p.single_node()) {
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            const Node& n = g.nodes()[i];
            if (n.label != p.left.label) {
                continue;
            }
            std::vector<std::string> values;
            append_key(n, p.left, values);
            cells[values].insert(i);
        }
    } else {
        const PathStep& step = *p.edge;
        for (const Edge& e : g.edges()) {
            if (e.label != step.edge_label) {
                continue;
            }
            const bool forward = step.arrow == Arrow::Forward;
            const std::size_t left = g.node_index(forward ? e.source : e.target);
            const std::size_t right = g.node_index(forward ? e.target : e.source);
            const Node& ln = g.nodes()[left];
            const Node& rn = g.nodes()[right];
            if (ln.label != p.left.label || rn.label != step.node.label) {
                continue;
            }
            std::vector<std::string> values;
            append_key(ln, p.left, values);
            append_key(rn, step.node, values);
            auto& members = cells[values];
            members.insert(left);
            members.insert(right);
        }
    }

    GroupKey names;
    append_names(p.left, names);
    if (p.edge) {
        append_names(p.edge->node, names);
    }

    std::vector<NodeGroup> groups;
    groups.reserve(cells.size());
    for (const auto& [values, members] : cells) {
        NodeGroup grp;
        grp.key = names;
        for (std::size_t i = 0; i < values.size(); ++i) {
            grp.key[i].second = values[i];
        }
        for (std::size_t i : members) {
            grp.members.push_back(g.nodes()[i].id);
        }
        groups.push_back(std::move(grp));
    }
    return groups;
}

} // namespace isd
