#include <algorithm>
#include <map>
#include <set>

#include "isd/log.hpp"
#include "isd/pattern.hpp"

namespace isd {

namespace {

struct Matcher {
    const PropertyGraph& g;
    const ConstructionRule& rule;
    std::vector<const NodePattern*> positions; // start node then one per step
    std::vector<std::size_t> binding;
    std::size_t source_pos = 0;
    std::size_t target_pos = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> counts;

    bool node_ok(std::size_t pos, std::size_t node) const {
        const NodePattern& np = *positions[pos];
        if (!np.label.empty() && g.nodes()[node].label != np.label) {
            return false;
        }
        if (np.variable.empty()) {
            return true;
        }
        for (std::size_t earlier = 0; earlier < pos; ++earlier) {
            if (positions[earlier]->variable == np.variable && binding[earlier] != node) {
                return false;
            }
        }
        return true;
    }

    void extend(std::size_t pos) {
        if (pos == positions.size()) {
            const std::size_t s = binding[source_pos];
            const std::size_t t = binding[target_pos];
            if (s != t) {
                ++counts[{s, t}];
            }
            return;
        }
        const PathStep& step = rule.body.steps[pos - 1];
        const std::size_t from = binding[pos - 1];
        const auto& incident = step.arrow == Arrow::Forward ? g.out_edges(from) : g.in_edges(from);
        for (std::size_t e : incident) {
            const Edge& edge = g.edges()[e];
            if (edge.label != step.edge_label) {
                continue;
            }
            const std::size_t next = g.node_index(step.arrow == Arrow::Forward ? edge.target : edge.source);
            if (!node_ok(pos, next)) {
                continue;
            }
            binding[pos] = next;
            extend(pos + 1);
        }
    }
};

} // namespace

std::vector<DerivedEdge> apply_rule(const PropertyGraph& g, const ConstructionRule& rule) {
    std::set<std::string> node_labels;
    std::set<std::string> edge_labels;
    for (const Node& n : g.nodes()) {
        node_labels.insert(n.label);
    }
    for (const Edge& e : g.edges()) {
        edge_labels.insert(e.label);
    }
    if (g.empty()) {
        return {};
    }

    Matcher m{g, rule, {}, {}, 0, 0, {}};
    m.positions.push_back(&rule.body.start);
    for (const auto& s : rule.body.steps) {
        m.positions.push_back(&s.node);
    }
    for (const NodePattern* np : m.positions) {
        if (!np->label.empty() && !node_labels.contains(np->label)) {
            log::warning("rule references node label '" + np->label + "' absent from the graph");
            return {};
        }
    }
    for (const auto& s : rule.body.steps) {
        if (!edge_labels.contains(s.edge_label)) {
            log::warning("rule references edge label '" + s.edge_label + "' absent from the graph");
            return {};
        }
    }
    for (std::size_t i = 0; i < m.positions.size(); ++i) {
        if (m.positions[i]->variable == rule.head_source.variable) {
            m.source_pos = i;
            break;
        }
    }
    for (std::size_t i = 0; i < m.positions.size(); ++i) {
        if (m.positions[i]->variable == rule.head_target.variable) {
            m.target_pos = i;
            break;
        }
    }

    m.binding.assign(m.positions.size(), 0);
    for (std::size_t n = 0; n < g.node_count(); ++n) {
        if (!m.node_ok(0, n)) {
            continue;
        }
        m.binding[0] = n;
        m.extend(1);
    }

    std::vector<DerivedEdge> out;
    out.reserve(m.counts.size());
    for (const auto& [key, count] : m.counts) {
        out.push_back({g.nodes()[key.first].id, g.nodes()[key.second].id, rule.head_label, count});
    }
    return out;
}

void add_derived_edges(PropertyGraph& g, const std::vector<DerivedEdge>& edges) {
    for (const auto& e : edges) {
        g.add_edge(e.source, e.target, e.label, e.weight);
    }
}

} // namespace isd
