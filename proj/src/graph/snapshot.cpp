#include <istream>
#include <ostream>

#include <json.hpp>

#include "isd/error.hpp"
#include "isd/graph.hpp"

namespace isd {

using nlohmann::ordered_json;

namespace {

ordered_json props_to_json(const PropertyMap& props) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : props) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, std::monostate>) {
                    j[k] = nullptr;
                } else {
                    j[k] = x;
                }
            },
            v);
    }
    return j;
}

PropertyMap props_from_json(const ordered_json& j) {
    PropertyMap props;
    if (j.is_null()) {
        return props;
    }
    if (!j.is_object()) {
        throw DataError("graph snapshot: 'props' must be an object");
    }
    for (const auto& [k, v] : j.items()) {
        if (v.is_null()) {
            props[k] = std::monostate{};
        } else if (v.is_number_integer()) {
            props[k] = v.get<std::int64_t>();
        } else if (v.is_number()) {
            props[k] = v.get<double>();
        } else if (v.is_string()) {
            props[k] = v.get<std::string>();
        } else if (v.is_boolean()) {
            props[k] = static_cast<std::int64_t>(v.get<bool>());
        } else {
            throw DataError("graph snapshot: unsupported property type for '" + k + "'");
        }
    }
    return props;
}

} // namespace

void write_graph_json(const PropertyGraph& g, std::ostream& out) {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (const Node& n : g.nodes()) {
        j["nodes"].push_back({{"id", n.id}, {"label", n.label}, {"props", props_to_json(n.props)}});
    }
    j["edges"] = ordered_json::array();
    for (const Edge& e : g.edges()) {
        j["edges"].push_back({{"id", e.id},
                              {"source", e.source},
                              {"target", e.target},
                              {"label", e.label},
                              {"props", props_to_json(e.props)}});
    }
    out << j.dump(1) << '\n';
}

PropertyGraph read_graph_json(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const ordered_json::exception& e) {
        throw DataError(std::string("graph snapshot: ") + e.what());
    }
    PropertyGraph g;
    try {
        for (const auto& n : j.at("nodes")) {
            g.add_node(n.at("id").get<std::string>(), n.at("label").get<std::string>(),
                       props_from_json(n.value("props", ordered_json())));
        }
        for (const auto& e : j.at("edges")) {
            PropertyMap props = props_from_json(e.value("props", ordered_json()));
            std::int64_t w = 1;
            if (auto it = props.find("weight"); it != props.end()) {
                w = static_cast<std::int64_t>(as_number(it->second).value_or(1.0));
            }
            g.add_edge(e.at("source").get<std::string>(), e.at("target").get<std::string>(),
                       e.at("label").get<std::string>(), w, std::move(props));
        }
    } catch (const ordered_json::exception& e) {
        throw DataError(std::string("graph snapshot: ") + e.what());
    } catch (const GraphError& e) {
        throw DataError(std::string("graph snapshot: ") + e.what());
    }
    return g;
}

} // namespace isd
