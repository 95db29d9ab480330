#include "isd/error.hpp"
#include "isd/pattern.hpp"
#include "lexer.hpp"

namespace isd {

using namespace pattern_detail;

GroupPattern parse_group_pattern(std::string_view text) {
    Parser p(text);
    GroupPattern pattern;
    const std::size_t left_at = p.peek().offset;
    pattern.left = parse_node(p, true);
    if (pattern.left.label.empty()) {
        p.error_at("node label required", left_at);
    }
    if (at_step(p)) {
        const std::size_t right_at = p.peek().offset;
        pattern.edge = parse_step(p, true);
        if (pattern.edge->node.label.empty()) {
            p.error_at("node label required", right_at);
        }
    }
    if (!p.at(Tok::End)) {
        p.error("grouping patterns are a single node or a single edge; unexpected trailing input");
    }
    const bool has_keys = !pattern.left.keys.empty() || (pattern.edge && !pattern.edge->node.keys.empty());
    if (!has_keys) {
        p.error_at("pattern names no grouping property", 0);
    }
    return pattern;
}

std::string to_string(const GroupPattern& p) {
    std::string s = print_node(p.left);
    if (p.edge) {
        s += print_step(*p.edge);
    }
    return s;
}

} // namespace isd
