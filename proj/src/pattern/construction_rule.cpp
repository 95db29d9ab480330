#include <map>
#include <sstream>

#include "isd/error.hpp"
#include "isd/pattern.hpp"
#include "lexer.hpp"

namespace isd {

using namespace pattern_detail;

namespace {

// Records the label of every variable occurrence; conflicting labels are an error.
class VariableTable {
public:
    void bind(NodePattern& n, std::size_t offset, const Parser& p) {
        if (n.variable.empty()) {
            return;
        }
        auto [it, inserted] = labels_.try_emplace(n.variable, n.label);
        if (!inserted && !n.label.empty()) {
            if (it->second.empty()) {
                it->second = n.label;
            } else if (it->second != n.label) {
                p.error_at("conflicting labels for variable " + n.variable, offset);
            }
        }
    }

    bool contains(const std::string& v) const { return labels_.contains(v); }

    void resolve(NodePattern& n) const {
        if (!n.variable.empty() && n.label.empty()) {
            if (auto it = labels_.find(n.variable); it != labels_.end()) {
                n.label = it->second;
            }
        }
    }

private:
    std::map<std::string, std::string> labels_;
};

} // namespace

ConstructionRule parse_construction_rule(std::string_view text) {
    Parser p(text);
    ConstructionRule rule;

    const std::size_t src_at = p.peek().offset;
    rule.head_source = parse_node(p, false);
    if (!at_step(p)) {
        p.error("expected head edge");
    }
    const std::size_t step_at = p.peek().offset;
    PathStep head = parse_step(p, false);
    if (head.arrow != Arrow::Forward) {
        p.error_at("head edge must point forward ('->')", step_at);
    }
    rule.head_label = head.edge_label;
    rule.head_target = head.node;
    if (rule.head_source.variable.empty()) {
        p.error_at("head nodes need variables", src_at);
    }
    if (rule.head_target.variable.empty()) {
        p.error_at("head nodes need variables", step_at);
    }

    const Token& kw = p.expect(Tok::Ident, "'if'");
    if (kw.text != "if") {
        p.error_at("expected 'if', found '" + kw.text + "'", kw.offset);
    }

    VariableTable vars;
    std::size_t at = p.peek().offset;
    rule.body.start = parse_node(p, false);
    vars.bind(rule.body.start, at, p);
    while (at_step(p)) {
        at = p.peek().offset;
        rule.body.steps.push_back(parse_step(p, false));
        vars.bind(rule.body.steps.back().node, at, p);
    }
    if (rule.body.steps.empty()) {
        p.error("rule body needs at least one edge");
    }
    if (!p.at(Tok::End)) {
        p.error("unexpected trailing input");
    }

    for (NodePattern* head_node : {&rule.head_source, &rule.head_target}) {
        if (!vars.contains(head_node->variable)) {
            p.error_at("unbound variable " + head_node->variable, src_at);
        }
        vars.bind(*head_node, src_at, p);
    }
    vars.resolve(rule.head_source);
    vars.resolve(rule.head_target);
    vars.resolve(rule.body.start);
    for (auto& s : rule.body.steps) {
        vars.resolve(s.node);
    }
    return rule;
}

std::vector<ConstructionRule> parse_rule_file(std::string_view text) {
    std::vector<ConstructionRule> rules;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            try {
                rules.push_back(parse_construction_rule(line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
            }
        }
        pos = end + 1;
    }
    return rules;
}

std::string to_string(const ConstructionRule& r) {
    std::string s = print_node(r.head_source) + "-[:" + r.head_label + "]->" + print_node(r.head_target);
    s += " if " + print_node(r.body.start);
    for (const auto& step : r.body.steps) {
        s += print_step(step);
    }
    return s;
}

} // namespace isd
