#include "lexer.hpp"

#include <cctype>

#include "isd/error.hpp"

namespace isd::pattern_detail {

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        auto single = [&](Tok t) {
            out.push_back({t, std::string(1, c), i});
            ++i;
        };
        switch (c) {
        case '(': single(Tok::LParen); continue;
        case ')': single(Tok::RParen); continue;
        case '[': single(Tok::LBracket); continue;
        case ']': single(Tok::RBracket); continue;
        case '{': single(Tok::LBrace); continue;
        case '}': single(Tok::RBrace); continue;
        case ':': single(Tok::Colon); continue;
        case ',': single(Tok::Comma); continue;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                out.push_back({Tok::ArrowRight, "->", i});
                i += 2;
            } else {
                single(Tok::Dash);
            }
            continue;
        case '<':
            if (i + 1 < text.size() && text[i + 1] == '-') {
                out.push_back({Tok::ArrowLeft, "<-", i});
                i += 2;
                continue;
            }
            break;
        default:
            break;
        }
        if (ident_char(c)) {
            const std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) {
                ++i;
            }
            out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

const char* describe(Tok t) {
    switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Dash: return "'-'";
    case Tok::ArrowRight: return "'->'";
    case Tok::ArrowLeft: return "'<-'";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
    }
    return "token";
}

Parser::Parser(std::string_view text) : tokens_(tokenize(text)) {}

bool Parser::accept(Tok t) {
    if (at(t)) {
        ++pos_;
        return true;
    }
    return false;
}

const Token& Parser::expect(Tok t, const char* what) {
    if (!at(t)) {
        error(std::string("expected ") + what + ", found " + describe(peek().kind));
    }
    return tokens_[pos_++];
}

void Parser::error(const std::string& message) const { error_at(message, peek().offset); }

void Parser::error_at(const std::string& message, std::size_t offset) const {
    throw ParseError(message, offset);
}

} // namespace isd::pattern_detail

#include "isd/pattern.hpp"

namespace isd::pattern_detail {

NodePattern parse_node(Parser& p, bool allow_keys) {
    NodePattern node;
    p.expect(Tok::LParen, "'('");
    if (p.at(Tok::Ident)) {
        node.variable = p.expect(Tok::Ident, "variable").text;
    }
    if (p.accept(Tok::Colon)) {
        node.label = p.expect(Tok::Ident, "node label").text;
    }
    if (p.at(Tok::LBrace)) {
        if (!allow_keys) {
            p.error("property keys are not allowed here");
        }
        p.expect(Tok::LBrace, "'{'");
        if (!p.accept(Tok::RBrace)) {
            node.keys.push_back(p.expect(Tok::Ident, "property key or '}'").text);
            while (p.accept(Tok::Comma)) {
                node.keys.push_back(p.expect(Tok::Ident, "property key").text);
            }
            p.expect(Tok::RBrace, "',' or '}'");
        }
    }
    p.expect(Tok::RParen, "')'");
    return node;
}

bool at_step(const Parser& p) { return p.at(Tok::Dash) || p.at(Tok::ArrowLeft); }

PathStep parse_step(Parser& p, bool allow_keys) {
    PathStep step;
    const bool backward = p.accept(Tok::ArrowLeft);
    if (!backward) {
        p.expect(Tok::Dash, "'-' or '<-'");
    }
    p.expect(Tok::LBracket, "'['");
    // `[:label]` is canonical; a bare `[label]` is read as a label too.
    if (p.at(Tok::Ident)) {
        step.edge_label = p.expect(Tok::Ident, "edge label").text;
    }
    if (p.accept(Tok::Colon)) {
        step.edge_label = p.expect(Tok::Ident, "edge label").text;
    }
    if (step.edge_label.empty()) {
        p.error("edge label required");
    }
    p.expect(Tok::RBracket, "']'");
    if (backward) {
        p.expect(Tok::Dash, "'-'");
        step.arrow = Arrow::Backward;
    } else {
        p.expect(Tok::ArrowRight, "'->'");
        step.arrow = Arrow::Forward;
    }
    step.node = parse_node(p, allow_keys);
    return step;
}

std::string print_node(const NodePattern& n) {
    std::string s = "(" + n.variable;
    if (!n.label.empty()) {
        s += ":" + n.label;
    }
    if (!n.keys.empty()) {
        s += "{";
        for (std::size_t i = 0; i < n.keys.size(); ++i) {
            s += (i ? "," : "") + n.keys[i];
        }
        s += "}";
    }
    return s + ")";
}

std::string print_step(const PathStep& s) {
    const std::string edge = "[:" + s.edge_label + "]";
    const std::string link = s.arrow == Arrow::Forward ? "-" + edge + "->" : "<-" + edge + "-";
    return link + print_node(s.node);
}

} // namespace isd::pattern_detail
