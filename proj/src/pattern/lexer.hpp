#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace isd::pattern_detail {

enum class Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Colon,
    Comma,
    Dash,
    ArrowRight, // ->
    ArrowLeft,  // <-
    Ident,
    End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text);
const char* describe(Tok t);

class Parser {
public:
    explicit Parser(std::string_view text);

    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok t) const { return peek().kind == t; }
    bool accept(Tok t);
    const Token& expect(Tok t, const char* what);
    [[noreturn]] void error(const std::string& message) const;
    [[noreturn]] void error_at(const std::string& message, std::size_t offset) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace isd::pattern_detail

namespace isd {
struct NodePattern;
struct PathStep;
} // namespace isd

namespace isd::pattern_detail {

/// ( [var] [:label] [{key, ...}] )
NodePattern parse_node(Parser& p, bool allow_keys);
/// -[ [var][:label] ]->  or  <-[ ... ]-   followed by a node
PathStep parse_step(Parser& p, bool allow_keys);
bool at_step(const Parser& p);

std::string print_node(const NodePattern& n);
std::string print_step(const PathStep& s);

} // namespace isd::pattern_detail
