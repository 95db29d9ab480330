#include "isd/text.hpp"

#include <algorithm>

namespace isd {

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        const bool word = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c >= 0x80;
        if (word) {
            current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : ch);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

bool contains_token_sequence(const std::vector<std::string>& tokens,
                             const std::vector<std::string>& keyword_tokens) {
    if (keyword_tokens.empty()) {
        return false;
    }
    return std::search(tokens.begin(), tokens.end(), keyword_tokens.begin(), keyword_tokens.end()) !=
           tokens.end();
}

} // namespace isd
