#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace isd {

/// Splits on ASCII non-alphanumeric characters and lowercases. Bytes >= 0x80
/// are kept inside tokens so UTF-8 words survive intact.
std::vector<std::string> tokenize_words(std::string_view text);

/// True if the keyword's token sequence occurs contiguously in `tokens`.
bool contains_token_sequence(const std::vector<std::string>& tokens,
                             const std::vector<std::string>& keyword_tokens);

} // namespace isd
