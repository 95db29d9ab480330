#include <unordered_set>

#include "isd/metrics.hpp"
#include "isd/text.hpp"

namespace isd {

double vocabulary_diversity(const std::vector<std::string>& corpus, const StopwordSet& stopwords) {
    std::unordered_set<std::string> distinct;
    std::size_t total = 0;
    for (const auto& text : corpus) {
        for (auto& token : tokenize_words(text)) {
            if (token.size() < 2 || stopwords.contains(token)) {
                continue;
            }
            ++total;
            distinct.insert(std::move(token));
        }
    }
    if (total == 0) {
        return 0.0;
    }
    return static_cast<double>(distinct.size()) / static_cast<double>(total);
}

} // namespace isd
