#include "isd/discover.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "isd/text.hpp"
#include "isd/tweets.hpp"

namespace isd {

namespace {

std::vector<std::string> top_k(const std::map<std::string, std::int64_t>& scores,
                               const std::unordered_map<std::string, double>& totals, std::size_t k) {
    std::vector<std::string> ids;
    for (const auto& [id, s] : scores) {
        if (s > 0) {
            ids.push_back(id);
        }
    }
    std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
        const auto sa = scores.at(a);
        const auto sb = scores.at(b);
        if (sa != sb) {
            return sa > sb;
        }
        const double ta = totals.at(a);
        const double tb = totals.at(b);
        if (ta != tb) {
            return ta > tb;
        }
        return a < b;
    });
    if (ids.size() > k) {
        ids.resize(k);
    }
    return ids;
}

} // namespace

Verdict discover(std::span<const DivergenceRecord> records, std::size_t k, double tau_d) {
    if (records.size() < 2) {
        throw std::invalid_argument("discover needs at least two divergence records");
    }
    if (k == 0) {
        throw std::invalid_argument("discover needs k >= 1");
    }
    Verdict v;
    std::unordered_map<std::string, double> totals;
    for (const auto& r : records) {
        if (!totals.emplace(r.candidate_id, r.total()).second) {
            throw std::invalid_argument("duplicate candidate id '" + r.candidate_id + "'");
        }
        v.v1[r.candidate_id] = 0;
        v.v2[r.candidate_id] = 0;
        v.v3[r.candidate_id] = 0;
        v.diversity_flags[r.candidate_id] = r.diversity_ratio <= tau_d;
    }

    for (const auto& s1 : records) {
        for (const auto& s2 : records) {
            if (&s1 == &s2) {
                continue;
            }
            if (!(s2[Metric::Ev] > s1[Metric::Ev])) {
                continue;
            }
            ++v.v1[s2.candidate_id];
            if (!(s2[Metric::Ec] > s1[Metric::Ec])) {
                continue;
            }
            ++v.v2[s2.candidate_id];
            if (s2[Metric::Nc] + s2[Metric::Z] > s1[Metric::Nc] + s1[Metric::Z]) {
                ++v.v3[s2.candidate_id];
            }
            if (s2[Metric::Sc] + s2[Metric::Mu] > s1[Metric::Sc] + s1[Metric::Mu]) {
                v.l.insert(s2.candidate_id);
            }
        }
    }

    v.top_k[0] = top_k(v.v1, totals, k);
    v.top_k[1] = top_k(v.v2, totals, k);
    v.top_k[2] = top_k(v.v3, totals, k);
    for (const auto& id : v.top_k[0]) {
        const auto in = [&](const std::vector<std::string>& list) {
            return std::find(list.begin(), list.end(), id) != list.end();
        };
        if (in(v.top_k[1]) && in(v.top_k[2]) && v.diversity_flags.at(id)) {
            v.interesting.insert(id);
        }
    }
    return v;
}

std::vector<std::vector<std::string>> recommend_repartition(const std::vector<std::string>& corpus,
                                                            const std::vector<std::string>& keywords) {
    std::vector<std::vector<std::string>> tokenized;
    tokenized.reserve(corpus.size());
    for (const auto& text : corpus) {
        tokenized.push_back(tokenize_words(text));
    }

    std::vector<std::pair<std::size_t, std::int64_t>> freq; // keyword index, occurrences
    std::int64_t total = 0;
    for (std::size_t i = 0; i < keywords.size(); ++i) {
        const auto needle = tokenize_words(normalize_hashtag(keywords[i]));
        std::int64_t count = 0;
        if (!needle.empty()) {
            for (const auto& tokens : tokenized) {
                for (auto it = tokens.begin();;) {
                    it = std::search(it, tokens.end(), needle.begin(), needle.end());
                    if (it == tokens.end()) {
                        break;
                    }
                    ++count;
                    ++it;
                }
            }
        }
        total += count;
        freq.emplace_back(i, count);
    }
    if (total == 0) {
        return {keywords};
    }
    std::stable_sort(freq.begin(), freq.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::vector<std::string>> out;
    for (const auto& [i, _] : freq) {
        out.push_back({keywords[i]});
    }
    return out;
}

std::vector<std::vector<std::string>> recommend_repartition(const CandidateSubgraph& c,
                                                            const std::vector<std::string>& keywords) {
    return recommend_repartition(c.corpus, keywords);
}

} // namespace isd
