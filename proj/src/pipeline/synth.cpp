#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include "isd/pipeline.hpp"
#include "isd/random.hpp"

namespace isd {

using nlohmann::json;

std::string_view to_string(Archetype a) {
    switch (a) {
    case Archetype::DenseCore: return "dense-core-low-diversity";
    case Archetype::Bridge: return "bridge";
    case Archetype::BroadStar: return "broad-star";
    }
    return "?";
}

Archetype parse_archetype(std::string_view s) {
    if (s == "dense-core-low-diversity" || s == "dense-core") {
        return Archetype::DenseCore;
    }
    if (s == "bridge") {
        return Archetype::Bridge;
    }
    if (s == "broad-star") {
        return Archetype::BroadStar;
    }
    throw ConfigError("unknown archetype '" + std::string(s) + "'");
}

std::string planted_hashtag(Archetype a, std::size_t index) {
    switch (a) {
    case Archetype::DenseCore: return "dense" + std::to_string(index);
    case Archetype::Bridge: return "bridge" + std::to_string(index);
    case Archetype::BroadStar: return "star" + std::to_string(index);
    }
    return {};
}

SynthSpec parse_synth_spec(const json& j) {
    SynthSpec s;
    try {
        if (j.contains("background")) {
            const auto& b = j.at("background");
            s.background_tweets = b.value("tweets", s.background_tweets);
            s.attachment = b.value("attachment", s.attachment);
            s.new_user_probability = b.value("new_user_probability", s.new_user_probability);
            s.hashtag_pool = b.value("hashtag_pool", s.hashtag_pool);
            s.hashtag_probability = b.value("hashtag_probability", s.hashtag_probability);
            s.background_vocabulary = b.value("vocabulary", s.background_vocabulary);
            s.min_words = b.value("min_words", s.min_words);
            s.max_words = b.value("max_words", s.max_words);
        }
        s.keyword = j.value("keyword", s.keyword);
        s.seed = j.value("seed", s.seed);
        for (const auto& p : j.value("planted", json::array())) {
            PlantedSpec ps;
            ps.archetype = parse_archetype(p.at("archetype").get<std::string>());
            ps.size = p.value("size", ps.size);
            ps.edge_probability = p.value("edge_probability", ps.edge_probability);
            ps.vocabulary = p.value("vocabulary", ps.vocabulary);
            s.planted.push_back(ps);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("synth spec: ") + e.what());
    }
    if (s.background_tweets == 0 || s.background_vocabulary == 0 || s.hashtag_pool == 0) {
        throw ConfigError("synth spec: background tweets, vocabulary and hashtag pool must be positive");
    }
    if (s.min_words == 0 || s.min_words > s.max_words) {
        throw ConfigError("synth spec: need 0 < min_words <= max_words");
    }
    if (s.keyword.empty()) {
        throw ConfigError("synth spec: keyword must be non-empty");
    }
    for (const auto& p : s.planted) {
        if (p.vocabulary == 0 || p.size == 0) {
            throw ConfigError("synth spec: planted size and vocabulary must be positive");
        }
        if (!(p.edge_probability > 0 && p.edge_probability <= 1)) {
            throw ConfigError("synth spec: edge_probability must be in (0, 1]");
        }
    }
    return s;
}

SynthSpec load_synth_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open synth spec '" + path.string() + "'");
    }
    try {
        return parse_synth_spec(json::parse(in));
    } catch (const json::exception& e) {
        throw ConfigError("synth spec '" + path.string() + "': " + e.what());
    }
}

namespace {

constexpr const char* kSyllables[] = {"ka", "lo", "mi", "ru", "te", "sa", "no", "vi", "pe", "zu",
                                      "da", "ho", "ni", "fa", "gu", "re", "bo", "xi", "ta", "we"};
constexpr std::size_t kSyllableCount = std::size(kSyllables);

// Distinct pronounceable word for every index; at least two syllables.
std::string make_word(std::size_t index) {
    std::string w;
    std::size_t i = index;
    do {
        w += kSyllables[i % kSyllableCount];
        i /= kSyllableCount;
    } while (i > 0);
    w += kSyllables[(index * 7 + 3) % kSyllableCount];
    if (index >= kSyllableCount * kSyllableCount) {
        w += "n";
    }
    return w;
}

class Zipf {
public:
    Zipf(std::size_t n, double exponent) : cdf_(n) {
        double acc = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            acc += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
            cdf_[r] = acc;
        }
    }
    std::size_t operator()(Rng& rng) const {
        const double u = uniform01(rng) * cdf_.back();
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
    }

private:
    std::vector<double> cdf_;
};

std::string make_date(Rng& rng) {
    const auto day = uniform_index(rng, 180);
    char buf[16];
    std::snprintf(buf, sizeof buf, "2019-%02u-%02u", static_cast<unsigned>(1 + day / 30),
                  static_cast<unsigned>(1 + day % 28));
    return buf;
}

std::int64_t geometric(Rng& rng, double p) {
    std::int64_t n = 0;
    while (uniform01(rng) > p && n < 10000) {
        ++n;
    }
    return n;
}

std::string user_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "u%05zu", i);
    return buf;
}

struct Generator {
    const SynthSpec& spec;
    Rng rng;
    std::vector<std::string> users;
    std::vector<std::size_t> pool; // one entry per user creation / involvement
    std::vector<std::size_t> involvement;
    std::vector<TweetRecord> out;

    std::size_t new_user(std::string name) {
        users.push_back(std::move(name));
        involvement.push_back(0);
        pool.push_back(users.size() - 1);
        return users.size() - 1;
    }

    void touch(std::size_t u) {
        pool.push_back(u);
        ++involvement[u];
    }

    std::size_t preferential() { return pool[uniform_index(rng, pool.size())]; }

    std::string next_tweet_id() {
        char buf[32];
        std::snprintf(buf, sizeof buf, "t%06zu", out.size() + 1);
        return buf;
    }

    std::string text_from(const std::vector<std::string>& words) {
        std::vector<std::string> tokens = words;
        tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(uniform_index(rng, tokens.size() + 1)),
                      spec.keyword);
        std::string t;
        for (const auto& w : tokens) {
            if (!t.empty()) {
                t += ' ';
            }
            t += w;
        }
        return t;
    }

    std::size_t word_count() {
        return spec.min_words + uniform_index(rng, spec.max_words - spec.min_words + 1);
    }

    void emit(std::size_t author, std::vector<std::size_t> mentions, std::vector<std::string> words,
              std::vector<std::string> hashtags) {
        TweetRecord r;
        r.id = next_tweet_id();
        r.author = users[author];
        r.text = text_from(words);
        r.created_at = make_date(rng);
        r.hashtags = std::move(hashtags);
        for (auto m : mentions) {
            r.mentions.push_back(users[m]);
        }
        r.popularity = geometric(rng, 0.2);
        r.author_followers = static_cast<std::int64_t>(involvement[author]) * 7 + geometric(rng, 0.1);
        out.push_back(std::move(r));
    }

    void background() {
        for (std::size_t i = 0; i <= spec.attachment; ++i) {
            new_user(user_name(users.size()));
        }
        const Zipf words(spec.background_vocabulary, 1.0);
        for (std::size_t t = 0; t < spec.background_tweets; ++t) {
            const std::size_t author =
                uniform01(rng) < spec.new_user_probability ? new_user(user_name(users.size())) : preferential();
            std::vector<std::size_t> mentions;
            for (std::size_t tries = 0; mentions.size() < spec.attachment && tries < 20 * spec.attachment; ++tries) {
                const std::size_t m = preferential();
                if (m != author && std::find(mentions.begin(), mentions.end(), m) == mentions.end()) {
                    mentions.push_back(m);
                }
            }
            std::vector<std::string> text;
            const std::size_t n = word_count();
            for (std::size_t w = 0; w < n; ++w) {
                text.push_back(make_word(words(rng)));
            }
            std::vector<std::string> tags;
            if (uniform01(rng) < spec.hashtag_probability) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "topic%02zu", static_cast<std::size_t>(uniform_index(rng, spec.hashtag_pool)));
                tags.emplace_back(buf);
            }
            touch(author);
            for (auto m : mentions) {
                touch(m);
            }
            emit(author, std::move(mentions), std::move(text), std::move(tags));
        }
    }

    std::vector<std::size_t> most_involved(std::size_t n) const {
        std::vector<std::size_t> order(users.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return involvement[a] > involvement[b]; });
        order.resize(std::min(n, order.size()));
        return order;
    }

    std::vector<std::string> group_words(const std::vector<std::string>& vocab) {
        std::vector<std::string> text;
        const std::size_t n = word_count();
        for (std::size_t w = 0; w < n; ++w) {
            text.push_back(vocab[uniform_index(rng, vocab.size())]);
        }
        return text;
    }

    std::vector<std::string> vocabulary(std::size_t size, std::size_t& next_word) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < size; ++i) {
            v.push_back(make_word(next_word++));
        }
        return v;
    }
};

} // namespace

std::vector<TweetRecord> synth_generate(const SynthSpec& spec) {
    Generator gen{spec, Rng(spec.seed), {}, {}, {}, {}};
    gen.background();

    const auto hubs = gen.most_involved(50);
    std::size_t next_word = spec.background_vocabulary;
    std::vector<std::vector<std::size_t>> cores;
    std::array<std::size_t, 3> counters{};

    // Dense cores first so bridges can attach to them.
    std::vector<std::size_t> order(spec.planted.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return (spec.planted[a].archetype == Archetype::DenseCore) > (spec.planted[b].archetype == Archetype::DenseCore);
    });

    for (const std::size_t pi : order) {
        const PlantedSpec& p = spec.planted[pi];
        const std::size_t index = counters[static_cast<std::size_t>(p.archetype)]++;
        const std::string tag = planted_hashtag(p.archetype, index);
        const auto vocab = gen.vocabulary(p.vocabulary, next_word);

        switch (p.archetype) {
        case Archetype::DenseCore: {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < p.size; ++i) {
                members.push_back(gen.new_user(tag + "_" + std::to_string(i)));
            }
            cores.push_back(members);
            for (std::size_t i = 0; i < p.size; ++i) {
                std::vector<std::size_t> mentions;
                for (std::size_t j = 0; j < p.size; ++j) {
                    if (j != i && uniform01(gen.rng) < p.edge_probability) {
                        mentions.push_back(members[j]);
                    }
                }
                for (auto m : mentions) {
                    gen.involvement[m]++;
                }
                gen.emit(members[i], std::move(mentions), gen.group_words(vocab), {tag});
            }
            break;
        }
        case Archetype::Bridge: {
            const std::size_t a = hubs.at(0);
            // Second region: the first planted core if any, else the next hub.
            const std::vector<std::size_t> region = cores.empty() ? hubs : cores.front();
            const std::size_t b = cores.empty() ? hubs.at(1) : region.front();
            for (std::size_t i = 0; i < p.size; ++i) {
                std::size_t author = gen.preferential();
                while (author == a || author == b) {
                    author = gen.preferential();
                }
                std::vector<std::size_t> mentions{a, b};
                if (uniform01(gen.rng) < p.edge_probability) {
                    const std::size_t extra = region[uniform_index(gen.rng, region.size())];
                    if (extra != a && extra != b && extra != author) {
                        mentions.push_back(extra);
                    }
                }
                gen.emit(author, std::move(mentions), gen.group_words(vocab), {tag});
            }
            break;
        }
        case Archetype::BroadStar: {
            const std::size_t bot = gen.new_user(tag + "_bot");
            for (std::size_t i = 0; i < p.size; ++i) {
                std::vector<std::size_t> mentions;
                for (const auto h : hubs) {
                    if (uniform01(gen.rng) < p.edge_probability) {
                        mentions.push_back(h);
                    }
                }
                if (mentions.empty()) {
                    mentions.push_back(hubs[uniform_index(gen.rng, hubs.size())]);
                }
                gen.emit(bot, std::move(mentions), gen.group_words(vocab), {tag});
            }
            break;
        }
        }
    }
    return std::move(gen.out);
}

void write_tweets_jsonl(const std::vector<TweetRecord>& records, std::ostream& out) {
    for (const auto& r : records) {
        out << serialize_tweet_record(r) << '\n';
    }
}

} // namespace isd
