#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <unordered_set>

#include <json.hpp>

#include "isd/error.hpp"
#include "isd/tweets.hpp"

namespace isd {

using nlohmann::json;

std::string tweet_node_id(const std::string& id) { return "tweet:" + id; }
std::string user_node_id(const std::string& id) { return "user:" + id; }
std::string hashtag_node_id(const std::string& tag) { return "hashtag:" + tag; }
std::string url_node_id(const std::string& url) { return "url:" + url; }

std::string normalize_hashtag(std::string_view tag) {
    while (!tag.empty() && tag.front() == '#') {
        tag.remove_prefix(1);
    }
    std::string out(tag);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw DataError("line " + std::to_string(line_no) + ": " + what);
}

std::string required_string(const json& j, const char* key, std::size_t line_no) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
        fail(line_no, std::string("missing or non-string field '") + key + "'");
    }
    return it->get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* key, std::size_t line_no) {
    std::vector<std::string> out;
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
        return out;
    }
    if (!it->is_array()) {
        fail(line_no, std::string("field '") + key + "' must be an array of strings");
    }
    for (const auto& v : *it) {
        if (!v.is_string()) {
            fail(line_no, std::string("field '") + key + "' must be an array of strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::int64_t count_field(const json& j, const char* key, std::size_t line_no) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
        return 0;
    }
    if (!it->is_number_integer()) {
        fail(line_no, std::string("field '") + key + "' must be an integer");
    }
    const auto v = it->get<std::int64_t>();
    if (v < 0) {
        fail(line_no, std::string("field '") + key + "' must be non-negative");
    }
    return v;
}

} // namespace

TweetRecord parse_tweet_record(std::string_view json_text, std::size_t line_no) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        fail(line_no, "record must be a JSON object");
    }
    TweetRecord r;
    r.id = required_string(j, "id", line_no);
    if (r.id.empty()) {
        fail(line_no, "tweet id must be non-empty");
    }
    r.author = required_string(j, "author", line_no);
    if (r.author.empty()) {
        fail(line_no, "author must be non-empty");
    }
    if (auto it = j.find("text"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) {
            fail(line_no, "field 'text' must be a string");
        }
        r.text = it->get<std::string>();
    }
    r.created_at = required_string(j, "created_at", line_no);
    for (auto& tag : string_list(j, "hashtags", line_no)) {
        std::string norm = normalize_hashtag(tag);
        if (!norm.empty()) {
            r.hashtags.push_back(std::move(norm));
        }
    }
    r.mentions = string_list(j, "mentions", line_no);
    r.urls = string_list(j, "urls", line_no);
    r.popularity = count_field(j, "popularity", line_no);
    r.author_followers = count_field(j, "author_followers", line_no);
    return r;
}

std::string serialize_tweet_record(const TweetRecord& r) {
    json j;
    j["id"] = r.id;
    j["author"] = r.author;
    j["text"] = r.text;
    j["created_at"] = r.created_at;
    j["hashtags"] = r.hashtags;
    j["mentions"] = r.mentions;
    j["urls"] = r.urls;
    j["popularity"] = r.popularity;
    j["author_followers"] = r.author_followers;
    return j.dump();
}

std::vector<TweetRecord> read_tweets_jsonl(std::istream& in) {
    std::vector<TweetRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
            continue;
        }
        records.push_back(parse_tweet_record(line, line_no));
    }
    return records;
}

std::vector<TweetRecord> read_tweets_jsonl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open input file '" + path + "'");
    }
    return read_tweets_jsonl(in);
}

PropertyGraph ingest_tweets(const std::vector<TweetRecord>& records) {
    PropertyGraph g;
    std::unordered_set<std::string> seen;
    auto ensure_user = [&](const std::string& name, std::int64_t followers) {
        const std::string id = user_node_id(name);
        if (!g.ensure_node(id, label::user, {{"name", name}, {"followers", followers}})) {
            auto& props = g.node_mut(id).props;
            auto current = as_number(props["followers"]).value_or(0.0);
            if (static_cast<double>(followers) > current) {
                props["followers"] = followers;
            }
        }
        return id;
    };

    for (std::size_t i = 0; i < records.size(); ++i) {
        const TweetRecord& r = records[i];
        if (!seen.insert(r.id).second) {
            throw DataError("record " + std::to_string(i + 1) + ": duplicate tweet id '" + r.id + "'");
        }
        const std::string tweet = tweet_node_id(r.id);
        g.add_node(tweet, label::tweet,
                   {{"text", r.text}, {"date", r.created_at.substr(0, 10)}, {"popularity", r.popularity}});

        const std::string author = ensure_user(r.author, r.author_followers);
        g.add_edge(author, tweet, label::authors);
        for (const auto& m : r.mentions) {
            g.add_edge(tweet, ensure_user(m, 0), label::mentions);
        }
        for (const auto& raw : r.hashtags) {
            const std::string tag = normalize_hashtag(raw);
            if (tag.empty()) {
                continue;
            }
            const std::string id = hashtag_node_id(tag);
            g.ensure_node(id, label::hashtag, {{"text", tag}});
            g.add_edge(tweet, id, label::uses);
        }
        for (const auto& u : r.urls) {
            const std::string id = url_node_id(u);
            g.ensure_node(id, label::url, {{"url", u}});
            g.add_edge(tweet, id, label::contains);
        }
    }
    return g;
}

} // namespace isd
