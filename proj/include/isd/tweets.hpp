#pragma once

// Tweet records and their ingestion into a PropertyGraph.
//
// Schema produced by ingest_tweets:
//   nodes   tweet:<id>    {text, date, popularity}
//           user:<id>     {name, followers}
//           hashtag:<tag> {text}
//           url:<url>     {url}
//   edges   authors  user  -> tweet
//           mentions tweet -> user
//           uses     tweet -> hashtag
//           contains tweet -> url

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "isd/graph.hpp"

namespace isd {

namespace label {
inline constexpr const char* tweet = "tweet";
inline constexpr const char* user = "user";
inline constexpr const char* hashtag = "hashtag";
inline constexpr const char* url = "url";
inline constexpr const char* authors = "authors";
inline constexpr const char* mentions = "mentions";
inline constexpr const char* uses = "uses";
inline constexpr const char* contains = "contains";
} // namespace label

struct TweetRecord {
    std::string id;
    std::string author;
    std::string text;
    std::string created_at;
    std::vector<std::string> hashtags;
    std::vector<std::string> mentions;
    std::vector<std::string> urls;
    std::int64_t popularity = 0;
    std::int64_t author_followers = 0;
};

std::string tweet_node_id(const std::string& id);
std::string user_node_id(const std::string& id);
std::string hashtag_node_id(const std::string& tag);
std::string url_node_id(const std::string& url);

/// Lowercases and strips leading '#'.
std::string normalize_hashtag(std::string_view tag);

/// Parses one JSON object. Throws DataError mentioning `line_no` on failure.
TweetRecord parse_tweet_record(std::string_view json_text, std::size_t line_no);
std::string serialize_tweet_record(const TweetRecord& r);

/// Reads a JSON-lines file; blank lines are skipped.
std::vector<TweetRecord> read_tweets_jsonl(std::istream& in);
std::vector<TweetRecord> read_tweets_jsonl_file(const std::string& path);

/// Builds the tweet graph. Duplicate tweet ids raise DataError.
PropertyGraph ingest_tweets(const std::vector<TweetRecord>& records);

} // namespace isd
