#include <sstream>

#include <gtest/gtest.h>

#include "isd/error.hpp"
#include "isd/graph.hpp"
#include "isd/tweets.hpp"

using namespace isd;

namespace {

TweetRecord tweet(std::string id, std::string author, std::vector<std::string> tags = {},
                  std::vector<std::string> mentions = {}, std::vector<std::string> urls = {}) {
    TweetRecord r;
    r.id = std::move(id);
    r.author = std::move(author);
    r.text = "some text";
    r.created_at = "2019-03-01T10:00:00Z";
    r.hashtags = std::move(tags);
    r.mentions = std::move(mentions);
    r.urls = std::move(urls);
    r.popularity = 3;
    r.author_followers = 10;
    return r;
}

PropertyGraph path_graph(int n) {
    PropertyGraph g;
    for (int i = 0; i < n; ++i) {
        g.add_node("n" + std::to_string(i), "x");
    }
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge("n" + std::to_string(i), "n" + std::to_string(i + 1), "e");
    }
    return g;
}

} // namespace

TEST(PropertyGraph, ParallelEdgesCollapseIntoWeight) {
    PropertyGraph g;
    g.add_node("a", "user");
    g.add_node("b", "user");
    g.add_edge("a", "b", "mentions");
    g.add_edge("a", "b", "mentions", 2);
    g.add_edge("b", "a", "mentions");
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0].weight(), 3);
    EXPECT_EQ(g.edges()[0].id, edge_id("a", "b", "mentions"));
}

TEST(PropertyGraph, RejectsDuplicatesAndDanglingEndpoints) {
    PropertyGraph g;
    g.add_node("a", "user");
    EXPECT_THROW(g.add_node("a", "user"), GraphError);
    EXPECT_FALSE(g.ensure_node("a", "user"));
    EXPECT_THROW(g.add_edge("a", "zz", "mentions"), GraphError);
    EXPECT_THROW(g.node_index("zz"), GraphError);
}

TEST(Ingest, SchemaAndDeduplication) {
    const auto g = ingest_tweets({tweet("1", "alice", {"#Ados", "news"}, {"bob"}, {"http://x"}),
                                  tweet("2", "bob", {"ados"}, {"alice"})});
    EXPECT_EQ(g.count_label(label::tweet), 2u);
    EXPECT_EQ(g.count_label(label::user), 2u);
    EXPECT_EQ(g.count_label(label::hashtag), 2u); // "#Ados" and "ados" normalize together
    EXPECT_EQ(g.count_label(label::url), 1u);
    EXPECT_TRUE(g.find_edge(user_node_id("alice"), tweet_node_id("1"), label::authors));
    EXPECT_TRUE(g.find_edge(tweet_node_id("1"), user_node_id("bob"), label::mentions));
    EXPECT_TRUE(g.find_edge(tweet_node_id("1"), hashtag_node_id("ados"), label::uses));
    EXPECT_TRUE(g.find_edge(tweet_node_id("1"), url_node_id("http://x"), label::contains));

    const auto& t = g.node(tweet_node_id("1")).props;
    EXPECT_EQ(std::get<std::string>(t.at("date")), "2019-03-01");
    EXPECT_EQ(std::get<std::int64_t>(t.at("popularity")), 3);
    EXPECT_EQ(std::get<std::string>(g.node(hashtag_node_id("ados")).props.at("text")), "ados");
}

TEST(Ingest, DegreeSumIsTwiceEdgeCount) {
    const auto g = ingest_tweets({tweet("1", "a", {"x"}, {"b", "c"}), tweet("2", "b", {"x", "y"}, {"a"}),
                                  tweet("3", "c", {}, {"a", "b"}, {"u"})});
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        degree_sum += g.out_edges(i).size() + g.in_edges(i).size();
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(Ingest, DuplicateTweetIdIsAnError) {
    EXPECT_THROW(ingest_tweets({tweet("1", "a"), tweet("1", "b")}), DataError);
}

TEST(Ingest, MalformedLineNamesTheLine) {
    std::istringstream in(R"({"id":"1","author":"a","text":"hi","created_at":"2019-01-01"}

{"id":"2","author":"b","text":"x","created_at":"2019-01-01"
)");
    try {
        read_tweets_jsonl(in);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Ingest, NegativePopularityRejected) {
    EXPECT_THROW(parse_tweet_record(R"({"id":"1","author":"a","created_at":"2019-01-01","popularity":-1})", 7),
                 DataError);
    EXPECT_THROW(parse_tweet_record(R"({"author":"a","created_at":"2019-01-01"})", 1), DataError);
}

TEST(Ingest, RecordRoundTrip) {
    const auto r = tweet("42", "zed", {"a", "b"}, {"m"}, {"http://u"});
    const auto back = parse_tweet_record(serialize_tweet_record(r), 1);
    EXPECT_EQ(back.id, r.id);
    EXPECT_EQ(back.hashtags, r.hashtags);
    EXPECT_EQ(back.mentions, r.mentions);
    EXPECT_EQ(back.urls, r.urls);
    EXPECT_EQ(back.popularity, r.popularity);
}

TEST(Neighbors, FiltersByLabelAndDirection) {
    const auto g = ingest_tweets({tweet("1", "alice", {"ados"}, {"bob"})});
    const auto t = tweet_node_id("1");
    EXPECT_EQ(neighbors(g, t, std::string_view(label::mentions), Direction::Out),
              std::vector<std::string>{user_node_id("bob")});
    EXPECT_EQ(neighbors(g, t, std::string_view(label::authors), Direction::In),
              std::vector<std::string>{user_node_id("alice")});
    EXPECT_TRUE(neighbors(g, t, std::string_view(label::authors), Direction::Out).empty());
    EXPECT_EQ(neighbors(g, t).size(), 3u);
    EXPECT_THROW(neighbors(g, "tweet:nope"), GraphError);
}

TEST(InducedSubgraph, KeepsOnlyInternalEdges) {
    const auto g = path_graph(4);
    const auto s = induced_subgraph(g, {"n2", "n0", "n1"});
    EXPECT_EQ(s.node_count(), 3u);
    EXPECT_EQ(s.edge_count(), 2u);
    EXPECT_EQ(s.nodes()[0].id, "n0"); // graph order, not request order
}

TEST(Components, LargestFirst) {
    PropertyGraph g = path_graph(3);
    g.add_node("x", "x");
    g.add_node("y", "x");
    g.add_edge("y", "x", "e");
    g.add_node("z", "x");
    const auto cc = connected_components(g);
    ASSERT_EQ(cc.size(), 3u);
    EXPECT_EQ(cc[0].size(), 3u);
    EXPECT_EQ(cc[1], (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(cc[2], std::vector<std::string>{"z"});
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(largest_component(g)));
    EXPECT_EQ(largest_component(g).node_count(), 3u);
}

TEST(Projection, MergesAntiParallelAndDropsLoops) {
    PropertyGraph g;
    for (auto id : {"a", "b", "c"}) {
        g.add_node(id, "x");
    }
    g.add_edge("a", "b", "p");
    g.add_edge("b", "a", "q");
    g.add_edge("b", "b", "p");
    g.add_edge("b", "c", "p");
    const auto u = project_undirected(g);
    EXPECT_EQ(u.pairs.size(), 2u);
    EXPECT_EQ(u.degree(1), 2u);
    EXPECT_EQ(u.pair_of_edge[0], u.pair_of_edge[1]);
    EXPECT_EQ(u.pair_of_edge[2], -1);
}

TEST(Snapshot, JsonRoundTrip) {
    auto g = ingest_tweets({tweet("1", "alice", {"ados"}, {"bob"}), tweet("2", "bob", {"ados"}, {"alice"})});
    g.node_mut(user_node_id("bob")).props["score"] = 0.25;
    std::stringstream ss;
    write_graph_json(g, ss);
    const auto back = read_graph_json(ss);
    EXPECT_TRUE(back == g);
}
