#include <random>

#include <gtest/gtest.h>

#include "isd/error.hpp"
#include "isd/pattern.hpp"
#include "isd/tweets.hpp"

using namespace isd;

namespace {

constexpr const char* kMentionsRule =
    "(a:user)-[:mentions]->(b:user) if (a)-[:authors]->(t:tweet)-[:mentions]->(b:user)";

PropertyGraph authored(std::vector<std::pair<std::string, std::vector<std::string>>> tweets_by_a) {
    std::vector<TweetRecord> recs;
    int n = 0;
    for (auto& [author, mentions] : tweets_by_a) {
        TweetRecord r;
        r.id = std::to_string(++n);
        r.author = author;
        r.created_at = "2019-01-01";
        r.mentions = mentions;
        recs.push_back(r);
    }
    return ingest_tweets(recs);
}

} // namespace

TEST(GroupPattern, TweetUsesHashtag) {
    const auto p = parse_group_pattern("(:tweet{date})-[:uses]->(:hashtag{text})");
    EXPECT_EQ(p.left.label, "tweet");
    EXPECT_EQ(p.left.keys, std::vector<std::string>{"date"});
    ASSERT_TRUE(p.edge);
    EXPECT_EQ(p.edge->edge_label, "uses");
    EXPECT_EQ(p.edge->arrow, Arrow::Forward);
    EXPECT_EQ(p.edge->node.label, "hashtag");
    EXPECT_EQ(p.edge->node.keys, std::vector<std::string>{"text"});
}

TEST(GroupPattern, SingleNodeRoundTrips) {
    const auto p = parse_group_pattern("(:tweet{popularity})");
    EXPECT_TRUE(p.single_node());
    EXPECT_EQ(p.left.keys, std::vector<std::string>{"popularity"});
    EXPECT_EQ(parse_group_pattern(to_string(p)), p);
}

TEST(GroupPattern, WhitespaceInsensitive) {
    EXPECT_EQ(parse_group_pattern("  ( :tweet { date , popularity } ) - [ :uses ] -> ( :hashtag { text } ) "),
              parse_group_pattern("(:tweet{date,popularity})-[:uses]->(:hashtag{text})"));
}

TEST(GroupPattern, UnclosedBraceReportsOffset) {
    try {
        parse_group_pattern("(:tweet{)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 8u);
    }
}

TEST(GroupPattern, RejectsMissingKeysAndStrayPunctuation) {
    EXPECT_THROW(parse_group_pattern("(:tweet)-[:uses]->(:hashtag)"), ParseError);
    EXPECT_THROW(parse_group_pattern("(:tweet{date});"), ParseError);
    EXPECT_THROW(parse_group_pattern("(:tweet{date})-[:uses]-(:hashtag)"), ParseError);
    EXPECT_THROW(parse_group_pattern(""), ParseError);
}

TEST(GroupPattern, ParsingIsTotalOnGarbage) {
    std::mt19937_64 rng(7);
    const std::string alphabet = "():{}[]-<>,ab tweet#";
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const auto len = rng() % 24;
        for (std::size_t j = 0; j < len; ++j) {
            s += alphabet[rng() % alphabet.size()];
        }
        try {
            const auto p = parse_group_pattern(s);
            EXPECT_EQ(parse_group_pattern(to_string(p)), p) << s;
        } catch (const ParseError&) {
        }
    }
}

TEST(ConstructionRule, MentionsView) {
    const auto r = parse_construction_rule(kMentionsRule);
    EXPECT_EQ(r.head_source.label, "user");
    EXPECT_EQ(r.head_label, "mentions");
    EXPECT_EQ(r.head_target.label, "user");
    EXPECT_EQ(r.body.start.variable, "a");
    EXPECT_EQ(r.body.start.label, "user"); // resolved from the head
    ASSERT_EQ(r.body.steps.size(), 2u);
    EXPECT_EQ(r.body.steps[0].edge_label, "authors");
    EXPECT_EQ(r.body.steps[1].node.variable, "b");
    EXPECT_EQ(parse_construction_rule(to_string(r)), r);
}

TEST(ConstructionRule, UnboundHeadVariable) {
    try {
        parse_construction_rule("(a:user)-[:mentions]->(c:user) if (a)-[:authors]->(t:tweet)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("unbound variable c"), std::string::npos) << e.what();
    }
}

TEST(ConstructionRule, RuleFileSkipsCommentsAndNamesLines) {
    const auto rules = parse_rule_file(std::string("# views\n\n") + kMentionsRule + "\n");
    EXPECT_EQ(rules.size(), 1u);
    try {
        parse_rule_file(std::string(kMentionsRule) + "\n(a:user)-[:x]->(b) if (a\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(ApplyRule, EmptyGraph) {
    EXPECT_TRUE(apply_rule(PropertyGraph{}, parse_construction_rule(kMentionsRule)).empty());
}

TEST(ApplyRule, AuthorMentionsTwoUsers) {
    const auto g = authored({{"a", {"b", "c"}}});
    const auto out = apply_rule(g, parse_construction_rule(kMentionsRule));
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], (DerivedEdge{"user:a", "user:b", "mentions", 1}));
    EXPECT_EQ(out[1], (DerivedEdge{"user:a", "user:c", "mentions", 1}));
}

TEST(ApplyRule, RepeatedBindingsAccumulateWeight) {
    auto g = authored({{"a", {"b"}}, {"a", {"b"}}});
    const auto out = apply_rule(g, parse_construction_rule(kMentionsRule));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].weight, 2);

    add_derived_edges(g, out);
    const auto e = g.find_edge("user:a", "user:b", "mentions");
    ASSERT_TRUE(e);
    EXPECT_EQ(g.edges()[*e].weight(), 2);
}

TEST(ApplyRule, SelfMentionIsNotDerived) {
    const auto g = authored({{"a", {"a", "b"}}});
    const auto out = apply_rule(g, parse_construction_rule(kMentionsRule));
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].target, "user:b");
}

TEST(ApplyRule, UnknownLabelYieldsNothing) {
    const auto g = authored({{"a", {"b"}}});
    EXPECT_TRUE(apply_rule(g, parse_construction_rule("(a:user)-[:x]->(b:user) if (a)-[:likes]->(b:user)")).empty());
}
