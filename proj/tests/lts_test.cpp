#include <gtest/gtest.h>

#include "polymin/bisim.hpp"
#include "polymin/error.hpp"
#include "support.hpp"

namespace polymin {
namespace {

TEST(Lts, SetSemantics) {
    Lts l({"a", "b"});
    l.add_transition(0, "x", 1);
    l.add_transition(0, "x", 1);
    l.add_transition(1, "tau", 1);
    EXPECT_EQ(l.transition_count(), 2U);
    EXPECT_TRUE(l.has(0, "x", 1));
    EXPECT_FALSE(l.has(1, "x", 0));
    EXPECT_TRUE(l.tau().has_value());
    EXPECT_THROW(l.add_transition(0, "x", 2), ArgumentError);
}

TEST(Aut, ExportFormat) {
    Lts l({"s0", "s1"});
    l.add_transition(0, "tau", 1);
    l.add_transition(1, "{red}", 1);
    EXPECT_EQ(to_aut(l), "des (0,2,2)\n(0,\"tau\",1)\n(1,\"{red}\",1)\n");
}

TEST(Aut, SingleVertexHeader) {
    const std::string text = to_aut(encode_concrete(testing::fixture_poset("single_vertex.json")));
    EXPECT_EQ(text.substr(0, text.find('\n')), "des (0,3,1)");
}

TEST(Aut, Segment3Header) {
    const std::string text = to_aut(encode_concrete(testing::fixture_poset("segment3.json")));
    EXPECT_EQ(text.substr(0, text.find('\n')), "des (0,27,5)");
}

TEST(Aut, ImportAcceptsUnquotedLabels) {
    const Lts l = from_aut("des (0,3,2)\n(0,a,1)\n(1,\"tau\",0)\n( 1 , i , 1 )\n");
    EXPECT_EQ(l.state_count(), 2U);
    EXPECT_TRUE(l.has(0, "a", 1));
    EXPECT_TRUE(l.has(1, "tau", 0));
    EXPECT_TRUE(l.has(1, "i", 1));
}

TEST(Aut, ImportErrors) {
    EXPECT_THROW(from_aut(""), ParseError);
    EXPECT_THROW(from_aut("des (0,1,1)\n"), ParseError);
    EXPECT_THROW(from_aut("des (0,1,1)\n(0,\"a\",3)\n"), ParseError);
    EXPECT_THROW(from_aut("des (0,1,1)\n(0,\"a\"\n"), ParseError);
    EXPECT_THROW(from_aut("header\n"), ParseError);
}

TEST(Aut, RoundTripOnEncodings) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PosetModel p = testing::random_poset(seed);
        for (const Lts& l : {encode_concrete(p), encode_abstract(p).lts}) {
            const Lts back = from_aut(to_aut(l));
            EXPECT_TRUE(same_transitions(l, back));
            EXPECT_EQ(to_aut(back), to_aut(l));
        }
    }
}

}  // namespace
}  // namespace polymin
