#include <gtest/gtest.h>

#include <set>

#include "polymin/bisim.hpp"
#include "polymin/error.hpp"
#include "support.hpp"

namespace polymin {
namespace {

using testing::fixture_poset;

std::set<std::set<std::string>> blocks(const Partition& part, const std::vector<std::string>& names) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : part.classes()) {
        std::set<std::string> b;
        for (std::size_t m : cls) b.insert(names[m]);
        out.insert(b);
    }
    return out;
}

using Blocks = std::set<std::set<std::string>>;

const Blocks kStrip4Classes{
    {"A"},
    {"B", "C", "A-B", "A-C", "B-C", "B-D", "C-D", "A-B-C", "B-C-D"},
    {"D", "E", "F", "C-E", "D-E", "D-F", "E-F", "D-E-F"},
    {"C-D-E"},
};

TEST(Partition, CanonicalNumbering) {
    const Partition a({7, 3, 7, 1});
    const Partition b({0, 1, 0, 2});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.class_count(), 3U);
    EXPECT_EQ(a.members(0), (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(Partition::identity(4).refines(a));
    EXPECT_TRUE(a.refines(Partition::single(4)));
    EXPECT_FALSE(Partition::single(4).refines(a));
    EXPECT_EQ(class_names(a, {"z", "b", "a", "c"}), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(EncodeConcrete, Segment3) {
    const PosetModel p = fixture_poset("segment3.json");
    const Lts l = encode_concrete(p);
    EXPECT_EQ(l.state_count(), 5U);
    EXPECT_EQ(l.transition_count(), 27U);
    EXPECT_EQ(l.count_label("red") + l.count_label("blue"), 5U);
    EXPECT_EQ(l.count_label("tau"), 11U);
    EXPECT_EQ(l.count_label("c"), 2U);
    EXPECT_EQ(l.count_label("d"), 9U);
    const std::size_t de = p.index_of("D-E"), e = p.index_of("E");
    EXPECT_TRUE(l.has(de, "c", e));
    EXPECT_TRUE(l.has(e, "c", de));
    EXPECT_TRUE(l.has(de, "d", e));
    EXPECT_FALSE(l.has(e, "d", de));
}

TEST(EncodeConcrete, SingleElement) {
    const Lts l = encode_concrete(fixture_poset("single_vertex.json"));
    EXPECT_EQ(l.transition_count(), 3U);
    EXPECT_TRUE(l.has(0, "p", 0));
    EXPECT_TRUE(l.has(0, "tau", 0));
    EXPECT_TRUE(l.has(0, "d", 0));
}

TEST(Components, Fixtures) {
    const PosetModel seg = fixture_poset("segment3.json");
    EXPECT_EQ(blocks(components_same_valuation(seg), seg.names()), (Blocks{{"D", "D-E"}, {"E", "E-F", "F"}}));
    const PosetModel tri = fixture_poset("triangle_abc.json");
    // Comparability is the full order, so each blue vertex meets the blue triangle in one step.
    EXPECT_EQ(blocks(components_same_valuation(tri), tri.names()),
              (Blocks{{"A", "B", "C", "A-B-C"}, {"A-B"}, {"A-C"}, {"B-C"}}));
}

TEST(Components, UniformValuationConnected) {
    const SimplicialModel m({"a", "b", "c"},
                            {{{"a"}, {"p"}}, {{"b"}, {"p"}}, {{"c"}, {"p"}}, {{"a", "b"}, {"p"}}, {{"b", "c"}, {"p"}}},
                            {"p"});
    EXPECT_EQ(components_same_valuation(cell_poset(m)).class_count(), 1U);
}

TEST(EncodeAbstract, Segment3) {
    const PosetModel p = fixture_poset("segment3.json");
    const AbstractEncoding enc = encode_abstract(p);
    EXPECT_EQ(enc.lts.state_count(), 2U);
    EXPECT_EQ(enc.lts.transition_count(), 9U);
    EXPECT_EQ(enc.lts.count_label("s"), 4U);
    EXPECT_EQ(enc.lts.count_label("d"), 3U);
    EXPECT_TRUE(enc.lts.has(0, "{red}", 0));
    EXPECT_TRUE(enc.lts.has(1, "{blue}", 1));
    EXPECT_TRUE(enc.lts.has(0, "d", 1));
    EXPECT_FALSE(enc.lts.has(1, "d", 0));
    EXPECT_EQ(strong_partition(enc.lts), Partition::identity(2));
}

TEST(EncodeAbstract, SingleElementAndStrip4) {
    EXPECT_EQ(encode_abstract(fixture_poset("single_vertex.json")).lts.transition_count(), 3U);
    const PosetModel p = fixture_poset("strip4.json");
    EXPECT_EQ(encode_abstract(p).lts.state_count(), components_same_valuation(p).class_count());
}

TEST(EncodeAbstract, TriangleStrongClasses) {
    const PosetModel p = fixture_poset("triangle_abc.json");
    const AbstractEncoding enc = encode_abstract(p);
    const Partition pulled = strong_partition(enc.lts).pull_back(enc.components.class_map());
    EXPECT_EQ(blocks(pulled, p.names()), (Blocks{{"A-B", "A-C", "B-C"}, {"A", "B", "C", "A-B-C"}}));
}

TEST(Branching, Fixtures) {
    const PosetModel seg = fixture_poset("segment3.json");
    EXPECT_EQ(blocks(branching_partition(encode_concrete(seg)), seg.names()), (Blocks{{"D", "D-E"}, {"E", "E-F", "F"}}));
    const PosetModel strip = fixture_poset("strip4.json");
    EXPECT_EQ(blocks(branching_partition(encode_concrete(strip)), strip.names()), kStrip4Classes);
}

TEST(Branching, TauAbstraction) {
    // s0 -tau-> s1 -a-> s2 is branching bisimilar to s3 -a-> s4, but not strongly.
    Lts l({"s0", "s1", "s2", "s3", "s4"});
    l.add_transition(0, "tau", 1);
    l.add_transition(1, "a", 2);
    l.add_transition(3, "a", 4);
    const Partition br = branching_partition(l);
    EXPECT_TRUE(br.same_class(0, 1));
    EXPECT_TRUE(br.same_class(0, 3));
    EXPECT_TRUE(br.same_class(2, 4));
    const Partition st = strong_partition(l);
    EXPECT_FALSE(st.same_class(0, 3));
    EXPECT_TRUE(st.refines(br));
}

TEST(Branching, NonInertTauIsObservable) {
    // s0 -tau-> s1 where only s1 can do b: s0 may also do a, so tau is not inert.
    Lts l({"s0", "s1", "x"});
    l.add_transition(0, "tau", 1);
    l.add_transition(0, "a", 2);
    l.add_transition(1, "b", 2);
    EXPECT_FALSE(branching_partition(l).same_class(0, 1));
}

TEST(Branching, IdenticalSelfLoops) {
    Lts l({"a", "b"});
    l.add_transition(0, "x", 0);
    l.add_transition(1, "x", 1);
    EXPECT_EQ(branching_partition(l), Partition::single(2));
    EXPECT_EQ(strong_partition(Lts({"a", "b", "c"})), Partition::single(3));
}

TEST(WeakPm, Fixtures) {
    const PosetModel tri = fixture_poset("triangle_abc.json");
    EXPECT_EQ(blocks(weak_pm_partition(tri), tri.names()), (Blocks{{"A-B", "A-C", "B-C"}, {"A", "B", "C", "A-B-C"}}));
    const PosetModel strip = fixture_poset("strip4.json");
    EXPECT_EQ(blocks(weak_pm_partition(strip), strip.names()), kStrip4Classes);
}

TEST(WeakPm, AntichainOfDistinctPoints) {
    const ReflexiveKripkeModel m({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}}, {{"p"}, {"q"}, {"r"}}, {"p", "q", "r"});
    EXPECT_EQ(weak_pm_partition(m), Partition::identity(3));
}

TEST(WeakPm, CharacteristicFormulasCharacterise) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto m = ReflexiveKripkeModel::from_poset(testing::random_poset(seed));
        for (const WeakPmRound& round : weak_pm_refinement(m))
            for (std::size_t c = 0; c < round.partition.class_count(); ++c) {
                Bitset expected(m.size());
                for (std::size_t x : round.partition.members(c)) expected.set(x);
                EXPECT_EQ(sat(m, round.characteristic[c]), expected);
                EXPECT_TRUE(is_eta_pure(round.characteristic[c]));
            }
    }
}

TEST(Quotient, Segment3DownTransitions) {
    const PosetModel p = fixture_poset("segment3.json");
    const Lts l = encode_concrete(p);
    const Lts q = quotient_lts(l, branching_partition(l));
    EXPECT_EQ(q.state_count(), 2U);
    EXPECT_EQ(q.count_label("d"), 3U);
    EXPECT_TRUE(q.has(0, "d", 0));
    EXPECT_TRUE(q.has(1, "d", 1));
    EXPECT_TRUE(q.has(0, "d", 1));
    const Lts trimmed = quotient_lts(l, branching_partition(l), true);
    EXPECT_EQ(trimmed.count_label("tau"), 0U);
}

TEST(Quotient, IdentityAndSingle) {
    const Lts l = encode_concrete(fixture_poset("strip4.json"));
    EXPECT_TRUE(same_transitions(quotient_lts(l, Partition::identity(l.state_count())), l));
    const Lts one = quotient_lts(l, Partition::single(l.state_count()));
    EXPECT_EQ(one.state_count(), 1U);
    EXPECT_EQ(one.transition_count(), l.labels().size());
    EXPECT_THROW(quotient_lts(l, Partition::single(3)), ArgumentError);
}

}  // namespace
}  // namespace polymin
