#include <gtest/gtest.h>

#include "polymin/error.hpp"
#include "polymin/parser.hpp"
#include "support.hpp"

namespace polymin {
namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
Formula r() { return Formula::atom("r"); }

TEST(ParseFormula, CorridorExample) {
    const Formula f = parse_formula("eta(corridor,white) & !eta(corridor, green | black | red)");
    const Formula corridor = Formula::atom("corridor");
    const Formula expected = Formula::conj(
        Formula::eta(corridor, Formula::atom("white")),
        Formula::negate(Formula::eta(
            corridor, Formula::disj(Formula::disj(Formula::atom("green"), Formula::atom("black")), Formula::atom("red")))));
    EXPECT_EQ(f, expected);
}

TEST(ParseFormula, QuotedAtom) { EXPECT_EQ(parse_formula("ap(\"G\")"), Formula::atom("G")); }

TEST(ParseFormula, DoubleNegationKept) {
    EXPECT_EQ(parse_formula("!!p"), Formula::negate(Formula::negate(p())));
}

TEST(ParseFormula, Precedence) {
    EXPECT_EQ(parse_formula("p | q & !r"), Formula::disj(p(), Formula::conj(q(), Formula::negate(r()))));
    EXPECT_EQ(parse_formula("(p | q) & r"), Formula::conj(Formula::disj(p(), q()), r()));
    EXPECT_EQ(parse_formula("p & q & r"), Formula::conj(Formula::conj(p(), q()), r()));
    EXPECT_EQ(parse_formula("true"), Formula::top());
    EXPECT_EQ(parse_formula("diamond(gamma(p, true))"), Formula::diamond(Formula::gamma(p(), Formula::top())));
}

TEST(ParseFormula, ErrorsCarryPosition) {
    try {
        parse_formula("p &\n  & q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 3U);
    }
    EXPECT_THROW(parse_formula("eta(p)"), ParseError);
    EXPECT_THROW(parse_formula("p q"), ParseError);
    EXPECT_THROW(parse_formula("ap(\"open"), ParseError);
    EXPECT_THROW(parse_formula(""), ParseError);
    EXPECT_THROW(parse_formula("p # q"), ParseError);
}

TEST(ParseScript, AppendixListing) {
    const Script s = parse_script(testing::read_text(testing::fixture_path("appendix_b.imgql")));
    ASSERT_TRUE(s.model_path.has_value());
    EXPECT_EQ(*s.model_path, "polyInput_Poset.json");
    ASSERT_EQ(s.saves.size(), 5U);
    const std::vector<std::string> names{"green", "white", "corr", "phi1", "phi2"};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(s.saves[i].name, names[i]);
    EXPECT_EQ(s.saves[0].formula, Formula::atom("G"));
    EXPECT_EQ(s.bindings.size(), 9U);
}

TEST(ParseScript, LetSubstitution) {
    const Script s = parse_script("let a = ap(\"p\")\nsave \"x\" a");
    ASSERT_EQ(s.saves.size(), 1U);
    EXPECT_EQ(s.saves[0].formula, p());
}

TEST(ParseScript, Errors) {
    EXPECT_THROW(parse_script("save \"x\" undefinedName"), ParseError);
    EXPECT_THROW(parse_script("save \"x\" true\nsave \"x\" true"), ParseError);
    EXPECT_THROW(parse_script("let x = y\n"), ParseError);
    EXPECT_THROW(parse_script("let eta = true"), ParseError);
    EXPECT_THROW(parse_script("p"), ParseError);
    EXPECT_TRUE(parse_script("// nothing\n").saves.empty());
}

TEST(Encode, Examples) {
    EXPECT_EQ(encode_eta_to_gamma(Formula::eta(p(), q())), Formula::conj(p(), Formula::gamma(p(), q())));
    EXPECT_EQ(encode_eta_to_gamma(p()), p());
    const Formula inner = Formula::conj(p(), Formula::gamma(p(), q()));
    EXPECT_EQ(encode_eta_to_gamma(Formula::eta(Formula::eta(p(), q()), r())),
              Formula::conj(inner, Formula::gamma(inner, r())));
    EXPECT_THROW(encode_eta_to_gamma(Formula::gamma(p(), q())), ArgumentError);
    EXPECT_THROW(encode_eta_to_gamma(Formula::diamond(p())), ArgumentError);
}

TEST(Encode, SizeBound) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Formula f = random_formula(seed, 4, {"a", "b", "c"});
        const std::size_t n = f.tree_size();
        const Formula e = encode_eta_to_gamma(f);
        EXPECT_LE(e.tree_size(), 3 * n * n);
        EXPECT_TRUE(atoms_of(e) == atoms_of(f));
    }
}

TEST(RandomFormula, DepthZeroIsLeaf) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Formula f = random_formula(seed, 0, {"p"});
        EXPECT_TRUE(f == p() || f == Formula::top());
    }
    EXPECT_EQ(random_formula(1, 0, {"p"}).depth(), 0U);
}

TEST(RandomFormula, PinnedRegressionValue) {
    EXPECT_EQ(to_string(random_formula(7, 3, {"red", "blue"})), "(red | (eta(red, blue) | true))");
}

TEST(RandomFormula, Properties) {
    EXPECT_THROW(random_formula(1, 2, {}), ArgumentError);
    EXPECT_THROW(random_formula(1, -1, {"p"}), ArgumentError);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Formula f = random_formula(seed, 3, {"red", "blue"});
        EXPECT_LE(f.depth(), 3U);
        EXPECT_TRUE(is_eta_pure(f));
        EXPECT_EQ(f, random_formula(seed, 3, {"red", "blue"}));
    }
}

TEST(Printer, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Formula f = random_formula(seed, 4, {"a", "b c", "eta", "x\"y"});
        EXPECT_EQ(parse_formula(to_string(f)), f) << to_string(f);
    }
    const Formula h = random_formula(3, 3, {"red", "blue"});
    EXPECT_EQ(parse_formula(to_string(h, true)), h);
    EXPECT_EQ(parse_script("save \"x\" " + to_string(h, true)).saves[0].formula, h);
    const Formula g = Formula::diamond(Formula::gamma(Formula::negate(p()), Formula::top()));
    EXPECT_EQ(parse_formula(to_string(g)), g);
}

}  // namespace
}  // namespace polymin
