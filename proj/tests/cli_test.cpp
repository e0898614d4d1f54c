#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "polymin/lts.hpp"
#include "support.hpp"

namespace polymin {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;
using testing::read_text;

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("polymin_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(const std::string& args) const {
        const std::string cmd = std::string(POLYMIN_CLI) + " " + args + " 2>" + (dir_ / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    fs::path dir_;
};

TEST_F(Cli, MinimizeFixtures) {
    ASSERT_EQ(run("minimize " + fixture_path("segment3.json") + " -o " + path("out") + " --self-check"), 0);
    auto classes = nlohmann::json::parse(read_text(path("out/segment3.classes.json")));
    EXPECT_EQ(classes["classes"].size(), 2U);
    EXPECT_TRUE(fs::exists(path("out/segment3.min.json")));

    ASSERT_EQ(run("minimize " + fixture_path("strip4.json") + " -o " + path("out") + " --emit-aut"), 0);
    classes = nlohmann::json::parse(read_text(path("out/strip4.classes.json")));
    EXPECT_EQ(classes["classes"].size(), 4U);
    const Lts q = from_aut(read_text(path("out/strip4.min.aut")));
    EXPECT_EQ(q.state_count(), 4U);
}

TEST_F(Cli, MalformedInputExitsWithTwo) {
    write("bad.json", "{\"cells\": [");
    EXPECT_EQ(run("minimize " + path("bad.json") + " -o " + path("out")), 2);
    EXPECT_NE(read_text(path("stderr.txt")).find("error:"), std::string::npos);
    EXPECT_EQ(run("minimize " + path("missing.json")), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    write("bad.txt", "save \"x\" eta(");
    EXPECT_EQ(run("check " + path("bad.txt") + " -m " + fixture_path("segment3.json")), 2);
}

TEST_F(Cli, CheckStrip4AndMinimalRoute) {
    write("s.txt", "save \"w\" eta(ap(\"green\") | ap(\"grey\"), ap(\"green\"))\n");
    const std::string model = fixture_path("strip4.json");
    ASSERT_EQ(run("check " + path("s.txt") + " -m " + model + " -o " + path("a.json")), 0);
    ASSERT_EQ(run("check " + path("s.txt") + " -m " + model + " -o " + path("b.json") + " --on-minimal --self-check"), 0);
    EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json")));
    const auto doc = nlohmann::json::parse(read_text(path("a.json")));
    const auto p = testing::fixture_poset("strip4.json");
    EXPECT_TRUE(doc["results"]["w"][p.index_of("D")].get<bool>());
    EXPECT_FALSE(doc["results"]["w"][p.index_of("A")].get<bool>());
}

TEST_F(Cli, EmptyScript) {
    write("empty.txt", "");
    ASSERT_EQ(run("check " + path("empty.txt") + " -m " + fixture_path("segment3.json") + " -o " + path("r.json")), 0);
    EXPECT_TRUE(nlohmann::json::parse(read_text(path("r.json")))["results"].empty());
}

TEST_F(Cli, StrictAtoms) {
    write("s.txt", "save \"x\" ap(\"nope\")\n");
    EXPECT_EQ(run("check " + path("s.txt") + " -m " + fixture_path("segment3.json") + " -o " + path("r.json")), 0);
    EXPECT_EQ(run("check " + path("s.txt") + " -m " + fixture_path("segment3.json") + " --strict-atoms"), 2);
}

TEST_F(Cli, OnMinimalRejectsGamma) {
    write("g.txt", "save \"g\" gamma(ap(\"red\"), true)\n");
    const std::string model = fixture_path("triangle_abc.json");
    EXPECT_EQ(run("check " + path("g.txt") + " -m " + model + " -o " + path("a.json")), 0);
    EXPECT_EQ(run("check " + path("g.txt") + " -m " + model + " --on-minimal"), 2);
    EXPECT_EQ(run("check " + path("g.txt") + " -m " + model + " --self-check -o " + path("b.json")), 0);
    EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json")));
}

TEST_F(Cli, ScriptLoadLine) {
    ASSERT_EQ(run("check " + fixture_path("appendix_b.imgql") + " -o " + path("r.json")), 0);
    EXPECT_EQ(nlohmann::json::parse(read_text(path("r.json")))["results"].size(), 5U);
}

TEST_F(Cli, GenRandom) {
    ASSERT_EQ(run("gen-random --seed 1 --vertices 4 --max-dim 2 --atoms 2 -o " + path("a.json")), 0);
    ASSERT_EQ(run("gen-random --seed 1 --vertices 4 --max-dim 2 --atoms 2 -o " + path("b.json")), 0);
    EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json")));
    EXPECT_NO_THROW(cell_poset(load_simplicial_model(read_text(path("a.json")))));
    EXPECT_EQ(run("gen-random --seed 1 --vertices 0 -o " + path("c.json")), 2);
}

TEST_F(Cli, ExportAut) {
    ASSERT_EQ(run("export-aut " + fixture_path("segment3.json") + " -o " + path("s.aut")), 0);
    const std::string text = read_text(path("s.aut"));
    EXPECT_EQ(text.substr(0, text.find('\n')), "des (0,27,5)");
    ASSERT_EQ(run("export-aut " + fixture_path("single_vertex.json") + " -o " + path("v.aut")), 0);
    EXPECT_EQ(read_text(path("v.aut")).substr(0, 11), "des (0,3,1)");
    EXPECT_EQ(to_aut(from_aut(text)), text);
}

TEST_F(Cli, PosetDump) {
    ASSERT_EQ(run("poset " + fixture_path("segment3.json") + " -o " + path("p.json")), 0);
    const auto doc = nlohmann::json::parse(read_text(path("p.json")));
    EXPECT_EQ(doc["elements"].size(), 5U);
    EXPECT_EQ(doc["covers"].size(), 4U);
}

TEST_F(Cli, MinimalRouteByteIdenticalOnRandomInputs) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::string model = path("m.json");
        const std::string args = "--seed " + std::to_string(seed) + " --vertices " + std::to_string(2 + seed % 4) +
                                 " --max-dim " + std::to_string(seed % 3) + " --atoms " + std::to_string(1 + seed % 3);
        ASSERT_EQ(run("gen-random " + args + " -o " + model), 0);
        const auto atoms = load_simplicial_model(read_text(model)).atoms();
        std::string script;
        for (int i = 0; i < 3; ++i)
            script += "save \"f" + std::to_string(i) + "\" " + to_string(random_formula(seed * 10 + i, 3, atoms), true) + "\n";
        write("s.txt", script);
        ASSERT_EQ(run("check " + path("s.txt") + " -m " + model + " -o " + path("a.json")), 0);
        ASSERT_EQ(run("check " + path("s.txt") + " -m " + model + " -o " + path("b.json") + " --on-minimal"), 0);
        EXPECT_EQ(read_text(path("a.json")), read_text(path("b.json"))) << "seed " << seed;
    }
}

}  // namespace
}  // namespace polymin
