#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "raag/cli.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kSource = RAAG_SOURCE_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = raag::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return (kSource / "samples" / name).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int code = 0;
};

std::vector<GoldenCase> golden_cases() {
    return {
        {"classify_gem.json", {"classify", "--input", sample("gem.txt")}},
        {"classify_hbar.json", {"classify", "--input", sample("hbar.txt")}},
        {"classify_square.txt", {"classify", "--input", sample("square.txt"), "--format", "text"}},
        {"report_gem.json", {"report", "--input", sample("gem.txt")}},
        {"report_gem.txt", {"report", "--input", sample("gem.txt"), "--format", "text"}},
        {"report_square.json", {"report", "--input", sample("square.txt"), "--ring", "Q", "--max-degree", "6"}},
        {"homology_hbar.json", {"homology", "--input", sample("hbar.txt"), "--ring", "Z", "--ring", "Fp:2"}},
        {"structure_gem.json", {"structure", "--input", sample("gem.txt")}},
        {"structure_bowtie.txt", {"structure", "--input", sample("bowtie.txt"), "--format", "text"}},
        {"scan_turan_6.json", {"scan", "turan_omega_nonneg", "--max-v", "6"}},
        {"scan_acyclic_bound_6.txt", {"scan", "acyclic_bound", "--max-v", "6", "--format", "text"}},
    };
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

} // namespace

TEST_P(Golden, OutputIsByteIdentical) {
    const auto& c = GetParam();
    const Result r = run(c.args);
    EXPECT_EQ(r.code, c.code) << r.err;
    EXPECT_TRUE(r.err.empty()) << r.err;
    const fs::path file = kSource / "tests" / "golden" / c.name;
    if (std::getenv("RAAG_UPDATE_GOLDEN")) {
        std::ofstream(file, std::ios::binary) << r.out;
        return;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(r.out, slurp(file));
    EXPECT_EQ(run(c.args).out, r.out);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) {
                             std::string s = info.param.name;
                             for (char& ch : s)
                                 if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                             return s;
                         });

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"classify"}).code, 1);
    EXPECT_EQ(run({"classify", "--input", sample("gem.txt"), "--graph", "Dhc"}).code, 1);
    EXPECT_EQ(run({"report", "--graph", "Dhc", "--max-degree", "1"}).code, 1);
    EXPECT_EQ(run({"report", "--graph", "Dhc", "--format", "yaml"}).code, 1);
    EXPECT_EQ(run({"scan"}).code, 1);
    const Result r = run({"classify"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("scan"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
    const fs::path bad = fs::temp_directory_path() / "raag_cli_bad.txt";
    std::ofstream(bad) << "a b\nc d e\n";
    const Result r = run({"classify", "--input", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("2"), std::string::npos);
    EXPECT_EQ(run({"classify", "--graph", "C~~"}).code, 2);
    EXPECT_EQ(run({"classify", "--input", "/nonexistent/graph.txt"}).code, 2);
    fs::remove(bad);
}

TEST(Cli, DomainErrorsExitThree) {
    const Result r = run({"structure", "--input", sample("square.txt")});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"scan", "no_such_check", "--max-v", "3"}).code, 3);
    EXPECT_EQ(run({"report", "--graph", "Dhc", "--ring", "Fp:4"}).code, 3);
}

TEST(Cli, CapacityExitsFour) {
    const Result r = run({"scan", "acyclic_bound", "--max-v", "12"});
    EXPECT_EQ(r.code, 4);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, PassingScanExitsZero) {
    const Result r = run({"scan", "turan_omega_nonneg", "--max-v", "4", "--all-graphs"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, InputSourcesAgree) {
    const std::string text = slurp(sample("gem.txt"));
    const std::string g6 = raag::to_graph6(raag::parse_edge_list(text));
    const fs::path file = fs::temp_directory_path() / "raag_cli_gem.g6";
    std::ofstream(file) << g6 << "\n";
    const Result inline_g6 = run({"report", "--graph", g6});
    const Result file_g6 = run({"report", "--input", file.string(), "--input-format", "graph6"});
    EXPECT_EQ(inline_g6.code, 0);
    EXPECT_EQ(inline_g6.out, file_g6.out);
    const Result inline_edges = run({"report", "--graph", text, "--input-format", "edgelist"});
    EXPECT_EQ(inline_edges.out, run({"report", "--input", sample("gem.txt")}).out);
    fs::remove(file);
}

TEST(Cli, WorkersDoNotChangeOutput) {
    const Result one = run({"scan", "cut_or_central", "--max-v", "7"});
    const Result four = run({"scan", "cut_or_central", "--max-v", "7", "--workers", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(Cli, OutputFileReceivesTheReport) {
    const fs::path file = fs::temp_directory_path() / "raag_cli_out.json";
    const Result r = run({"classify", "--input", sample("gem.txt"), "--output", file.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(file), run({"classify", "--input", sample("gem.txt")}).out);
    fs::remove(file);
}
