#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sqparity/cli.hpp"

using namespace sqparity::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST(Cli, CountSchema) {
    const auto r = run_cli({"count", "--max", "100", "--format", "csv", "--quiet"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(line_count(r.out), 102u);
    EXPECT_EQ(r.out.rfind("n,even,odd,a2\n", 0), 0u);
    EXPECT_NE(r.out.find("\n4,1,1,0\n"), std::string::npos);
    EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, CountJson) {
    const auto r = run_cli({"count", "--max", "10", "--format", "json", "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 11u);
    EXPECT_EQ(doc["rows"][8]["even"], "2");
    EXPECT_EQ(doc["rows"][8]["a2"], "1");
}

TEST(Cli, Exceptional) {
    const auto r = run_cli({"exceptional", "--max", "10000", "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(line_count(r.out), 18u);
    EXPECT_NE(r.out.find("\n64\n"), std::string::npos);
    EXPECT_NE(r.err.find("beyond_64: 0"), std::string::npos);
}

TEST(Cli, LambdaScanJson) {
    const auto r = run_cli({"lambda-scan", "--bmax", "60", "--format", "json", "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["max_value"].get<double>(), 0.765147024625408, 1e-9);
    EXPECT_EQ(doc["argmax_a"], 1);
    EXPECT_EQ(doc["argmax_b"], 2);
    EXPECT_NEAR(doc["bound"].get<double>(), 0.8101878614298598, 1e-12);
    EXPECT_EQ(doc["holds"], true);
}

TEST(Cli, LambdaScanPerDenominator) {
    const auto r = run_cli({"lambda-scan", "--bmax", "20", "--per-b", "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("b,argmax_a,max_value\n", 0), 0u);
    EXPECT_EQ(line_count(r.out), 20u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({"count", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"divisor-bound", "--beta", "1", "--L", "5", "--l", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"divisor-bound"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"lambda", "--a", "2", "--b", "4"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"count", "-o", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

TEST(Cli, HelpIsNotAnError) {
    EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args = {"divisor-bound", "--random", "500", "--seed", "7", "--format", "json", "-q"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    ASSERT_EQ(first.code, kExitOk) << first.err;
    EXPECT_EQ(first.out, second.out);
    const auto scan1 = run_cli({"lambda-scan", "--bmax", "80", "-q"});
    const auto scan2 = run_cli({"lambda-scan", "--bmax", "80", "-q"});
    EXPECT_EQ(scan1.out, scan2.out);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "sqparity_cli_test.csv";
    std::filesystem::remove(path);
    const auto r = run_cli({"count", "--max", "20", "-o", path.string(), "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(line_count(buf.str()), 22u);
    std::filesystem::remove(path);
}

TEST(Cli, LambdaValue) {
    const auto r = run_cli({"lambda", "--a", "1", "--b", "2", "--format", "json", "-q"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("-0.765147024625"), std::string::npos);
}

TEST(Cli, ChecksPass) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"f-max", "-q"},
             {"meinardus-check", "-q"},
             {"glaisher", "--max", "100", "-q"},
             {"gauss-check", "--bmax", "100", "-q"},
             {"g-factor-check", "-q"},
             {"small-tau", "-q"},
             {"wright-verify", "--b", "1", "3", "--tau", "0.5", "-q"},
             {"divisor-bound", "--beta", "10", "--L", "3", "--l", "2", "-q"},
             {"asympt", "--grid", "1000", "2000", "-q"}}) {
        const auto r = run_cli(args);
        EXPECT_EQ(r.code, kExitOk) << args.front() << ": " << r.err;
    }
}
