#include "cli.hpp"
#include "qdet/identitylab.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, std::optional<std::string> seed_env = std::nullopt) {
    std::ostringstream out, err;
    const int code = qdet::cli::run(args, out, err, seed_env);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ListPrintsEveryId) {
    const Outcome o = invoke({"list"});
    EXPECT_EQ(o.code, 0);
    for (const auto& c : qdet::registry()) EXPECT_NE(o.out.find(std::string(c.id) + " "), std::string::npos) << c.id;
    EXPECT_NE(o.out.find("[evidence]"), std::string::npos);
}

TEST(Cli, ExplainShowsRecipeAndSlots) {
    const Outcome o = invoke({"explain", "thm_main_aw"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("recipe: "), std::string::npos);
    EXPECT_NE(o.out.find("slots: "), std::string::npos);
    EXPECT_NE(o.out.find("kappa"), std::string::npos);
    EXPECT_EQ(invoke({"explain", "no_such_id"}).code, 2);
    EXPECT_EQ(invoke({"explain"}).code, 2);
}

TEST(Cli, RunJsonIsSchemaValid) {
    const Outcome o = invoke({"run", "--check", "hankel,andrews", "--trials", "3", "--seed", "7", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j.at("version"), "1");
    EXPECT_EQ(j.at("seed"), 7);
    EXPECT_TRUE(j.at("started").is_null());
    EXPECT_EQ(j.at("summary").at("fail"), 0);
    EXPECT_EQ(j.at("results").size(), (6U + 9U) * 3U);
    for (const auto& r : j.at("results")) EXPECT_EQ(r.at("seed"), 7);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({"run", "--check", "no_such_id"}).code, 2);
    EXPECT_EQ(invoke({"run", "--check", "hankel", "--trials", "0"}).code, 2);
    EXPECT_EQ(invoke({"run", "--check", "hankel", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"run", "--check", "hankel", "--n-min", "3"}).code, 2);
    EXPECT_EQ(invoke({"run", "--check", "hankel", "--n-min", "3", "--n-max", "2"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    const Outcome o = invoke({"run", "--check", "no_such_id"});
    EXPECT_TRUE(o.out.empty());
    EXPECT_NE(o.err.find("no_such_id"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
    const Outcome env = invoke({"run", "--check", "hankel", "--trials", "1", "--format", "json"}, "99");
    ASSERT_EQ(env.code, 0);
    EXPECT_EQ(nlohmann::json::parse(env.out).at("seed"), 99);
    const Outcome flag =
        invoke({"run", "--check", "hankel", "--trials", "1", "--format", "json", "--seed", "99"});
    EXPECT_EQ(env.out, flag.out);
    const Outcome both = invoke({"run", "--check", "hankel", "--trials", "1", "--format", "json", "--seed", "5"}, "99");
    EXPECT_EQ(nlohmann::json::parse(both.out).at("seed"), 5);
    EXPECT_EQ(invoke({"run", "--check", "hankel"}, "not-a-number").code, 2);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::vector<std::string> args{"run", "--check", "all", "--trials", "1", "--format", "json"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    std::vector<std::string> serial = args;
    serial.emplace_back("--serial");
    EXPECT_EQ(invoke(serial).out, a.out);
}

TEST(Cli, TextAndJsonSummariesMatch) {
    const std::vector<std::string> base{"run", "--check", "conjecture_mw3,bottom_rows", "--n-min", "1", "--n-max", "3",
                                        "--trials", "2"};
    const Outcome text = invoke(base);
    std::vector<std::string> json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const Outcome json = invoke(json_args);
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(json.code, 0);
    const auto s = nlohmann::json::parse(json.out).at("summary");
    std::ostringstream expected;
    expected << "summary: pass=" << s.at("pass") << " fail=" << s.at("fail") << " evidence_pass=" << s.at("evidence_pass")
             << " evidence_fail=" << s.at("evidence_fail") << " skipped=" << s.at("skipped") << '\n';
    EXPECT_NE(text.out.find(expected.str()), std::string::npos) << text.out;
    const std::regex line(R"(^(PASS|FAIL|EVIDENCE-PASS|EVIDENCE-FAIL|SKIPPED-DEGENERATE) check=\S+ n=\d+ trial=\d+$)");
    std::istringstream lines(text.out);
    std::string l;
    long results = 0;
    while (std::getline(lines, l))
        if (std::regex_match(l, line)) ++results;
    EXPECT_EQ(results, 12);
}

TEST(Cli, OutputFileAndTimestamp) {
    const auto path = std::filesystem::temp_directory_path() / "qdet_cli_test_report.json";
    const Outcome o = invoke({"run", "--check", "hankel", "--trials", "1", "--format", "json", "--timestamp", "--output",
                              path.string()});
    ASSERT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    EXPECT_TRUE(j.at("started").is_string());
    std::filesystem::remove(path);
}

TEST(Cli, HelpExitsZero) {
    const Outcome o = invoke({"--help"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("run"), std::string::npos);
}
