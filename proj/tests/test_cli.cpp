#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(CTFORGE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json rows_of(const Run& r) { return nlohmann::json::parse(r.out).at("results").at("rows"); }

} // namespace

TEST(Cli, ClassifyTrivext) {
    auto r = run("classify-trivext A 6 2 12 --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) {
        int d = row.at("d");
        EXPECT_EQ(row.at("representation_finite").get<bool>(), d == 2 || d == 11) << d;
    }
    r = run("classify-trivext D 4 2 10 --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) EXPECT_EQ(row.at("representation_finite").get<bool>(), row.at("d") == 4);
    r = run("classify-trivext E 6 2 22 --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) EXPECT_FALSE(row.at("representation_finite").get<bool>());
}

TEST(Cli, BudgetFromEnvironment) {
    auto r = run("classify-trivext E 6 2 22 --format json", "CTFORGE_BUDGET=0");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) EXPECT_NE(row.at("method"), "enumeration");
    r = run("classify-trivext D 5 5 6 --format json", "CTFORGE_BUDGET=3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(rows_of(r)[0].at("method"), "periodicity");
    EXPECT_EQ(rows_of(r)[1].at("method"), "not-attempted");
    EXPECT_TRUE(rows_of(r)[1].at("representation_finite").is_null());
    EXPECT_EQ(run("classify-trivext A 3 2 3", "CTFORGE_BUDGET=-4").code, 2);
}

TEST(Cli, ClassifyNakayama) {
    auto r = run("classify-nakayama 1 6 5 both --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) {
        EXPECT_EQ(row.at("numeric").get<bool>(), row.at("d") == 2);
        EXPECT_EQ(row.at("bruteforce").get<bool>(), row.at("d") == 2);
    }
    r = run("classify-nakayama 2 3 5 both --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(rows_of(r)[0].at("bruteforce").get<bool>());
    r = run("classify-nakayama 1 4 8 both --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) EXPECT_EQ(row.at("bruteforce").get<bool>(), row.at("d") == 7);
}

TEST(Cli, NakayamaBudgetOverrun) {
    auto r = run("classify-nakayama 1 8 3 bruteforce --format json");
    ASSERT_EQ(r.code, 0);
    for (const auto& row : rows_of(r)) {
        EXPECT_EQ(row.at("bruteforce_status"), "not attempted");
        EXPECT_TRUE(row.at("bruteforce").is_null());
    }
    r = run("classify-nakayama 1 8 3 bruteforce --format json", "CTFORGE_BUDGET=64");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(rows_of(r)[0].at("bruteforce_status"), "complete");
}

TEST(Cli, VerifyExample) {
    for (const char* name : {"ctd", "cta1:5", "cta3", "cta2", "d4-derived"}) {
        auto r = run(std::string("verify-example ") + name + " --format json");
        ASSERT_EQ(r.code, 0) << name;
        auto j = nlohmann::json::parse(r.out);
        EXPECT_TRUE(j.at("results").at("certificate").at("verdict").get<bool>());
    }
    auto r = run("verify-example cta1:5 --format json");
    EXPECT_EQ(nlohmann::json::parse(r.out).at("results").at("certificate").at("d"), 9);
    r = run("verify-example cta3 --format json");
    EXPECT_EQ(nlohmann::json::parse(r.out).at("results").at("certificate").at("objects").size(), 8u);
    EXPECT_NE(run("verify-example ctd").out.find("verdict: cluster-tilting"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("verify-example nope").code, 2);
    EXPECT_EQ(run("verify-example cta1:1").code, 2);
    EXPECT_EQ(run("classify-trivext D 3 2 4").code, 2);
    EXPECT_EQ(run("classify-trivext Q 3 2 4").code, 2);
    EXPECT_EQ(run("classify-trivext A 3 4 2").code, 2);
    EXPECT_EQ(run("classify-nakayama 1 3 4 sideways").code, 2);
    EXPECT_EQ(run("classify-nakayama 0 3 4 both").code, 2);
    EXPECT_EQ(run("--seedless verify-example ctd").code, 2);
    EXPECT_EQ(run("verify-example ctd --seedless").code, 2);
    EXPECT_EQ(run("verify-example ctd --format dot").code, 2);
    EXPECT_EQ(run("emit-ar-quiver A 3 6 ctd").code, 2);
    EXPECT_EQ(run("emit-ar-quiver A 3 6 none --format svg").code, 2);
    EXPECT_EQ(run("emit-ar-quiver A 3 0 none").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, EmitIsBitStable) {
    auto a = run("emit-ar-quiver D 4 10 d4-derived --format dot");
    auto b = run("emit-ar-quiver D 4 10 d4-derived --format dot");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("digraph", 0), 0u);
    auto j = nlohmann::json::parse(run("emit-ar-quiver A 3 6 cta2 --format json").out);
    std::size_t marked = 0;
    for (const auto& n : j.at("nodes")) marked += n.at("marked").get<bool>();
    EXPECT_EQ(marked, 6u);
    EXPECT_NE(run("emit-ar-quiver A 2 3 none --format ascii").out.find("(tau <-)"), std::string::npos);
}

TEST(Cli, OutFileAndDeterministicReports) {
    auto path = std::filesystem::temp_directory_path() / "ctforge_cli_test_report.json";
    std::filesystem::remove(path);
    auto r = run("classify-trivext D 4 2 10 --format json --out " + path.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    EXPECT_EQ(s.str(), run("classify-trivext D 4 2 10 --format json").out);
    auto j = nlohmann::json::parse(s.str());
    EXPECT_EQ(j.at("schema"), "ctforge.report/1");
    EXPECT_TRUE(j.at("timing").is_null());
    for (const char* key : {"command", "inputs", "results", "engine_version"}) EXPECT_TRUE(j.contains(key)) << key;
    std::filesystem::remove(path);
    auto t = nlohmann::json::parse(run("verify-example ctd --format json --timing").out);
    EXPECT_TRUE(t.at("timing").contains("wall_ms"));
}
