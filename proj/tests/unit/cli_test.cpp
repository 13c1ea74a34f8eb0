#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <qpartid/cli.hpp>

#include "process.hpp"

using namespace qpartid;

namespace
{

struct Captured
{
    int code;
    std::string out;
    std::string err;
};

Captured run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "qpartid");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json without_timing(std::string text)
{
    auto j = nlohmann::json::parse(text);
    j.erase("timing");
    return j;
}

} // namespace

TEST(Cli, VerifyGridSize)
{
    const auto r = run_cli({"verify", "--family", "result1", "--n-max", "8", "--m-max", "8", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["totals"]["cases"], 81);
    EXPECT_EQ(j["totals"]["failures"], 0);
    EXPECT_EQ(j["results"].size(), 81u);
    EXPECT_EQ(j["version"], cli::tool_version);
    EXPECT_EQ(j["results"][0]["params"]["n"], 0);
}

TEST(Cli, JsonIsDeterministicAcrossWorkerCounts)
{
    const std::vector<std::string> base{"verify", "--family", "resdbl2", "--family", "theorem6", "--n-max",
                                        "4",      "--m-max",  "4",       "--p-max",  "3",        "--format", "json"};
    auto one = base, four = base;
    one.insert(one.end(), {"--workers", "1"});
    four.insert(four.end(), {"--workers", "4"});
    const auto a = run_cli(one), b = run_cli(four), c = run_cli(four);
    ASSERT_EQ(a.code, 0);
    auto ja = without_timing(a.out), jb = without_timing(b.out);
    ja["config"].erase("workers");
    jb["config"].erase("workers");
    EXPECT_EQ(ja, jb);
    EXPECT_EQ(without_timing(b.out), without_timing(c.out));
}

TEST(Cli, SetOverrides)
{
    const auto r = run_cli({"verify", "--family", "resdbl1", "--n-max", "2", "--m-max", "2", "--p-max", "2",
                            "--a-set", "0", "--b-set", "1,3", "--c-set", "2", "--format", "tsv"});
    EXPECT_EQ(r.code, 0);
    // header plus 3*3*3*1*2*1 rows
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 55);
    EXPECT_EQ(run_cli({"verify", "--family", "resdbl1", "--b-set", "0"}).code, 2);
}

TEST(Cli, InjectedFailure)
{
    const auto r = run_cli({"verify", "--family", "comb02", "--family", "delta", "--inject-failure", "delta",
                            "--n-max", "3", "--m-max", "3", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["totals"]["failures"], 1);
    bool found = false;
    for (const auto &item : j["results"]) {
        if (!item["pass"].get<bool>()) {
            EXPECT_EQ(item["id"], "delta");
            EXPECT_FALSE(item["first_mismatch"].is_null());
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({"verify", "--family", "no_such_id"}).code, 2);
    EXPECT_EQ(run_cli({"verify"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--all", "--n-max", "-1"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--all", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--func", "Pstar", "--n", "3", "--m", "2"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--func", "Zed", "--n", "3"}).code, 2);
    EXPECT_EQ(run_cli({"oracle-diff", "--n-max", "1000"}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, TableAndGauss)
{
    EXPECT_EQ(run_cli({"table", "--func", "Pn", "--n", "5"}).out, "7\n");
    EXPECT_EQ(run_cli({"table", "--func", "P", "--n", "5", "--m", "2", "--p", "3"}).out, "1\n");
    EXPECT_EQ(run_cli({"table", "--func", "Q", "--n", "0", "--m", "0", "--p", "0"}).out, "1\n");
    EXPECT_EQ(run_cli({"table", "--func", "P", "--n", "4", "--m", "2"}).out, "2\n");
    EXPECT_EQ(run_cli({"table", "--func", "Qn", "--n-max", "3", "--format", "tsv"}).out,
              "n\tm\tp\tvalue\n0\t-\t-\t1\n1\t-\t-\t1\n2\t-\t-\t1\n3\t-\t-\t2\n");
    EXPECT_EQ(run_cli({"gauss", "--m", "2", "--p", "2"}).out, "1 + q + 2q^2 + q^3 + q^4\n[1, 1, 2, 1, 1]\n");
    EXPECT_EQ(run_cli({"gauss", "--m", "0", "--p", "9"}).out, "1\n[1]\n");
    EXPECT_EQ(run_cli({"gauss", "--m", "1", "--p", "2", "--base", "2"}).out, "1 + q^2 + q^4\n[1, 0, 1, 0, 1]\n");
}

TEST(Cli, OracleDiff)
{
    const auto zero = run_cli({"oracle-diff", "--n-max", "0", "--format", "json"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_EQ(nlohmann::json::parse(zero.out)["totals"]["cases"], 1);
    EXPECT_EQ(run_cli({"oracle-diff", "--n-max", "12"}).code, 0);
}

TEST(Cli, OutFileAndBinary)
{
    const auto path = std::filesystem::temp_directory_path() / "qpartid_cli_test_report.json";
    const auto r = run_cli({"verify", "--family", "genfun", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(nlohmann::json::parse(test_support::slurp(path))["totals"]["cases"], 7);
    std::filesystem::remove(path);

    EXPECT_EQ(test_support::run_process(QPARTID_BINARY, "verify --family no_such_id").exit_code, 2);
    const auto g = test_support::run_process(QPARTID_BINARY, "gauss --m 2 --p 2");
    EXPECT_EQ(g.exit_code, 0);
    EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "1 + q + 2q^2 + q^3 + q^4");
}
