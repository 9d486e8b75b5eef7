#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "tempent/cli.hpp"

using tempent::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST(Cli, EntropyExamples) {
    auto r = call({"entropy", "--sigma", "0.5", "--lambda", "0", "--dist", "0.5,0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.83255461\n");
    r = call({"entropy", "--sigma", "1", "--lambda", "3", "--dist", "0.5,0.5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.69314718\n");
}

TEST(Cli, SweepEmitsHeaderAndOneRowPerGridPoint) {
    const auto r = call({"sweep", "--family", "A", "--sigma", "0.5", "--lambda", "1", "--delta", "1e-3", "--n", "10,100,1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "family,n,delta,sigma,lambda,s_p,s_p_prime,ratio");
    EXPECT_EQ(count_lines(r.out), 4u);
    EXPECT_NE(r.out.find("\nA,10,0.001,0.5,1,"), std::string::npos);
}

TEST(Cli, SweepRenyiControlRows) {
    const auto r = call({"sweep", "--family", "A,B", "--sigma", "0.5", "--delta", "1e-3", "--n", "10,100", "--control-renyi", "0.5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 9u);
    EXPECT_NE(r.out.find("\nA_renyi,100,"), std::string::npos);
    EXPECT_NE(r.out.find("\nB_renyi,10,"), std::string::npos);
}

TEST(Cli, CheckAxiomsPassesAndCanBeForcedToFail) {
    const std::vector<std::string> base{"check-axioms", "--sigma", "0.5", "--lambda", "1", "--n", "3,5", "--samples", "500"};
    const auto ok = call(base);
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_EQ(ok.out.substr(0, ok.out.find('\n')), "axiom,config,samples,worst_violation,pass");
    EXPECT_NE(ok.out.find("maximality,n=5;sigma=0.5;lambda=1,500,"), std::string::npos);
    EXPECT_EQ(ok.out.find("false"), std::string::npos);

    auto forced = base;
    forced.insert(forced.end(), {"--tol", "-1"});
    const auto bad = call(forced);
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("false"), std::string::npos);
}

TEST(Cli, VerifyFracSubsetAndForcedFailure) {
    const auto ok = call({"verify-frac", "--sigma", "0.5", "--lambda", "1"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.substr(0, ok.out.find('\n')), "p,sigma,lambda,t,numeric,closed_form,rel_err");
    EXPECT_EQ(count_lines(ok.out), 10u);
    const auto bad = call({"verify-frac", "--sigma", "0.5", "--lambda", "1", "--tol", "1e-300"});
    EXPECT_EQ(bad.code, 1);
    const auto shifted = call({"verify-frac", "--sigma", "0.5", "--lambda", "1", "--t", "-2,0.5"});
    EXPECT_EQ(shifted.code, 0);
    EXPECT_EQ(count_lines(shifted.out), 19u);
}

TEST(Cli, SearchRowAndTolerance) {
    const auto r = call({"search", "--n", "4", "--delta", "0.1", "--sigma", "1", "--samples", "200", "--seed", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\nsearch,4,0.1,1,0,"), std::string::npos);
    const auto bad = call({"search", "--n", "4", "--delta", "0.1", "--samples", "200", "--tol", "0"});
    EXPECT_EQ(bad.code, 1);
}

TEST(Cli, UsageErrorsNameTheFlag) {
    struct Case {
        std::vector<std::string> args;
        std::string flag;
    };
    const std::vector<Case> cases{
        {{"entropy", "--sigma", "2", "--dist", "0.5,0.5"}, "--sigma"},
        {{"entropy", "--sigma", "0.5", "--lambda", "-1", "--dist", "0.5,0.5"}, "--lambda"},
        {{"entropy", "--sigma", "0.5", "--dist", "0.6,0.6"}, "--dist"},
        {{"entropy", "--sigma", "abc", "--dist", "0.5,0.5"}, "--sigma"},
        {{"sweep", "--family", "C", "--n", "10"}, "--family"},
        {{"sweep", "--n", "100,10"}, "--n"},
        {{"sweep", "--n", "10", "--delta", "3"}, "--delta"},
        {{"sweep", "--n", "10", "--control-renyi", "1"}, "--control-renyi"},
        {{"search", "--n", "4,5"}, "--n"},
        {{"check-axioms", "--seed", "-4"}, "--seed"},
        {{"entropy", "--sigma", "0.5"}, "--dist"},
    };
    for (const auto& c : cases) {
        const auto r = call(c.args);
        EXPECT_EQ(r.code, 2) << c.flag;
        EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
        EXPECT_EQ(count_lines(r.err), 1u) << r.err;
    }
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"bogus"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "tempent_cli_test.csv";
    const auto r = call({"sweep", "--family", "B", "--n", "10,20", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(count_lines(buf.str()), 3u);
    EXPECT_EQ(buf.str().find('\r'), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::vector<std::vector<std::string>> commands{
        {"entropy", "--sigma", "0.3", "--lambda", "2", "--dist", "0.1,0.2,0.7"},
        {"check-axioms", "--sigma", "0.25", "--lambda", "5", "--n", "4", "--samples", "300", "--seed", "11"},
        {"sweep", "--sigma", "0.75", "--n", "10,1000,100000", "--control-renyi", "0.5"},
        {"search", "--n", "5", "--delta", "0.2", "--samples", "300", "--seed", "4"},
        {"verify-frac", "--lambda", "2"},
    };
    for (const auto& args : commands) {
        const auto a = call(args);
        const auto b = call(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out) << args.front();
    }
}

TEST(Cli, BinaryExitCodes) {
    auto status = [](const std::string& args) {
        const std::string cmd = std::string(TEMPENT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    EXPECT_EQ(status("entropy --sigma 0.5 --dist 0.5,0.5"), 0);
    EXPECT_EQ(status("entropy --sigma 5 --dist 0.5,0.5"), 2);
    EXPECT_EQ(status("check-axioms --n 3 --samples 50 --tol -1"), 1);
}
