#include <gtest/gtest.h>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args) {
    const std::string cmd = std::string(DHOPF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

} // namespace

TEST(Cli, AntipodeMul) {
    const auto r = run("antipode mul 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(trimmed(r.out), "6");
    EXPECT_EQ(trimmed(run("antipode unrenorm 8").out), "-8");
    EXPECT_EQ(trimmed(run("antipode add 5").out), "-5");
}

TEST(Cli, Stirling) {
    const auto r = run("stirling 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(trimmed(r.out), "1 3 1");
}

TEST(Cli, SymfunCircle) {
    const auto r = run("symfun circle 1 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(trimmed(r.out), "2*m[1,1] + m[2]");
    EXPECT_EQ(trimmed(run("symfun circle 5 2,2").out), "m[5,2,2] + m[7,2]");
}

TEST(Cli, SymfunJson) {
    const auto r = run("symfun circle 1,1,1 1,1 --json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["lambda"], (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(j["mu"], (std::vector<int>{1, 1}));
    ASSERT_EQ(j["terms"].size(), 3u);
}

TEST(Cli, SeriesCsv) {
    const auto r = run("series moebius --upto 4 --csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,coefficient\n1,1\n2,-1\n3,-1\n4,0\n");
}

TEST(Cli, DomainErrorExitsOne) {
    EXPECT_EQ(run("antipode mul 0").code, 1);
    EXPECT_EQ(run("coproduct mul 0").code, 1);
    EXPECT_EQ(run("branch derive 4 8").code, 1);
}

TEST(Cli, UsageErrorExitsTwo) {
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("antipode").code, 2);
    EXPECT_EQ(run("antipode mul -3").code, 2);
    EXPECT_EQ(run("series nope --upto 3").code, 2);
}

TEST(Cli, Deterministic) {
    for (const char *args : {"coproduct mul 360 --json", "witt polys 4", "cocycle --phi zeta --upto 10",
                             "appendix gram --upto 6 --kind mul --csv"}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}

TEST(Cli, NormalOrderProduct) {
    const auto r = run("normalorder product 0 2 3 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(trimmed(r.out), ":a†^3 a^2: + 6 :a†^2 a: + 6 :a†:");
    EXPECT_EQ(run("normalorder product 0 2 3").code, 2);
}
