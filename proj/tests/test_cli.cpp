#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace
{
    struct Run
    {
        int code = -1;
        std::string out;
    };

    Run run(const std::string &args)
    {
        Run r;
        const std::string cmd = std::string(SWM_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE *p = popen(cmd.c_str(), "r");
        if (!p)
            return r;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0)
            r.out.append(buf, n);
        const int st = pclose(p);
        r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
        return r;
    }

    nlohmann::json parse(const Run &r) { return nlohmann::json::parse(r.out); }
} // namespace

TEST(Cli, FusionTableEntry)
{
    const auto r = run("fusion --m 1 --table");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_EQ(j["schema_version"], "1");
    EXPECT_EQ(j["results"]["basis"][1], "X_2");
    EXPECT_EQ(j["results"]["table"][1][2], "P_1");
    EXPECT_TRUE(j["status"]["ok"].get<bool>());
}

TEST(Cli, FusionPair)
{
    const auto r = run("fusion --m 1 --a X_2 --b P_1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["results"]["product"]["class"], "2X_3 + P_2");
}

TEST(Cli, RingPresentation)
{
    const auto r = run("ring --m 2 --kind K");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_EQ(j["results"]["rank"], 5);
    EXPECT_TRUE(j["results"]["unimodular"].get<bool>());
    const auto p = parse(run("ring --m 2 --kind P"));
    EXPECT_EQ(p["results"]["presentation"], "Z[X]/(U_9 - 2U_4)");
}

TEST(Cli, WeightsRationalsAreExact)
{
    const auto j = parse(run("weights --m 2"));
    EXPECT_EQ(j["results"]["central_charge"]["num"], "-81");
    EXPECT_EQ(j["results"]["central_charge"]["den"], "10");
}

TEST(Cli, ConnectionAtTwo)
{
    const auto r = run("connection --m 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse(r)["results"]["basis_used"], "alternate");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("fusion --m 1 --bogus").code, 2);
    EXPECT_EQ(run("fusion --m 0").code, 2);
    EXPECT_EQ(run("connection --m 2 --precision 10").code, 2);
    EXPECT_EQ(run("fusion --m 1 --a X_9 --b X_1").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, DeterministicAndMarkdown)
{
    const auto a = run("ode --m 1 --terms 32"), b = run("ode --m 1 --terms 32");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto md = run("fusion --m 1 --format md");
    ASSERT_EQ(md.code, 0);
    EXPECT_NE(md.out.find('|'), std::string::npos);
    EXPECT_THROW(nlohmann::json::parse(md.out), nlohmann::json::parse_error);
}
