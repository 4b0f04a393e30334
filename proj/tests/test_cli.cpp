#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <gtmod/cli.hpp>

using nlohmann::json;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string &stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = gtmod::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string crit3 = R"({"n":3,"rows":[["2","0","-2"],["1","1"],["1"]]})";

} // namespace

TEST(Cli, ClassifyCritical)
{
    const Result r = run({"classify", "--tableau", crit3});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["is_1_critical"]);
    EXPECT_EQ(j["critical_pairs"], json::parse("[[2,1,2]]"));
    EXPECT_TRUE(j.contains("seed"));
}

TEST(Cli, ClassifyGenericFromStdin)
{
    const Result r = run({"classify", "--tableau", "-"}, R"({"n":3,"rows":[["0","0","0"],["1/2","0"],["1/4"]]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(json::parse(r.out)["generic"]);
}

TEST(Cli, ClassifyMalformed)
{
    EXPECT_EQ(run({"classify", "--tableau", R"({"n":3,"rows":[["2","0"],["1","1"],["1"]]})"}).code, 2);
    EXPECT_EQ(run({"classify", "--tableau", R"({"n":2,"rows":[["0.5","0"],["1"]]})"}).code, 2);
    EXPECT_EQ(run({"classify", "--tableau", "{not json"}).code, 2);
    EXPECT_EQ(run({"classify", "--tableau", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"classify"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ActFiniteDim)
{
    const std::string spec = R"({"family":"FiniteDim","n":2,"lambda":["1","0"]})";
    const std::string vec = R"({"terms":[{"tag":{"kind":"Std","tableau":{"n":2,"rows":[["1","-1"],["0"]]}},"coeff":"1"}]})";
    const Result r = run({"act", "--spec", spec, "--vector", vec, "--generator", "E,1,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["coeff"], "1");
    EXPECT_EQ(j["terms"][0]["tag"]["tableau"]["rows"], json::parse(R"([["1","-1"],["1"]])"));
}

TEST(Cli, ActOneSingularWeight)
{
    const std::string spec = R"({"family":"OneSingular","tableau":)" + crit3 + R"(,"pair":[2,1,2]})";
    const std::string vec = R"({"terms":[{"tag":{"kind":"Sym","shift":{"n":3,"rows":[["0","0"],["0"]]}},"coeff":"1"}]})";
    const Result r = run({"act", "--spec", spec, "--vector", vec, "--generator", "E,1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["coeff"], "1");
    EXPECT_EQ(j["terms"][0]["tag"]["kind"], "Sym");
}

TEST(Cli, ActCasimirGeneric)
{
    const std::string spec = R"({"family":"Generic","tableau":{"n":2,"rows":[["1","-1"],["1/2"]]}})";
    const std::string vec = R"({"spec":)" + spec + R"(,"terms":[{"tag":{"kind":"Gen","shift":{"n":2,"rows":[["0"]]}},"coeff":"3/4"}]})";
    const Result r = run({"act", "--vector", vec, "--generator", "C,2,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["terms"][0]["coeff"], "3/4");
    const Result c11 = run({"act", "--vector", vec, "--generator", "C,1,1"});
    EXPECT_EQ(json::parse(c11.out)["terms"][0]["coeff"], "3/8");
}

TEST(Cli, ActRejectsIncompatibleInput)
{
    const std::string spec = R"({"family":"FiniteDim","n":2,"lambda":["1","0"]})";
    const std::string gen = R"({"terms":[{"tag":{"kind":"Gen","shift":{"n":2,"rows":[["0"]]}},"coeff":"1"}]})";
    EXPECT_EQ(run({"act", "--spec", spec, "--vector", gen, "--generator", "E,1,2"}).code, 2);
    const std::string std_vec = R"({"terms":[{"tag":{"kind":"Std","tableau":{"n":2,"rows":[["1","-1"],["0"]]}},"coeff":"1"}]})";
    EXPECT_EQ(run({"act", "--spec", spec, "--vector", std_vec, "--generator", "E,1,3"}).code, 2);
    EXPECT_EQ(run({"act", "--spec", spec, "--vector", std_vec, "--generator", "X,1,2"}).code, 2);
    EXPECT_EQ(run({"act", "--spec", spec, "--vector", std_vec, "--generator", "C,1,2"}).code, 2);
    EXPECT_EQ(run({"act", "--vector", std_vec, "--generator", "E,1,2"}).code, 2); // no spec
    EXPECT_EQ(run({"act", "--spec", R"({"family":"Generic","tableau":)" + crit3 + "}", "--vector", std_vec,
                   "--generator", "E,1,2"})
                  .code,
              2);
}

TEST(Cli, Basis)
{
    const Result r = run({"basis", "--lambda", "2,1,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["dimension"], 8);
    EXPECT_EQ(j["weyl_dim"], 8);
    EXPECT_EQ(j["basis"].size(), 8u);
    EXPECT_EQ(run({"basis", "--lambda", "0,1"}).code, 2);
    EXPECT_EQ(run({"basis", "--lambda", "1,x"}).code, 2);
}

TEST(Cli, VerifySmallPasses)
{
    const Result r = run({"verify", "--n-max", "2", "--generic-count", "3", "--seed", "5"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::istringstream lines(r.out);
    std::string line, last;
    int count = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        EXPECT_EQ(j["seed"], 5u);
        last = line;
        ++count;
    }
    EXPECT_GT(count, 1);
    EXPECT_TRUE(json::parse(last)["pass"]);
}

TEST(Cli, VerifyDefaultPasses)
{
    EXPECT_EQ(run({"verify"}).code, 0);
}

TEST(Cli, VerifySignMutationFails)
{
    EXPECT_EQ(run({"verify", "--mutate", "sign-e12", "--n-max", "2", "--suite", "fd"}).code, 1);
}

TEST(Cli, VerifyConfigErrors)
{
    EXPECT_EQ(run({"verify", "--n-max", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--mutate", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "--radius", "-1"}).code, 2);
    EXPECT_EQ(run({"verify", "--trunc", "0"}).code, 2);
}

TEST(Cli, IdenticalConfigIsByteIdentical)
{
    const std::vector<std::string> args = {"verify", "--n-max", "3", "--suite", "singular", "--singular-count", "2", "--seed", "9"};
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find('.'), std::string::npos);
    const Result c = run({"verify", "--n-max", "3", "--suite", "singular", "--singular-count", "2", "--seed", "10"});
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, SeedFromEnvironment)
{
    ::setenv("GTMOD_SEED", "77", 1);
    const Result r = run({"classify", "--tableau", crit3});
    ::unsetenv("GTMOD_SEED");
    EXPECT_EQ(json::parse(r.out)["seed"], 77u);
    const Result explicit_seed = run({"classify", "--tableau", crit3, "--seed", "3"});
    EXPECT_EQ(json::parse(explicit_seed.out)["seed"], 3u);
}

TEST(Cli, WritesOutFile)
{
    const std::string path = ::testing::TempDir() + "gtmod_cli_out.json";
    const Result r = run({"classify", "--tableau", crit3, "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    const json j = json::parse(f);
    EXPECT_TRUE(j["is_1_critical"]);
}
