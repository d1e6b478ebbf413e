#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cli.hpp"

using namespace numsg;
using namespace numsg::cli;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

RunConfig config_for(Command cmd, std::vector<std::int64_t> gens, Format format = Format::Text) {
    RunConfig c;
    c.command = cmd;
    c.generators = std::move(gens);
    c.format = format;
    return c;
}

fs::path write_temp(const std::string& name, const std::string& body) {
    auto path = fs::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST(CliParsing, Generators) {
    EXPECT_EQ(parse_generators("4,7,9"), (std::vector<std::int64_t>{4, 7, 9}));
    EXPECT_EQ(parse_generators(" 2 , 3 "), (std::vector<std::int64_t>{2, 3}));
    EXPECT_ANY_THROW(parse_generators("4,x"));
    EXPECT_ANY_THROW(parse_generators(""));
    EXPECT_EQ(parse_range("2..6"), (std::pair<std::int64_t, std::int64_t>{2, 6}));
    EXPECT_EQ(parse_range("3"), (std::pair<std::int64_t, std::int64_t>{3, 3}));
    EXPECT_EQ(parse_batch("# header\n2,3\n\n4,7,9\n"), (std::vector<std::string>{"2,3", "4,7,9"}));
}

TEST(CliExitCodes, Mapping) {
    EXPECT_EQ(exit_code_for(ErrorCode::GcdNotOne), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::NonMinimalBasis), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::InvalidQ), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::ZeroWq), 2);
    EXPECT_EQ(exit_code_for(ErrorCode::ResourceLimit), 3);
    EXPECT_EQ(exit_code_for(ErrorCode::IdentityViolation), 4);
    EXPECT_EQ(exit_code_for(ErrorCode::ConsistencyFailure), 4);
}

TEST(CliInfo, TextOutput) {
    auto r = run(config_for(Command::Info, {2, 3}));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "semigroup=<2,3>\nfrobenius=1\nconductor=2\ngenus=1\ngaps=1\np=1 - z + z^2\nk=1 - z^6\n"
              "hilbert=consistent\n");

    auto one = run(config_for(Command::Info, {1}));
    EXPECT_EQ(one.exit_code, 0);
    EXPECT_NE(one.out.find("frobenius=-1\n"), std::string::npos);
    EXPECT_NE(one.out.find("k=1\n"), std::string::npos);
}

TEST(CliInfo, JsonSchema) {
    auto r = run(config_for(Command::Info, {4, 7, 9}, Format::Json));
    ASSERT_EQ(r.exit_code, 0);
    auto doc = ordered_json::parse(r.out);
    EXPECT_EQ(doc["semigroup"], ordered_json({4, 7, 9}));
    EXPECT_EQ(doc["profile"]["frobenius"], 10);
    EXPECT_EQ(doc["profile"]["gaps"], ordered_json({1, 2, 3, 5, 6, 10}));
    EXPECT_EQ(doc["k_poly"][1], ordered_json({16, "-1"}));
    EXPECT_FALSE(doc.contains("removed"));
}

TEST(CliErrors, InputErrorsExitTwo) {
    auto gcd = run(config_for(Command::Info, {2, 4}));
    EXPECT_EQ(gcd.exit_code, 2);
    EXPECT_TRUE(gcd.out.empty());
    EXPECT_NE(gcd.err.find("GcdNotOne"), std::string::npos);

    auto nonmin = run(config_for(Command::Info, {2, 3, 4}));
    EXPECT_EQ(nonmin.exit_code, 2);
    EXPECT_NE(nonmin.err.find("NonMinimalBasis"), std::string::npos);

    auto q1 = config_for(Command::VerifyComplex, {4, 7, 9});
    q1.q = 1;
    EXPECT_EQ(run(q1).exit_code, 2);
    EXPECT_NE(run(q1).err.find("InvalidQ"), std::string::npos);

    auto q5 = config_for(Command::VerifyComplex, {4, 7, 9});
    q5.q = 5;
    EXPECT_NE(run(q5).err.find("ZeroWq"), std::string::npos);

    auto n_only = config_for(Command::VerifyComplex, {4, 7, 9});
    n_only.n = 1;
    EXPECT_EQ(run(n_only).exit_code, 2);

    auto both = config_for(Command::Info, {});
    EXPECT_EQ(run(both).exit_code, 2);
}

TEST(CliErrors, ResourceLimitExitsThree) {
    auto c = config_for(Command::Info, {1000, 1001});
    c.limits.max_apery_nodes = 100;
    auto r = run(c);
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("ResourceLimit"), std::string::npos);
}

TEST(CliErrors, EnvironmentLimits) {
    ::setenv("NUMSG_MAX_DEGREE", "12345", 1);
    EXPECT_EQ(limits_from_environment().max_degree, 12345);
    ::unsetenv("NUMSG_MAX_DEGREE");
    EXPECT_EQ(limits_from_environment().max_degree, Limits{}.max_degree);
}

TEST(CliInfo, AutoMinimize) {
    auto c = config_for(Command::Info, {2, 3, 4}, Format::Json);
    c.auto_minimize = true;
    auto r = run(c);
    ASSERT_EQ(r.exit_code, 0);
    auto doc = ordered_json::parse(r.out);
    EXPECT_EQ(doc["semigroup"], ordered_json({2, 3}));
    EXPECT_EQ(doc["removed"], ordered_json({4}));
}

TEST(CliVerify, RealAndCyclotomic) {
    auto v = run(config_for(Command::Verify, {4, 7, 9}, Format::Json));
    ASSERT_EQ(v.exit_code, 0);
    auto doc = ordered_json::parse(v.out);
    ASSERT_EQ(doc["checks"].size(), 3u);
    EXPECT_EQ(doc["checks"][2]["computed"], "504");
    EXPECT_EQ(doc["pass"], true);

    auto all = run(config_for(Command::VerifyComplex, {4, 7, 9}));
    EXPECT_EQ(all.exit_code, 0);
    EXPECT_NE(all.out.find("result=pass (17 checks)"), std::string::npos);

    auto one = config_for(Command::VerifyComplex, {4, 7, 9});
    one.q = 2;
    auto r = run(one);
    EXPECT_NE(r.out.find("cyclotomic r=0 q=2 n=1 expected=0 computed=[0] pass"), std::string::npos);
}

TEST(CliVerify, BettiTableInput) {
    auto good = write_temp("numsg_test_betti_479.txt", "0 0 1\n1 16 1\n1 18 1\n1 21 1\n2 25 1\n2 30 1\n");
    auto c = config_for(Command::Verify, {4, 7, 9}, Format::Json);
    c.betti_path = good.string();
    auto r = run(c);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(ordered_json::parse(r.out)["sequence_source"], "betti");

    auto bad = write_temp("numsg_test_betti_bad.txt", "0 0 1\n1 16 1\n");
    c.betti_path = bad.string();
    auto mismatch = run(c);
    EXPECT_EQ(mismatch.exit_code, 2);
    EXPECT_NE(mismatch.err.find("BettiMismatch"), std::string::npos);
}

TEST(CliBatch, MixedEntries) {
    auto path = write_temp("numsg_test_batch.txt", "2,3\n2,4\n4,7,9\n");
    RunConfig c;
    c.command = Command::Info;
    c.input_path = path.string();
    c.format = Format::Json;
    auto r = run(c);
    EXPECT_EQ(r.exit_code, 2);
    auto doc = ordered_json::parse(r.out);
    ASSERT_EQ(doc.size(), 3u);
    EXPECT_EQ(doc[0]["profile"]["frobenius"], 1);
    EXPECT_EQ(doc[1]["error"]["code"], "GcdNotOne");
    EXPECT_EQ(doc[2]["profile"]["frobenius"], 10);

    c.format = Format::Csv;
    auto csv = run(c);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "generators,frobenius,conductor,genus,p_poly,k_poly");
}

TEST(CliSweep, SmallestRangeAndOracle) {
    RunConfig c;
    c.command = Command::Sweep;
    c.format = Format::Json;
    c.sweep = SweepParams{1, 2, 2, 3};
    c.oracle = true;
    auto r = run(c);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto doc = ordered_json::parse(r.out);
    EXPECT_EQ(doc["seed"], kDefaultSeed);
    EXPECT_EQ(doc["passed"], 1);
    EXPECT_EQ(doc["instances"][0]["semigroup"], ordered_json({2, 3}));
    EXPECT_EQ(doc["instances"][0]["theorem2_checks"], 3);
}

TEST(CliSweep, SameSeedSameBytes) {
    RunConfig c;
    c.command = Command::Sweep;
    c.format = Format::Json;
    c.seed = 99;
    c.sweep = SweepParams{20, 2, 5, 60};
    auto a = run(c);
    auto b = run(c);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    c.seed = 100;
    EXPECT_NE(run(c).out, a.out);
}

TEST(CliSweep, InvalidParameters) {
    RunConfig c;
    c.command = Command::Sweep;
    c.sweep = SweepParams{5, 1, 3, 50};
    EXPECT_EQ(run(c).exit_code, 2);
    c.sweep = SweepParams{5, 4, 6, 5};
    EXPECT_EQ(run(c).exit_code, 2);
}
