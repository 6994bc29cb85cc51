#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "curves.hpp"
#include "planeperiods/cli.hpp"
#include "planeperiods/json_io.hpp"

using namespace planeperiods;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "planeperiods");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "planeperiods_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST(Cli, GenusSix) {
    const Result r = cli({"genus", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "10\n");
}

TEST(Cli, CoverSepticHasNothingMissing) {
    const Result r = cli({"cover", "7", "--columns", "1,x^4,y^4,x^2*y^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("missing: none"), std::string::npos);
}

TEST(Cli, CoverDefaultAtTenExplainsGap) {
    const Result r = cli({"cover", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("missing: x^6*y^6"), std::string::npos);
    EXPECT_NE(r.out.find("at least 5 columns"), std::string::npos);
}

TEST(Cli, CoverJsonReportsMissing) {
    const Result r = cli({"--format", "json", "cover", "6", "--columns", "1,x^3,y^3"});
    ASSERT_EQ(r.code, 0);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc.begin().key(), "format_version");
    EXPECT_EQ(doc["command"], "cover");
    EXPECT_EQ(doc["missing"], Json::array({"x^2*y^2"}));
}

TEST(Cli, MinCoverQuintic) {
    const Result r = cli({"--format", "json", "min-cover", "5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["canonical"], Json::array({"1", "x^2", "y^2"}));
}

TEST(Cli, AdjointBasisJson) {
    const Json doc = Json::parse(cli({"--format", "json", "adjoint-basis", "5"}).out);
    EXPECT_EQ(doc["g"], 6);
    EXPECT_EQ(doc["basis"].size(), 6u);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"genus"}).code, 2);
    EXPECT_EQ(cli({"genus", "six"}).code, 2);
    EXPECT_EQ(cli({"--format", "yaml", "genus", "6"}).code, 2);
    EXPECT_EQ(cli({"--quad-tol", "-1", "genus", "6"}).code, 2);
    EXPECT_EQ(cli({"cover", "6", "--columns", "1,z"}).code, 2);
    EXPECT_EQ(cli({"periods", "--curve", "no-such.curve"}).code, 2);
}

TEST(Cli, DegreeCapApplies) {
    const std::string path = temp_file("fermat9.curve");
    std::ofstream(path) << "degree 9\n1 0 9 0\n1 0 0 9\n-1 0 0 0\n";
    const Result r = cli({"--degree-cap", "8", "monodromy", "--curve", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("degree cap"), std::string::npos);
}

TEST(Cli, SingularCurveIsDomainFailure) {
    const std::string path = temp_file("node.curve");
    std::ofstream(path) << "degree 4\n1 0 4 0\n1 0 0 4\n1 0 2 0\n-1 0 0 2\n";
    const Result r = cli({"--format", "json", "periods", "--curve", path});
    EXPECT_EQ(r.code, 1);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["error"]["stage"], "smoothness");
}

TEST(Cli, ShowConfigReflectsFileAndFlags) {
    const std::string path = temp_file("config.json");
    std::ofstream(path) << R"({"quad_tol": 1e-12, "seed": 9, "format": "json"})";
    const Result r = cli({"--config", path, "--seed", "3", "--show-config"});
    ASSERT_EQ(r.code, 0);
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["config"]["quad_tol"], 1e-12);
    EXPECT_EQ(doc["config"]["seed"], 3);
    const Result bad_path = cli({"--config", temp_file("missing.json"), "genus", "5"});
    EXPECT_EQ(bad_path.code, 2);
}

TEST(Cli, CompressVerifyExitCodes) {
    const std::string curve = testing_curves::data_path("fermat5.curve");
    const std::string omega = temp_file("omega5.json"), payload = temp_file("payload5.json"),
                      bad = temp_file("bad5.json"), other = temp_file("omega4.json");
    ASSERT_EQ(cli({"periods", "--curve", curve, "--out", omega}).code, 0);
    ASSERT_EQ(cli({"compress", "--curve", curve, "--out", payload}).code, 0);
    EXPECT_EQ(cli({"verify", "--payload", payload, "--omega", omega}).code, 0);

    Json doc = Json::parse(read_file(omega));
    doc["omega"][0][0][1] = doc["omega"][0][0][1].get<double>() + 1e-3;
    std::ofstream(bad) << dump_canonical(doc);
    const Result rej = cli({"--format", "json", "verify", "--payload", payload, "--omega", bad});
    EXPECT_EQ(rej.code, 1);
    EXPECT_EQ(Json::parse(rej.out)["result"], "Reject");

    std::string bytes = read_file(payload);
    bytes[bytes.find("\"d\": 5") + 5] = '6';
    std::ofstream(temp_file("tampered.json")) << bytes;
    EXPECT_EQ(cli({"verify", "--payload", temp_file("tampered.json"), "--omega", omega}).code, 2);

    ASSERT_EQ(cli({"periods", "--curve", "fermat4.curve", "--out", other}).code, 0);
    EXPECT_EQ(cli({"verify", "--payload", payload, "--omega", other}).code, 2);
}

TEST(Cli, JsonOutputIsDeterministic) {
    const auto a = cli({"--format", "json", "homology", "--curve", "fermat4.curve"});
    const auto b = cli({"--format", "json", "homology", "--curve", "fermat4.curve"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
