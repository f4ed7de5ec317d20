#include "commands.hpp"
#include "golden_suite.hpp"

#include "ldb/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace {

const std::string kFx = LDB_FIXTURE_DIR;

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "ldwb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ldwb::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ldwb_test_" + name)).string();
}

bool contains(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

}  // namespace

TEST(Cli, CheckPassAndFail) {
    EXPECT_EQ(run({"check", kFx + "/affine_2d.json", "--axiom-set", "ld"}).code, ldwb::kPass);
    const CliRun bad = run({"check", kFx + "/affine_2d_perturbed.json", "--axiom-set", "ld"});
    EXPECT_EQ(bad.code, ldwb::kViolation);
    EXPECT_TRUE(contains(bad.out, "Ld2 at (e1,e1,e1)")) << bad.out;
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({"check", kFx + "/malformed.json", "--axiom-set", "ld"}).code, ldwb::kInputError);
    EXPECT_EQ(run({"check", kFx + "/shape_mismatch.json", "--axiom-set", "ld"}).code, ldwb::kInputError);
    EXPECT_EQ(run({"check", kFx + "/nope.json", "--axiom-set", "ld"}).code, ldwb::kInputError);
    EXPECT_EQ(run({"check", kFx + "/affine_2d.json", "--axiom-set", "nonsense"}).code, ldwb::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, ldwb::kInputError);
    EXPECT_EQ(run({"check", kFx + "/affine_2d.json", "--axiom-set", "quadri"}).code, ldwb::kInputError);
}

TEST(Cli, JsonReport) {
    const std::string path = tmp("report.json");
    const CliRun r = run({"check", kFx + "/affine_2d_perturbed.json", "--axiom-set", "ld", "--json-report", path});
    EXPECT_EQ(r.code, ldwb::kViolation);
    EXPECT_TRUE(std::filesystem::exists(path));
}

TEST(Cli, ConstructWritesVerifiedOutput) {
    const std::string out = tmp("double.json");
    const CliRun r = run({"construct", "double", kFx + "/affine_2d.json", "--out", out});
    ASSERT_EQ(r.code, ldwb::kPass) << r.err;
    const ldb::StructureFile f = ldb::read_structure(out);
    EXPECT_EQ(f.kind(), "dendriform");
    EXPECT_EQ(f.dim(), 4u);
    EXPECT_EQ(run({"check", out, "--axiom-set", "ld"}).code, ldwb::kPass);
}

TEST(Cli, ConstructRejectsNonSolution) {
    const CliRun r = run({"construct", "cobound", kFx + "/affine_2d.json", kFx + "/e1e1_r.json", "--out", tmp("bad.json")});
    EXPECT_EQ(r.code, ldwb::kViolation);
}

TEST(Cli, Classify) {
    const CliRun r = run({"classify", kFx + "/affine_2d_semidirect.json", kFx + "/skew_r.json"});
    EXPECT_EQ(r.code, ldwb::kPass);
    EXPECT_TRUE(contains(r.out, "Triangular")) << r.out;
}

TEST(Cli, SearchDim1) {
    const CliRun r = run({"search", "dim1", "--grid-bound", "2"});
    EXPECT_EQ(r.code, ldwb::kPass);
    EXPECT_TRUE(contains(r.out, "25 cases, 0 disagreeing")) << r.out;
}

TEST(Cli, GoldenSuiteSelectionAndCorruption) {
    const CliRun list = run({"paper-suite", "--list"});
    EXPECT_EQ(list.code, ldwb::kPass);
    EXPECT_TRUE(contains(list.out, ldwb::golden_cases().front().name));
    EXPECT_EQ(run({"paper-suite", "--only", "no-such-case"}).code, ldwb::kPass);
    EXPECT_EQ(run({"paper-suite", "--only", "scalar-1d"}).code, ldwb::kPass);
    EXPECT_EQ(run({"paper-suite", "--only", "abelian-circ-2d", "--corrupt", "abelian-circ-2d"}).code,
              ldwb::kViolation);
    EXPECT_EQ(run({"paper-suite", "--corrupt", "unknown-input"}).code, ldwb::kInputError);
}

TEST(GoldenSuite, CorruptionIsDetectedInEveryInput) {
    for (const std::string name : {"abelian-circ-2d", "affine-2d"}) {
        ldwb::SuiteOptions o;
        o.only = {name + ": identities"};
        o.corrupt = name;
        EXPECT_FALSE(ldwb::run_golden_suite(o).ok()) << name;
        o.corrupt.clear();
        EXPECT_TRUE(ldwb::run_golden_suite(o).ok()) << name;
    }
}
