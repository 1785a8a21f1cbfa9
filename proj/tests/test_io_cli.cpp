#include "oracle.hpp"

#include "ztop/cli.hpp"
#include "ztop/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace ztop;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(ZTOP_DATA_DIR) + "/" + rel; }

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "ztop_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(to_json(Rational(-5, 6)), (Json{{"num", -5}, {"den", 6}}));
  EXPECT_EQ(rational_from_json(Json{{"num", 7}, {"den", 1}}), 7);
  EXPECT_THROW(rational_from_json(Json{{"num", 1}, {"den", 0}}), FormatError);
  EXPECT_THROW(rational_from_json(Json{{"num", 2}, {"den", 4}}), FormatError);
  EXPECT_THROW(rational_from_json(Json{{"num", 1}, {"den", -3}}), FormatError);
  EXPECT_THROW(rational_from_json(Json{{"num", 1}, {"den", 3}, {"x", 1}}), FormatError);
}

TEST(Json, RationalFunctions) {
  RationalFunction z(QPoly{5, 4}, QPoly{5, 11, 6});
  EXPECT_EQ(to_json(z), Json::parse(R"({"num": [5, 4], "den": [5, 11, 6]})"));
  EXPECT_EQ(rational_function_from_json(to_json(z)), z);
  EXPECT_THROW(rational_function_from_json(Json::parse(R"({"num": [10, 8], "den": [10, 22, 12]})")), FormatError);
  EXPECT_THROW(rational_function_from_json(Json::parse(R"({"num": [1], "den": [1, 0]})")), FormatError);
}

TEST(ResolutionFileFormat, RoundTripProperty) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> Nd(1, 9), chid(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    ResolutionFile f;
    f.data = oracle::monomial_data(1 + trial % 4, Nd(rng));
    for (auto& s : f.data.strata) s.chi_total = chid(rng);
    f.data.empty_chi_total = chid(rng);
    f.scope = trial % 2 ? Scope::global : Scope::local;
    if (trial % 3 == 0) f.name = "entry " + std::to_string(trial);
    if (trial % 5 == 0) f.isolated = true;
    Json doc = to_json(f);
    ResolutionFile back = resolution_file_from_json(doc);
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_json(back).dump(), doc.dump());
  }
}

TEST(ResolutionFileFormat, Rejections) {
  Json doc = to_json(ResolutionFile{oracle::monomial_data(2, 2), Scope::local, {}, {}, {}});
  Json extra = doc;
  extra["colour"] = "blue";
  EXPECT_THROW(resolution_file_from_json(extra), FormatError);
  Json extra_comp = doc;
  extra_comp["components"][0]["genus"] = 0;
  EXPECT_THROW(resolution_file_from_json(extra_comp), FormatError);
  Json version = doc;
  version["schema_version"] = 99;
  EXPECT_THROW(resolution_file_from_json(version), FormatError);
  Json dup = doc;
  dup["components"][1]["id"] = 1;
  EXPECT_THROW(resolution_file_from_json(dup), InvalidResolutionData);
  Json scope = doc;
  scope["scope"] = "semi";
  EXPECT_THROW(resolution_file_from_json(scope), FormatError);
}

TEST(Cli, CuspBothPipelines) {
  auto r = run({"zeta", "--poly", "x^2+y^3", "--pipeline", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "(4*s + 5)/(6*s^2 + 11*s + 5)"));
  EXPECT_TRUE(contains(r.out, "equal"));
  EXPECT_TRUE(contains(r.out, "lct c_0 = 5/6"));
  EXPECT_TRUE(contains(r.out, "[(-5/6, 1), (-1, 1)]"));
  auto m = run({"zeta", "--poly", "x^2+y^3", "--pipeline", "both", "--format", "machine"});
  Json j = Json::parse(m.out);
  EXPECT_EQ(j["resolution_independent"], "equal");
  EXPECT_EQ(j["zeta"], Json::parse(R"({"num": [5, 4], "den": [5, 11, 6]})"));
  EXPECT_EQ(j["conjecture4"]["pass"], true);
  EXPECT_EQ(j["lct"], Json::parse(R"({"num": 5, "den": 6})"));
}

TEST(Cli, MonomialFile) {
  auto r = run({"zeta", "--file", data("resolutions/monomial_n3_N2.json"), "--format", "machine"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["zeta"], Json::parse(R"({"num": [1], "den": [1, 6, 12, 8]})"));
  EXPECT_EQ(j["poles"], Json::parse(R"([{"location": {"num": -1, "den": 2}, "order": 3}])"));
  EXPECT_EQ(j["prediction"]["divisor_roots"],
            Json::parse(R"([{"root": {"num": -1, "den": 2}, "multiplicity": 3},
                            {"root": {"num": -1, "den": 1}, "multiplicity": 3}])"));
}

TEST(Cli, AssertIsolatedControlsDivisor) {
  ResolutionFile f{oracle::monomial_data(2, 3), Scope::local, {}, {}, {}};
  auto path = temp_file("plain.json", to_json(f).dump());
  auto without = Json::parse(run({"zeta", "--file", path.string(), "--format", "machine"}).out);
  EXPECT_TRUE(without["prediction"]["divisor_roots"].is_null());
  EXPECT_EQ(without["prediction"]["isolated_hypothesis_met"], "unknown");
  auto with = Json::parse(run({"zeta", "--file", path.string(), "--assert-isolated", "--format", "machine"}).out);
  EXPECT_EQ(with["prediction"]["divisor_roots"].size(), 3u);
}

TEST(Cli, InputErrorsExitOne) {
  auto r = run({"zeta", "--poly", "x^2*y"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "--allow-nonreduced"));
  EXPECT_EQ(run({"zeta", "--poly", "x^2*y", "--allow-nonreduced"}).code, 0);
  EXPECT_EQ(run({"zeta", "--poly", "x^2 +* y"}).code, 1);
  EXPECT_EQ(run({"zeta", "--poly", "1 + x"}).code, 1);
  EXPECT_EQ(run({"zeta", "--poly", "x^2+2*x*y+y^2", "--pipeline", "toric"}).code, 1);
  EXPECT_EQ(run({"zeta", "--poly", "(y^2-2*x^2)^2+x^5"}).code, 1);
  EXPECT_EQ(run({"zeta", "--poly", "x^2+y^3", "--scope", "global"}).code, 1);
  EXPECT_EQ(run({"zeta", "--poly", "x", "--file", data("resolutions/monomial_n1_N1.json")}).code, 1);
  EXPECT_EQ(run({"zeta", "--file", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"zeta", "--bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto bad = temp_file("bad.json", R"({"schema_version": 1, "scope": "local", "ambient_dim": 2, "components": [],
                                       "strata": [], "surprise": 1})");
  auto b = run({"zeta", "--file", bad.string()});
  EXPECT_EQ(b.code, 1);
  EXPECT_TRUE(contains(b.err, "surprise"));
}

TEST(Cli, TheoremViolationExitsTwo) {
  // order-2 pole at -1/2 while a component with nu/N = 1/3 makes lct smaller
  ResolutionFile f;
  f.data.components = {{1, 2, 1, true}, {2, 2, 1, true}, {3, 3, 1, true}};
  f.data.strata = {{{1, 2}, 1, 1}, {{3}, 0, 0}};
  auto path = temp_file("violation.json", to_json(f).dump());
  auto r = run({"zeta", "--file", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "THEOREM VIOLATION"));
}

TEST(Cli, GlobalFile) {
  auto r = run({"zeta", "--file", data("resolutions/hyperplane_global_n3.json"), "--format", "machine"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  // 2 + 1/(1+s)
  EXPECT_EQ(j["zeta"], Json::parse(R"({"num": [3, 2], "den": [1, 1]})"));
  EXPECT_EQ(j["scope"], "global");
}

TEST(Cli, Explain) {
  auto cusp = run({"explain", "--poly", "x^2+y^3"});
  EXPECT_EQ(cusp.code, 0);
  EXPECT_TRUE(contains(cusp.out, "3 blowups"));
  EXPECT_TRUE(contains(cusp.out, "(N, nu) = (2, 2)"));
  EXPECT_TRUE(contains(cusp.out, "(N, nu) = (3, 3)"));
  EXPECT_TRUE(contains(cusp.out, "(N, nu) = (6, 5)  [N = 1 + 3 + 2, nu = 2 + (3 - 1) + (2 - 1)]"));
  EXPECT_TRUE(contains(run({"explain", "--poly", "x*y"}).out, "1 blowup:"));
  EXPECT_TRUE(contains(run({"explain", "--poly", "x"}).out, "identity resolution"));
  auto toric = run({"explain", "--poly", "x^2+y^3", "--pipeline", "toric", "--format", "machine"});
  Json j = Json::parse(toric.out);
  EXPECT_EQ(j["resolutions"][0]["fan"].size(), 5u);
}

TEST(Cli, Corpus) {
  auto empty = temp_file("empty.json", R"({"schema_version": 1, "entries": []})");
  auto e = run({"corpus", empty.string()});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "0/0 passed"));

  // a corrupted expected zeta fails that entry only
  Json c = Json::parse(R"({"schema_version": 1, "entries": [
    {"name": "cusp", "poly": "x^2+y^3", "expected": {"zeta": {"num": [5, 4], "den": [5, 11, 6]},
      "lct": {"num": 5, "den": 6}, "poles": [{"location": {"num": -5, "den": 6}, "order": 1},
                                              {"location": {"num": -1, "den": 1}, "order": 1}]}},
    {"name": "cusp corrupted", "poly": "x^2+y^3", "expected": {"zeta": {"num": [5, 3], "den": [5, 11, 6]},
      "lct": {"num": 5, "den": 6}, "poles": [{"location": {"num": -5, "den": 6}, "order": 1},
                                              {"location": {"num": -1, "den": 1}, "order": 1}]}}]})");
  auto path = temp_file("corrupt.json", c.dump());
  auto r = run({"corpus", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "PASS cusp"));
  EXPECT_TRUE(contains(r.out, "FAIL cusp corrupted"));
  EXPECT_TRUE(contains(r.out, "1/2 passed"));

  // bless rewrites expectations from the computed values
  auto blessed = run({"corpus", path.string(), "--bless"});
  EXPECT_EQ(blessed.code, 0);
  EXPECT_EQ(run({"corpus", path.string()}).code, 0);
}

TEST(Cli, BundledCorpusIsDeterministic) {
  auto a = run({"corpus", data("corpus.json"), "--format", "machine"});
  auto b = run({"corpus", data("corpus.json"), "--format", "machine"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["passed"], j["total"]);
  EXPECT_GE(j["total"].get<int>(), 30);
}
