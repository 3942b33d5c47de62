#include "cli.hpp"
#include "io.hpp"
#include "kronecker/kronecker.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kronecker;
using io::json;

namespace {

namespace fs = std::filesystem;

const char* ringel_doc = R"({"field": {"prime": 5}, "r": 3, "dim": [2, 2],
  "maps": [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]})";

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("kronecker_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

Subspace<PrimeField> subspace_from(const PrimeField& f, const json& rows) {
  Matrix<PrimeField> b(f, rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) b(i, j) = f.from_integer(rows[i][j].get<std::int64_t>());
  return Subspace<PrimeField>::from_basis(b);
}

TEST(ParseModule, RingelModule) {
  auto m = std::get<io::PrimeModule>(io::parse_module_text(ringel_doc, "e"));
  EXPECT_EQ(m.dim(), (DimVector{2, 2}));
  EXPECT_EQ(m, ringel_module(PrimeField(5)));
}

TEST(ParseModule, MapCountMustMatchR) {
  const char* doc = R"({"field": {"prime": 5}, "r": 2, "dim": [1, 1], "maps": [[[1]]]})";
  try {
    io::parse_module_text(doc, "bad.json");
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/maps"), std::string::npos) << e.what();
  }
}

TEST(ParseModule, EntriesReducedModP) {
  const char* a = R"({"field": {"prime": 5}, "r": 2, "dim": [1, 1], "maps": [[[6]], [[-1]]]})";
  const char* b = R"({"field": {"prime": 5}, "r": 2, "dim": [1, 1], "maps": [[[1]], [[4]]]})";
  auto ma = io::parse_module_text(a, "a"), mb = io::parse_module_text(b, "b");
  EXPECT_TRUE(ma == mb);
  EXPECT_EQ(io::canonical(io::module_json(ma)), io::canonical(io::module_json(mb)));
  const char* half = R"({"field": {"prime": 5}, "r": 2, "dim": [1, 1], "maps": [[["1/2"]], [[0]]]})";
  EXPECT_EQ(std::get<io::PrimeModule>(io::parse_module_text(half, "h")).map(0)(0, 0), 3u);
}

TEST(ParseModule, SyntaxErrorsCarryALocation) {
  try {
    io::parse_module_text("{\"field\": {\"prime\": 5},\n \"r\": 3,, }", "broken.json");
    FAIL();
  } catch (const io::InputError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("broken.json"), std::string::npos);
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
  }
}

TEST(ParseModule, ShapeErrorsNameTheField) {
  const char* doc = R"({"field": {"prime": 5}, "r": 2, "dim": [2, 1], "maps": [[[1, 0]], [[1]]]})";
  try {
    io::parse_module_text(doc, "x");
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/maps/1/0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_module_text(R"({"field": {"prime": 6}, "r": 2, "dim": [0, 0], "maps": [[], []]})", "x"),
               io::InputError);
  EXPECT_THROW(io::parse_module_text(R"({"field": {"prime": 5}, "r": 2, "dim": [0, 0]})", "x"), io::InputError);
  EXPECT_THROW(io::parse_module_text(R"({"field": {"complex": 1}, "r": 2, "dim": [0, 0], "maps": [[], []]})", "x"),
               io::InputError);
}

TEST(ParseModule, RoundTripIsByteStable) {
  const char* q = R"({"field": {"rational": true}, "r": 2, "dim": [2, 1], "maps": [[["1/2", 3]], [[0, "-4/6"]]]})";
  auto m = io::parse_module_text(q, "q");
  const auto once = io::canonical(io::module_json(m));
  const auto twice = io::canonical(io::module_json(io::parse_module_text(once, "again")));
  EXPECT_EQ(once, twice);
  EXPECT_NE(once.find("\"-2/3\""), std::string::npos) << once;
}

TEST(ParseModule, PrimeOverride) {
  const char* q = R"({"field": {"rational": true}, "r": 2, "dim": [1, 1], "maps": [[[7]], [["1/3"]]]})";
  auto m = std::get<io::PrimeModule>(io::parse_module_text(q, "q", 5));
  EXPECT_EQ(m.map(0)(0, 0), 2u);
  EXPECT_EQ(m.map(1)(0, 0), 2u);
  EXPECT_THROW(io::parse_module_text(q, "q", 3), io::InputError);
}

TEST_F(CliTest, EqualSocleOnRingelModule) {
  auto e = write("e.json", ringel_doc);
  auto r = run({"check", "esp", "--d", "2", "--mode", "exhaustive", "--q", "5", e});
  EXPECT_EQ(r.code, 0) << r.err;
  auto rep = r.report();
  EXPECT_EQ(rep["result"]["verdict"]["holds"], "yes");
  EXPECT_EQ(rep["result"]["verdict"]["scope"], "exact_over_Fq");
  EXPECT_EQ(rep["inputs"][0]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST_F(CliTest, ConstantSocleFailsWithReCheckableWitnesses) {
  auto e = write("e.json", ringel_doc);
  auto r = run({"check", "csr", "--d", "1", e});
  ASSERT_EQ(r.code, 2) << r.err;
  auto v = r.report()["result"]["verdict"];
  EXPECT_EQ(v["holds"], "no");
  ASSERT_EQ(v["witnesses"].size(), 2u);
  const PrimeField f(5);
  auto m = ringel_module(f);
  std::set<std::size_t> dims;
  for (const auto& w : v["witnesses"]) {
    auto u = subspace_from(f, w["basis"]);
    EXPECT_EQ(soc_dim(m, u), w["soc_dim"].get<std::size_t>());
    EXPECT_EQ(hom_dim(x_u_module(u).module, m), w["hom_from_test_module"].get<std::size_t>());
    dims.insert(w["soc_dim"].get<std::size_t>());
  }
  EXPECT_EQ(dims, (std::set<std::size_t>{2, 3}));
}

TEST_F(CliTest, EqualSocleFailureWitnessReVerifies) {
  auto e = write("e.json", ringel_doc);
  auto r = run({"check", "esp", "--d", "1", e});
  ASSERT_EQ(r.code, 2);
  const auto rep = r.report();
  const auto& w = rep["result"]["verdict"]["witnesses"].at(0);
  const PrimeField f(5);
  EXPECT_NE(hom_dim(x_u_module(subspace_from(f, w["basis"])).module, ringel_module(f)), 0u);
}

TEST_F(CliTest, RadicalProperties) {
  auto e = write("e.json", ringel_doc);
  EXPECT_EQ(run({"check", "crr", "--d", "2", e}).code, 0);
  EXPECT_EQ(run({"check", "erp", "--d", "2", e}).code, 0);
  EXPECT_EQ(run({"check", "crr", "--d", "1", e}).code, 2);
}

TEST_F(CliTest, SampledYesIsUndetermined) {
  auto p = run({"construct", "projective", "--vertex", "2", "--r", "3", "--q", "101"});
  ASSERT_EQ(p.code, 0);
  auto path = write("p.json", p.out);
  auto r = run({"check", "esp", "--d", "1", "--mode", "sample", "--count", "8", "--seed", "3", path});
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_EQ(r.report()["result"]["verdict"]["holds"], "evidence_only");
  EXPECT_EQ(r.report()["result"]["verdict"]["scope"], "sampled");
}

TEST_F(CliTest, RationalInputIsSurveyedOverF5ByDefault) {
  auto path = write("e.json", R"({"field": {"rational": true}, "r": 3, "dim": [2, 2],
    "maps": [[[1, 0], [0, 1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]})");
  auto r = run({"profile", "--d", "1", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto res = r.report()["result"];
  EXPECT_EQ(res["field"]["prime"], 5);
  EXPECT_EQ(res["observations"].size(), 31u);
  EXPECT_EQ(res["min_soc"], 2);
  EXPECT_EQ(res["max_soc"], 3);
}

TEST_F(CliTest, GrassmannCountAndEnumerate) {
  auto c = run({"grassmann", "count", "--d", "1", "--r", "3", "--q", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report()["result"]["count"], 7);
  auto e = run({"grassmann", "enumerate", "--d", "2", "--r", "3", "--q", "5"});
  EXPECT_EQ(e.report()["result"]["points"].size(), 31u);
  EXPECT_EQ(run({"grassmann", "count", "--d", "3", "--r", "3", "--q", "2"}).code, 1);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  auto e = write("e.json", ringel_doc);
  auto a = run({"profile", "--d", "1", "--mode", "sample", "--seed", "9", "--count", "10", e});
  auto b = run({"profile", "--d", "1", "--mode", "sample", "--seed", "9", "--count", "10", e});
  EXPECT_EQ(a.out, b.out);
  auto t = run({"--timing", "stratum", e});
  EXPECT_TRUE(t.report().contains("timing_ms"));
  EXPECT_FALSE(a.report().contains("timing_ms"));
}

TEST_F(CliTest, StratumAndOrbit) {
  auto e = write("e.json", ringel_doc);
  auto s = run({"stratum", e});
  EXPECT_EQ(s.report()["result"]["level"], 2);
  auto x = run({"construct", "xu", "--basis", "1,0,0", "--q", "3"});
  auto path = write("x.json", x.out);
  auto o = run({"orbit", "--range=-1:1", path});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = o.report()["result"]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["dim"], json({5, 13}));
  EXPECT_EQ(rows[2]["dim"], json({2, 1}));
  EXPECT_TRUE(o.report()["result"]["window_limited"].get<bool>());
}

TEST_F(CliTest, ConstructionsPipeThroughStandardInput) {
  auto x = run({"construct", "xu", "--basis", "1,0,0;0,1,0", "--q", "5"});
  ASSERT_EQ(x.code, 0) << x.err;
  auto d = run({"dual", "-"}, x.out);
  ASSERT_EQ(d.code, 0) << d.err;
  auto m = std::get<io::PrimeModule>(io::parse_module_text(d.out, "dual"));
  EXPECT_EQ(m.dim(), (DimVector{1, 1}));
  auto inf = run({"construct", "inflate", "--s", "5", "-"}, x.out);
  EXPECT_EQ(json::parse(inf.out)["r"], 5);
  auto tw = run({"construct", "twist", "--g", "0,1,0;1,0,0;0,0,1", "-"}, ringel_doc);
  auto twisted = std::get<io::PrimeModule>(io::parse_module_text(tw.out, "tw"));
  EXPECT_EQ(twisted.map(0), ringel_module(PrimeField(5)).map(1));
  auto tower = run({"construct", "tower", "--n", "3", "--all", "-"}, ringel_doc);
  ASSERT_EQ(tower.code, 0) << tower.err;
  EXPECT_EQ(json::parse(tower.out).size(), 3u);
  EXPECT_EQ(json::parse(tower.out)[2]["dim"], json({6, 6}));
  EXPECT_EQ(run({"construct", "injective", "--vertex", "1", "--rational"}).code, 0);
  EXPECT_EQ(run({"construct", "ringel-e", "--q", "4"}).code, 1);
}

TEST_F(CliTest, TauHomExt) {
  auto e = write("e.json", ringel_doc);
  auto t = run({"tau", e});
  ASSERT_EQ(t.code, 0) << t.err;
  // Phi(2, 2) = (8*2 - 3*2, 3*2 - 2)
  EXPECT_EQ(t.report()["result"]["dim"], json({10, 4}));
  auto ti = run({"tau", "--inverse", e});
  EXPECT_EQ(ti.report()["result"]["dim"], json({4, 10}));
  auto h = run({"hom", "--basis", e, e});
  EXPECT_EQ(h.report()["result"]["dim"], 1);
  EXPECT_EQ(h.report()["result"]["basis"].size(), 1u);
  auto x = run({"ext", e, e});
  EXPECT_EQ(x.report()["result"]["dim"], 5);
  EXPECT_EQ(x.report()["result"]["hom_into_translate"], 5);
  EXPECT_EQ(x.report()["result"]["euler_form"], -4);
}

TEST_F(CliTest, OutputFile) {
  auto e = write("e.json", ringel_doc);
  auto target = (dir_ / "report.json").string();
  auto r = run({"--out", target, "hom", e, e});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  EXPECT_EQ(json::parse(in)["result"]["dim"], 1);
}

TEST_F(CliTest, Errors) {
  auto e = write("e.json", ringel_doc);
  EXPECT_EQ(run({"check", "esp", "--d", "2", "--bogus", e}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"check", "xyz", "--d", "1", e}).code, 1);
  auto bad = write("bad.json", "{\"r\": 3");
  auto r = run({"check", "esp", "--d", "1", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.json"), std::string::npos);
  EXPECT_EQ(run({"check", "esp", "--d", "1", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(run({"hom", e, write("q.json", R"({"field": {"rational": true}, "r": 3, "dim": [0, 0], "maps": [[], [], []]})")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
