#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "io/json_io.hpp"
#include "support.hpp"

using namespace fuzzytop;
using fuzzytop::io::json;
using fuzzytop::testing::abc;
using fuzzytop::testing::constants;
using fuzzytop::testing::q;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  [[nodiscard]] json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzytop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::path(::testing::TempDir()) / ("fuzzytop_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string write_json(const std::string& name, const json& j) { return write_file(name, j.dump()); }

json family(std::vector<std::pair<std::string, std::vector<const char*>>> opens, std::vector<std::string> ground) {
  json arr = json::array();
  for (const auto& [name, values] : opens) {
    json v = json::object();
    for (std::size_t i = 0; i < ground.size(); ++i) v[ground[i]] = values[i];
    arr.push_back({{"name", name}, {"values", v}});
  }
  return {{"ground_set", ground}, {"opens", arr}};
}

std::string thirds() {
  return write_json("thirds.json", family({{"0", {"0", "0"}}, {"1", {"1", "1"}}, {"T", {"1/3", "1/3"}}, {"U", {"2/3", "2/3"}}},
                                          {"a", "b"}));
}

}  // namespace

TEST(Cli, CounterexampleOnBuiltinTopology) {
  for (const std::vector<std::string>& extra : {std::vector<std::string>{}, std::vector<std::string>{"--ground", "a,b,c"}}) {
    std::vector<std::string> args{"counterexample"};
    args.insert(args.end(), extra.begin(), extra.end());
    const Outcome o = run(args);
    ASSERT_EQ(o.code, cli::kOk) << o.err;
    const json d = o.doc();
    EXPECT_EQ(d["psi_star_T"], "X × [0,1/3)");
    EXPECT_EQ(d["complement_of_psi_star_T"], "X × [1/3,1)");
    EXPECT_EQ(d["psi_star_of_complement"], "X × [0,2/3)");
    EXPECT_EQ(d["verdict"], "unequal");
  }
}

TEST(Cli, ValidateReportsMissingWhole) {
  const std::string path = write_json("nowhole.json", family({{"0", {"0"}}, {"T", {"1/3"}}}, {"a"}));
  const Outcome o = run({"validate", "--topology", path});
  EXPECT_EQ(o.code, cli::kVerdictFailed);
  const json d = o.doc();
  EXPECT_FALSE(d["ok"].get<bool>());
  EXPECT_EQ(d["failure"], "missing_whole");
  EXPECT_EQ(d["witness"]["absent"]["a"], "1");

  EXPECT_EQ(run({"validate", "--topology", thirds()}).code, cli::kOk);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({}).code, cli::kMalformed);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kMalformed);
  EXPECT_EQ(run({"validate"}).code, cli::kMalformed);
  EXPECT_EQ(run({"validate", "--topology", "/nonexistent/file.json"}).code, cli::kMalformed);
  EXPECT_EQ(run({"validate", "--topology", write_file("garbage.json", "{not json")}).code, cli::kMalformed);
  EXPECT_EQ(run({"validate", "--topology", write_json("badq.json", family({{"0", {"1/0"}}}, {"a"}))}).code,
            cli::kMalformed);
  EXPECT_EQ(run({"validate", "--topology", write_json("float.json", family({{"0", {"0.5"}}}, {"a"}))}).code,
            cli::kMalformed);
  EXPECT_EQ(run({"validate", "--topology", write_json("range.json", family({{"0", {"3/2"}}}, {"a"}))}).code,
            cli::kMalformed);
  EXPECT_EQ(run({"laws", "--grid-step", "1/4"}).code, cli::kMalformed);
  EXPECT_EQ(run({"laws", "--grid-step", "3/64"}).code, cli::kMalformed);
  EXPECT_EQ(run({"decide-complement", "--topology", thirds(), "--f", "T", "--g", "nope"}).code, cli::kMalformed);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, CylinderDump) {
  const Outcome o = run({"cylinder", "--topology", thirds()});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  const std::string dump = o.out;
  EXPECT_NE(dump.find("X × [0,1/3)"), std::string::npos);
  EXPECT_NE(dump.find("X × [0,2/3)"), std::string::npos);
}

TEST(Cli, DecideComplement) {
  const Outcome yes = run({"decide-complement", "--topology", thirds(), "--f", "T", "--g", "U"});
  EXPECT_EQ(yes.code, cli::kOk);
  EXPECT_TRUE(yes.doc()["inversion"].get<bool>());
  EXPECT_FALSE(yes.doc()["cylinder_compatible"].get<bool>());
  const Outcome no = run({"decide-complement", "--topology", thirds(), "--f", "T", "--g", "T"});
  EXPECT_EQ(no.code, cli::kVerdictFailed);
  EXPECT_FALSE(no.doc()["inversion"].get<bool>());
}

TEST(Cli, Connectivity) {
  json discrete = family({{"A", {"1", "0"}}, {"B", {"0", "1"}}}, {"a", "b"});
  discrete["generate"] = true;
  const Outcome d = run({"connectivity", "--topology", write_json("discrete.json", discrete)});
  ASSERT_EQ(d.code, cli::kOk) << d.err;
  EXPECT_FALSE(d.doc()["pc"].get<bool>());
  EXPECT_EQ(d.doc()["components"].size(), 2U);

  const Outcome c = run({"connectivity", "--topology", thirds()});
  ASSERT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_TRUE(c.doc()["pc"].get<bool>());
}

TEST(Cli, RetractionCertificatesRoundTrip) {
  const std::string topo = thirds();
  const std::string certs = (std::filesystem::path(::testing::TempDir()) / "fuzzytop_certs.json").string();
  const Outcome gen = run({"verify-retraction", "--topology", topo, "--sweeps", "12", "--out", certs});
  ASSERT_EQ(gen.code, cli::kOk) << gen.err;
  EXPECT_EQ(gen.doc()["verified"], 12);
  const Outcome replay = run({"verify-retraction", "--topology", topo, "--certificates", certs});
  EXPECT_EQ(replay.code, cli::kOk) << replay.err;

  // Widening the time interval of a certificate with a Pi2 target of positive gamma
  // lets t reach 1, where the whole box collapses onto the slice.
  json records = io::read_json_file(certs);
  json bad = records[0];
  bad["target"] = {{"tag", "pi2"}, {"gamma", "1/8"}};
  bad["anchor"] = {{"t", "1/2"}, {"point", {{"x", "a"}, {"alpha", "1/2"}}}};
  bad["t_interval"] = {{"lo", "0"}, {"hi", "1"}, {"lo_open", false}, {"hi_open", false}};
  bad["region_expr"] = {{"clauses", json::array({json::array({{{"tag", "pi2"}, {"gamma", "1/4"}}})})}};
  bad["region"] = {{"fibers", {{"a", json::array({{{"lo", "1/4"}, {"hi", "1"}, {"lo_open", true}, {"hi_open", true}}})},
                               {"b", json::array({{{"lo", "1/4"}, {"hi", "1"}, {"lo_open", true}, {"hi_open", true}}})}}}};
  const std::string tampered = write_json("tampered.json", json::array({bad}));
  const Outcome fail = run({"verify-retraction", "--topology", topo, "--certificates", tampered});
  EXPECT_EQ(fail.code, cli::kVerdictFailed) << fail.out;

  EXPECT_EQ(run({"verify-retraction", "--topology", topo, "--certificates", write_file("notarray.json", "{}")}).code,
            cli::kMalformed);
}

TEST(Cli, PathEvaluation) {
  const json path = {{"type", "concat"},
                     {"parts", json::array({{{"type", "vertical"}, {"x", "a"}, {"a0", "0"}, {"a1", "1/2"}},
                                            {{"type", "hlift"}, {"steps", {"a", "b"}}, {"level", "1/2"}}})}};
  const Outcome o = run({"paths", "--topology", thirds(), "--path", write_json("path.json", path)});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_TRUE(o.doc()["continuous"].get<bool>());

  const json broken = {{"type", "concat"},
                       {"parts", json::array({{{"type", "vertical"}, {"x", "a"}, {"a0", "0"}, {"a1", "1/2"}},
                                              {{"type", "vertical"}, {"x", "b"}, {"a0", "0"}, {"a1", "1/2"}}})}};
  EXPECT_EQ(run({"paths", "--topology", thirds(), "--path", write_json("broken.json", broken)}).code, cli::kMalformed);
}

TEST(Cli, SweepsPassAndAreDeterministic) {
  const Outcome a = run({"laws", "--sweeps", "6", "--seed", "7"});
  ASSERT_EQ(a.code, cli::kOk) << a.out;
  const Outcome b = run({"laws", "--sweeps", "6", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
  const Outcome c = run({"laws", "--sweeps", "6", "--seed", "8"});
  EXPECT_EQ(c.code, cli::kOk);
  EXPECT_NE(a.out, c.out);

  EXPECT_EQ(run({"paths", "--sweeps", "6"}).code, cli::kOk);
  EXPECT_EQ(run({"oracle", "--sweeps", "4", "--resolution", "32"}).code, cli::kOk);
  EXPECT_EQ(run({"laws", "--topology", thirds(), "--sweeps", "4"}).code, cli::kOk);
}

TEST(JsonIo, RoundTrips) {
  EXPECT_EQ(io::rational_from(io::to_json(q("-3/7"))), q("-3/7"));
  EXPECT_EQ(io::rational_from(json(2)), Rational(2));
  EXPECT_THROW(io::rational_from(json(0.5)), io::ParseError);
  EXPECT_THROW(io::rational_from(json("1/0")), io::ParseError);

  const IntervalSet s = IntervalSet::normalize({{q("0"), q("1/4"), true, false}, {q("1/2"), q("3/4"), false, true}});
  EXPECT_EQ(io::interval_set_from(io::to_json(s)), s);

  const GroundRef g = abc(2);
  const FuzzyTopology topo = constants(g, {{"T", "1/3"}});
  EXPECT_EQ(io::topology_from(io::to_json(topo)).opens().size(), topo.size());
  const CylinderOpen c = psi_star(topo.open("T"));
  EXPECT_EQ(io::cylinder_from(io::to_json(c), g), c);

  const OpenExpr e{{{TStar{"T", q("1/4")}, Pi2{q("-1/2")}}, {Pi2{q("0")}}}};
  EXPECT_EQ(io::open_expr_from(io::to_json(e)), e);

  const FiniteTopology base = iota_x(topo);
  const PathExpr p = PathExpr::concat(
      {PathExpr::chi_boundary(PathExpr::vertical("a", q("1/2"), q("0")), q("0"), q("1/2"), 0),
       PathExpr::reverse(PathExpr::htransform(q("1/2"), PathExpr::vertical("a", q("0"), q("1/2"))))});
  const PathExpr back = io::path_from(io::to_json(p), base);
  EXPECT_EQ(io::to_json(back), io::to_json(p));
  EXPECT_EQ(normal_form(back), normal_form(p));

  const BoxWitness w = continuity_witness(q("1/2"), {"a", q("1/4")}, TStar{"T", q("0")}, topo);
  const BoxWitness w2 = io::witness_from(io::to_json(w), topo);
  EXPECT_EQ(io::to_json(w2), io::to_json(w));
  EXPECT_TRUE(verify_witness(w2, topo));
}
