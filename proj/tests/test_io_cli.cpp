#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sset/io.hpp"
#include "support.hpp"

using namespace sset;
using namespace testing_support;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sset::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Workdir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sset-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string put(const std::string& name, const std::string& text) {
    write_text(dir_ / name, text);
    return (dir_ / name).string();
  }
  std::string put(const std::string& name, const ordered_json& j) { return put(name, dump(j)); }

  fs::path dir_;
};

}  // namespace

TEST(Json, ObjectRoundTrip) {
  for (const Instance& inst : corpus(101, 60)) {
    const TruncatedSSet& x = inst.map->source();
    EXPECT_TRUE(object_from_json(object_to_json(x)) == x);
    EXPECT_TRUE(map_from_json(map_to_json(*inst.map)) == *inst.map);
  }
  const ordered_json point = object_to_json(simplex(0, 1));
  EXPECT_EQ(point.dump(), R"({"truncation":1,"cells":[1,1],"face":[[[0],[0]]],"degeneracy":[[[0]]]})");
}

TEST(Json, RejectsUnknownAndMissingKeys) {
  ordered_json j = object_to_json(circle(2));
  j["extra"] = 1;
  EXPECT_THROW(object_from_json(j), InputError);
  j = object_to_json(circle(2));
  j.erase("face");
  EXPECT_THROW(object_from_json(j), InputError);
  j = object_to_json(circle(2));
  j["cells"][0] = -1;
  EXPECT_THROW(object_from_json(j), InputError);
  j = object_to_json(circle(2));
  j["face"][0][0][0] = 7;  // out of range
  EXPECT_THROW(object_from_json(j), InputError);
  ordered_json m = map_to_json(c2_to_circle());
  m["levels"] = m["level"];
  EXPECT_THROW(map_from_json(m), InputError);
}

TEST(Json, WitnessRoundTrip) {
  const std::vector<Witness> ws = {AmbiguousLift{1, 0, 2, 3, 4, 5},
                                   MissingLift{MissingLift::Problem::horn, 2, 1, 3, 0, {4, 5}},
                                   MissingLift{MissingLift::Problem::fill_in, 1, 0, 1, 2, {}},
                                   ComponentLeak{1, 2, 3},
                                   ComparisonFailure{ComparisonFailure::Kind::not_surjective, 1, 2, 0}};
  for (const Witness& w : ws) EXPECT_EQ(witness_from_json(witness_to_json(w)), w);
  const CheckReport r = covering_check(interval_to_point());
  const CheckReport back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.verdict, r.verdict);
  EXPECT_EQ(back.witness, r.witness);
  EXPECT_EQ(back.stats.check, r.stats.check);
}

TEST(Json, WitnessSchemasGolden) {
  ordered_json schemas = ordered_json::array();
  schemas.push_back(report_to_json(separable_via_lifting(interval_to_point())));
  schemas.push_back(report_to_json(kan_check(interval_to_point())));
  schemas.push_back(report_to_json(covering_check(vertex_inclusion(1, 0, 2))));
  schemas.push_back(report_to_json(injection_cartesian_check(diagonal(interval_to_point()).delta)));
  schemas.push_back(report_to_json(trivial_covering_check(c2_to_circle())));
  schemas.push_back(report_to_json(covering_check(c2_to_circle())));
  const fs::path golden = fs::path(SSET_GOLDEN_DIR) / "witness_schemas.json";
  EXPECT_EQ(schemas.dump(2) + "\n", slurp(golden));
}

TEST_F(Workdir, RelativeEndpointFiles) {
  put("c2.json", object_to_json(cyclic_cover(2, 2)));
  put("s1.json", object_to_json(circle(2)));
  ordered_json m = map_to_json(c2_to_circle());
  m["source"] = "c2.json";
  m["target"] = "s1.json";
  const std::string path = put("map.json", m);
  EXPECT_TRUE(read_map(path) == c2_to_circle());
  EXPECT_EQ(invoke({"check", "covering", path}).code, 0);
}

TEST_F(Workdir, ExitCodes) {
  const std::string cover = put("cover.json", map_to_json(c2_to_circle()));
  const std::string crush = put("crush.json", map_to_json(interval_to_point()));
  EXPECT_EQ(invoke({"check", "covering", cover}).code, 0);
  EXPECT_EQ(invoke({"check", "trivial-covering", cover}).code, 1);

  const CliRun lift = invoke({"check", "separable-lifting", crush});
  EXPECT_EQ(lift.code, 1);
  const ordered_json r = ordered_json::parse(lift.out);
  EXPECT_FALSE(r["verdict"].get<bool>());
  EXPECT_EQ(r["witness"]["kind"], "AmbiguousLift");
  EXPECT_EQ(r["stats"]["check"], "separable-lifting");

  // Point d_0 of the 2-simplex (0,0,1) at the edge (0,2).
  ordered_json bad = object_to_json(simplex(2, 3));
  bad["face"][1][0][1] = bad["face"][1][0][2];
  const CliRun v = invoke({"validate", put("bad.json", bad)});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(ordered_json::parse(v.out)["witness"]["kind"], "IdentityViolation");
  EXPECT_EQ(invoke({"validate", put("good.json", object_to_json(simplex(2, 3)))}).code, 0);

  ordered_json unnatural = map_to_json(c2_to_circle());
  unnatural["level"][1][2] = 0;
  const CliRun nv = invoke({"validate", put("unnatural.json", unnatural)});
  EXPECT_EQ(nv.code, 1);
  EXPECT_EQ(ordered_json::parse(nv.out)["witness"]["kind"], "NaturalityViolation");

  EXPECT_EQ(invoke({"check", "covering", put("broken.json", std::string("{\"source\": "))}).code, 2);
  EXPECT_EQ(invoke({"check", "covering", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(invoke({"check", "nonsense", cover}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"gen", "object", "--max-dim", "9"}).code, 2);
  EXPECT_EQ(invoke({"pi1", put("s1_1.json", object_to_json(circle(1)))}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Workdir, GenAndStandardRoundTrip) {
  const CliRun obj = invoke({"gen", "object", "--seed", "7"});
  ASSERT_EQ(obj.code, 0);
  const std::string path = put("obj.json", obj.out);
  EXPECT_EQ(dump(object_to_json(read_object(path))), obj.out);
  EXPECT_EQ(invoke({"validate", path}).code, 0);

  const CliRun map = invoke({"gen", "map", "--seed", "7"});
  ASSERT_EQ(map.code, 0);
  EXPECT_EQ(dump(map_to_json(read_map(put("map.json", map.out)))), map.out);

  EXPECT_EQ(invoke({"gen", "object", "-o", (dir_ / "out.json").string()}).code, 0);
  EXPECT_EQ(slurp(dir_ / "out.json"), invoke({"gen", "object"}).out);

  const CliRun c2 = invoke({"standard", "cyclic-cover:2", "--truncation", "2"});
  ASSERT_EQ(c2.code, 0);
  EXPECT_EQ(c2.out, dump(object_to_json(cyclic_cover(2, 2))));
  const CliRun fixture = invoke({"standard", "--map", "fold:simplex:1"});
  ASSERT_EQ(fixture.code, 0);
  EXPECT_EQ(invoke({"check", "trivial-covering", put("fold.json", fixture.out)}).code, 0);
}

TEST_F(Workdir, TextAndJsonAgree) {
  const std::string crush = put("crush.json", map_to_json(interval_to_point()));
  for (const std::string kind : {"covering", "kan", "separable-direct", "separable-lifting", "trivial-covering"}) {
    const CliRun j = invoke({"check", kind, crush});
    const CliRun t = invoke({"--format", "text", "check", kind, crush});
    EXPECT_EQ(j.code, t.code);
    EXPECT_EQ(t.out, render_text(report_from_json(ordered_json::parse(j.out)))) << kind;
  }
  const CliRun pi1 = invoke({"--format", "text", "pi1", put("s1.json", object_to_json(circle(2)))});
  EXPECT_EQ(pi1.out, render_presentation(pi1_presentation(circle(2))));
  const CliRun pi0 = invoke({"pi0", put("two.json", object_to_json(discrete(2, 1)))});
  EXPECT_EQ(ordered_json::parse(pi0.out)["components"], 2);
}

TEST_F(Workdir, VerifyFileAndCampaign) {
  const std::string proj = put("proj.json", map_to_json(circle_times_z2_projection()));
  EXPECT_EQ(invoke({"verify", "theorem1", proj}).code, 0);
  EXPECT_EQ(invoke({"verify", "theorem2", proj}).code, 0);
  EXPECT_EQ(invoke({"verify", "chain", proj}).code, 0);
  const CliRun campaign = invoke({"--jobs", "2", "verify", "chain", "--trials", "30", "--seed", "3"});
  EXPECT_EQ(campaign.code, 0);
  EXPECT_EQ(ordered_json::parse(campaign.out)["trials"], 30);
}
