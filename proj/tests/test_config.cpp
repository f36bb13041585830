#include <gtest/gtest.h>

#include <filesystem>

#include "alf/config.hpp"
#include "alf/gen.hpp"
#include "alf/instance.hpp"

namespace {

using namespace alf;

Json interval_doc() {
  return Json::parse(R"({"kind": "interval", "learner": "occam", "budget": 20,
                         "target": {"required": [-2, 5], "forbidden": [-8]}})");
}

std::string field_of(const Json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

TEST(Config, ValidInterval) {
  const auto cfg = parse_config(interval_doc());
  EXPECT_EQ(cfg.kind, Kind::Interval);
  EXPECT_EQ(cfg.learner, "occam");
  EXPECT_EQ(cfg.budget, 20u);
  const auto& p = std::get<BoxParams>(cfg.params);
  EXPECT_EQ(p.dim, 1u);
  EXPECT_EQ(p.target.required, (PointSet{{-2}, {5}}));
}

TEST(Config, DefaultsLearner) {
  auto doc = interval_doc();
  doc.erase("learner");
  EXPECT_EQ(parse_config(doc).learner, "occam");
}

TEST(Config, ErrorsNameTheField) {
  auto doc = interval_doc();
  doc.erase("budget");
  EXPECT_EQ(field_of(doc), "budget");
  doc = interval_doc();
  doc["budget"] = -1;
  EXPECT_EQ(field_of(doc), "budget");
  doc = interval_doc();
  doc["learner"] = "wizard";
  EXPECT_EQ(field_of(doc), "learner");
  doc = interval_doc();
  doc["colour"] = 1;
  EXPECT_EQ(field_of(doc), "colour");
  doc = interval_doc();
  doc["kind"] = "nope";
  EXPECT_EQ(field_of(doc), "kind");
  EXPECT_EQ(field_of(Json::array()), "(root)");
}

TEST(Config, RectangleTargetUnrealizable) {
  const auto doc = Json::parse(R"({"kind": "rectangle", "budget": 5, "dim": 2,
      "target": {"required": [[0, 0], [2, 2]], "forbidden": [[1, 1]]}})");
  try {
    parse_config(doc);
    FAIL() << "accepted";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "target");
    EXPECT_NE(std::string(e.what()).find("target unrealizable"), std::string::npos);
  }
}

TEST(Config, ProgramKindsParse) {
  const auto doc = Json::parse(R"J({"kind": "houdini", "budget": 10,
      "program": {"vars": [{"name": "x", "lo": 0, "hi": 15}], "init": "(= x 0)",
                  "guard": "(< x 10)", "post": "(= x 10)", "body": ["(+ x 2)"]},
      "predicates": ["(<= x 10)", "(<= x 8)", "(= (mod x 2) 0)"]})J");
  const auto cfg = parse_config(doc);
  EXPECT_EQ(std::get<ProgramParams>(cfg.params).predicates.size(), 3u);
  auto bad = doc;
  bad["program"]["body"] = Json::array({"(+ y 2)"});
  EXPECT_NE(field_of(bad), "<accepted>");
}

TEST(Config, DigestTracksContent) {
  const auto a = parse_config(interval_doc());
  const auto b = parse_config(interval_doc());
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_EQ(a.digest.size(), 16u);
  auto doc = interval_doc();
  doc["budget"] = 21;
  EXPECT_NE(parse_config(doc).digest, a.digest);
}

TEST(Config, LoadReportsFileName) {
  EXPECT_THROW(load_config("/nonexistent/config.json"), std::runtime_error);
  const auto cfg = load_config(std::filesystem::path(ALF_CONFIG_DIR) / "interval.json");
  EXPECT_EQ(cfg.kind, Kind::Interval);
}

TEST(Instance, RunIsDeterministicAndChecked) {
  const auto cfg = parse_config(interval_doc());
  const auto r1 = run_config(cfg, true);
  const auto r2 = run_config(cfg, true);
  EXPECT_EQ(r1.status, "converged");
  EXPECT_EQ(r1.hypothesis, "[-2, inf]");
  EXPECT_EQ(r1.exit_code(), kExitConverged);
  EXPECT_TRUE(r1.audited);
  EXPECT_TRUE(r1.violations.empty());
  EXPECT_EQ(dump_trace(r1.trace), dump_trace(r2.trace));
  EXPECT_TRUE(check_trace(cfg, r1.trace).empty());
  auto tampered = r1.trace;
  tampered["rounds"].erase(tampered["rounds"].size() - 1);
  EXPECT_FALSE(check_trace(cfg, tampered).empty());
}

TEST(Instance, RandomBoxConfigsConverge) {
  gen::Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto cfg = parse_config(gen::box_config(rng, 1 + i % 3, 200));
    const auto r = run_config(cfg, true);
    EXPECT_EQ(r.status, "converged");
    EXPECT_TRUE(r.violations.empty());
  }
}

}  // namespace
