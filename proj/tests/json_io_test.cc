#include "convex_blockers/json_io.h"

#include "convex_blockers/errors.h"
#include "gtest/gtest.h"

namespace convex_blockers {
namespace {

TEST(EdgesJsonTest, RoundTrip) {
  const PolygonContext ctx(6);
  const EdgeSet edges{{0, 1}, {1, 10}, {2, 7}};
  const Json json = EdgesToJson(edges);
  EXPECT_EQ(json.dump(), "[[0,1],[1,10],[2,7]]");
  EXPECT_EQ(EdgesFromJson(ctx, json), edges);
  EXPECT_EQ(EdgesFromJson(ctx, Json::parse("[[10,1],[1,0]]")), (EdgeSet{{0, 1}, {1, 10}}));
  EXPECT_THROW(EdgesFromJson(ctx, Json::parse("[[0,12]]")), InputError);
  EXPECT_THROW(EdgesFromJson(ctx, Json::parse("[[0]]")), InputError);
  EXPECT_THROW(EdgesFromJson(ctx, Json::parse("{}")), InputError);

  const std::vector<EdgeSet> sets{{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};
  EXPECT_EQ(EdgeSetsFromJson(PolygonContext(2), EdgeSetsToJson(sets)), sets);
}

TEST(BlockerJsonTest, RoundTripAndTamperDetection) {
  const PolygonContext ctx(6);
  const BlockerSpec spec{0, 3, {1, 2, 4}};
  Json json = BlockerToJson(ctx, spec);
  EXPECT_EQ(json["m"], 6);
  EXPECT_EQ(json["edges"].size(), 6u);
  EXPECT_EQ(BlockerFromJson(json), spec);
  json["edges"][0] = {0, 11};
  EXPECT_THROW(BlockerFromJson(json), InputError);
  EXPECT_THROW(BlockerFromJson(Json::parse(R"({"m":6})")), InputError);
}

TEST(FindingJsonTest, RoundTrip) {
  const PolygonContext ctx(3);
  const Finding finding{Violation::kBoundaryNotConsecutive, {{0, 1}, {2, 3}}};
  const Json json = FindingToJson(finding);
  EXPECT_EQ(json["ok"], false);
  EXPECT_EQ(json["violation"], "boundary_not_consecutive");
  const Finding back = FindingFromJson(ctx, json);
  EXPECT_EQ(back.violation, finding.violation);
  EXPECT_EQ(back.witness, finding.witness);
  Json bad = json;
  bad["violation"] = "no_such_violation";
  EXPECT_THROW(FindingFromJson(ctx, bad), InputError);
}

TEST(OracleJsonTest, RoundTrip) {
  const SpmFamilyIndex index = BuildFamilyIndex(PolygonContext(3));
  const OracleResult result = FindMinimumBlockers(index, OracleMode::kClassPruned);
  const Json json = OracleResultToJson(index.ctx, result);
  EXPECT_EQ(json["mode"], "class_pruned");
  EXPECT_EQ(json["count"], 12);
  EXPECT_EQ(json["minimum_size"], 3);
  const OracleResult back = OracleResultFromJson(json);
  EXPECT_EQ(back.mode, result.mode);
  EXPECT_EQ(back.minimum_size, result.minimum_size);
  EXPECT_EQ(back.minimum_sets, result.minimum_sets);
  EXPECT_EQ(back.nodes, result.nodes);
}

TEST(ReportJsonTest, RoundTrip) {
  const auto reports = VerifyTheorem(3, 3, 3);
  ASSERT_EQ(reports.size(), 1u);
  const Json json = ReportToJson(reports[0]);
  EXPECT_EQ(json["verdict"], "PASS");
  const VerificationReport back = ReportFromJson(json);
  EXPECT_EQ(back.m, 3);
  EXPECT_EQ(back.oracle_count, 12u);
  EXPECT_EQ(back.formula_count, 12);
  EXPECT_EQ(back.naive_agrees, reports[0].naive_agrees);
  EXPECT_TRUE(back.passed());

  const Json pruned_only = ReportToJson(VerifyTheorem(2, 2, 0)[0]);
  EXPECT_TRUE(pruned_only["naive_agrees"].is_null());
  EXPECT_FALSE(ReportFromJson(pruned_only).naive_agrees.has_value());
}

TEST(BigIntJsonTest, SmallAndLarge) {
  EXPECT_EQ(BigIntToJson(BigInt(192)), Json(192));
  const BigInt big("63382530011411470074835160268800");
  EXPECT_TRUE(BigIntToJson(big).is_string());
  EXPECT_EQ(BigIntFromJson(BigIntToJson(big)), big);
  EXPECT_EQ(BigIntFromJson(Json(192)), 192);
  EXPECT_THROW(BigIntFromJson(Json("12x")), InputError);
}

}  // namespace
}  // namespace convex_blockers
