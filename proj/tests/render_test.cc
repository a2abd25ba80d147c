#include "convex_blockers/render.h"

#include <fstream>
#include <sstream>

#include "convex_blockers/errors.h"
#include "reference_drawings.h"
#include "gtest/gtest.h"

namespace convex_blockers {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(RenderFigureTest, MatchesGoldenFiles) {
  for (const auto& [name, spec] : testing::ReferenceDrawings()) {
    const std::string golden =
        ReadFile(std::string(CONVEX_BLOCKERS_GOLDEN_DIR) + "/" + name + ".svg");
    ASSERT_FALSE(golden.empty()) << name;
    EXPECT_EQ(RenderFigure(spec), golden) << name;
    EXPECT_EQ(RenderFigure(spec), RenderFigure(spec)) << name;
  }
}

TEST(RenderFigureTest, LayoutDetails) {
  const std::string svg = RenderFigure({2, {{{{0, 1}}, EdgeStyle::kSolid}}});
  EXPECT_NE(svg.find(R"(<circle cx="300.000" cy="50.000")"), std::string::npos);
  EXPECT_NE(svg.find(R"(<circle cx="50.000" cy="300.000")"), std::string::npos);
  EXPECT_NE(svg.find(R"(x1="300.000" y1="50.000" x2="50.000" y2="300.000")"),
            std::string::npos);
  EXPECT_EQ(svg.find("-0.000"), std::string::npos);
  EXPECT_NE(svg.find(">3</text>"), std::string::npos);
  const std::string bare = RenderFigure({2, {}, false});
  EXPECT_EQ(bare.find("<text"), std::string::npos);
}

TEST(RenderFigureTest, HeaviestStyleWins) {
  const std::string svg = RenderFigure(
      {3, {{{{0, 3}}, EdgeStyle::kDotted}, {{{0, 3}}, EdgeStyle::kThick}}});
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<line"); at != std::string::npos;
       at = svg.find("<line", at + 1)) {
    ++lines;
  }
  EXPECT_EQ(lines, 1u);
  EXPECT_NE(svg.find(R"(stroke-width="5.000")"), std::string::npos);
}

TEST(RenderFigureTest, RejectsForeignEdges) {
  EXPECT_THROW(RenderFigure({2, {{{{0, 4}}, EdgeStyle::kSolid}}}), InputError);
}

}  // namespace
}  // namespace convex_blockers
