#include <gtest/gtest.h>

#include "tileforge/error.hpp"
#include "tileforge/oracle.hpp"
#include "tileforge/thurston.hpp"
#include "tileforge/tiling.hpp"

namespace tileforge {
namespace {

TEST(Lambda, ByLattice) {
  EXPECT_EQ(lambda_of(make_rect(6, 4)), 4);
  EXPECT_EQ(lambda_of(make_hexagon(1, 1, 1)), 3);
}

TEST(BoundaryHeights, TwoByTwo) {
  const Domain d = make_rect(2, 2);
  const auto b = boundary_heights(d);
  const std::vector<std::pair<Vertex, int>> expected{{{0, 0}, 0}, {{1, 0}, -1}, {{2, 0}, 0}, {{2, 1}, 1},
                                                     {{2, 2}, 0}, {{1, 2}, -1}, {{0, 2}, 0}, {{0, 1}, 1}};
  for (const auto& [v, h] : expected) {
    const auto id = d.find_vertex(v);
    ASSERT_TRUE(id && b[*id]);
    EXPECT_EQ(*b[*id], h);
  }
  EXPECT_FALSE(b[*d.find_vertex({1, 1})].has_value());
}

TEST(BoundaryHeights, ImbalancedDomainsDoNotClose) {
  for (const Domain& d : {make_rect(1, 1), make_rect(3, 1), make_rect(3, 3)}) {
    try {
      boundary_heights(d);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InconsistentBoundary);
    }
  }
}

TEST(Heights, TwoByTwoTilingsDifferByLambda) {
  const Domain d = make_rect(2, 2);
  const VertexId c = *d.find_vertex({1, 1});
  const int lo = height_from_tiling(minimal_tiling(d))[c];
  const int hi = height_from_tiling(maximal_tiling(d))[c];
  EXPECT_EQ(lo, -2);
  EXPECT_EQ(hi, 2);
}

TEST(Heights, HexagonCenterMovesByThree) {
  const Domain d = make_hexagon(1, 1, 1);
  ASSERT_EQ(d.interior().size(), 1u);
  const VertexId c = d.interior()[0];
  EXPECT_EQ(height_from_tiling(maximal_tiling(d))[c] - height_from_tiling(minimal_tiling(d))[c], 3);
}

TEST(Heights, RoundTripAndBoundary) {
  for (const Domain& d : {make_rect(4, 4), make_hexagon(2, 2, 1), make_rect(2, 5)}) {
    const auto b = boundary_heights(d);
    for (const Tiling& t : oracle::enumerate_bfs(d).tilings) {
      const HeightFunction h = height_from_tiling(t);
      EXPECT_EQ(tiling_from_height(h), t);
      EXPECT_EQ(h[d.origin()], 0);
      for (VertexId v = 0; v < static_cast<VertexId>(b.size()); ++v) {
        if (b[v]) {
          EXPECT_EQ(h[v], *b[v]);
        }
      }
    }
  }
}

TEST(Heights, BadInteriorStep) {
  const Domain d = make_rect(2, 2);
  HeightFunction h = height_from_tiling(minimal_tiling(d));
  std::vector<int> v(h.values().begin(), h.values().end());
  v[*d.find_vertex({1, 1})] = 0;  // differences of +-1 only: no axes at all
  try {
    tiling_from_height(HeightFunction(d, v));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidHeight);
  }
  v[*d.find_vertex({1, 1})] = 1;  // +2 step
  EXPECT_THROW(tiling_from_height(HeightFunction(d, v)), Error);
}

TEST(Heights, MinimalValueGivesMinimalTiling) {
  const Domain d = make_rect(2, 2);
  std::vector<int> v(d.vertices().size());
  const auto b = boundary_heights(d);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b[i].value_or(-2);
  EXPECT_EQ(tiling_from_height(HeightFunction(d, v)), minimal_tiling(d));
}

TEST(Tiling, ValidationAndAxes) {
  const Domain d = make_rect(2, 1);
  const auto e = d.find_edge({1, 0}, {1, 1});
  ASSERT_TRUE(e);
  const Tiling t(d, {*e, *e});
  EXPECT_EQ(t.axes(), std::vector<EdgeId>{*e});
  ASSERT_EQ(t.tiles().size(), 1u);
  EXPECT_THROW(Tiling(d, {*e, kNone}), Error);
  const auto bottom = d.find_edge({0, 0}, {1, 0});
  EXPECT_THROW(Tiling(d, {*bottom, *bottom}), Error);
  const DirectedEdge reversed{{1, 1}, {1, 0}};
  EXPECT_EQ(Tiling::from_axes(d, std::span(&reversed, 1)), t);
}

TEST(FlipSites, Extremes) {
  const Domain d = make_rect(2, 2);
  EXPECT_EQ(flip_sites(minimal_tiling(d)).up, (std::vector<Vertex>{{1, 1}}));
  EXPECT_TRUE(flip_sites(minimal_tiling(d)).down.empty());
  EXPECT_TRUE(flip_sites(maximal_tiling(d)).up.empty());
  EXPECT_EQ(flip_sites(maximal_tiling(d)).down, (std::vector<Vertex>{{1, 1}}));
  EXPECT_EQ(flip_sites(minimal_tiling(make_hexagon(2, 2, 2))).up.size(), 1u);
}

TEST(Json, TilingRoundTrip) {
  const Domain d = make_hexagon(2, 1, 2);
  for (const Tiling& t : oracle::enumerate_bfs(d).tilings) {
    const std::string text = tiling_to_json(t);
    EXPECT_EQ(tiling_from_json(d, text), t);
    EXPECT_EQ(tiling_to_json(tiling_from_json(d, text)), text);
  }
  EXPECT_THROW(tiling_from_json(d, "{\"axes\":[[[0,0],[9,9]]]}"), Error);
  EXPECT_EQ(heights_to_json(height_from_tiling(minimal_tiling(make_rect(2, 1)))),
            R"({"heights":[[0,0,0],[1,0,-1],[2,0,0],[0,1,1],[1,1,2],[2,1,1]]})");
}

}  // namespace
}  // namespace tileforge
