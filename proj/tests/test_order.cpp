#include <gtest/gtest.h>

#include "tileforge/error.hpp"
#include "tileforge/oracle.hpp"
#include "tileforge/order.hpp"
#include "tileforge/thurston.hpp"

namespace tileforge {
namespace {

std::vector<int> pointwise(const Tiling& a, const Tiling& b, bool lower) {
  const HeightFunction ha = height_from_tiling(a), hb = height_from_tiling(b);
  std::vector<int> out;
  for (std::size_t v = 0; v < ha.values().size(); ++v) {
    out.push_back(lower ? std::min(ha.values()[v], hb.values()[v]) : std::max(ha.values()[v], hb.values()[v]));
  }
  return out;
}

TEST(Leq, BasicFacts) {
  const Domain d = make_rect(2, 4);
  const auto all = oracle::enumerate_bfs(d).tilings;
  ASSERT_EQ(all.size(), 5u);
  const Tiling lo = minimal_tiling(d);
  for (const Tiling& t : all) {
    EXPECT_TRUE(leq(lo, t));
    EXPECT_TRUE(leq(t, t));
    for (const Tiling& u : all) {
      const HeightFunction ht = height_from_tiling(t), hu = height_from_tiling(u);
      bool below = true;
      for (std::size_t v = 0; v < ht.values().size(); ++v) below = below && ht.values()[v] <= hu.values()[v];
      EXPECT_EQ(leq(t, u), below);
    }
  }
  EXPECT_THROW(leq(lo, minimal_tiling(make_rect(4, 2))), Error);
}

TEST(MeetJoin, MatchPointwiseExtremes) {
  for (const Domain& d : {make_rect(2, 4), make_rect(3, 4), make_hexagon(2, 2, 1)}) {
    const auto all = oracle::enumerate_bfs(d).tilings;
    const Tiling lo = minimal_tiling(d);
    for (const Tiling& a : all) {
      EXPECT_EQ(meet(a, a), a);
      EXPECT_EQ(join(a, a), a);
      EXPECT_EQ(meet(lo, a), lo);
      for (const Tiling& b : all) {
        const std::vector<int> m = pointwise(a, b, true), j = pointwise(a, b, false);
        const HeightFunction hm = height_from_tiling(meet(a, b)), hj = height_from_tiling(join(a, b));
        EXPECT_EQ(std::vector<int>(hm.values().begin(), hm.values().end()), m);
        EXPECT_EQ(std::vector<int>(hj.values().begin(), hj.values().end()), j);
        EXPECT_EQ(meet(a, b), meet(b, a));
        EXPECT_EQ(join(a, b), join(b, a));
        for (const Tiling& c : all) {
          EXPECT_EQ(meet(a, meet(b, c)), meet(meet(a, b), c));
          EXPECT_EQ(join(a, join(b, c)), join(join(a, b), c));
        }
      }
    }
  }
}

TEST(Flip, TwoByTwo) {
  const Domain d = make_rect(2, 2);
  EXPECT_EQ(apply_flip(minimal_tiling(d), {1, 1}, FlipDirection::Up), maximal_tiling(d));
  EXPECT_EQ(apply_flip(maximal_tiling(d), {1, 1}, FlipDirection::Down), minimal_tiling(d));
  try {
    apply_flip(minimal_tiling(d), {1, 1}, FlipDirection::Down);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFlippable);
  }
}

TEST(Flip, HexagonCenter) {
  const Domain d = make_hexagon(1, 1, 1);
  const Tiling lo = minimal_tiling(d);
  const Vertex c = d.vertex(d.interior()[0]);
  const Tiling up = apply_flip(lo, c, FlipDirection::Up);
  EXPECT_EQ(height_from_tiling(up).at(c) - height_from_tiling(lo).at(c), 3);
  std::size_t changed = 0;
  const auto a = lo.axes(), b = up.axes();
  for (EdgeId e : a) changed += std::find(b.begin(), b.end(), e) == b.end();
  EXPECT_EQ(changed, 3u);
}

TEST(Flip, InvolutionAndLocality) {
  for (const Domain& d : {make_rect(4, 4), make_hexagon(2, 2, 2)}) {
    for (const Tiling& t : oracle::enumerate_bfs(d).tilings) {
      const HeightFunction h = height_from_tiling(t);
      const FlipSites s = flip_sites(t);
      for (const Vertex& v : s.up) {
        const Tiling u = apply_flip(t, v, FlipDirection::Up);
        EXPECT_EQ(apply_flip(u, v, FlipDirection::Down), t);
        const HeightFunction hu = height_from_tiling(u);
        for (VertexId w = 0; w < static_cast<VertexId>(h.values().size()); ++w) {
          EXPECT_EQ(hu[w] - h[w], d.vertex(w) == v ? d.lambda() : 0);
        }
      }
      for (const Vertex& v : s.down) {
        EXPECT_EQ(apply_flip(apply_flip(t, v, FlipDirection::Down), v, FlipDirection::Up), t);
      }
    }
  }
}

TEST(FlipDistance, Small) {
  const Domain d = make_rect(2, 2);
  EXPECT_EQ(flip_distance(minimal_tiling(d), minimal_tiling(d)), 0);
  EXPECT_EQ(flip_distance(minimal_tiling(d), maximal_tiling(d)), 1);
  EXPECT_THROW(flip_distance(minimal_tiling(d), minimal_tiling(make_rect(2, 4))), Error);
}

TEST(FlipDistance, FormulaMatchesSearch) {
  for (const Domain& d : {make_rect(4, 4), make_hexagon(2, 2, 2), make_rect(3, 6)}) {
    const auto all = oracle::enumerate_bfs(d);
    const auto bfs = oracle::flip_distances(all);
    for (std::size_t i = 0; i < all.tilings.size(); ++i) {
      for (std::size_t j = 0; j < all.tilings.size(); ++j) {
        EXPECT_EQ(flip_distance(all.tilings[i], all.tilings[j]), bfs[i][j]);
      }
    }
  }
}

}  // namespace
}  // namespace tileforge
