#include <gtest/gtest.h>

#include "support.hpp"
#include "tileforge/coding.hpp"
#include "tileforge/error.hpp"
#include "tileforge/oracle.hpp"
#include "tileforge/order.hpp"
#include "tileforge/thurston.hpp"

namespace tileforge {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(Extremes, TwoByTwoWords) {
  const Domain d = make_rect(2, 2);
  const Numbering n = Numbering::canonical(d);
  EXPECT_EQ(encode(minimal_tiling(d), n).to_string(), "0");
  EXPECT_EQ(encode(maximal_tiling(d), n).to_string(), "1");
}

TEST(Extremes, Untileable) {
  EXPECT_EQ(code_of([] { minimal_tiling(make_rect(3, 3)); }), ErrorCode::Untileable);
  EXPECT_EQ(code_of([] { maximal_tiling(testing::imbalanced_l_shape()); }), ErrorCode::Untileable);
  // Balanced but still untileable: the two arms cannot pair up.
  const Domain plus = Domain::build(LatticeKind::Square, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(code_of([&] { minimal_tiling(plus); }), ErrorCode::Untileable);
  EXPECT_EQ(code_of([&] { maximal_tiling(plus); }), ErrorCode::Untileable);
}

TEST(Extremes, NoWrongSitesAndBracketEverything) {
  for (const Domain& d : {make_rect(6, 4), make_rect(3, 4), make_hexagon(2, 2, 2), make_hexagon(1, 3, 2)}) {
    const Tiling lo = minimal_tiling(d);
    const Tiling hi = maximal_tiling(d);
    EXPECT_TRUE(flip_sites(lo).down.empty());
    EXPECT_TRUE(flip_sites(hi).up.empty());
    for (const Tiling& t : oracle::enumerate_bfs(d).tilings) {
      EXPECT_TRUE(leq(lo, t));
      EXPECT_TRUE(leq(t, hi));
    }
  }
  EXPECT_EQ(flip_distance(minimal_tiling(make_hexagon(2, 2, 2)), maximal_tiling(make_hexagon(2, 2, 2))), 8);
}

TEST(Extremes, PlacementCountIsTileCount) {
  for (const Domain& d : {make_rect(6, 4), make_rect(8, 8), make_hexagon(3, 2, 4)}) {
    ThurstonStats lo, hi;
    ThurstonOptions a, b;
    a.stats = &lo;
    b.stats = &hi;
    minimal_tiling(d, a);
    maximal_tiling(d, b);
    EXPECT_EQ(lo.tiles_placed, d.cells().size() / 2);
    EXPECT_EQ(hi.tiles_placed, d.cells().size() / 2);
    EXPECT_LE(lo.vertices_processed, d.vertices().size());
    EXPECT_LE(hi.vertices_processed, d.vertices().size());
  }
}

TEST(Extremes, TieOrderDoesNotMatter) {
  for (const Domain& d : {make_rect(6, 6), make_hexagon(3, 3, 3), make_rect(2, 9)}) {
    const Tiling lo = minimal_tiling(d);
    const Tiling hi = maximal_tiling(d);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      ThurstonOptions o;
      o.tie_seed = seed;
      EXPECT_EQ(minimal_tiling(d, o), lo);
      EXPECT_EQ(maximal_tiling(d, o), hi);
    }
  }
}

TEST(Constrained, EmptySetIsMinimal) {
  const Domain d = make_rect(4, 5);
  EXPECT_EQ(constrained_minimal(d, {}), minimal_tiling(d));
}

TEST(Constrained, WrongResidueIsInfeasible) {
  const Domain d = make_rect(2, 2);
  const int lo = height_from_tiling(minimal_tiling(d)).at({1, 1});
  EXPECT_EQ(code_of([&] { constrained_minimal(d, {{{1, 1}, lo + 1}}); }), ErrorCode::Infeasible);
  EXPECT_EQ(code_of([&] { constrained_minimal(d, {{{1, 1}, lo + 8}}); }), ErrorCode::Infeasible);
  EXPECT_EQ(code_of([&] { constrained_minimal(d, {{{0, 0}, 0}}); }), ErrorCode::InvalidHeight);
  EXPECT_EQ(code_of([] { constrained_minimal(make_rect(3, 3), {}); }), ErrorCode::Untileable);
}

TEST(Constrained, BelowEveryMatchingTiling) {
  // For subsets of each tiling's heights, the result agrees on the subset
  // and lies below the tiling.
  for (const Domain& d : {make_rect(4, 4), make_hexagon(2, 2, 1)}) {
    const auto all = oracle::enumerate_bfs(d).tilings;
    for (const Tiling& t : all) {
      const HeightFunction h = height_from_tiling(t);
      for (unsigned mask = 1; mask < 8; ++mask) {
        ConstraintSet s;
        for (std::size_t i = 0; i < d.interior().size(); ++i) {
          if ((mask >> (i % 3)) & 1u && i % 2 == mask % 2) s.emplace(d.vertex(d.interior()[i]), h[d.interior()[i]]);
        }
        const Tiling c = constrained_minimal(d, s);
        EXPECT_TRUE(leq(c, t));
        const HeightFunction hc = height_from_tiling(c);
        for (const auto& [v, value] : s) EXPECT_EQ(hc.at(v), value);
        // Least among all tilings that match.
        for (const Tiling& u : all) {
          const HeightFunction hu = height_from_tiling(u);
          bool match = true;
          for (const auto& [v, value] : s) match = match && hu.at(v) == value;
          if (match) {
            EXPECT_TRUE(leq(c, u));
          }
        }
      }
    }
  }
}

TEST(Constrained, WorkedExampleOnSixByFour) {
  const Domain d = make_rect(6, 4);
  const Codec codec(Numbering::canonical(d));
  const VertexId c = *d.find_vertex({3, 2});
  const int level = codec.max_levels()[codec.numbering().position_of(c)];
  EXPECT_EQ(level, 2);
  std::vector<ThurstonStep> trace;
  ThurstonOptions o;
  o.trace = &trace;
  const Tiling t = constrained_minimal(d, {{{3, 2}, codec.min_heights()[c] + 4 * level}}, o);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace[0].vertex, (Vertex{3, 2}));
  EXPECT_EQ(trace[0].axes, (std::vector<DirectedEdge>{{{3, 2}, {2, 2}}, {{3, 2}, {4, 2}}}));
  // Then the two horizontal dominoes above and below.
  ASSERT_GE(trace.size(), 3u);
  EXPECT_EQ(trace[1].height, trace[0].height - 1);
  EXPECT_EQ(trace[1].axes.size() + trace[2].axes.size(), 2u);
  EXPECT_EQ(flip_sites(t).down, (std::vector<Vertex>{{3, 2}}));
}

TEST(Engine, ReusableAcrossRuns) {
  const Domain d = make_rect(4, 6);
  ThurstonEngine engine(d);
  std::vector<int> h(d.vertices().size());
  for (int round = 0; round < 3; ++round) {
    ASSERT_EQ(engine.run(ThurstonEngine::Sense::Minimal, h, {}), ThurstonEngine::Outcome::Ok);
    EXPECT_EQ(Tiling(d, {engine.cell_axes().begin(), engine.cell_axes().end()}), minimal_tiling(d));
    ASSERT_EQ(engine.run(ThurstonEngine::Sense::Maximal, h, {}), ThurstonEngine::Outcome::Ok);
    EXPECT_EQ(Tiling(d, {engine.cell_axes().begin(), engine.cell_axes().end()}), maximal_tiling(d));
  }
  EXPECT_TRUE(engine.boundary_consistent());
  ThurstonEngine odd(make_rect(3, 3));
  std::vector<int> g(odd.domain().vertices().size());
  EXPECT_FALSE(odd.boundary_consistent());
  EXPECT_EQ(odd.run(ThurstonEngine::Sense::Minimal, g, {}), ThurstonEngine::Outcome::BoundaryMismatch);
}

}  // namespace
}  // namespace tileforge
