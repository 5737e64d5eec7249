#pragma once

// Shared fixtures: fixed polyomino enumeration and a few small domains.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "tileforge/error.hpp"
#include "tileforge/grid.hpp"

namespace tileforge::testing {

// Redelmeier's method: every fixed polyomino with at most `max_cells` cells,
// each exactly once, anchored so its (y, x)-least cell is the origin.
inline void for_each_polyomino(int max_cells, const std::function<void(const std::vector<Cell>&)>& visit) {
  const int span = max_cells + 1;
  const int width = 2 * span + 1;
  std::vector<std::uint8_t> reached(static_cast<std::size_t>(width * (span + 1)), 0);
  auto slot = [&](int x, int y) -> std::uint8_t& { return reached[(y * width) + x + span]; };
  auto allowed = [&](int x, int y) { return y > 0 || (y == 0 && x >= 0); };

  std::vector<Cell> poly;
  std::function<void(std::vector<Cell>)> grow = [&](std::vector<Cell> untried) {
    while (!untried.empty()) {
      const Cell c = untried.back();
      untried.pop_back();
      poly.push_back(c);
      visit(poly);
      if (static_cast<int>(poly.size()) < max_cells) {
        std::vector<Cell> next = untried;
        std::vector<Cell> fresh;
        constexpr std::array<std::array<int, 2>, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
        for (const auto& [dx, dy] : steps) {
          const int x = c.x + dx, y = c.y + dy;
          if (!allowed(x, y) || y > span || x < -span || x > span || slot(x, y)) continue;
          slot(x, y) = 1;
          fresh.push_back({x, y, Orientation::None});
          next.push_back(fresh.back());
        }
        grow(std::move(next));
        for (const Cell& f : fresh) slot(f.x, f.y) = 0;
      }
      poly.pop_back();
    }
  };
  slot(0, 0) = 1;
  grow({{0, 0, Orientation::None}});
}

// Polyominoes that form valid domains (no holes).
inline std::vector<Domain> simply_connected_polyominoes(int max_cells) {
  std::vector<Domain> out;
  for_each_polyomino(max_cells, [&](const std::vector<Cell>& cells) {
    try {
      out.push_back(Domain::build(LatticeKind::Square, cells));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSimplyConnected) throw;
    }
  });
  return out;
}

// 3x3 square minus its top-right 2x2 block: five cells, three black.
inline Domain imbalanced_l_shape() {
  return Domain::build(LatticeKind::Square, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
}

}  // namespace tileforge::testing
