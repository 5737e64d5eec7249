#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tileforge/grid.hpp"

namespace tileforge {

// A domino or lozenge: two cells sharing their central axis.
struct Tile {
  DirectedEdge axis;
  std::array<Cell, 2> cells;
};

// Tiling stored as the central axis of every cell. A cell's axis is one of
// its own sides, and the cell across that side carries the same axis.
class Tiling {
 public:
  // Validates that every cell has exactly one partner and partners agree.
  // Throws Error(InvalidTiling) otherwise.
  Tiling(Domain domain, std::vector<EdgeId> cell_axes);

  // Builds a tiling from its list of central axes (either direction accepted).
  static Tiling from_axes(const Domain& domain, std::span<const DirectedEdge> axes);

  // No validation. For producers that maintain the invariant themselves.
  static Tiling trusted(Domain domain, std::vector<EdgeId> cell_axes) noexcept;

  const Domain& domain() const noexcept { return domain_; }
  std::span<const EdgeId> cell_axes() const noexcept { return cell_axes_; }
  EdgeId axis_of(CellId c) const noexcept { return cell_axes_[c]; }
  bool is_axis(EdgeId e) const noexcept;

  // Distinct axes sorted by edge id, i.e. by (from, to) in (y, x) order.
  std::vector<EdgeId> axes() const;
  std::vector<Tile> tiles() const;

  friend bool operator==(const Tiling& a, const Tiling& b) noexcept {
    return a.cell_axes_ == b.cell_axes_ && a.domain_ == b.domain_;
  }

 private:
  Tiling(Domain domain, std::vector<EdgeId> cell_axes, bool) noexcept
      : domain_(std::move(domain)), cell_axes_(std::move(cell_axes)) {}

  Domain domain_;
  std::vector<EdgeId> cell_axes_;
};

// Integer heights on every domain vertex, anchored at the origin.
class HeightFunction {
 public:
  HeightFunction(Domain domain, std::vector<int> values)
      : domain_(std::move(domain)), values_(std::move(values)) {}

  const Domain& domain() const noexcept { return domain_; }
  std::span<const int> values() const noexcept { return values_; }
  int operator[](VertexId v) const noexcept { return values_[v]; }
  // Throws Error(InvalidHeight) when v is not a vertex of the domain.
  int at(Vertex v) const;

  friend bool operator==(const HeightFunction& a, const HeightFunction& b) noexcept {
    return a.values_ == b.values_ && a.domain_ == b.domain_;
  }

 private:
  Domain domain_;
  std::vector<int> values_;
};

// 4 for dominoes, 3 for lozenges.
int lambda_of(const Domain& domain) noexcept;

// Heights shared by every tiling on the boundary; nullopt on interior
// vertices. Throws Error(InconsistentBoundary) when the walk does not close.
std::vector<std::optional<int>> boundary_heights(const Domain& domain);

// Along a canonical edge the height rises by 1, or drops by lambda-1 across
// an axis. Throws Error(InvalidTiling) on inconsistency.
HeightFunction height_from_tiling(const Tiling& tiling);

// Axes are the canonical edges whose height drops by lambda-1.
// Throws Error(InvalidHeight) naming the first offending edge.
Tiling tiling_from_height(const HeightFunction& heights);

// Up sites: interior vertices whose incoming edges are all axes (strict local
// minima). Down sites: outgoing edges all axes (strict local maxima).
bool is_up_site(const Tiling& tiling, VertexId v) noexcept;
bool is_down_site(const Tiling& tiling, VertexId v) noexcept;

struct FlipSites {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
};
FlipSites flip_sites(const Tiling& tiling);

// {"axes":[[[vx,vy],[wx,wy]],...]} sorted by axis origin (y, x).
std::string tiling_to_json(const Tiling& tiling);
Tiling tiling_from_json(const Domain& domain, std::string_view text);
// {"heights":[[x,y,h],...]} sorted by (y, x).
std::string heights_to_json(const HeightFunction& heights);

}  // namespace tileforge
