#pragma once

#include "tileforge/tiling.hpp"

namespace tileforge {

enum class FlipDirection { Up, Down };

// Pointwise comparison of height functions. All binary operations here
// throw Error(DomainMismatch) for tilings of different domains.
bool leq(const Tiling& a, const Tiling& b);
bool leq(const HeightFunction& a, const HeightFunction& b);

// Pointwise min / max of the height functions.
Tiling meet(const Tiling& a, const Tiling& b);
Tiling join(const Tiling& a, const Tiling& b);

// Rotates the tiles around v: incoming axes become outgoing ones (Up) or the
// reverse (Down). Throws Error(NotFlippable) when v is not a site.
Tiling apply_flip(const Tiling& tiling, Vertex v, FlipDirection direction);
// In-place variant on a mutable axis table; returns false if v is not a site.
bool flip_in_place(const Domain& domain, std::span<EdgeId> cell_axes, VertexId v, FlipDirection direction);

// Sum over vertices of |h_a - h_b| / lambda.
long flip_distance(const Tiling& a, const Tiling& b);

}  // namespace tileforge
