#include "tileforge/order.hpp"

#include <algorithm>
#include <cstdlib>

#include "tileforge/error.hpp"

namespace tileforge {

namespace {

void require_same(const Domain& a, const Domain& b) {
  if (!(a == b)) throw Error(ErrorCode::DomainMismatch, "tilings belong to different domains");
}

template <typename Pick>
Tiling combine(const Tiling& a, const Tiling& b, Pick pick) {
  require_same(a.domain(), b.domain());
  const HeightFunction ha = height_from_tiling(a);
  const HeightFunction hb = height_from_tiling(b);
  std::vector<int> out(ha.values().size());
  std::transform(ha.values().begin(), ha.values().end(), hb.values().begin(), out.begin(), pick);
  return tiling_from_height(HeightFunction(a.domain(), std::move(out)));
}

}  // namespace

bool leq(const HeightFunction& a, const HeightFunction& b) {
  require_same(a.domain(), b.domain());
  return std::equal(a.values().begin(), a.values().end(), b.values().begin(),
                    [](int x, int y) { return x <= y; });
}

bool leq(const Tiling& a, const Tiling& b) {
  require_same(a.domain(), b.domain());
  return leq(height_from_tiling(a), height_from_tiling(b));
}

Tiling meet(const Tiling& a, const Tiling& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Tiling join(const Tiling& a, const Tiling& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

bool flip_in_place(const Domain& domain, std::span<EdgeId> cell_axes, VertexId v, FlipDirection direction) {
  if (!domain.is_interior(v)) return false;
  const bool up = direction == FlipDirection::Up;
  auto is_axis = [&](EdgeId e) {
    const Edge& edge = domain.edge(e);
    return !edge.is_boundary() && cell_axes[edge.cells[0]] == e;
  };
  // Up: every incoming edge must be an axis; those tiles are replaced by the
  // ones centred on the outgoing edges. Down is the mirror image.
  for (const Incidence& inc : domain.vertex_edges(v)) {
    if (inc.outgoing != up && !is_axis(inc.edge)) return false;
  }
  for (const Incidence& inc : domain.vertex_edges(v)) {
    if (inc.outgoing == up) {
      const Edge& edge = domain.edge(inc.edge);
      cell_axes[edge.cells[0]] = inc.edge;
      cell_axes[edge.cells[1]] = inc.edge;
    }
  }
  return true;
}

Tiling apply_flip(const Tiling& tiling, Vertex v, FlipDirection direction) {
  const Domain& d = tiling.domain();
  const auto id = d.find_vertex(v);
  std::vector<EdgeId> axes(tiling.cell_axes().begin(), tiling.cell_axes().end());
  if (!id || !flip_in_place(d, axes, *id, direction)) {
    throw Error(ErrorCode::NotFlippable, "no " + std::string(direction == FlipDirection::Up ? "up" : "down") +
                                             " flip at (" + std::to_string(v.x) + "," + std::to_string(v.y) + ")");
  }
  return Tiling::trusted(d, std::move(axes));
}

long flip_distance(const Tiling& a, const Tiling& b) {
  require_same(a.domain(), b.domain());
  const HeightFunction ha = height_from_tiling(a);
  const HeightFunction hb = height_from_tiling(b);
  long total = 0;
  for (std::size_t i = 0; i < ha.values().size(); ++i) total += std::labs(ha.values()[i] - hb.values()[i]);
  const int lambda = a.domain().lambda();
  if (total % lambda != 0) throw Error(ErrorCode::NonIntegral, "height difference is not a multiple of lambda");
  return total / lambda;
}

}  // namespace tileforge
