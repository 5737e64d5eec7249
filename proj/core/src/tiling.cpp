#include "tileforge/tiling.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"
#include "tileforge/error.hpp"

namespace tileforge {

namespace {

std::string describe(const Domain& d, EdgeId e) {
  const DirectedEdge de = d.directed(e);
  return "(" + std::to_string(de.from.x) + "," + std::to_string(de.from.y) + ")->(" +
         std::to_string(de.to.x) + "," + std::to_string(de.to.y) + ")";
}

std::string describe(const Cell& c) {
  std::string s = "(" + std::to_string(c.x) + "," + std::to_string(c.y);
  if (c.orientation == Orientation::Up) s += ",U";
  if (c.orientation == Orientation::Down) s += ",D";
  return s + ")";
}

}  // namespace

Tiling::Tiling(Domain domain, std::vector<EdgeId> cell_axes)
    : domain_(std::move(domain)), cell_axes_(std::move(cell_axes)) {
  const auto ncells = static_cast<CellId>(domain_.cells().size());
  if (static_cast<CellId>(cell_axes_.size()) != ncells) {
    throw Error(ErrorCode::InvalidTiling, "axis table size does not match the cell count");
  }
  for (CellId c = 0; c < ncells; ++c) {
    const EdgeId e = cell_axes_[c];
    const auto sides = domain_.cell_edges(c);
    if (std::find(sides.begin(), sides.end(), e) == sides.end()) {
      throw Error(ErrorCode::InvalidTiling, "cell " + describe(domain_.cell(c)) + " has no axis among its sides");
    }
    const CellId partner = domain_.edge(e).other_cell(c);
    if (partner == kNone) {
      throw Error(ErrorCode::InvalidTiling, "axis " + describe(domain_, e) + " leaves the domain");
    }
    if (cell_axes_[partner] != e) {
      throw Error(ErrorCode::InvalidTiling, "cells around axis " + describe(domain_, e) + " disagree");
    }
  }
}

Tiling Tiling::from_axes(const Domain& domain, std::span<const DirectedEdge> axes) {
  std::vector<EdgeId> cell_axes(domain.cells().size(), kNone);
  for (const DirectedEdge& a : axes) {
    const auto e = domain.find_edge(a.from, a.to);
    if (!e) throw Error(ErrorCode::InvalidTiling, "axis is not an edge of the domain");
    const Edge& edge = domain.edge(*e);
    if (edge.is_boundary()) {
      throw Error(ErrorCode::InvalidTiling, "axis " + describe(domain, *e) + " lies on the boundary");
    }
    for (CellId c : edge.cells) {
      if (cell_axes[c] != kNone) {
        throw Error(ErrorCode::InvalidTiling, "cell " + describe(domain.cell(c)) + " covered twice");
      }
      cell_axes[c] = *e;
    }
  }
  for (CellId c = 0; c < static_cast<CellId>(cell_axes.size()); ++c) {
    if (cell_axes[c] == kNone) {
      throw Error(ErrorCode::InvalidTiling, "cell " + describe(domain.cell(c)) + " is not covered");
    }
  }
  return Tiling(domain, std::move(cell_axes));
}

Tiling Tiling::trusted(Domain domain, std::vector<EdgeId> cell_axes) noexcept {
  return Tiling(std::move(domain), std::move(cell_axes), true);
}

bool Tiling::is_axis(EdgeId e) const noexcept {
  const Edge& edge = domain_.edge(e);
  return !edge.is_boundary() && cell_axes_[edge.cells[0]] == e;
}

std::vector<EdgeId> Tiling::axes() const {
  std::vector<EdgeId> out;
  out.reserve(cell_axes_.size() / 2);
  for (CellId c = 0; c < static_cast<CellId>(cell_axes_.size()); ++c) {
    if (domain_.edge(cell_axes_[c]).cells[0] == c) out.push_back(cell_axes_[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tile> Tiling::tiles() const {
  std::vector<Tile> out;
  for (EdgeId e : axes()) {
    const Edge& edge = domain_.edge(e);
    out.push_back({domain_.directed(e), {domain_.cell(edge.cells[0]), domain_.cell(edge.cells[1])}});
  }
  return out;
}

int HeightFunction::at(Vertex v) const {
  const auto id = domain_.find_vertex(v);
  if (!id) throw Error(ErrorCode::InvalidHeight, "vertex is not in the domain");
  return values_[*id];
}

int lambda_of(const Domain& domain) noexcept { return domain.lambda(); }

std::vector<std::optional<int>> boundary_heights(const Domain& domain) {
  std::vector<std::optional<int>> out(domain.vertices().size());
  int h = 0;
  for (const BoundaryStep& step : domain.boundary()) {
    const VertexId v = *domain.find_vertex(step.vertex);
    if (out[v] && *out[v] != h) {
      throw Error(ErrorCode::InconsistentBoundary, "boundary vertex receives two heights");
    }
    out[v] = h;
    h += step.follows ? 1 : -1;
  }
  if (h != 0) {
    throw Error(ErrorCode::InconsistentBoundary,
                "boundary walk closes at height " + std::to_string(h) + " instead of 0");
  }
  return out;
}

HeightFunction height_from_tiling(const Tiling& tiling) {
  const Domain& d = tiling.domain();
  const int drop = d.lambda() - 1;
  std::vector<int> h(d.vertices().size(), 0);
  std::vector<std::uint8_t> known(h.size(), 0);
  std::deque<VertexId> queue{d.origin()};
  known[d.origin()] = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : d.vertex_edges(v)) {
      const int step = tiling.is_axis(inc.edge) ? -drop : 1;
      const int value = inc.outgoing ? h[v] + step : h[v] - step;
      if (!known[inc.neighbor]) {
        known[inc.neighbor] = 1;
        h[inc.neighbor] = value;
        queue.push_back(inc.neighbor);
      } else if (h[inc.neighbor] != value) {
        throw Error(ErrorCode::InvalidTiling, "heights disagree across edge " + describe(d, inc.edge));
      }
    }
  }
  return HeightFunction(d, std::move(h));
}

Tiling tiling_from_height(const HeightFunction& heights) {
  const Domain& d = heights.domain();
  const int drop = d.lambda() - 1;
  if (heights.values().size() != d.vertices().size()) {
    throw Error(ErrorCode::InvalidHeight, "height table size does not match the vertex count");
  }
  if (heights[d.origin()] != 0) throw Error(ErrorCode::InvalidHeight, "origin height is not 0");
  std::vector<EdgeId> cell_axes(d.cells().size(), kNone);
  for (EdgeId e = 0; e < static_cast<EdgeId>(d.edges().size()); ++e) {
    const Edge& edge = d.edge(e);
    const int diff = heights[edge.to] - heights[edge.from];
    if (diff == 1) continue;
    if (diff != -drop || edge.is_boundary()) {
      throw Error(ErrorCode::InvalidHeight, "edge " + describe(d, e) + " has height step " + std::to_string(diff));
    }
    for (CellId c : edge.cells) {
      if (cell_axes[c] != kNone) {
        throw Error(ErrorCode::InvalidHeight, "cell " + describe(d.cell(c)) + " has two axes");
      }
      cell_axes[c] = e;
    }
  }
  for (CellId c = 0; c < static_cast<CellId>(cell_axes.size()); ++c) {
    if (cell_axes[c] == kNone) {
      throw Error(ErrorCode::InvalidHeight, "cell " + describe(d.cell(c)) + " has no axis");
    }
  }
  return Tiling::trusted(d, std::move(cell_axes));
}

bool is_up_site(const Tiling& tiling, VertexId v) noexcept {
  const Domain& d = tiling.domain();
  if (!d.is_interior(v)) return false;
  for (const Incidence& inc : d.vertex_edges(v)) {
    if (!inc.outgoing && !tiling.is_axis(inc.edge)) return false;
  }
  return true;
}

bool is_down_site(const Tiling& tiling, VertexId v) noexcept {
  const Domain& d = tiling.domain();
  if (!d.is_interior(v)) return false;
  for (const Incidence& inc : d.vertex_edges(v)) {
    if (inc.outgoing && !tiling.is_axis(inc.edge)) return false;
  }
  return true;
}

FlipSites flip_sites(const Tiling& tiling) {
  FlipSites sites;
  const Domain& d = tiling.domain();
  for (VertexId v : d.interior()) {
    if (is_up_site(tiling, v)) sites.up.push_back(d.vertex(v));
    if (is_down_site(tiling, v)) sites.down.push_back(d.vertex(v));
  }
  return sites;
}

std::string tiling_to_json(const Tiling& tiling) {
  nlohmann::json axes = nlohmann::json::array();
  for (EdgeId e : tiling.axes()) {
    const DirectedEdge de = tiling.domain().directed(e);
    axes.push_back({{de.from.x, de.from.y}, {de.to.x, de.to.y}});
  }
  nlohmann::json doc;
  doc["axes"] = std::move(axes);
  return doc.dump();
}

Tiling tiling_from_json(const Domain& domain, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed tiling JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("axes") || !doc["axes"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected {\"axes\":[...]}");
  }
  std::vector<DirectedEdge> axes;
  for (const auto& a : doc["axes"]) {
    try {
      axes.push_back({{a.at(0).at(0).get<int>(), a.at(0).at(1).get<int>()},
                      {a.at(1).at(0).get<int>(), a.at(1).at(1).get<int>()}});
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::ParseError, "axis entries must be [[vx,vy],[wx,wy]]");
    }
  }
  return Tiling::from_axes(domain, axes);
}

std::string heights_to_json(const HeightFunction& heights) {
  nlohmann::json rows = nlohmann::json::array();
  const Domain& d = heights.domain();
  for (VertexId v = 0; v < static_cast<VertexId>(d.vertices().size()); ++v) {
    rows.push_back({d.vertex(v).x, d.vertex(v).y, heights[v]});
  }
  nlohmann::json doc;
  doc["heights"] = std::move(rows);
  return doc.dump();
}

}  // namespace tileforge
