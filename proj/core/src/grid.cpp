#include "tileforge/grid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "tileforge/error.hpp"

namespace tileforge {

LatticeKind lattice_of(const Cell& cell) noexcept {
  return cell.orientation == Orientation::None ? LatticeKind::Square : LatticeKind::Triangular;
}

Color color_of(const Cell& cell) noexcept {
  switch (cell.orientation) {
    case Orientation::None: return ((cell.x + cell.y) % 2 == 0) ? Color::Black : Color::White;
    case Orientation::Up: return Color::Black;
    case Orientation::Down: return Color::White;
  }
  return Color::Black;
}

std::vector<DirectedEdge> cell_cycle(const Cell& cell) {
  const int x = cell.x;
  const int y = cell.y;
  std::vector<Vertex> ring;
  switch (cell.orientation) {
    case Orientation::None:
      if (color_of(cell) == Color::Black) {
        ring = {{x, y}, {x, y + 1}, {x + 1, y + 1}, {x + 1, y}};
      } else {
        ring = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
      }
      break;
    case Orientation::Up: ring = {{x, y}, {x, y + 1}, {x + 1, y}}; break;
    case Orientation::Down: ring = {{x + 1, y}, {x + 1, y + 1}, {x, y + 1}}; break;
  }
  std::vector<DirectedEdge> cycle;
  cycle.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    cycle.push_back({ring[i], ring[(i + 1) % ring.size()]});
  }
  return cycle;
}

struct Domain::Impl {
  LatticeKind kind = LatticeKind::Square;
  int sides = 4;
  std::vector<Cell> cells;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<EdgeId> cell_edges;      // stride = sides
  std::vector<VertexId> cell_corners;  // stride = sides
  std::vector<std::int32_t> vcell_offset;
  std::vector<CellId> vcells;
  std::vector<std::int32_t> vedge_offset;
  std::vector<Incidence> vedges;
  std::vector<VertexId> interior;
  std::vector<std::uint8_t> interior_flag;
  std::vector<std::uint8_t> boundary_flag;
  std::vector<BoundaryStep> boundary;
  VertexId origin = kNone;
};

namespace {

int lattice_cells_per_vertex(LatticeKind kind) { return kind == LatticeKind::Square ? 4 : 6; }

}  // namespace

Domain Domain::build(LatticeKind kind, std::vector<Cell> cells) {
  if (cells.empty()) throw Error(ErrorCode::EmptyDomain, "domain has no cells");
  for (const Cell& c : cells) {
    if (lattice_of(c) != kind) {
      throw Error(ErrorCode::ParseError, "cell orientation does not match the lattice kind");
    }
  }
  std::sort(cells.begin(), cells.end());
  if (auto dup = std::adjacent_find(cells.begin(), cells.end()); dup != cells.end()) {
    throw Error(ErrorCode::DuplicateCell,
                "cell (" + std::to_string(dup->x) + "," + std::to_string(dup->y) + ") listed twice");
  }

  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->sides = kind == LatticeKind::Square ? 4 : 3;
  impl->cells = std::move(cells);
  const auto& cs = impl->cells;
  const int sides = impl->sides;
  const auto ncells = static_cast<CellId>(cs.size());

  std::vector<std::vector<DirectedEdge>> cycles;
  cycles.reserve(cs.size());
  for (const Cell& c : cs) {
    cycles.push_back(cell_cycle(c));
    for (const DirectedEdge& e : cycles.back()) impl->vertices.push_back(e.from);
  }
  std::sort(impl->vertices.begin(), impl->vertices.end());
  impl->vertices.erase(std::unique(impl->vertices.begin(), impl->vertices.end()),
                       impl->vertices.end());
  auto vid = [&](Vertex v) {
    auto it = std::lower_bound(impl->vertices.begin(), impl->vertices.end(), v);
    return static_cast<VertexId>(it - impl->vertices.begin());
  };

  // (from, to, cell) for every cell side; sides shared by two cells agree on direction.
  std::vector<std::tuple<VertexId, VertexId, CellId>> sides_list;
  sides_list.reserve(cs.size() * sides);
  impl->cell_corners.resize(cs.size() * sides);
  for (CellId c = 0; c < ncells; ++c) {
    for (int k = 0; k < sides; ++k) {
      const DirectedEdge& e = cycles[c][k];
      const VertexId a = vid(e.from);
      const VertexId b = vid(e.to);
      impl->cell_corners[c * sides + k] = a;
      sides_list.emplace_back(a, b, c);
    }
  }
  std::sort(sides_list.begin(), sides_list.end());
  for (std::size_t i = 0; i < sides_list.size();) {
    const auto [a, b, c] = sides_list[i];
    Edge edge{a, b, {c, kNone}};
    std::size_t j = i + 1;
    if (j < sides_list.size() && std::get<0>(sides_list[j]) == a && std::get<1>(sides_list[j]) == b) {
      edge.cells[1] = std::get<2>(sides_list[j]);
      ++j;
    }
    impl->edges.push_back(edge);
    i = j;
  }
  auto eid = [&](VertexId a, VertexId b) {
    auto it = std::lower_bound(impl->edges.begin(), impl->edges.end(), std::pair{a, b},
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                 return std::pair{e.from, e.to} < key;
                               });
    return static_cast<EdgeId>(it - impl->edges.begin());
  };
  impl->cell_edges.resize(cs.size() * sides);
  for (CellId c = 0; c < ncells; ++c) {
    for (int k = 0; k < sides; ++k) {
      const VertexId a = impl->cell_corners[c * sides + k];
      const VertexId b = impl->cell_corners[c * sides + (k + 1) % sides];
      impl->cell_edges[c * sides + k] = eid(a, b);
    }
  }

  const auto nv = static_cast<VertexId>(impl->vertices.size());
  // Vertex -> incident cells and edges (CSR).
  impl->vcell_offset.assign(nv + 1, 0);
  for (VertexId v : impl->cell_corners) ++impl->vcell_offset[v + 1];
  std::partial_sum(impl->vcell_offset.begin(), impl->vcell_offset.end(), impl->vcell_offset.begin());
  impl->vcells.resize(impl->cell_corners.size());
  {
    std::vector<std::int32_t> fill(impl->vcell_offset.begin(), impl->vcell_offset.end() - 1);
    for (CellId c = 0; c < ncells; ++c) {
      for (int k = 0; k < sides; ++k) impl->vcells[fill[impl->cell_corners[c * sides + k]]++] = c;
    }
  }
  impl->vedge_offset.assign(nv + 1, 0);
  for (const Edge& e : impl->edges) {
    ++impl->vedge_offset[e.from + 1];
    ++impl->vedge_offset[e.to + 1];
  }
  std::partial_sum(impl->vedge_offset.begin(), impl->vedge_offset.end(), impl->vedge_offset.begin());
  impl->vedges.resize(impl->edges.size() * 2);
  {
    std::vector<std::int32_t> fill(impl->vedge_offset.begin(), impl->vedge_offset.end() - 1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(impl->edges.size()); ++e) {
      const Edge& edge = impl->edges[e];
      impl->vedges[fill[edge.from]++] = {e, edge.to, true};
      impl->vedges[fill[edge.to]++] = {e, edge.from, false};
    }
  }

  // Edge-connectivity of cells.
  {
    std::vector<std::uint8_t> seen(cs.size(), 0);
    std::vector<CellId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const CellId c = stack.back();
      stack.pop_back();
      for (int k = 0; k < sides; ++k) {
        const Edge& e = impl->edges[impl->cell_edges[c * sides + k]];
        const CellId n = e.other_cell(c);
        if (n != kNone && !seen[n]) {
          seen[n] = 1;
          ++reached;
          stack.push_back(n);
        }
      }
    }
    if (reached != cs.size()) throw Error(ErrorCode::Disconnected, "cells are not edge-connected");
  }

  const long euler = static_cast<long>(nv) - static_cast<long>(impl->edges.size()) +
                     static_cast<long>(cs.size());
  if (euler != 1) {
    throw Error(ErrorCode::NotSimplyConnected,
                "Euler characteristic is " + std::to_string(euler) + ", expected 1");
  }

  impl->interior_flag.assign(nv, 0);
  impl->boundary_flag.assign(nv, 0);
  const int full = lattice_cells_per_vertex(kind);
  for (VertexId v = 0; v < nv; ++v) {
    if (impl->vcell_offset[v + 1] - impl->vcell_offset[v] == full) {
      impl->interior_flag[v] = 1;
      impl->interior.push_back(v);
    } else {
      impl->boundary_flag[v] = 1;
    }
  }

  // Counterclockwise boundary walk: white cells already run counterclockwise.
  std::vector<VertexId> next(nv, kNone);
  std::vector<std::uint8_t> follows(nv, 0);
  std::size_t boundary_edges = 0;
  for (const Edge& e : impl->edges) {
    if (!e.is_boundary()) continue;
    ++boundary_edges;
    const bool white = color_of(cs[e.cells[0]]) == Color::White;
    const VertexId tail = white ? e.from : e.to;
    const VertexId head = white ? e.to : e.from;
    if (next[tail] != kNone) {
      throw Error(ErrorCode::NotSimplyConnected, "boundary touches itself at a vertex");
    }
    next[tail] = head;
    follows[tail] = white ? 1 : 0;
  }
  impl->origin = static_cast<VertexId>(
      std::find(impl->boundary_flag.begin(), impl->boundary_flag.end(), 1) -
      impl->boundary_flag.begin());
  VertexId at = impl->origin;
  do {
    if (next[at] == kNone || impl->boundary.size() > boundary_edges) {
      throw Error(ErrorCode::NotSimplyConnected, "boundary is not a single closed walk");
    }
    impl->boundary.push_back({impl->vertices[at], follows[at] != 0});
    at = next[at];
  } while (at != impl->origin);
  if (impl->boundary.size() != boundary_edges) {
    throw Error(ErrorCode::NotSimplyConnected, "boundary is not a single closed walk");
  }

  return Domain(std::move(impl));
}

LatticeKind Domain::kind() const noexcept { return impl_->kind; }
int Domain::lambda() const noexcept { return impl_->sides; }
std::span<const Cell> Domain::cells() const noexcept { return impl_->cells; }
std::span<const Vertex> Domain::vertices() const noexcept { return impl_->vertices; }
std::span<const Edge> Domain::edges() const noexcept { return impl_->edges; }
std::span<const VertexId> Domain::interior() const noexcept { return impl_->interior; }
std::span<const BoundaryStep> Domain::boundary() const noexcept { return impl_->boundary; }
VertexId Domain::origin() const noexcept { return impl_->origin; }

std::optional<VertexId> Domain::find_vertex(Vertex v) const noexcept {
  auto it = std::lower_bound(impl_->vertices.begin(), impl_->vertices.end(), v);
  if (it == impl_->vertices.end() || *it != v) return std::nullopt;
  return static_cast<VertexId>(it - impl_->vertices.begin());
}

std::optional<CellId> Domain::find_cell(const Cell& c) const noexcept {
  auto it = std::lower_bound(impl_->cells.begin(), impl_->cells.end(), c);
  if (it == impl_->cells.end() || *it != c) return std::nullopt;
  return static_cast<CellId>(it - impl_->cells.begin());
}

std::optional<EdgeId> Domain::find_edge(Vertex from, Vertex to) const noexcept {
  const auto a = find_vertex(from);
  const auto b = find_vertex(to);
  if (!a || !b) return std::nullopt;
  for (const Incidence& inc : vertex_edges(*a)) {
    if (inc.neighbor == *b) return inc.edge;
  }
  return std::nullopt;
}

bool Domain::is_interior(VertexId v) const noexcept { return impl_->interior_flag[v] != 0; }
bool Domain::is_boundary_vertex(VertexId v) const noexcept { return impl_->boundary_flag[v] != 0; }

std::span<const EdgeId> Domain::cell_edges(CellId c) const noexcept {
  return std::span<const EdgeId>(impl_->cell_edges).subspan(c * impl_->sides, impl_->sides);
}

std::span<const VertexId> Domain::cell_corners(CellId c) const noexcept {
  return std::span<const VertexId>(impl_->cell_corners).subspan(c * impl_->sides, impl_->sides);
}

std::span<const CellId> Domain::vertex_cells(VertexId v) const noexcept {
  const auto b = impl_->vcell_offset[v];
  return std::span<const CellId>(impl_->vcells).subspan(b, impl_->vcell_offset[v + 1] - b);
}

std::span<const Incidence> Domain::vertex_edges(VertexId v) const noexcept {
  const auto b = impl_->vedge_offset[v];
  return std::span<const Incidence>(impl_->vedges).subspan(b, impl_->vedge_offset[v + 1] - b);
}

const Vertex& Domain::vertex(VertexId v) const noexcept { return impl_->vertices[v]; }
const Cell& Domain::cell(CellId c) const noexcept { return impl_->cells[c]; }
const Edge& Domain::edge(EdgeId e) const noexcept { return impl_->edges[e]; }

DirectedEdge Domain::directed(EdgeId e) const noexcept {
  const Edge& edge = impl_->edges[e];
  return {impl_->vertices[edge.from], impl_->vertices[edge.to]};
}

bool operator==(const Domain& a, const Domain& b) noexcept {
  return a.impl_ == b.impl_ || (a.impl_->kind == b.impl_->kind && a.impl_->cells == b.impl_->cells);
}

std::span<const BoundaryStep> boundary_cycle(const Domain& domain) noexcept { return domain.boundary(); }

Domain make_rect(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidSize, "rectangle sides must be >= 1");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < m; ++x) cells.push_back({x, y, Orientation::None});
  }
  return Domain::build(LatticeKind::Square, std::move(cells));
}

Domain make_hexagon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorCode::InvalidSize, "hexagon sides must be >= 1");
  auto inside = [&](Vertex v) {
    return -c <= v.x && v.x <= a && 0 <= v.y && v.y <= b + c && 0 <= v.x + v.y && v.x + v.y <= a + b;
  };
  std::vector<Cell> cells;
  for (int y = 0; y <= b + c; ++y) {
    for (int x = -c; x <= a; ++x) {
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const Cell cell{x, y, o};
        const auto cycle = cell_cycle(cell);
        if (std::all_of(cycle.begin(), cycle.end(), [&](const DirectedEdge& e) { return inside(e.from); })) {
          cells.push_back(cell);
        }
      }
    }
  }
  return Domain::build(LatticeKind::Triangular, std::move(cells));
}

namespace {

std::string position(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Domain parse_domain(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_domain_json(text);
  return parse_domain_text(text);
}

Domain parse_domain_text(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    rows.push_back(row);
    start = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  const int nrows = static_cast<int>(rows.size());
  std::vector<Cell> cells;
  for (int i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const char ch = rows[i][j];
      if (ch == '#') {
        cells.push_back({static_cast<int>(j), nrows - 1 - i, Orientation::None});
      } else if (ch != '.') {
        throw Error(ErrorCode::ParseError, position(i + 1, j + 1) + ": unexpected character '" +
                                               std::string(1, ch) + "'");
      }
    }
  }
  return Domain::build(LatticeKind::Square, std::move(cells));
}

Domain parse_domain_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, position(line, column) + ": malformed JSON");
  }
  auto fail = [](const std::string& why) { return Error(ErrorCode::ParseError, why); };
  if (!doc.is_object() || !doc.contains("lattice") || !doc.contains("cells")) {
    throw fail("expected an object with \"lattice\" and \"cells\"");
  }
  const auto& lattice = doc["lattice"];
  LatticeKind kind;
  if (lattice == "square") {
    kind = LatticeKind::Square;
  } else if (lattice == "triangular") {
    kind = LatticeKind::Triangular;
  } else {
    throw fail("\"lattice\" must be \"square\" or \"triangular\"");
  }
  if (!doc["cells"].is_array()) throw fail("\"cells\" must be an array");
  std::vector<Cell> cells;
  std::size_t index = 0;
  for (const auto& entry : doc["cells"]) {
    const std::string where = "cells[" + std::to_string(index++) + "]";
    const std::size_t arity = kind == LatticeKind::Square ? 2 : 3;
    if (!entry.is_array() || entry.size() != arity || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw fail(where + ": expected [x,y]" + (arity == 3 ? std::string(",\"U\"|\"D\"]") : "]"));
    }
    Cell cell{entry[0].get<int>(), entry[1].get<int>(), Orientation::None};
    if (arity == 3) {
      if (entry[2] == "U") {
        cell.orientation = Orientation::Up;
      } else if (entry[2] == "D") {
        cell.orientation = Orientation::Down;
      } else {
        throw fail(where + ": orientation must be \"U\" or \"D\"");
      }
    }
    cells.push_back(cell);
  }
  return Domain::build(kind, std::move(cells));
}

std::string domain_to_json(const Domain& domain) {
  nlohmann::ordered_json doc;
  doc["lattice"] = domain.kind() == LatticeKind::Square ? "square" : "triangular";
  auto cells = nlohmann::ordered_json::array();
  for (const Cell& c : domain.cells()) {
    if (c.orientation == Orientation::None) {
      cells.push_back({c.x, c.y});
    } else {
      cells.push_back({c.x, c.y, c.orientation == Orientation::Up ? "U" : "D"});
    }
  }
  doc["cells"] = std::move(cells);
  return doc.dump();
}

std::string domain_to_text(const Domain& domain) {
  if (domain.kind() != LatticeKind::Square) {
    throw Error(ErrorCode::UnsupportedFormat, "text form exists for square domains only");
  }
  int maxx = 0;
  int maxy = 0;
  for (const Cell& c : domain.cells()) {
    if (c.x < 0 || c.y < 0) {
      throw Error(ErrorCode::UnsupportedFormat, "text form needs non-negative cell coordinates");
    }
    maxx = std::max(maxx, c.x);
    maxy = std::max(maxy, c.y);
  }
  std::vector<std::string> rows(maxy + 1, std::string(maxx + 1, '.'));
  for (const Cell& c : domain.cells()) rows[maxy - c.y][c.x] = '#';
  std::ostringstream out;
  for (const auto& row : rows) out << row << '\n';
  return out.str();
}

}  // namespace tileforge
