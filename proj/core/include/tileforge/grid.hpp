#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tileforge {

enum class LatticeKind : std::uint8_t { Square, Triangular };

// Square cells carry Orientation::None; triangles are Up or Down.
enum class Orientation : std::uint8_t { None, Up, Down };

enum class Color : std::uint8_t { Black, White };

using VertexId = std::int32_t;
using CellId = std::int32_t;
using EdgeId = std::int32_t;
inline constexpr std::int32_t kNone = -1;

// Lattice point. Triangular vertices use axial coordinates, embedded in the
// plane as x*(1,0) + y*(1/2, sqrt(3)/2). Ordered by (y, x).
struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr std::strong_ordering operator<=>(Vertex a, Vertex b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// Square cell (x,y) spans [x,x+1]x[y,y+1]. Up triangle U(x,y) has corners
// (x,y),(x+1,y),(x,y+1); Down triangle D(x,y) has (x+1,y),(x,y+1),(x+1,y+1).
struct Cell {
  int x = 0;
  int y = 0;
  Orientation orientation = Orientation::None;

  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr std::strong_ordering operator<=>(Cell a, Cell b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return static_cast<int>(a.orientation) <=> static_cast<int>(b.orientation);
  }
};

struct DirectedEdge {
  Vertex from;
  Vertex to;

  friend constexpr bool operator==(DirectedEdge, DirectedEdge) = default;
  friend constexpr std::strong_ordering operator<=>(DirectedEdge a, DirectedEdge b) {
    if (auto c = a.from <=> b.from; c != 0) return c;
    return a.to <=> b.to;
  }
};

LatticeKind lattice_of(const Cell& cell) noexcept;

// Square (x,y) is black iff x+y is even; Up triangles are black.
Color color_of(const Cell& cell) noexcept;

// Boundary cycle of a cell in canonical edge direction: clockwise around
// black cells, counterclockwise around white ones. Starts at the cell's
// lowest-left corner for black cells as listed in the module docs.
std::vector<DirectedEdge> cell_cycle(const Cell& cell);

// One step of the domain boundary walk (counterclockwise, domain on the
// left). `follows` is true when the step goes along the edge's canonical
// direction.
struct BoundaryStep {
  Vertex vertex;
  bool follows = false;
};

// Undirected lattice edge of a domain, stored in canonical direction.
struct Edge {
  VertexId from = kNone;
  VertexId to = kNone;
  // Cells flanking the edge inside the domain; kNone where outside.
  std::array<CellId, 2> cells{kNone, kNone};

  bool is_boundary() const noexcept { return cells[1] == kNone; }
  CellId other_cell(CellId c) const noexcept { return cells[0] == c ? cells[1] : cells[0]; }
};

// Incident edge seen from one of its endpoints.
struct Incidence {
  EdgeId edge = kNone;
  VertexId neighbor = kNone;
  bool outgoing = false;
};

// Validated, immutable, simply connected cell set with its derived complex.
// Copies share the underlying structure.
class Domain {
 public:
  // Throws Error: EmptyDomain, DuplicateCell, Disconnected, NotSimplyConnected.
  static Domain build(LatticeKind kind, std::vector<Cell> cells);

  LatticeKind kind() const noexcept;
  // Height change at a vertex under one flip; also the number of sides of a cell.
  int lambda() const noexcept;

  std::span<const Cell> cells() const noexcept;
  std::span<const Vertex> vertices() const noexcept;  // sorted (y, x)
  std::span<const Edge> edges() const noexcept;        // sorted by (from, to)
  std::span<const VertexId> interior() const noexcept;  // sorted (y, x)
  std::span<const BoundaryStep> boundary() const noexcept;
  VertexId origin() const noexcept;

  std::optional<VertexId> find_vertex(Vertex v) const noexcept;
  std::optional<CellId> find_cell(const Cell& c) const noexcept;
  std::optional<EdgeId> find_edge(Vertex from, Vertex to) const noexcept;

  bool is_interior(VertexId v) const noexcept;
  bool is_boundary_vertex(VertexId v) const noexcept;

  // Edges of a cell in cycle order (canonical direction).
  std::span<const EdgeId> cell_edges(CellId c) const noexcept;
  // Cycle corners; corner i is the tail of cell_edges(c)[i].
  std::span<const VertexId> cell_corners(CellId c) const noexcept;
  std::span<const CellId> vertex_cells(VertexId v) const noexcept;
  std::span<const Incidence> vertex_edges(VertexId v) const noexcept;

  const Vertex& vertex(VertexId v) const noexcept;
  const Cell& cell(CellId c) const noexcept;
  const Edge& edge(EdgeId e) const noexcept;
  DirectedEdge directed(EdgeId e) const noexcept;

  // Identity of the underlying structure, or equal kind and cell set.
  friend bool operator==(const Domain& a, const Domain& b) noexcept;

 private:
  struct Impl;
  explicit Domain(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

std::span<const BoundaryStep> boundary_cycle(const Domain& domain) noexcept;

// Square cells {(x,y): 0<=x<m, 0<=y<n}.
Domain make_rect(int m, int n);
// Triangles whose corners satisfy -c<=x<=a, 0<=y<=b+c, 0<=x+y<=a+b.
Domain make_hexagon(int a, int b, int c);

// Domain file I/O. Text: rows of '#'/'.', first line is the top row.
// JSON: {"lattice":"square"|"triangular","cells":[[x,y]|[x,y,"U"|"D"],...]}.
// parse_domain picks the form by the first non-blank character.
Domain parse_domain(std::string_view text);
Domain parse_domain_text(std::string_view text);
Domain parse_domain_json(std::string_view text);
std::string domain_to_json(const Domain& domain);
// Square domains with non-negative coordinates only (UnsupportedFormat otherwise).
std::string domain_to_text(const Domain& domain);

}  // namespace tileforge
