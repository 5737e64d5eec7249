#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tileforge/error.hpp"

namespace tileforge::cli {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

// Plane embedding; triangular vertices are axial.
Point embed(LatticeKind kind, Vertex v) {
  if (kind == LatticeKind::Square) return {static_cast<double>(v.x), static_cast<double>(v.y)};
  return {v.x + 0.5 * v.y, v.y * std::sqrt(3.0) / 2.0};
}

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

std::string render_ascii(const Tiling& tiling) {
  const Domain& d = tiling.domain();
  if (d.kind() != LatticeKind::Square) {
    throw Error(ErrorCode::UnsupportedFormat, "ascii rendering exists for square lattices only");
  }
  int minx = d.cells().front().x, maxx = minx, miny = d.cells().front().y, maxy = miny;
  for (const Cell& c : d.cells()) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  auto tile_of = [&](int x, int y) -> EdgeId {
    const auto c = d.find_cell({x, y, Orientation::None});
    return c ? tiling.axis_of(*c) : kNone;
  };
  // A wall is drawn between cells of different tiles, or between a cell and the outside.
  auto wall = [](EdgeId a, EdgeId b) { return a != b; };
  auto hwall = [&](int x, int y) { return wall(tile_of(x, y), tile_of(x, y - 1)); };
  auto vwall = [&](int x, int y) { return wall(tile_of(x - 1, y), tile_of(x, y)); };

  std::ostringstream out;
  for (int y = maxy + 1; y >= miny; --y) {
    std::string corners;
    for (int x = minx; x <= maxx + 1; ++x) {
      const bool any = hwall(x, y) || hwall(x - 1, y) || vwall(x, y) || vwall(x, y - 1);
      corners += any ? '+' : ' ';
      if (x <= maxx) corners += hwall(x, y) ? "---" : "   ";
    }
    while (!corners.empty() && corners.back() == ' ') corners.pop_back();
    out << corners << '\n';
    if (y == miny) break;
    std::string sides;
    for (int x = minx; x <= maxx + 1; ++x) {
      sides += vwall(x, y - 1) ? '|' : ' ';
      if (x <= maxx) sides += "   ";
    }
    while (!sides.empty() && sides.back() == ' ') sides.pop_back();
    out << sides << '\n';
  }
  return out.str();
}

std::string render_svg(const Tiling& tiling, bool heights) {
  const Domain& d = tiling.domain();
  const double scale = 40.0;
  const double pad = 20.0;
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  for (const Vertex& v : d.vertices()) {
    const Point p = embed(d.kind(), v);
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  auto screen = [&](Vertex v) {
    const Point p = embed(d.kind(), v);
    return Point{pad + (p.x - minx) * scale, pad + (maxy - p.y) * scale};
  };
  const double width = 2 * pad + (maxx - minx) * scale;
  const double height = 2 * pad + (maxy - miny) * scale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  out << "<style>polygon{stroke:#222;stroke-width:1.5}"
         ".lozenge-a{fill:#f2c14e}.lozenge-b{fill:#5b8e7d}.lozenge-c{fill:#bc4b51}"
         ".domino-h{fill:#8cb8d8}.domino-v{fill:#e8d6a8}"
         "text{font:10px sans-serif;fill:#000;text-anchor:middle}</style>\n";

  for (EdgeId e : tiling.axes()) {
    const Edge& edge = d.edge(e);
    const Vertex from = d.vertex(edge.from);
    const Vertex to = d.vertex(edge.to);
    std::vector<Vertex> outline;
    std::string cls;
    if (d.kind() == LatticeKind::Square) {
      int x0 = 1 << 30, y0 = 1 << 30, x1 = -(1 << 30), y1 = -(1 << 30);
      for (CellId c : edge.cells) {
        x0 = std::min(x0, d.cell(c).x);
        y0 = std::min(y0, d.cell(c).y);
        x1 = std::max(x1, d.cell(c).x + 1);
        y1 = std::max(y1, d.cell(c).y + 1);
      }
      outline = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
      cls = from.x == to.x ? "domino-h" : "domino-v";
    } else {
      // Apexes: the corner of each triangle off the axis.
      std::vector<Vertex> apex;
      for (CellId c : edge.cells) {
        for (VertexId corner : d.cell_corners(c)) {
          if (corner != edge.from && corner != edge.to) apex.push_back(d.vertex(corner));
        }
      }
      outline = {from, apex[0], to, apex[1]};
      const int dx = to.x - from.x;
      const int dy = to.y - from.y;
      cls = dy == 0 ? "lozenge-a" : (dx == 0 ? "lozenge-b" : "lozenge-c");
    }
    out << "<polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < outline.size(); ++i) {
      const Point p = screen(outline[i]);
      out << (i ? " " : "") << fmt(p.x) << ',' << fmt(p.y);
    }
    out << "\"/>\n";
  }
  if (heights) {
    const HeightFunction h = height_from_tiling(tiling);
    for (VertexId v = 0; v < static_cast<VertexId>(d.vertices().size()); ++v) {
      const Point p = screen(d.vertex(v));
      out << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y - 3) << "\">" << h[v] << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tileforge::cli
