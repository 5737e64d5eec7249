#include "tileforge/thurston.hpp"

#include <algorithm>
#include <random>

#include "tileforge/error.hpp"

namespace tileforge {

ThurstonEngine::ThurstonEngine(Domain domain) : domain_(std::move(domain)) {
  const auto nv = domain_.vertices().size();
  boundary_.assign(nv, 0);
  int bmin = 0;
  int bmax = 0;
  try {
    const auto partial = boundary_heights(domain_);
    for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
      if (!partial[v]) continue;
      boundary_[v] = *partial[v];
      boundary_vertices_.push_back(v);
      bmin = std::min(bmin, *partial[v]);
      bmax = std::max(bmax, *partial[v]);
    }
  } catch (const Error&) {
    boundary_ok_ = false;
  }
  // Every vertex is within nv edges of the boundary and an edge changes the
  // height by at most lambda-1, so all tilings fit in this window.
  const int lambda = domain_.lambda();
  low_ = bmin - lambda * static_cast<int>(nv) - lambda;
  high_ = bmax + lambda * static_cast<int>(nv) + lambda;
  known_.assign(nv, 0);
  tiled_.assign(domain_.cells().size(), 0);
  cell_axes_.assign(domain_.cells().size(), kNone);
  bucket_head_.assign(static_cast<std::size_t>(high_ - low_ + 1), -1);
  bucket_next_.assign(nv, -1);
}

void ThurstonEngine::push(VertexId v, int h) {
  pushed_min_ = std::min(pushed_min_, h);
  pushed_max_ = std::max(pushed_max_, h);
  const int slot = h - low_;
  bucket_next_[v] = bucket_head_[slot];
  bucket_head_[slot] = v;
}

bool ThurstonEngine::assign(VertexId v, int h, std::span<int> heights) {
  ++operations_;
  if (known_[v]) return heights[v] == h;
  if (h < low_ || h > high_) return false;
  heights[v] = h;
  known_[v] = 1;
  push(v, h);
  return true;
}

ThurstonEngine::Outcome ThurstonEngine::run(Sense sense, std::span<int> heights,
                                            std::span<const VertexId> fixed,
                                            const ThurstonOptions& options) {
  operations_ = 0;
  if (!boundary_ok_) return Outcome::BoundaryMismatch;
  const int lambda = domain_.lambda();
  const int sides = lambda;
  const bool minimal = sense == Sense::Minimal;

  std::fill(known_.begin(), known_.end(), 0);
  std::fill(tiled_.begin(), tiled_.end(), 0);
  operations_ += known_.size() + tiled_.size();

  pushed_min_ = high_;
  pushed_max_ = low_;
  for (VertexId f : fixed) {
    const int h = heights[f];
    if (h < low_ || h > high_) return finish(Outcome::OutOfRange);
    if (known_[f]) continue;
    known_[f] = 1;
    push(f, h);
  }
  for (VertexId b : boundary_vertices_) {
    if (known_[b]) {
      if (heights[b] != boundary_[b]) return finish(Outcome::HeightConflict);
      continue;
    }
    heights[b] = boundary_[b];
    known_[b] = 1;
    push(b, boundary_[b]);
  }
  const int extreme = minimal ? pushed_max_ : pushed_min_;

  std::size_t remaining = tiled_.size();
  std::size_t tiles = 0;
  std::size_t processed = 0;
  std::mt19937_64 rng(options.tie_seed.value_or(0));
  int cursor = extreme;
  bool failed = false;
  Outcome failure = Outcome::Ok;

  auto cover = [&](VertexId v) {
    ++operations_;
    ++processed;
    ThurstonStep* step = nullptr;
    for (CellId c : domain_.vertex_cells(v)) {
      ++operations_;
      if (tiled_[c]) continue;
      const auto corners = domain_.cell_corners(c);
      const auto edges = domain_.cell_edges(c);
      const int k = static_cast<int>(std::find(corners.begin(), corners.end(), v) - corners.begin());
      const EdgeId axis = minimal ? edges[k] : edges[(k + sides - 1) % sides];
      const CellId partner = domain_.edge(axis).other_cell(c);
      if (partner == kNone || tiled_[partner]) {
        failure = Outcome::TileEscapes;
        return false;
      }
      tiled_[c] = tiled_[partner] = 1;
      cell_axes_[c] = cell_axes_[partner] = axis;
      remaining -= 2;
      ++tiles;
      if (options.trace) {
        if (!step) step = &options.trace->emplace_back(ThurstonStep{domain_.vertex(v), heights[v], {}});
        step->axes.push_back(domain_.directed(axis));
      }
      for (CellId cell : {c, partner}) {
        const auto cc = domain_.cell_corners(cell);
        const auto ce = domain_.cell_edges(cell);
        const int start = static_cast<int>(std::find(cc.begin(), cc.end(), v) - cc.begin());
        int h = heights[v];
        for (int j = 0; j + 1 < sides; ++j) {
          const int idx = (start + j) % sides;
          h += ce[idx] == axis ? -(lambda - 1) : 1;
          if (!assign(cc[(idx + 1) % sides], h, heights)) {
            failure = Outcome::HeightConflict;
            return false;
          }
        }
      }
    }
    return true;
  };

  while (remaining > 0 && !failed) {
    if (cursor < pushed_min_ || cursor > pushed_max_) {
      failure = Outcome::HeightConflict;
      break;
    }
    const int slot = cursor - low_;
    ++operations_;
    if (bucket_head_[slot] == -1) {
      cursor += minimal ? -1 : 1;
      continue;
    }
    if (options.tie_seed) {
      tie_scratch_.clear();
      for (VertexId v = bucket_head_[slot]; v != -1; v = bucket_next_[v]) tie_scratch_.push_back(v);
      bucket_head_[slot] = -1;
      std::shuffle(tie_scratch_.begin(), tie_scratch_.end(), rng);
      for (VertexId v : tie_scratch_) {
        if (!cover(v)) {
          failed = true;
          break;
        }
      }
    } else {
      const VertexId v = bucket_head_[slot];
      bucket_head_[slot] = bucket_next_[v];
      if (!cover(v)) failed = true;
    }
  }
  if (options.stats) {
    options.stats->tiles_placed = tiles;
    options.stats->vertices_processed = processed;
    options.stats->operations = operations_;
  }
  if (failed) return finish(failure == Outcome::Ok ? Outcome::HeightConflict : failure);
  return finish(remaining == 0 ? Outcome::Ok : Outcome::HeightConflict);
}

ThurstonEngine::Outcome ThurstonEngine::finish(Outcome outcome) {
  // Buckets are empty between runs; only the slots this run touched can hold entries.
  for (int h = pushed_min_; h <= pushed_max_; ++h) bucket_head_[h - low_] = -1;
  if (pushed_max_ >= pushed_min_) operations_ += static_cast<std::size_t>(pushed_max_ - pushed_min_ + 1);
  return outcome;
}

namespace {

const char* reason(ThurstonEngine::Outcome outcome) {
  switch (outcome) {
    case ThurstonEngine::Outcome::Ok: return "ok";
    case ThurstonEngine::Outcome::BoundaryMismatch: return "boundary heights do not close";
    case ThurstonEngine::Outcome::HeightConflict: return "a vertex received two heights";
    case ThurstonEngine::Outcome::TileEscapes: return "a forced tile leaves the region";
    case ThurstonEngine::Outcome::OutOfRange: return "prescribed height out of range";
  }
  return "unknown";
}

Tiling extremal(const Domain& domain, ThurstonEngine::Sense sense, const ThurstonOptions& options) {
  ThurstonEngine engine(domain);
  std::vector<int> heights(domain.vertices().size(), 0);
  const auto outcome = engine.run(sense, heights, {}, options);
  if (outcome != ThurstonEngine::Outcome::Ok) {
    throw Error(ErrorCode::Untileable, reason(outcome));
  }
  return Tiling::trusted(domain, {engine.cell_axes().begin(), engine.cell_axes().end()});
}

}  // namespace

Tiling minimal_tiling(const Domain& domain, const ThurstonOptions& options) {
  return extremal(domain, ThurstonEngine::Sense::Minimal, options);
}

Tiling maximal_tiling(const Domain& domain, const ThurstonOptions& options) {
  return extremal(domain, ThurstonEngine::Sense::Maximal, options);
}

Tiling constrained_minimal(const Domain& domain, const ConstraintSet& constraints,
                           const ThurstonOptions& options) {
  std::vector<int> heights(domain.vertices().size(), 0);
  std::vector<VertexId> fixed;
  for (const auto& [vertex, value] : constraints) {
    const auto id = domain.find_vertex(vertex);
    if (!id || !domain.is_interior(*id)) {
      throw Error(ErrorCode::InvalidHeight, "constraint at (" + std::to_string(vertex.x) + "," +
                                                std::to_string(vertex.y) + ") is not an interior vertex");
    }
    heights[*id] = value;
    fixed.push_back(*id);
  }
  ThurstonEngine engine(domain);
  if (!engine.boundary_consistent()) {
    throw Error(ErrorCode::Untileable, reason(ThurstonEngine::Outcome::BoundaryMismatch));
  }
  const auto outcome = engine.run(ThurstonEngine::Sense::Minimal, heights, fixed, options);
  if (outcome != ThurstonEngine::Outcome::Ok) {
    std::vector<int> scratch(heights.size(), 0);
    if (engine.run(ThurstonEngine::Sense::Minimal, scratch, {}) != ThurstonEngine::Outcome::Ok) {
      throw Error(ErrorCode::Untileable, reason(outcome));
    }
    throw Error(ErrorCode::Infeasible, reason(outcome));
  }
  Tiling result(domain, {engine.cell_axes().begin(), engine.cell_axes().end()});
  const HeightFunction check = height_from_tiling(result);
  for (const auto& [vertex, value] : constraints) {
    if (check.at(vertex) != value) {
      throw Error(ErrorCode::Infeasible, "constructed tiling misses a prescribed height");
    }
  }
  if (!std::equal(check.values().begin(), check.values().end(), heights.begin())) {
    throw Error(ErrorCode::Infeasible, "constructed heights are inconsistent");
  }
  return result;
}

}  // namespace tileforge
