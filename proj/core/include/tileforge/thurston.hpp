#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tileforge/grid.hpp"
#include "tileforge/tiling.hpp"

namespace tileforge {

// Prescribed raw heights on interior vertices.
using ConstraintSet = std::map<Vertex, int>;

struct ThurstonStats {
  std::size_t tiles_placed = 0;
  std::size_t vertices_processed = 0;
  std::size_t operations = 0;
};

// One extremal vertex covered by the construction, with the axes it forced.
struct ThurstonStep {
  Vertex vertex;
  int height = 0;
  std::vector<DirectedEdge> axes;
};

struct ThurstonOptions {
  // Process vertices of equal height in a shuffled order (testing only).
  std::optional<std::uint64_t> tie_seed;
  ThurstonStats* stats = nullptr;
  std::vector<ThurstonStep>* trace = nullptr;
};

// Reusable working state for the extremal-tiling construction. The engine
// repeatedly covers a vertex of extremal known height with the tiles that
// keep every new corner on the correct side of it; a bucket queue keyed by
// height keeps the whole run linear in the domain size.
class ThurstonEngine {
 public:
  enum class Sense { Minimal, Maximal };
  enum class Outcome { Ok, BoundaryMismatch, HeightConflict, TileEscapes, OutOfRange };

  explicit ThurstonEngine(Domain domain);

  // `heights` has one slot per domain vertex. Slots listed in `fixed` hold
  // prescribed heights on input; every other slot is overwritten. On Ok the
  // array holds the resulting height function and cell_axes() the tiling.
  Outcome run(Sense sense, std::span<int> heights, std::span<const VertexId> fixed,
              const ThurstonOptions& options = {});

  std::span<const EdgeId> cell_axes() const noexcept { return cell_axes_; }
  const Domain& domain() const noexcept { return domain_; }
  bool boundary_consistent() const noexcept { return boundary_ok_; }
  std::span<const int> boundary_values() const noexcept { return boundary_; }
  // Elementary steps taken by the last run.
  std::size_t operations() const noexcept { return operations_; }

 private:
  bool assign(VertexId v, int h, std::span<int> heights);
  void push(VertexId v, int h);
  Outcome finish(Outcome outcome);

  Domain domain_;
  bool boundary_ok_ = true;
  std::vector<int> boundary_;  // meaningful on boundary vertices only
  std::vector<VertexId> boundary_vertices_;
  int low_ = 0;
  int high_ = 0;
  int pushed_min_ = 0;
  int pushed_max_ = 0;
  std::vector<std::uint8_t> known_;
  std::vector<std::uint8_t> tiled_;
  std::vector<EdgeId> cell_axes_;
  std::vector<std::int32_t> bucket_head_;
  std::vector<std::int32_t> bucket_next_;
  std::vector<VertexId> tie_scratch_;
  std::size_t operations_ = 0;
};

// Unique tiling without interior local maxima; below every other tiling.
// Throws Error(Untileable).
Tiling minimal_tiling(const Domain& domain, const ThurstonOptions& options = {});
// Unique tiling without interior local minima. Throws Error(Untileable).
Tiling maximal_tiling(const Domain& domain, const ThurstonOptions& options = {});

// Smallest tiling taking the prescribed raw height at every constrained
// vertex. Throws Error(Infeasible) when no tiling matches, Error(Untileable)
// when the domain itself has no tiling, Error(InvalidHeight) for constraints
// on non-interior vertices.
Tiling constrained_minimal(const Domain& domain, const ConstraintSet& constraints,
                           const ThurstonOptions& options = {});

}  // namespace tileforge
