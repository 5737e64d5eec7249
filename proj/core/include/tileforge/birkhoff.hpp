#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tileforge/coding.hpp"
#include "tileforge/tiling.hpp"

namespace tileforge {

// Tiling whose only interior local maximum sits at `vertex`, at normalized
// level `level` >= 1.
struct MeetIrreducible {
  Vertex vertex;
  int level = 0;
  Tiling tiling;
};

// Directed acyclic graph of covering relations, lower element first.
struct CoverGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted

  std::size_t out_degree(std::size_t node) const;
  std::size_t in_degree(std::size_t node) const;
  std::string to_dot(const std::string& name) const;
  // {"nodes":[...],"edges":[[from,to],...]}
  std::string to_json() const;
};

// One element per interior vertex v and level 1..Hmax(v), sorted by (vertex,
// level). Throws Error(Untileable).
std::vector<MeetIrreducible> meet_irreducibles(const Domain& domain);

// Transitive reduction of the lattice order restricted to meet-irreducibles.
// Nodes are labelled "v=(x,y),k".
CoverGraph irreducible_poset(const Domain& domain);
CoverGraph irreducible_poset(const std::vector<MeetIrreducible>& irreducibles);

// All tilings (labelled by word) with an edge for every up flip.
CoverGraph lattice_graph(const Numbering& numbering);

// Join of the irreducibles below `tiling`; the empty join is the minimal
// tiling. Each irreducible is the least tiling reaching its level at its
// vertex, so the join gives back `tiling` itself.
Tiling birkhoff_reconstruct(const Domain& domain, const Tiling& tiling);
Tiling birkhoff_reconstruct(const std::vector<MeetIrreducible>& irreducibles, const Tiling& minimal,
                            const Tiling& tiling);

}  // namespace tileforge
