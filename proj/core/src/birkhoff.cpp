#include "tileforge/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tileforge/generation.hpp"
#include "tileforge/order.hpp"
#include "tileforge/thurston.hpp"

namespace tileforge {

std::size_t CoverGraph::out_degree(std::size_t node) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == node; }));
}

std::size_t CoverGraph::in_degree(std::size_t node) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.second == node; }));
}

std::string CoverGraph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string CoverGraph::to_json() const {
  nlohmann::ordered_json doc;
  doc["nodes"] = labels;
  auto es = nlohmann::ordered_json::array();
  for (const auto& [a, b] : edges) es.push_back({a, b});
  doc["edges"] = std::move(es);
  return doc.dump();
}

std::vector<MeetIrreducible> meet_irreducibles(const Domain& domain) {
  const Codec codec(Numbering::canonical(domain));
  const int lambda = domain.lambda();
  std::vector<MeetIrreducible> out;
  for (std::size_t i = 0; i < codec.numbering().size(); ++i) {
    const VertexId v = codec.numbering().vertex_at(i);
    const Vertex at = domain.vertex(v);
    for (int k = 1; k <= codec.max_levels()[i]; ++k) {
      Tiling t = constrained_minimal(domain, {{at, codec.min_heights()[v] + lambda * k}});
      const FlipSites sites = flip_sites(t);
      if (sites.down.size() != 1 || sites.down.front() != at) {
        throw std::logic_error("constrained tiling is not meet-irreducible");
      }
      out.push_back({at, k, std::move(t)});
    }
  }
  return out;
}

CoverGraph irreducible_poset(const std::vector<MeetIrreducible>& irreducibles) {
  const std::size_t n = irreducibles.size();
  std::vector<HeightFunction> heights;
  heights.reserve(n);
  for (const auto& m : irreducibles) heights.push_back(height_from_tiling(m.tiling));
  std::vector<std::vector<std::uint8_t>> below(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below[i][j] = i != j && leq(heights[i], heights[j]);
  }
  CoverGraph g;
  for (const auto& m : irreducibles) {
    g.labels.push_back("v=(" + std::to_string(m.vertex.x) + "," + std::to_string(m.vertex.y) + ")," +
                       std::to_string(m.level));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) cover = !(below[i][k] && below[k][j]);
      if (cover) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

CoverGraph irreducible_poset(const Domain& domain) { return irreducible_poset(meet_irreducibles(domain)); }

CoverGraph lattice_graph(const Numbering& numbering) {
  GenerationSession session(numbering);
  std::vector<Word> words;
  std::vector<Tiling> tilings;
  do {
    words.push_back(session.word());
    tilings.push_back(session.tiling());
  } while (session.advance());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

  CoverGraph g;
  for (const Word& w : words) g.labels.push_back(w.to_string());
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    for (const Vertex& v : flip_sites(tilings[i]).up) {
      const Word up = session.codec().encode(apply_flip(tilings[i], v, FlipDirection::Up));
      g.edges.emplace_back(i, index.at(up));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Tiling birkhoff_reconstruct(const std::vector<MeetIrreducible>& irreducibles, const Tiling& minimal,
                            const Tiling& tiling) {
  const HeightFunction h = height_from_tiling(tiling);
  const HeightFunction bottom = height_from_tiling(minimal);
  std::vector<int> acc(bottom.values().begin(), bottom.values().end());
  for (const auto& m : irreducibles) {
    const HeightFunction hm = height_from_tiling(m.tiling);
    if (!leq(hm, h)) continue;
    for (std::size_t v = 0; v < acc.size(); ++v) acc[v] = std::max(acc[v], hm.values()[v]);
  }
  return tiling_from_height(HeightFunction(minimal.domain(), std::move(acc)));
}

Tiling birkhoff_reconstruct(const Domain& domain, const Tiling& tiling) {
  return birkhoff_reconstruct(meet_irreducibles(domain), minimal_tiling(domain), tiling);
}

}  // namespace tileforge
