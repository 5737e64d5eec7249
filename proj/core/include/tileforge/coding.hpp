#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tileforge/grid.hpp"
#include "tileforge/tiling.hpp"

namespace tileforge {

// Bijection from interior vertices to word positions 0..|V|-1.
class Numbering {
 public:
  // Interior vertices in (y, x) order.
  static Numbering canonical(const Domain& domain);
  // Throws Error(InvalidNumbering) unless `order` lists every interior vertex once.
  static Numbering from_order(const Domain& domain, std::span<const Vertex> order);
  // JSON {"numbering":[[x,y],...]}.
  static Numbering from_json(const Domain& domain, std::string_view text);

  const Domain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::span<const VertexId> order() const noexcept { return order_; }
  VertexId vertex_at(std::size_t position) const noexcept { return order_[position]; }
  // -1 for vertices outside the numbering.
  int position_of(VertexId v) const noexcept { return position_[v]; }

 private:
  Numbering(Domain domain, std::vector<VertexId> order);

  Domain domain_;
  std::vector<VertexId> order_;
  std::vector<int> position_;
};

// Normalized heights in numbering order. Ordered lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> values) : values_(std::move(values)) {}

  // "0,1,0,2"; the empty word is "". Throws Error(ParseError).
  static Word parse(std::string_view text);
  std::string to_string() const;

  std::span<const int> values() const noexcept { return values_; }
  std::vector<int>& mutable_values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.values_ <=> b.values_; }

 private:
  std::vector<int> values_;
};

// (h(v) - hmin(v)) / lambda. Throws Error(NonIntegral) or Error(InvalidHeight).
int normalized_height(const HeightFunction& h, const HeightFunction& hmin, Vertex v);

struct PhaseSpace {
  std::vector<int> hmax;          // per position
  std::vector<Vertex> vertices;   // per position

  // {"hmax":[...],"vertices":[[x,y],...]}
  std::string to_json() const;
};

// Precomputed extremal heights for one domain and numbering.
class Codec {
 public:
  // Throws Error(Untileable).
  explicit Codec(Numbering numbering);

  const Numbering& numbering() const noexcept { return numbering_; }
  const Domain& domain() const noexcept { return numbering_.domain(); }
  const HeightFunction& min_heights() const noexcept { return hmin_; }
  const HeightFunction& max_heights() const noexcept { return hmax_; }
  std::span<const int> max_levels() const noexcept { return levels_; }

  Word encode(const Tiling& tiling) const;
  Word encode(const HeightFunction& heights) const;
  // Throws Error(IndexMismatch) on a length mismatch, Error(InvalidWord) when
  // the word is out of range or encodes no tiling.
  HeightFunction decode_heights(const Word& word) const;
  Tiling decode(const Word& word) const;
  PhaseSpace phase_space() const;

 private:
  Numbering numbering_;
  HeightFunction hmin_;
  HeightFunction hmax_;
  std::vector<int> levels_;
};

Word encode(const Tiling& tiling, const Numbering& numbering);
Tiling decode(const Word& word, const Numbering& numbering);
PhaseSpace phase_space(const Domain& domain);
PhaseSpace phase_space(const Numbering& numbering);

// The set of (position, level) pairs of a tiling.
std::set<std::pair<int, int>> phase(const Tiling& tiling, const Numbering& numbering);

}  // namespace tileforge
