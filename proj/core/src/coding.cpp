#include "tileforge/coding.hpp"

#include <charconv>

#include "json.hpp"
#include "tileforge/error.hpp"
#include "tileforge/thurston.hpp"

namespace tileforge {

Numbering::Numbering(Domain domain, std::vector<VertexId> order)
    : domain_(std::move(domain)), order_(std::move(order)), position_(domain_.vertices().size(), -1) {
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
}

Numbering Numbering::canonical(const Domain& domain) {
  return Numbering(domain, {domain.interior().begin(), domain.interior().end()});
}

Numbering Numbering::from_order(const Domain& domain, std::span<const Vertex> order) {
  if (order.size() != domain.interior().size()) {
    throw Error(ErrorCode::InvalidNumbering, "numbering must list all " +
                                                 std::to_string(domain.interior().size()) + " interior vertices");
  }
  std::vector<VertexId> ids;
  std::vector<std::uint8_t> seen(domain.vertices().size(), 0);
  for (const Vertex& v : order) {
    const auto id = domain.find_vertex(v);
    if (!id || !domain.is_interior(*id)) {
      throw Error(ErrorCode::InvalidNumbering,
                  "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ") is not an interior vertex");
    }
    if (seen[*id]++) throw Error(ErrorCode::InvalidNumbering, "vertex listed twice");
    ids.push_back(*id);
  }
  return Numbering(domain, std::move(ids));
}

Numbering Numbering::from_json(const Domain& domain, std::string_view text) {
  std::vector<Vertex> order;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& v : doc.at("numbering")) order.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("numbering file: ") + e.what());
  }
  return from_order(domain, order);
}

Word Word::parse(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return Word{};
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      throw Error(ErrorCode::ParseError, "word entry '" + std::string(token) + "' is not a non-negative integer");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(values));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

int normalized_height(const HeightFunction& h, const HeightFunction& hmin, Vertex v) {
  if (!(h.domain() == hmin.domain())) throw Error(ErrorCode::DomainMismatch, "height functions differ in domain");
  const int diff = h.at(v) - hmin.at(v);
  const int lambda = h.domain().lambda();
  if (diff % lambda != 0) throw Error(ErrorCode::NonIntegral, "height offset is not a multiple of lambda");
  return diff / lambda;
}

std::string PhaseSpace::to_json() const {
  nlohmann::ordered_json doc;
  doc["hmax"] = hmax;
  auto vs = nlohmann::ordered_json::array();
  for (const Vertex& v : vertices) vs.push_back({v.x, v.y});
  doc["vertices"] = std::move(vs);
  return doc.dump();
}

Codec::Codec(Numbering numbering)
    : numbering_(std::move(numbering)),
      hmin_(height_from_tiling(minimal_tiling(numbering_.domain()))),
      hmax_(height_from_tiling(maximal_tiling(numbering_.domain()))) {
  const int lambda = domain().lambda();
  levels_.reserve(numbering_.size());
  for (VertexId v : numbering_.order()) levels_.push_back((hmax_[v] - hmin_[v]) / lambda);
}

Word Codec::encode(const HeightFunction& heights) const {
  if (!(heights.domain() == domain())) throw Error(ErrorCode::DomainMismatch, "tiling of another domain");
  const int lambda = domain().lambda();
  std::vector<int> values;
  values.reserve(numbering_.size());
  for (VertexId v : numbering_.order()) {
    const int diff = heights[v] - hmin_[v];
    if (diff % lambda != 0 || diff < 0) throw Error(ErrorCode::NonIntegral, "heights do not come from a tiling");
    values.push_back(diff / lambda);
  }
  return Word(std::move(values));
}

Word Codec::encode(const Tiling& tiling) const { return encode(height_from_tiling(tiling)); }

HeightFunction Codec::decode_heights(const Word& word) const {
  if (word.size() != numbering_.size()) {
    throw Error(ErrorCode::IndexMismatch, "word has " + std::to_string(word.size()) + " entries, numbering has " +
                                              std::to_string(numbering_.size()));
  }
  const int lambda = domain().lambda();
  std::vector<int> h(hmin_.values().begin(), hmin_.values().end());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] > levels_[i]) {
      throw Error(ErrorCode::InvalidWord, "entry " + std::to_string(i + 1) + " exceeds its range 0.." +
                                              std::to_string(levels_[i]));
    }
    h[numbering_.vertex_at(i)] += lambda * word[i];
  }
  HeightFunction heights(domain(), std::move(h));
  try {
    (void)tiling_from_height(heights);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidWord, std::string("word encodes no tiling (") + e.what() + ")");
  }
  return heights;
}

Tiling Codec::decode(const Word& word) const { return tiling_from_height(decode_heights(word)); }

PhaseSpace Codec::phase_space() const {
  PhaseSpace ps;
  ps.hmax = levels_;
  for (VertexId v : numbering_.order()) ps.vertices.push_back(domain().vertex(v));
  return ps;
}

Word encode(const Tiling& tiling, const Numbering& numbering) { return Codec(numbering).encode(tiling); }

Tiling decode(const Word& word, const Numbering& numbering) { return Codec(numbering).decode(word); }

PhaseSpace phase_space(const Numbering& numbering) { return Codec(numbering).phase_space(); }

PhaseSpace phase_space(const Domain& domain) { return phase_space(Numbering::canonical(domain)); }

std::set<std::pair<int, int>> phase(const Tiling& tiling, const Numbering& numbering) {
  const Word w = encode(tiling, numbering);
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.emplace(static_cast<int>(i), w[i]);
  return out;
}

}  // namespace tileforge
