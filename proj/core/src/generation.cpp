#include "tileforge/generation.hpp"

#include <algorithm>
#include <stdexcept>

#include "tileforge/error.hpp"
#include "tileforge/order.hpp"

namespace tileforge {

GenerationSession::GenerationSession(Numbering numbering)
    : codec_(std::move(numbering)), engine_(codec_.domain()) {
  fixed_.reserve(codec_.numbering().size());
  reset_to_minimal();
}

Tiling GenerationSession::tiling() const {
  return tiling_from_height(HeightFunction(codec_.domain(), heights_));
}

void GenerationSession::reset(const Word& word) {
  const HeightFunction h = codec_.decode_heights(word);
  heights_.assign(h.values().begin(), h.values().end());
  word_ = word;
}

void GenerationSession::reset_to_minimal() {
  heights_.assign(codec_.min_heights().values().begin(), codec_.min_heights().values().end());
  word_ = Word(std::vector<int>(codec_.numbering().size(), 0));
}

bool GenerationSession::advance() { return step({}, {}); }

bool GenerationSession::advance_within(std::span<const int> lower, std::span<const int> upper) {
  return step(lower, upper);
}

bool GenerationSession::step(std::span<const int> lower, std::span<const int> upper) {
  const Domain& d = codec_.domain();
  const auto order = codec_.numbering().order();
  const int lambda = d.lambda();
  std::size_t ops = 0;

  // Right-most position holding a local minimum that may still rise.
  std::size_t pivot = order.size();
  for (std::size_t i = order.size(); i-- > 0;) {
    const VertexId v = order[i];
    ++ops;
    if (!upper.empty() && heights_[v] + lambda > upper[v]) continue;
    bool minimum = true;
    for (const Incidence& inc : d.vertex_edges(v)) {
      ++ops;
      if (heights_[inc.neighbor] < heights_[v]) {
        minimum = false;
        break;
      }
    }
    if (minimum) {
      pivot = i;
      break;
    }
  }
  if (pivot == order.size()) {
    stats_.last_operations = ops;
    return false;
  }

  // Smallest tiling agreeing with the flipped word on positions 0..pivot.
  fixed_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(pivot) + 1);
  heights_[order[pivot]] += lambda;
  const auto outcome = engine_.run(ThurstonEngine::Sense::Minimal, heights_, fixed_);
  ops += engine_.operations();
  if (outcome != ThurstonEngine::Outcome::Ok) {
    throw std::logic_error("constrained construction failed on a feasible prefix");
  }
  if (!lower.empty()) {
    for (std::size_t v = 0; v < heights_.size(); ++v) heights_[v] = std::max(heights_[v], lower[v]);
    ops += heights_.size();
  }
  auto& w = word_.mutable_values();
  const auto hmin = codec_.min_heights().values();
  for (std::size_t j = pivot; j < order.size(); ++j) {
    w[j] = (heights_[order[j]] - hmin[order[j]]) / lambda;
    ++ops;
  }

  ++stats_.steps;
  stats_.last_operations = ops;
  stats_.max_operations = std::max(stats_.max_operations, ops);
  return true;
}

SessionMemory GenerationSession::memory() const noexcept {
  return {1, word_.size(), 1, heights_.size()};
}

std::optional<Word> successor(GenerationSession& session, const Word& word) {
  session.reset(word);
  if (!session.advance()) return std::nullopt;
  return session.word();
}

std::optional<Word> successor(const Numbering& numbering, const Word& word) {
  GenerationSession session(numbering);
  return successor(session, word);
}

std::uint64_t count_tilings(const Numbering& numbering) {
  GenerationSession session(numbering);
  std::uint64_t count = 1;
  while (session.advance()) ++count;
  return count;
}

void enumerate_words(const Numbering& numbering, const WordSink& sink) {
  GenerationSession session(numbering);
  do {
    if (!sink(session.word())) return;
  } while (session.advance());
}

void enumerate_tilings(const Numbering& numbering, const TilingSink& sink) {
  GenerationSession session(numbering);
  do {
    if (!sink(session.tiling())) return;
  } while (session.advance());
}

void enumerate_interval(const Numbering& numbering, const Word& lo, const Word& hi, const WordSink& sink) {
  GenerationSession session(numbering);
  const HeightFunction lower = session.codec().decode_heights(lo);
  const HeightFunction upper = session.codec().decode_heights(hi);
  if (!leq(lower, upper)) throw Error(ErrorCode::NotComparable, "lower bound is not below upper bound");
  session.reset(lo);
  do {
    if (!sink(session.word())) return;
  } while (session.advance_within(lower.values(), upper.values()));
}

}  // namespace tileforge
