#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tileforge/coding.hpp"
#include "tileforge/thurston.hpp"

namespace tileforge {

struct SessionStats {
  std::size_t steps = 0;
  std::size_t last_operations = 0;
  std::size_t max_operations = 0;
};

// Per-tiling state a session keeps alive, in int-sized entries.
struct SessionMemory {
  std::size_t words = 0;          // word buffers
  std::size_t word_entries = 0;
  std::size_t height_tables = 0;  // per-tiling height tables (extremal tables excluded)
  std::size_t height_entries = 0;
};

// Cursor over the tilings of one domain in increasing word order. The
// current tiling is held as its word plus its height table; advancing never
// allocates.
class GenerationSession {
 public:
  // Starts at the minimal tiling. Throws Error(Untileable).
  explicit GenerationSession(Numbering numbering);

  const Codec& codec() const noexcept { return codec_; }
  const Word& word() const noexcept { return word_; }
  std::span<const int> heights() const noexcept { return heights_; }
  Tiling tiling() const;

  // Throws Error(InvalidWord) / Error(IndexMismatch).
  void reset(const Word& word);
  void reset_to_minimal();

  // Moves to the least greater word that encodes a tiling; false (state
  // unchanged) at the maximal tiling.
  bool advance();

  // Same, restricted to tilings between two raw height tables. The current
  // tiling must already lie between them.
  bool advance_within(std::span<const int> lower, std::span<const int> upper);

  const SessionStats& stats() const noexcept { return stats_; }
  SessionMemory memory() const noexcept;

 private:
  bool step(std::span<const int> lower, std::span<const int> upper);

  Codec codec_;
  ThurstonEngine engine_;
  Word word_;
  std::vector<int> heights_;
  std::vector<VertexId> fixed_;
  SessionStats stats_;
};

// Least word greater than `word` encoding a tiling, or nullopt at the maximum.
std::optional<Word> successor(GenerationSession& session, const Word& word);
std::optional<Word> successor(const Numbering& numbering, const Word& word);

// Sinks return false to stop early.
using WordSink = std::function<bool(const Word&)>;
using TilingSink = std::function<bool(const Tiling&)>;

std::uint64_t count_tilings(const Numbering& numbering);
void enumerate_words(const Numbering& numbering, const WordSink& sink);
void enumerate_tilings(const Numbering& numbering, const TilingSink& sink);

// Tilings T with decode(lo) <= T <= decode(hi), in increasing word order.
// Throws Error(NotComparable) when lo is not below hi.
void enumerate_interval(const Numbering& numbering, const Word& lo, const Word& hi, const WordSink& sink);

}  // namespace tileforge
