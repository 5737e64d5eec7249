#include "tileforge/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tileforge/error.hpp"
#include "tileforge/order.hpp"

namespace tileforge::oracle {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

namespace {

bool cover_rest(const Domain& d, std::vector<EdgeId>& axes) {
  const auto first = std::find(axes.begin(), axes.end(), kNone);
  if (first == axes.end()) return true;
  const auto c = static_cast<CellId>(first - axes.begin());
  for (EdgeId e : d.cell_edges(c)) {
    const CellId partner = d.edge(e).other_cell(c);
    if (partner == kNone || axes[partner] != kNone) continue;
    axes[c] = axes[partner] = e;
    if (cover_rest(d, axes)) return true;
    axes[c] = axes[partner] = kNone;
  }
  return false;
}

}  // namespace

Enumeration enumerate_bfs(const Numbering& numbering) {
  const Domain& d = numbering.domain();
  std::vector<EdgeId> seed(d.cells().size(), kNone);
  if (!cover_rest(d, seed)) throw Error(ErrorCode::Untileable, "exhaustive search found no tiling");

  std::set<std::vector<EdgeId>> seen{seed};
  std::deque<std::vector<EdgeId>> queue{seed};
  std::vector<Tiling> found;
  while (!queue.empty()) {
    std::vector<EdgeId> axes = std::move(queue.front());
    queue.pop_front();
    for (VertexId v : d.interior()) {
      for (FlipDirection dir : {FlipDirection::Up, FlipDirection::Down}) {
        std::vector<EdgeId> next = axes;
        if (flip_in_place(d, next, v, dir) && seen.insert(next).second) queue.push_back(next);
      }
    }
    found.emplace_back(d, std::move(axes));
  }

  std::vector<HeightFunction> heights;
  heights.reserve(found.size());
  for (const Tiling& t : found) heights.push_back(height_from_tiling(t));
  std::vector<int> lowest(heights.front().values().begin(), heights.front().values().end());
  for (const auto& h : heights) {
    for (std::size_t v = 0; v < lowest.size(); ++v) lowest[v] = std::min(lowest[v], h.values()[v]);
  }
  const int lambda = d.lambda();
  std::vector<std::pair<Word, std::size_t>> keyed;
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<int> w;
    for (VertexId v : numbering.order()) w.push_back((heights[i][v] - lowest[v]) / lambda);
    keyed.emplace_back(Word(std::move(w)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  Enumeration out;
  for (auto& [w, i] : keyed) {
    out.words.push_back(std::move(w));
    out.tilings.push_back(found[i]);
  }
  return out;
}

Enumeration enumerate_bfs(const Domain& domain) { return enumerate_bfs(Numbering::canonical(domain)); }

namespace {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "count exceeds 128 bits");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "count exceeds 128 bits");
  return r;
}

}  // namespace

Count count_rect(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidSize, "rectangle sides must be >= 1");
  if (m > n) std::swap(m, n);
  if (m > 12) throw Error(ErrorCode::InvalidSize, "profile width limited to 12");
  // Cell-by-cell sweep; bit j of the profile marks column j as already
  // covered (by a vertical domino from below, or a horizontal one from the left).
  std::vector<Count> dp(std::size_t{1} << m, 0);
  std::vector<Count> next(dp.size(), 0);
  dp[0] = 1;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < m; ++col) {
      std::fill(next.begin(), next.end(), 0);
      const std::size_t bit = std::size_t{1} << col;
      for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0) continue;
        if (mask & bit) {
          next[mask & ~bit] = checked_add(next[mask & ~bit], dp[mask]);
          continue;
        }
        if (row + 1 < n) next[mask | bit] = checked_add(next[mask | bit], dp[mask]);
        if (col + 1 < m && !(mask & (bit << 1))) {
          next[mask | (bit << 1)] = checked_add(next[mask | (bit << 1)], dp[mask]);
        }
      }
      dp.swap(next);
    }
  }
  return dp[0];
}

Count count_hexagon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw Error(ErrorCode::InvalidSize, "hexagon sides must be >= 1");
  const int top = a + b + c;
  std::vector<long> exponent(static_cast<std::size_t>(top) + 1, 0);
  auto factor = [&](int value, int sign) {
    for (int p = 2; value > 1; ++p) {
      while (value % p == 0) {
        exponent[p] += sign;
        value /= p;
      }
    }
  };
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      for (int k = 1; k <= c; ++k) {
        factor(i + j + k - 1, +1);
        factor(i + j + k - 2, -1);
      }
    }
  }
  Count result = 1;
  for (int p = 2; p <= top; ++p) {
    if (exponent[p] < 0) throw Error(ErrorCode::NonIntegral, "product formula is not integral");
    for (long e = 0; e < exponent[p]; ++e) result = checked_mul(result, static_cast<Count>(p));
  }
  return result;
}

std::optional<Word> lex_successor(const Enumeration& all, const Word& word) {
  const auto it = std::lower_bound(all.words.begin(), all.words.end(), word);
  if (it == all.words.end() || *it != word) throw Error(ErrorCode::UnknownWord, "word " + word.to_string());
  if (it + 1 == all.words.end()) return std::nullopt;
  return *(it + 1);
}

namespace {

std::vector<int> bfs_from(const Domain& d, const std::vector<EdgeId>& start,
                          const std::map<std::vector<EdgeId>, std::size_t>& index) {
  std::vector<int> dist(index.size(), -1);
  std::deque<std::vector<EdgeId>> queue{start};
  dist[index.at(start)] = 0;
  while (!queue.empty()) {
    const std::vector<EdgeId> axes = std::move(queue.front());
    queue.pop_front();
    const int here = dist[index.at(axes)];
    for (VertexId v : d.interior()) {
      for (FlipDirection dir : {FlipDirection::Up, FlipDirection::Down}) {
        std::vector<EdgeId> next = axes;
        if (!flip_in_place(d, next, v, dir)) continue;
        int& slot = dist[index.at(next)];
        if (slot < 0) {
          slot = here + 1;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return dist;
}

}  // namespace

int flip_distance(const Tiling& a, const Tiling& b) {
  if (!(a.domain() == b.domain())) throw Error(ErrorCode::DomainMismatch, "tilings of different domains");
  const Domain& d = a.domain();
  const std::vector<EdgeId> target(b.cell_axes().begin(), b.cell_axes().end());
  std::set<std::vector<EdgeId>> seen;
  std::deque<std::pair<std::vector<EdgeId>, int>> queue;
  queue.emplace_back(std::vector<EdgeId>(a.cell_axes().begin(), a.cell_axes().end()), 0);
  seen.insert(queue.front().first);
  while (!queue.empty()) {
    auto [axes, dist] = std::move(queue.front());
    queue.pop_front();
    if (axes == target) return dist;
    for (VertexId v : d.interior()) {
      for (FlipDirection dir : {FlipDirection::Up, FlipDirection::Down}) {
        std::vector<EdgeId> next = axes;
        if (flip_in_place(d, next, v, dir) && seen.insert(next).second) queue.emplace_back(std::move(next), dist + 1);
      }
    }
  }
  throw Error(ErrorCode::DomainMismatch, "tilings are not connected by flips");
}

std::vector<std::vector<int>> flip_distances(const Enumeration& all) {
  std::vector<std::vector<int>> out;
  if (all.tilings.empty()) return out;
  const Domain& d = all.tilings.front().domain();
  std::map<std::vector<EdgeId>, std::size_t> index;
  for (std::size_t i = 0; i < all.tilings.size(); ++i) {
    index.emplace(std::vector<EdgeId>(all.tilings[i].cell_axes().begin(), all.tilings[i].cell_axes().end()), i);
  }
  for (const Tiling& t : all.tilings) {
    out.push_back(bfs_from(d, {t.cell_axes().begin(), t.cell_axes().end()}, index));
  }
  return out;
}

}  // namespace tileforge::oracle
