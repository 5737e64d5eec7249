#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileforge/coding.hpp"
#include "tileforge/tiling.hpp"

// Brute-force and closed-form references. Nothing here goes through the
// extremal-tiling construction or the successor machinery: tilings come from
// a backtracking search plus flip closure, minima from pointwise comparison,
// and counts from transfer matrices and product formulas.
namespace tileforge::oracle {

__extension__ typedef unsigned __int128 Count;

std::string to_string(Count value);

struct Enumeration {
  std::vector<Word> words;       // sorted
  std::vector<Tiling> tilings;   // tilings[i] encodes to words[i]
};

// Closure under up and down flips of one tiling found by exhaustive search.
// Throws Error(Untileable).
Enumeration enumerate_bfs(const Numbering& numbering);
Enumeration enumerate_bfs(const Domain& domain);

// Tilings of the m x n rectangle by a profile dynamic program (min(m,n) <= 12).
// Throws Error(Overflow), Error(InvalidSize).
Count count_rect(int m, int n);
// Lozenge tilings of the a,b,c hexagon: prod (i+j+k-1)/(i+j+k-2).
Count count_hexagon(int a, int b, int c);

// Next word in sorted order. Throws Error(UnknownWord).
std::optional<Word> lex_successor(const Enumeration& all, const Word& word);

// Shortest path in the undirected flip graph. Throws Error(DomainMismatch).
int flip_distance(const Tiling& a, const Tiling& b);
// distances[i][j] between all enumerated tilings.
std::vector<std::vector<int>> flip_distances(const Enumeration& all);

}  // namespace tileforge::oracle
