#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace szeta {

/// One inequivalent term of the x-ordered n-point Green's function: a closed
/// cycle through points 1..n, stored by its canonical vertex sequence.
///
/// n = 1 is the self-loop (1,1) and n = 2 the doubled edge (1,2),(1,2).
struct CycleDiagram {
  int n = 0;
  std::vector<int> cycle;                   // 1-based, canonical, without the closing vertex
  std::vector<std::pair<int, int>> edges;   // (i, j) with i <= j, sorted

  /// "1-2-4-3-1"
  std::string to_string() const;
};

/// Lexicographically smallest sequence among all rotations and reflections.
std::vector<int> canonical_cycle(std::span<const int> cycle);

/// Edge multiset of a vertex cycle.
std::vector<std::pair<int, int>> cycle_edges(std::span<const int> cycle);

/// max(1, (n-1)!/2) diagrams in canonical form, sorted. ParameterError for n < 1.
std::vector<CycleDiagram> enumerate_diagrams(int n);

/// 1 for n = 1, 2 for n = 2, 2n otherwise.
std::int64_t prefactor(int n);

}  // namespace szeta
