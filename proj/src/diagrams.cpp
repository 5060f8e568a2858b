#include "szeta/diagrams.hpp"

#include <algorithm>
#include <numeric>

#include "szeta/error.hpp"

namespace szeta {

std::string CycleDiagram::to_string() const {
  std::string s;
  for (int v : cycle) s += std::to_string(v) + "-";
  s += std::to_string(cycle.front());
  return s;
}

std::vector<int> canonical_cycle(std::span<const int> cycle) {
  const std::size_t n = cycle.size();
  std::vector<int> best(cycle.begin(), cycle.end());
  std::vector<int> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = dir == 0 ? (start + k) % n : (start + n - k) % n;
        cand[k] = cycle[idx];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::vector<std::pair<int, int>> cycle_edges(std::span<const int> cycle) {
  const std::size_t n = cycle.size();
  std::vector<std::pair<int, int>> e;
  e.reserve(n);
  if (n == 1) {
    e.emplace_back(cycle[0], cycle[0]);
    return e;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const int u = cycle[k], v = cycle[(k + 1) % n];
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<CycleDiagram> enumerate_diagrams(int n) {
  if (n < 1) throw ParameterError("enumerate_diagrams: n must be >= 1");
  std::vector<CycleDiagram> out;
  if (n <= 2) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 1);
    out.push_back({n, c, cycle_edges(c)});
    return out;
  }
  // point 1 fixed first; a reflection reverses the tail, so keep tail[0] < tail[last]
  std::vector<int> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 2);
  std::vector<int> c(n);
  c[0] = 1;
  do {
    if (tail.front() > tail.back()) continue;
    std::copy(tail.begin(), tail.end(), c.begin() + 1);
    out.push_back({n, c, cycle_edges(c)});
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::int64_t prefactor(int n) {
  if (n < 1) throw ParameterError("prefactor: n must be >= 1");
  if (n <= 2) return n;
  return 2 * static_cast<std::int64_t>(n);
}

}  // namespace szeta
