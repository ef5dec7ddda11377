#pragma once
// Independent reference computations used to cross-check library results.

#include <set>
#include <vector>

#include "qtilt/quiver.hpp"

namespace oracle {

// Positive roots of the underlying graph: vectors reachable from the simple
// roots by adding simple roots while the Tits form stays at 1.
inline std::set<std::vector<int>> positive_roots(const qtilt::Quiver& q) {
  int n = static_cast<int>(q.n());
  auto form = [&](const std::vector<int>& x) {
    long s = 0;
    for (int v = 0; v < n; ++v) s += static_cast<long>(x[v]) * x[v];
    for (const auto& a : q.arrows) s -= static_cast<long>(x[a.src]) * x[a.tgt];
    return s;
  };
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int v = 0; v < n; ++v) {
    std::vector<int> e(n, 0);
    e[v] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (int v = 0; v < n; ++v) {
      auto y = x;
      ++y[v];
      if (form(y) == 1 && roots.insert(y).second) frontier.push_back(y);
    }
  }
  return roots;
}

// Catalan numbers count tilting modules of linearly oriented A_n.
inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace oracle
