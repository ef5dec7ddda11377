#include "qtilt/dynkin.hpp"

#include <algorithm>

namespace qtilt {

Quiver dynkin_quiver(char family, int n) {
  Quiver q;
  q.name = std::string(1, family) + std::to_string(n);
  auto chain = [&](int len) {
    for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
    for (int i = 1; i < len; ++i) q.add_arrow("a" + std::to_string(i), i - 1, i);
  };
  switch (family) {
    case 'A':
      if (n < 1) throw NotDynkin("A_n needs n >= 1");
      chain(n);
      break;
    case 'D':
      if (n < 4) throw NotDynkin("D_n needs n >= 4");
      chain(n - 2);
      q.add_arrow("a" + std::to_string(n - 2), n - 3, n - 2);
      q.add_arrow("a" + std::to_string(n - 1), n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw NotDynkin("E_n needs 6 <= n <= 8");
      chain(n - 1);
      q.add_arrow("a" + std::to_string(n - 1), 2, n - 1);
      break;
    default:
      throw NotDynkin(std::string("unknown family ") + family);
  }
  return q;
}

Quiver dynkin_quiver(const std::string& name) {
  if (name.size() < 2) throw NotDynkin("bad Dynkin name " + name);
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (...) {
    throw NotDynkin("bad Dynkin name " + name);
  }
  return dynkin_quiver(name[0], n);
}

DynkinType dynkin_type(const Quiver& q) {
  int n = static_cast<int>(q.n());
  if (n == 0 || static_cast<int>(q.m()) != n - 1 || !q.is_connected()) throw NotDynkin("not a tree");
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : q.arrows) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) throw NotDynkin("vertex of degree > 3");
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return DynkinType{'A', n};
  if (branch.size() > 1) throw NotDynkin("more than one branch point");
  int c = branch[0];
  std::vector<int> arms;
  for (int start : adj[c]) {
    int len = 1, prev = c, cur = start;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinType{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinType{'E', n};
  throw NotDynkin("arms do not form a Dynkin diagram");
}

}  // namespace qtilt
