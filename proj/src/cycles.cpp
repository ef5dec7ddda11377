#include "qtilt/cycles.hpp"

#include <algorithm>
#include <functional>

namespace qtilt {

namespace {

std::vector<std::vector<int>> multiplicities(const Quiver& q) {
  std::vector<std::vector<int>> m(q.n(), std::vector<int>(q.n(), 0));
  for (const auto& a : q.arrows) {
    ++m[a.src][a.tgt];
    ++m[a.tgt][a.src];
  }
  return m;
}

int arrow_between(const Quiver& q, int u, int v) {
  for (std::size_t a = 0; a < q.m(); ++a)
    if ((q.arrows[a].src == u && q.arrows[a].tgt == v) || (q.arrows[a].src == v && q.arrows[a].tgt == u))
      return static_cast<int>(a);
  return -1;
}

ChordlessCycle make_cycle(const Quiver& q, const std::vector<int>& vs) {
  ChordlessCycle c;
  c.vertices = vs;
  std::size_t k = vs.size();
  int forward = 0, backward = 0;
  for (std::size_t i = 0; i < k; ++i) {
    int u = vs[i], v = vs[(i + 1) % k];
    int a = arrow_between(q, u, v);
    c.arrows.push_back(a);
    if (q.arrows[a].src == u) ++forward; else ++backward;
  }
  c.oriented = forward == static_cast<int>(k) || backward == static_cast<int>(k);
  return c;
}

}  // namespace

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q) {
  auto mult = multiplicities(q);
  int n = static_cast<int>(q.n());
  std::vector<ChordlessCycle> out;
  // pairs joined by exactly two arrows
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (mult[u][v] != 2) continue;
      ChordlessCycle c;
      c.vertices = {u, v};
      for (std::size_t a = 0; a < q.m(); ++a) {
        const auto& ar = q.arrows[a];
        if ((ar.src == u && ar.tgt == v) || (ar.src == v && ar.tgt == u)) c.arrows.push_back(static_cast<int>(a));
      }
      c.oriented = q.arrows[c.arrows[0]].src != q.arrows[c.arrows[1]].src;
      out.push_back(c);
    }
  std::vector<int> path;
  std::vector<bool> on(n, false);
  std::function<void()> extend = [&]() {
    int s = path.front(), last = path.back();
    for (int w = s + 1; w < n; ++w) {
      if (on[w] || mult[last][w] != 1) continue;
      bool chord = false;
      for (std::size_t j = 1; j + 1 < path.size() && !chord; ++j) chord = mult[w][path[j]] != 0;
      if (chord) continue;
      if (path.size() >= 2 && mult[w][s] > 1) continue;
      if (path.size() >= 2 && mult[w][s] == 1) {
        if (path[1] < w) {
          auto vs = path;
          vs.push_back(w);
          out.push_back(make_cycle(q, vs));
        }
        continue;
      }
      path.push_back(w);
      on[w] = true;
      extend();
      on[w] = false;
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    extend();
    on[s] = false;
  }
  return out;
}

std::vector<ChordlessCycle> oriented_chordless_cycles(const Quiver& q) {
  std::vector<ChordlessCycle> out;
  for (auto& c : chordless_cycles(q))
    if (c.oriented) out.push_back(std::move(c));
  return out;
}

bool is_admissible_cut(const Quiver& q, const std::vector<int>& cut) {
  auto cycles = oriented_chordless_cycles(q);
  for (int a : cut) {
    bool on_cycle = false;
    for (const auto& c : cycles)
      if (std::find(c.arrows.begin(), c.arrows.end(), a) != c.arrows.end()) on_cycle = true;
    if (!on_cycle) return false;
  }
  for (const auto& c : cycles) {
    int hits = 0;
    for (int a : c.arrows)
      if (std::find(cut.begin(), cut.end(), a) != cut.end()) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<ChordlessCycle> overcut_cycles(const Quiver& q, const std::vector<int>& cut) {
  std::vector<ChordlessCycle> out;
  for (auto& c : oriented_chordless_cycles(q)) {
    int hits = 0;
    for (int a : c.arrows)
      if (std::find(cut.begin(), cut.end(), a) != cut.end()) ++hits;
    if (hits > 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> enumerate_admissible_cuts(const Quiver& q) {
  auto cycles = oriented_chordless_cycles(q);
  std::size_t m = q.m();
  std::vector<std::vector<int>> on(m);  // arrow -> cycles through it
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int a : cycles[c].arrows) on[a].push_back(static_cast<int>(c));
  std::vector<int> count(cycles.size(), 0);
  std::vector<bool> chosen(m, false), forbidden(m, false);
  std::vector<std::vector<int>> cuts;
  std::function<void()> rec = [&]() {
    std::size_t open = cycles.size();
    for (std::size_t c = 0; c < cycles.size(); ++c)
      if (count[c] == 0) {
        open = c;
        break;
      }
    if (open == cycles.size()) {
      std::vector<int> cut;
      for (std::size_t a = 0; a < m; ++a)
        if (chosen[a]) cut.push_back(static_cast<int>(a));
      cuts.push_back(cut);
      return;
    }
    std::vector<int> newly_forbidden;
    for (int a : cycles[open].arrows) {
      if (forbidden[a]) continue;
      bool ok = true;
      for (int c : on[a])
        if (count[c] >= 1) ok = false;
      if (ok) {
        chosen[a] = true;
        for (int c : on[a]) ++count[c];
        rec();
        for (int c : on[a]) --count[c];
        chosen[a] = false;
      }
      forbidden[a] = true;
      newly_forbidden.push_back(a);
    }
    for (int a : newly_forbidden) forbidden[a] = false;
  };
  rec();
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

namespace {

// Simple paths from s to t, optionally requiring the full subquiver on the
// path's vertices to contain nothing but the path and `extra`.
std::vector<Path> simple_paths(const Quiver& q, int s, int t, int extra, bool full_check) {
  std::vector<Path> out;
  auto outs = q.out_arrows();
  std::vector<bool> on(q.n(), false);
  Path cur = Path::trivial_at(s);
  on[s] = true;
  auto arrows_inside = [&]() {
    int c = 0;
    for (const auto& a : q.arrows)
      if (on[a.src] && on[a.tgt]) ++c;
    return c;
  };
  std::function<void()> rec = [&]() {
    if (cur.tgt == t && !cur.trivial()) {
      if (!(cur.length() == 1 && cur.arrows[0] == extra)) {
        int expect = static_cast<int>(cur.length()) + ((on[q.arrows[extra].src] && on[q.arrows[extra].tgt]) ? 1 : 0);
        if (!full_check || arrows_inside() == expect) out.push_back(cur);
      }
      return;
    }
    for (int a : outs[cur.tgt]) {
      int w = q.arrows[a].tgt;
      if (on[w]) continue;
      Path saved = cur;
      cur = cur.then(q, a);
      on[w] = true;
      bool prune = false;
      if (full_check && w != t) {
        int expect = static_cast<int>(cur.length()) + ((on[q.arrows[extra].src] && on[q.arrows[extra].tgt]) ? 1 : 0);
        prune = arrows_inside() != expect;
      }
      if (!prune) rec();
      on[w] = false;
      cur = saved;
    }
  };
  rec();
  return out;
}

}  // namespace

std::vector<Path> parallel_paths(const Quiver& q, int arrow) {
  return simple_paths(q, q.arrows[arrow].src, q.arrows[arrow].tgt, arrow, false);
}

std::vector<Path> antiparallel_paths(const Quiver& q, int arrow) {
  return simple_paths(q, q.arrows[arrow].tgt, q.arrows[arrow].src, arrow, false);
}

std::vector<Path> shortest_parallel_paths(const Quiver& q, int arrow) {
  return simple_paths(q, q.arrows[arrow].src, q.arrows[arrow].tgt, arrow, true);
}

std::vector<Path> shortest_antiparallel_paths(const Quiver& q, int arrow) {
  return simple_paths(q, q.arrows[arrow].tgt, q.arrows[arrow].src, arrow, true);
}

}  // namespace qtilt
