#include "qtilt/derived.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace qtilt {

DerivedCategory::DerivedCategory(const Quiver& q) : table_(knit_indecomposables(q)) {
  int n = this->n();
  nbr_.assign(n, {});
  for (const auto& a : q.arrows) {
    nbr_[a.src].push_back(a.tgt);
    nbr_[a.tgt].push_back(a.src);
  }
  dist_.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> bfs;
    bfs.push(s);
    dist_[s][s] = 0;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : nbr_[u])
        if (dist_[s][w] < 0) {
          dist_[s][w] = dist_[s][u] + 1;
          bfs.push(w);
        }
    }
  }
  // c_s = c_t + 1 along every arrow s -> t.
  c_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows) {
      int w = -1, cw = 0;
      if (a.src == u && !seen[a.tgt]) w = a.tgt, cw = c_[u] - 1;
      if (a.tgt == u && !seen[a.src]) w = a.src, cw = c_[u] + 1;
      if (w < 0) continue;
      c_[w] = cw;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  int lo = *std::min_element(c_.begin(), c_.end());
  for (int& x : c_) x -= lo;
  for (int i = 0; i < n; ++i) {
    sigma_.push_back(table_.nu[i].first);
    t_.push_back(table_.nu[i].second);
  }
  coxeter_ = 2 * static_cast<int>(table_.size()) / n;
}

ZVertex DerivedCategory::shift(const ZVertex& x, int k) const {
  ZVertex y = x;
  for (; k > 0; --k) y = ZVertex{sigma_[y.orbit], y.level + 1 + t_[y.orbit]};
  for (; k < 0; ++k) {
    int i = static_cast<int>(std::find(sigma_.begin(), sigma_.end(), y.orbit) - sigma_.begin());
    y = ZVertex{i, y.level - 1 - t_[i]};
  }
  return y;
}

ZVertex DerivedCategory::F(const ZVertex& x, int k) const {
  ZVertex y = x;
  for (; k > 0; --k) y = tau_inv(shift(y, 1));
  for (; k < 0; ++k) y = shift(tau(y), -1);
  return y;
}

ZVertex DerivedCategory::coordinate(const DObject& x) const {
  const auto& it = table_.items.at(x.indec);
  return shift(ZVertex{it.orbit, it.level}, x.shift);
}

DObject DerivedCategory::object(const ZVertex& x) const {
  ZVertex y = x;
  int k = 0;
  while (y.level < 0) y = shift(y, 1), --k;
  while (y.level >= table_.orbit_length[y.orbit]) y = shift(y, -1), ++k;
  return DObject{table_.find(y.orbit, y.level), k};
}

std::string DerivedCategory::label(const ZVertex& x) const {
  DObject o = object(x);
  const auto& it = table_.items[o.indec];
  std::string s;
  if (it.level) s += "tau^-" + std::to_string(it.level) + " ";
  s += "P" + table_.q.vertices[it.orbit];
  if (o.shift) s += " [" + std::to_string(o.shift) + "]";
  return s;
}

std::vector<ZVertex> DerivedCategory::successors(const ZVertex& x) const {
  std::vector<ZVertex> out;
  for (const auto& a : table_.q.arrows) {
    if (a.src == x.orbit) out.push_back({a.tgt, x.level + 1});
    if (a.tgt == x.orbit) out.push_back({a.src, x.level});
  }
  return out;
}

std::vector<ZVertex> DerivedCategory::predecessors(const ZVertex& x) const {
  std::vector<ZVertex> out;
  for (const auto& a : table_.q.arrows) {
    if (a.src == x.orbit) out.push_back({a.tgt, x.level});
    if (a.tgt == x.orbit) out.push_back({a.src, x.level - 1});
  }
  return out;
}

bool DerivedCategory::leq(const ZVertex& x, const ZVertex& y) const {
  return height(y) - height(x) >= dist_[x.orbit][y.orbit];
}

int DerivedCategory::distance(const ZVertex& x, const ZVertex& y) const {
  return leq(x, y) ? height(y) - height(x) : 0;
}

const DerivedCategory::Functor& DerivedCategory::functor(int orbit) const {
  auto it = functors_.find(orbit);
  if (it != functors_.end()) return it->second;
  Functor fn;
  ZVertex src{orbit, 0};
  Node& s = fn[src];
  s.dim = 1;
  s.paths.push_back({src});
  int h0 = height(src);
  for (int d = 1; d <= 2 * coxeter_ + 2; ++d) {
    for (int j = 0; j < n(); ++j) {
      int hj = h0 + d - c_[j];
      if (hj % 2) continue;
      ZVertex z{j, hj / 2};
      auto preds = predecessors(z);
      std::vector<int> off;
      int total = 0;
      for (const auto& w : preds) {
        off.push_back(total);
        auto f = fn.find(w);
        total += f == fn.end() ? 0 : f->second.dim;
      }
      if (total == 0) continue;
      Echelon img(total);
      auto tz = fn.find(tau(z));
      if (tz != fn.end())
        for (int u = 0; u < tz->second.dim; ++u) {
          Vec v(total);
          for (std::size_t k = 0; k < preds.size(); ++k) {
            auto f = fn.find(preds[k]);
            if (f == fn.end() || f->second.dim == 0) continue;
            const RatMatrix& m = f->second.in.at(tau(z));
            for (int r = 0; r < f->second.dim; ++r) v[off[k] + r] = m(r, u);
          }
          img.insert(v);
        }
      auto free = img.non_pivots();
      if (free.empty()) continue;
      Node node;
      node.dim = static_cast<int>(free.size());
      for (std::size_t k = 0; k < preds.size(); ++k) {
        auto f = fn.find(preds[k]);
        int dw = f == fn.end() ? 0 : f->second.dim;
        RatMatrix m(node.dim, dw);
        for (int e = 0; e < dw; ++e) {
          Vec r = img.reduce(unit(total, off[k] + e));
          for (int b = 0; b < node.dim; ++b) m(b, e) = r[free[b]];
        }
        node.in[preds[k]] = m;
      }
      for (auto idx : free) {
        std::size_t k = 0;
        while (k + 1 < preds.size() && off[k + 1] <= static_cast<int>(idx)) ++k;
        auto path = fn.at(preds[k]).paths[idx - off[k]];
        path.push_back(z);
        node.paths.push_back(std::move(path));
      }
      fn[z] = std::move(node);
    }
  }
  return functors_[orbit] = std::move(fn);
}

const DerivedCategory::Node* DerivedCategory::node(const ZVertex& x, const ZVertex& y) const {
  const Functor& fn = functor(x.orbit);
  auto it = fn.find(ZVertex{y.orbit, y.level - x.level});
  return it == fn.end() ? nullptr : &it->second;
}

int DerivedCategory::hom_dim(const ZVertex& x, const ZVertex& y) const {
  const Node* nd = node(x, y);
  return nd ? nd->dim : 0;
}

std::vector<ZVertex> DerivedCategory::basis_path(const ZVertex& x, const ZVertex& y, int b) const {
  std::vector<ZVertex> p = node(x, y)->paths.at(b);
  for (auto& v : p) v.level += x.level;
  return p;
}

Vec DerivedCategory::eval_path(const ZVertex& x, const std::vector<ZVertex>& path, Vec v) const {
  const Node* last = node(x, path.back());
  if (!last) return {};
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Node* nd = node(x, path[k]);
    if (!nd || !node(x, path[k - 1])) return Vec(last->dim);
    v = nd->in.at(ZVertex{path[k - 1].orbit, path[k - 1].level - x.level}) * v;
  }
  return v;
}

Vec DerivedCategory::compose(const ZVertex& x, const ZVertex& y, const ZVertex& z, const Vec& f,
                             const Vec& g) const {
  Vec out(hom_dim(x, z));
  if (out.empty()) return out;
  for (std::size_t b = 0; b < g.size(); ++b) {
    if (sgn(g[b]) == 0) continue;
    Vec v = eval_path(x, basis_path(y, z, static_cast<int>(b)), f);
    if (!v.empty()) axpy(out, g[b], v);
  }
  return out;
}

Vec DerivedCategory::apply_F(const ZVertex& x, const ZVertex& y, const Vec& f, int k) const {
  ZVertex fx = F(x, k), fy = F(y, k);
  Vec out(hom_dim(fx, fy));
  for (std::size_t b = 0; b < f.size(); ++b) {
    if (sgn(f[b]) == 0) continue;
    auto p = basis_path(x, y, static_cast<int>(b));
    for (auto& v : p) v = F(v, k);
    Vec e = eval_path(fx, p, Vec{1});
    if (!e.empty()) axpy(out, f[b], e);
  }
  return out;
}

TiltingVerdict DerivedCategory::is_tilting_complex(const std::vector<ZVertex>& t) const {
  TiltingVerdict v;
  if (static_cast<int>(t.size()) != n()) {
    v.reason = "expected " + std::to_string(n()) + " summands, got " + std::to_string(t.size());
    return v;
  }
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a] == t[b]) {
        v.reason = "repeated summand " + label(t[a]);
        return v;
      }
  int lo = height(t[0]), hi = lo;
  for (const auto& x : t) lo = std::min(lo, height(x)), hi = std::max(hi, height(x));
  int span = (hi - lo) / coxeter_ + 2;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      for (int k = -span; k <= span; ++k) {
        if (k == 0) continue;
        int d = hom_dim(t[a], shift(t[b], k));
        if (d) v.witnesses.push_back({static_cast<int>(a), static_cast<int>(b), k, d});
      }
  v.tilting = v.witnesses.empty();
  if (!v.tilting) v.reason = "nonvanishing Hom(T, T[i]) for some i != 0";
  return v;
}

bool DerivedCategory::compatible(const ZVertex& x, const ZVertex& y) const {
  int span = std::abs(height(x) - height(y)) / coxeter_ + 2;
  for (int k = -span; k <= span; ++k) {
    if (k == 0) continue;
    if (hom_dim(x, shift(y, k)) || hom_dim(y, shift(x, k))) return false;
  }
  return true;
}

std::vector<std::vector<ZVertex>> DerivedCategory::enumerate_tilting_complexes(int lo, int hi) const {
  std::vector<ZVertex> objs;
  std::vector<int> shifts;
  for (int k = lo; k <= hi; ++k)
    for (std::size_t m = 0; m < table_.size(); ++m) {
      objs.push_back(coordinate(DObject{static_cast<int>(m), k}));
      shifts.push_back(k);
    }
  std::size_t m = objs.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) ok[a][b] = ok[b][a] = compatible(objs[a], objs[b]);
  std::vector<std::vector<ZVertex>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == n()) {
      bool has_lo = false;
      std::vector<ZVertex> t;
      for (int i : cur) {
        has_lo = has_lo || shifts[i] == lo;
        t.push_back(objs[i]);
      }
      if (has_lo) out.push_back(t);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      bool good = true;
      for (int j : cur)
        if (!ok[i][j]) {
          good = false;
          break;
        }
      if (!good) continue;
      cur.push_back(static_cast<int>(i));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool DerivedCategory::is_section(const Section& s) const {
  if (static_cast<int>(s.level.size()) != n()) return false;
  for (const auto& a : table_.q.arrows)
    if (std::abs(height(s.at(a.src)) - height(s.at(a.tgt))) != 1) return false;
  return true;
}

namespace {

// T <= Sigma: every summand lies at or before the section on its own orbit,
// equivalently below some member of the section.
bool below_all(const std::vector<ZVertex>& t, const Section& s) {
  for (const auto& x : t)
    if (x.level > s.level[x.orbit]) return false;
  return true;
}

}  // namespace

Section DerivedCategory::section_of(const std::vector<ZVertex>& t) const {
  int top = 0;
  for (const auto& x : t) top = std::max(top, height(x));
  int base = (top + n() + 2) / 2 + 1;
  Section s;
  s.level.assign(n(), base);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n() && !changed; ++j) {
      ZVertex x = s.at(j);
      bool maximal = true;
      for (int w : nbr_[j])
        if (height(s.at(w)) > height(x)) maximal = false;
      if (!maximal || std::find(t.begin(), t.end(), x) != t.end()) continue;
      Section lowered = s;
      --lowered.level[j];
      if (!below_all(t, lowered)) continue;
      s = lowered;
      changed = true;
    }
  }
  return s;
}

std::vector<ZVertex> DerivedCategory::projective_slice(const Section& s) const {
  std::vector<ZVertex> p(n());
  for (int j = 0; j < n(); ++j) {
    ZVertex y = tau_inv(shift(s.at(j), -1));
    p[y.orbit] = y;
  }
  return p;
}

bool DerivedCategory::in_module_region(const ZVertex& x, const Section& s) const {
  ZVertex p = projective_slice(s)[x.orbit];
  return p.level <= x.level && x.level <= s.level[x.orbit];
}

std::vector<Section> DerivedCategory::sections_between(int lo, int hi) const {
  std::vector<Section> out;
  // orbits in BFS order from 0 with their tree parent
  std::vector<int> order{0}, parent(n(), -1);
  std::vector<bool> seen(n(), false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : nbr_[order[k]])
      if (!seen[w]) seen[w] = true, parent[w] = order[k], order.push_back(w);
  std::vector<int> h(n());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      Section s;
      for (int i = 0; i < n(); ++i) s.level.push_back((h[i] - c_[i]) / 2);
      out.push_back(s);
      return;
    }
    int v = order[k];
    for (int dh : {-1, 1}) {
      h[v] = h[parent[v]] + dh;
      if (h[v] < lo || h[v] > hi) continue;
      self(self, k + 1);
    }
  };
  for (int h0 = lo; h0 <= hi; ++h0) {
    if (((h0 - c_[0]) % 2 + 2) % 2) continue;
    h[0] = h0;
    rec(rec, 1);
  }
  return out;
}

DComplex parse_complex(const std::string& text) {
  DComplex c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!header) {
      std::string over;
      if (word != "complex" || !(ls >> over) || over != "over" || !(ls >> c.quiver_name))
        throw ParseError(lineno, 1, "expected 'complex over <quiver-name>'");
      header = true;
      continue;
    }
    if (word != "summand") throw ParseError(lineno, 1, "expected 'summand'");
    std::string p, kw1, kw2;
    int t = 0, k = 0;
    if (!(ls >> p) || p.size() < 2 || p[0] != 'P')
      throw ParseError(lineno, static_cast<int>(line.find("summand")) + 9, "expected P<i>");
    if (!(ls >> kw1 >> t) || kw1 != "tau") throw ParseError(lineno, 1, "expected 'tau <t>'");
    if (!(ls >> kw2 >> k) || kw2 != "shift") throw ParseError(lineno, 1, "expected 'shift <k>'");
    int i = 0;
    try {
      i = std::stoi(p.substr(1));
    } catch (...) {
      throw ParseError(lineno, 1, "bad projective index " + p);
    }
    c.summands.push_back(ComplexSummand{i - 1, t, k});
  }
  if (!header) throw ParseError(lineno + 1, 1, "missing 'complex over' header");
  return c;
}

DComplex load_complex(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_complex(ss.str());
}

std::string format_complex(const DComplex& c) {
  std::ostringstream out;
  out << "complex over " << c.quiver_name << "\n";
  for (const auto& s : c.summands)
    out << "summand P" << s.vertex + 1 << " tau " << s.tau << " shift " << s.shift << "\n";
  return out.str();
}

bool same_summands(std::vector<ZVertex> a, std::vector<ZVertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<ZVertex> DerivedCategory::coordinates(const DComplex& c) const {
  std::vector<ZVertex> out;
  for (const auto& s : c.summands) {
    if (s.vertex < 0 || s.vertex >= n()) throw std::out_of_range("projective index out of range");
    out.push_back(shift(ZVertex{s.vertex, s.tau}, s.shift));
  }
  return out;
}

DComplex DerivedCategory::to_complex(const std::vector<ZVertex>& t) const {
  DComplex c;
  c.quiver_name = table_.q.name;
  for (const auto& x : t) {
    DObject o = object(x);
    const auto& it = table_.items[o.indec];
    c.summands.push_back(ComplexSummand{it.orbit, it.level, o.shift});
  }
  return c;
}

}  // namespace qtilt
