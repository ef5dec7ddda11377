#include "qtilt/algebra.hpp"

#include <map>
#include <random>

namespace qtilt {

ConcreteAlgebra::ConcreteAlgebra(std::vector<std::string> vertex_names, std::vector<BasisLabel> basis,
                                 std::vector<int> idempotents, bool graded)
    : vertex_names_(std::move(vertex_names)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      graded_(graded) {
  std::size_t nv = vertex_names_.size();
  if (idempotents_.size() != nv) throw std::invalid_argument("one idempotent per vertex is required");
  blocks_.assign(nv * nv, {});
  block_pos_.assign(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& b = basis_[i];
    if (b.src < 0 || b.tgt < 0 || b.src >= static_cast<int>(nv) || b.tgt >= static_cast<int>(nv))
      throw std::invalid_argument("basis label out of range");
    auto& bl = blocks_[b.src * nv + b.tgt];
    block_pos_[i] = static_cast<int>(bl.size());
    bl.push_back(static_cast<int>(i));
  }
  products_.assign(basis_.size() * basis_.size(), {});
  for (std::size_t v = 0; v < nv; ++v) {
    int e = idempotents_[v];
    if (basis_[e].src != static_cast<int>(v) || basis_[e].tgt != static_cast<int>(v))
      throw std::invalid_argument("idempotent label mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].tgt == static_cast<int>(v)) products_[e * basis_.size() + i] = {{static_cast<int>(i), Rat(1)}};
      if (basis_[i].src == static_cast<int>(v)) products_[i * basis_.size() + e] = {{static_cast<int>(i), Rat(1)}};
    }
  }
}

void ConcreteAlgebra::set_product(int j, int i, SparseVec v) {
  if (basis_[i].tgt != basis_[j].src) {
    if (!v.empty()) throw std::invalid_argument("product of non-composable basis elements");
    return;
  }
  SparseVec clean;
  for (auto& [k, c] : v) {
    if (sgn(c) == 0) continue;
    if (basis_[k].src != basis_[i].src || basis_[k].tgt != basis_[j].tgt)
      throw std::invalid_argument("product lands in the wrong block");
    clean.emplace_back(k, c);
  }
  products_[static_cast<std::size_t>(j) * dim() + i] = std::move(clean);
}

Vec ConcreteAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(y[i]) == 0) continue;
      Rat c = x[j] * y[i];
      for (const auto& [k, v] : product(static_cast<int>(j), static_cast<int>(i))) out[k] += c * v;
    }
  }
  return out;
}

Vec ConcreteAlgebra::mul_block(const Vec& x, int s, int t, const Vec& y, int r) const {
  const auto& bx = block(s, t);
  const auto& by = block(r, s);
  Vec out(block(r, t).size());
  for (std::size_t a = 0; a < bx.size(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < by.size(); ++b) {
      if (sgn(y[b]) == 0) continue;
      Rat c = x[a] * y[b];
      for (const auto& [k, v] : product(bx[a], by[b])) out[block_pos_[k]] += c * v;
    }
  }
  return out;
}

Vec ConcreteAlgebra::embed(int s, int t, const Vec& bc) const {
  Vec out(dim());
  const auto& bl = block(s, t);
  for (std::size_t a = 0; a < bl.size(); ++a) out[bl[a]] = bc[a];
  return out;
}

void ConcreteAlgebra::verify(std::size_t samples, unsigned seed) const {
  std::size_t d = dim();
  for (std::size_t v = 0; v < n(); ++v)
    for (std::size_t w = 0; w < n(); ++w) {
      const auto& p = product(idempotents_[v], idempotents_[w]);
      bool ok = v == w ? (p.size() == 1 && p[0].first == idempotents_[v] && p[0].second == 1) : p.empty();
      if (!ok) throw std::logic_error("idempotents are not orthogonal");
    }
  if (graded_)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        for (const auto& [k, c] : product(static_cast<int>(j), static_cast<int>(i)))
          if (basis_[k].deg != basis_[j].deg + basis_[i].deg) throw std::logic_error("grading is not additive");
  auto check = [&](int c, int b, int a) {
    if (basis_[a].tgt != basis_[b].src || basis_[b].tgt != basis_[c].src) return;
    std::map<int, Rat> left, right;
    for (const auto& [k, v] : product(b, a))
      for (const auto& [k2, v2] : product(c, k)) left[k2] += v * v2;
    for (const auto& [k, v] : product(c, b))
      for (const auto& [k2, v2] : product(k, a)) right[k2] += v * v2;
    for (const auto& [k, v] : left)
      if (right[k] != v) throw std::logic_error("multiplication is not associative");
    for (const auto& [k, v] : right)
      if (left[k] != v) throw std::logic_error("multiplication is not associative");
  };
  if (samples == 0) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (basis_[a].tgt != basis_[b].src) continue;
        for (std::size_t c = 0; c < d; ++c) check(static_cast<int>(c), static_cast<int>(b), static_cast<int>(a));
      }
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      // pick composable triples by walking blocks
      int a = static_cast<int>(pick(rng));
      std::vector<int> bs;
      for (std::size_t b = 0; b < d; ++b)
        if (basis_[b].src == basis_[a].tgt) bs.push_back(static_cast<int>(b));
      int b = bs[pick(rng) % bs.size()];
      std::vector<int> cs;
      for (std::size_t c = 0; c < d; ++c)
        if (basis_[c].src == basis_[b].tgt) cs.push_back(static_cast<int>(c));
      int c = cs[pick(rng) % cs.size()];
      check(c, b, a);
    }
  }
}

ConcreteAlgebra from_presentation(const Presentation& p) {
  QuotientBasis qb(p);
  const Quiver& q = qb.presentation().quiver;
  std::size_t n = q.n();
  std::vector<BasisLabel> labels;
  std::vector<int> idem(n, -1);
  std::vector<std::vector<int>> index(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (const auto& path : qb.block_basis(static_cast<int>(s), static_cast<int>(t))) {
        index[s * n + t].push_back(static_cast<int>(labels.size()));
        if (path.trivial()) idem[s] = static_cast<int>(labels.size());
        labels.push_back(BasisLabel{static_cast<int>(s), static_cast<int>(t), static_cast<int>(path.length()),
                                    path_string(q, path)});
      }
  std::vector<Path> paths;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (const auto& path : qb.block_basis(static_cast<int>(s), static_cast<int>(t))) paths.push_back(path);
  ConcreteAlgebra a(q.vertices, labels, idem, true);
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (paths[i].tgt != paths[j].src) continue;
      if (paths[i].trivial() || paths[j].trivial()) continue;
      Path c = concat(paths[i], paths[j]);
      Vec coords = qb.reduce(c);
      SparseVec sv;
      const auto& idx = index[c.src * n + c.tgt];
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (sgn(coords[k]) != 0) sv.emplace_back(idx[k], coords[k]);
      a.set_product(static_cast<int>(j), static_cast<int>(i), sv);
    }
  return a;
}

std::size_t Radical::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.size();
  return d;
}

std::vector<std::vector<Vec>> radical_power(const ConcreteAlgebra& a, const Radical& r, int k) {
  std::size_t n = a.n();
  auto cur = r.blocks;
  for (int p = 1; p < k; ++p) {
    std::vector<Echelon> next;
    for (std::size_t b = 0; b < n * n; ++b) next.emplace_back(a.block(static_cast<int>(b / n), static_cast<int>(b % n)).size());
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (const auto& x : cur[s * n + t])
          for (std::size_t rr = 0; rr < n; ++rr)
            for (const auto& y : r.blocks[rr * n + s])
              next[rr * n + t].insert(a.mul_block(x, static_cast<int>(s), static_cast<int>(t), y, static_cast<int>(rr)));
    for (std::size_t b = 0; b < n * n; ++b) cur[b] = next[b].rows();
  }
  return cur;
}

Radical radical(const ConcreteAlgebra& a) {
  std::size_t n = a.n(), d = a.dim();
  std::vector<Rat> trace(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [k, c] : a.product(static_cast<int>(m), static_cast<int>(i)))
        if (k == static_cast<int>(i)) trace[m] += c;
  Radical r;
  r.blocks.assign(n * n, {});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto& bx = a.block(static_cast<int>(s), static_cast<int>(t));
      const auto& by = a.block(static_cast<int>(t), static_cast<int>(s));
      RatMatrix tf(by.size(), bx.size());
      for (std::size_t yi = 0; yi < by.size(); ++yi)
        for (std::size_t xi = 0; xi < bx.size(); ++xi)
          for (const auto& [k, c] : a.product(bx[xi], by[yi])) tf(yi, xi) += c * trace[k];
      r.blocks[s * n + t] = by.empty() ? std::vector<Vec>{} : kernel_basis(tf);
      if (by.empty())
        for (std::size_t xi = 0; xi < bx.size(); ++xi) r.blocks[s * n + t].push_back(unit(bx.size(), xi));
    }
  r.nilpotency = 1;
  if (r.dim() == 0) return r;
  for (int k = 2; k <= static_cast<int>(d) + 1; ++k) {
    auto pw = radical_power(a, r, k);
    bool zero = true;
    for (const auto& b : pw)
      if (!b.empty()) zero = false;
    if (zero) {
      r.nilpotency = k;
      return r;
    }
  }
  throw std::logic_error("radical is not nilpotent");
}

namespace {

struct BlockArrow {
  int src, tgt;
  Vec lift;  // block coordinates
};

void check_basic(const ConcreteAlgebra& a, const Radical& r) {
  std::size_t n = a.n();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t full = a.block(static_cast<int>(s), static_cast<int>(t)).size();
      std::size_t rad = r.blocks[s * n + t].size();
      if (s == t && full != rad + 1) throw NotBasic("e_v A e_v is not local at vertex " + a.vertex_names()[s]);
      if (s != t && full != rad) throw NotBasic("idempotents are not primitive");
    }
}

std::vector<BlockArrow> arrows_of(const ConcreteAlgebra& a, const Radical& r) {
  std::size_t n = a.n();
  auto rad2 = radical_power(a, r, 2);
  std::vector<BlockArrow> out;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t bd = a.block(static_cast<int>(s), static_cast<int>(t)).size();
      Echelon radE(bd), e(bd);
      for (const auto& x : r.blocks[s * n + t]) radE.insert(x);
      for (const auto& x : rad2[s * n + t]) e.insert(x);
      std::vector<Vec> cands;
      for (std::size_t i = 0; i < bd; ++i) cands.push_back(unit(bd, i));
      for (const auto& x : r.blocks[s * n + t]) cands.push_back(x);
      for (const auto& c : cands) {
        if (!radE.contains(c)) continue;
        if (e.insert(c)) {
          if (s == t) throw NotBasic("loop at vertex " + a.vertex_names()[s]);
          out.push_back(BlockArrow{static_cast<int>(s), static_cast<int>(t), c});
        }
      }
    }
  return out;
}

}  // namespace

Extraction extract_presentation(const ConcreteAlgebra& a, const std::string& name) {
  std::size_t n = a.n();
  Radical r = radical(a);
  check_basic(a, r);
  auto arrows = arrows_of(a, r);
  Extraction ex;
  Quiver& q = ex.presentation.quiver;
  q.name = name;
  q.vertices = a.vertex_names();
  std::map<std::pair<int, int>, int> used;
  for (const auto& ar : arrows) {
    std::string id = "a" + q.vertices[ar.src] + "_" + q.vertices[ar.tgt];
    int k = used[{ar.src, ar.tgt}]++;
    if (k > 0) id += "_" + std::to_string(k);
    q.add_arrow(id, ar.src, ar.tgt);
    ex.arrow_lifts.push_back(a.embed(ar.src, ar.tgt, ar.lift));
  }
  int L = r.nilpotency;
  PathSpace sp(q, L + 1);
  std::vector<Echelon> ideal;
  std::size_t rank_sum = 0;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto& paths = sp.block(static_cast<int>(s), static_cast<int>(t));
      std::size_t bd = a.block(static_cast<int>(s), static_cast<int>(t)).size();
      RatMatrix ev(bd, paths.size());
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const Path& p = paths[c];
        Vec val = unit(a.block(p.src, p.src).size(), a.block_pos(a.idempotent(p.src)));
        for (int ai : p.arrows) {
          const auto& ar = arrows[ai];
          val = a.mul_block(ar.lift, ar.src, ar.tgt, val, p.src);
        }
        for (std::size_t i = 0; i < bd; ++i) ev(i, c) = val[i];
      }
      rank_sum += rank(ev);
      Echelon e(paths.size());
      for (const auto& k : kernel_basis(ev)) e.insert(k);
      ideal.push_back(std::move(e));
    }
  if (rank_sum != a.dim()) throw NotBasic("arrows do not generate the algebra");
  ex.presentation.relations = minimal_generators(q, sp, ideal, {});
  if (L > 2 * static_cast<int>(n)) ex.presentation.truncation = L;
  return ex;
}

namespace {

// A submodule of a direct sum of indecomposable projectives A e_{tops[k]},
// stored vertex by vertex.
struct SubFree {
  std::vector<int> tops;
  std::vector<std::vector<Vec>> comps;
};

struct FreeLayout {
  const ConcreteAlgebra* a;
  std::vector<int> tops;
  std::size_t ambient(int u) const {
    std::size_t d = 0;
    for (int v : tops) d += a->block(v, u).size();
    return d;
  }
  // x in ambient(s), lift in block (s,t) -> ambient(t)
  Vec act(const Vec& lift, int s, int t, const Vec& x) const {
    Vec out;
    std::size_t off = 0;
    for (int v : tops) {
      std::size_t len = a->block(v, s).size();
      Vec seg(x.begin() + off, x.begin() + off + len);
      Vec img = a->mul_block(lift, s, t, seg, v);
      out.insert(out.end(), img.begin(), img.end());
      off += len;
    }
    return out;
  }
};

}  // namespace

std::vector<Resolution> simple_resolutions(const ConcreteAlgebra& a, int cap) {
  std::size_t n = a.n();
  if (cap <= 0) cap = 2 * static_cast<int>(n) + 2;
  Radical r = radical(a);
  check_basic(a, r);
  auto arrows = arrows_of(a, r);
  std::vector<Resolution> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    Resolution& res = out[v];
    res.terms.push_back(std::vector<int>(n, 0));
    res.terms[0][v] = 1;
    FreeLayout lay{&a, {static_cast<int>(v)}};
    std::vector<std::vector<Vec>> comps(n);
    for (std::size_t u = 0; u < n; ++u) comps[u] = r.blocks[v * n + u];
    int k = 1;
    while (true) {
      bool zero = true;
      for (const auto& c : comps)
        if (!c.empty()) zero = false;
      if (zero) {
        res.pd = k - 1;
        break;
      }
      if (k > cap) break;
      std::vector<std::vector<Vec>> rad(n);
      for (const auto& ar : arrows)
        for (const auto& x : comps[ar.src]) rad[ar.tgt].push_back(lay.act(ar.lift, ar.src, ar.tgt, x));
      std::vector<int> gen_vertex;
      std::vector<Vec> gens;
      std::vector<int> term(n, 0);
      for (std::size_t u = 0; u < n; ++u) {
        for (auto& g : quotient_representatives(comps[u], rad[u], lay.ambient(static_cast<int>(u)))) {
          gen_vertex.push_back(static_cast<int>(u));
          gens.push_back(std::move(g));
          ++term[u];
        }
      }
      res.terms.push_back(term);
      FreeLayout next{&a, gen_vertex};
      std::vector<std::vector<Vec>> kern(n);
      for (std::size_t x = 0; x < n; ++x) {
        int xi = static_cast<int>(x);
        std::size_t rows = lay.ambient(xi), cols = next.ambient(xi);
        if (cols == 0) continue;
        RatMatrix m(rows, cols);
        std::size_t c = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
          int w = gen_vertex[g];
          std::size_t bl = a.block(w, xi).size();
          for (std::size_t b = 0; b < bl; ++b, ++c) {
            Vec img = lay.act(unit(bl, b), w, xi, gens[g]);
            for (std::size_t i = 0; i < rows; ++i) m(i, c) = img[i];
          }
        }
        kern[x] = rows == 0 ? std::vector<Vec>{} : kernel_basis(m);
        if (rows == 0)
          for (std::size_t i = 0; i < cols; ++i) kern[x].push_back(unit(cols, i));
      }
      lay = next;
      comps = std::move(kern);
      ++k;
    }
  }
  return out;
}

int gldim(const std::vector<Resolution>& res) {
  int g = 0;
  for (const auto& r : res) {
    if (r.pd < 0) return -1;
    g = std::max(g, r.pd);
  }
  return g;
}

std::vector<std::vector<int>> ext_dims(const std::vector<Resolution>& res, int k) {
  std::size_t n = res.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t v = 0; v < n; ++v)
    if (k < static_cast<int>(res[v].terms.size())) out[v] = res[v].terms[k];
  return out;
}

int gldim(const ConcreteAlgebra& a) { return gldim(simple_resolutions(a)); }

std::vector<std::vector<int>> ext_dims(const ConcreteAlgebra& a, int k) { return ext_dims(simple_resolutions(a), k); }

}  // namespace qtilt
