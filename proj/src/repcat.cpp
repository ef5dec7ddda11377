#include "qtilt/repcat.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace qtilt {

namespace {

std::vector<std::vector<bool>> reachability(const Quiver& q) {
  std::size_t n = q.n();
  auto out = q.out_arrows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> stack{static_cast<int>(v)};
    r[v][v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a : out[u]) {
        int w = q.arrows[a].tgt;
        if (!r[v][w]) {
          r[v][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

Representation support_rep(const Quiver& q, const std::vector<bool>& supp) {
  Representation m;
  for (std::size_t v = 0; v < q.n(); ++v) m.dims.push_back(supp[v] ? 1 : 0);
  for (const auto& a : q.arrows) {
    RatMatrix x(m.dims[a.tgt], m.dims[a.src]);
    if (supp[a.src] && supp[a.tgt]) x(0, 0) = 1;
    m.maps.push_back(x);
  }
  return m;
}

ModuleMorphism inclusion_like(const Representation& from, const Representation& to) {
  ModuleMorphism f;
  for (std::size_t v = 0; v < from.dims.size(); ++v) {
    RatMatrix c(to.dims[v], from.dims[v]);
    if (from.dims[v] && to.dims[v]) c(0, 0) = 1;
    f.comps.push_back(c);
  }
  return f;
}

// The map delta of the Ext^1 presentation together with its index layout.
struct Delta {
  RatMatrix mat;
  std::vector<std::size_t> var_off;  // per vertex, into the Hom(M_v, N_v) variables
  std::vector<std::size_t> amb_off;  // per arrow, into the ambient space
  std::size_t vars = 0, ambient = 0;
};

Delta build_delta(const Quiver& q, const Representation& m, const Representation& n) {
  Delta d;
  for (std::size_t v = 0; v < q.n(); ++v) {
    d.var_off.push_back(d.vars);
    d.vars += static_cast<std::size_t>(n.dims[v]) * m.dims[v];
  }
  for (const auto& a : q.arrows) {
    d.amb_off.push_back(d.ambient);
    d.ambient += static_cast<std::size_t>(n.dims[a.tgt]) * m.dims[a.src];
  }
  d.mat = RatMatrix(d.ambient, d.vars);
  for (std::size_t ai = 0; ai < q.m(); ++ai) {
    int s = q.arrows[ai].src, t = q.arrows[ai].tgt;
    std::size_t ms = m.dims[s], mt = m.dims[t], ns = n.dims[s], nt = n.dims[t];
    const RatMatrix& na = n.maps[ai];
    const RatMatrix& ma = m.maps[ai];
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c) {
        std::size_t row = d.amb_off[ai] + r * ms + c;
        // (N_a f_s)(r,c) = sum_k N_a(r,k) f_s(k,c)
        for (std::size_t k = 0; k < ns; ++k) d.mat(row, d.var_off[s] + k * ms + c) += na(r, k);
        // (f_t M_a)(r,c) = sum_k f_t(r,k) M_a(k,c)
        for (std::size_t k = 0; k < mt; ++k) d.mat(row, d.var_off[t] + r * mt + k) -= ma(k, c);
      }
  }
  return d;
}

std::vector<std::size_t> arrow_offsets(const Quiver& q, const Representation& m, const Representation& n) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& a : q.arrows) {
    off.push_back(o);
    o += static_cast<std::size_t>(n.dims[a.tgt]) * m.dims[a.src];
  }
  off.push_back(o);
  return off;
}

RatMatrix block_of(const Vec& e, std::size_t off, std::size_t rows, std::size_t cols) {
  RatMatrix x(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) x(r, c) = e[off + r * cols + c];
  return x;
}

void put_block(Vec& e, std::size_t off, const RatMatrix& x) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) e[off + r * x.cols() + c] = x(r, c);
}

Rat trace(const RatMatrix& x) {
  Rat t = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

Rat module_trace(const ModuleMorphism& f) {
  Rat t = 0;
  for (const auto& c : f.comps) t += trace(c);
  return t;
}

}  // namespace

Representation Representation::zero(const Quiver& q) {
  Representation m;
  m.dims.assign(q.n(), 0);
  m.maps.assign(q.m(), RatMatrix(0, 0));
  return m;
}

bool Representation::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

void Representation::validate(const Quiver& q) const {
  if (dims.size() != q.n() || maps.size() != q.m()) throw DimensionMismatch("representation shape");
  for (std::size_t a = 0; a < q.m(); ++a)
    if (maps[a].rows() != static_cast<std::size_t>(dims[q.arrows[a].tgt]) ||
        maps[a].cols() != static_cast<std::size_t>(dims[q.arrows[a].src]))
      throw DimensionMismatch("map of arrow " + q.arrows[a].id);
}

bool is_morphism(const Quiver& q, const Representation& m, const Representation& n, const ModuleMorphism& f) {
  if (f.comps.size() != q.n()) return false;
  for (std::size_t v = 0; v < q.n(); ++v)
    if (f.comps[v].rows() != static_cast<std::size_t>(n.dims[v]) ||
        f.comps[v].cols() != static_cast<std::size_t>(m.dims[v]))
      return false;
  for (std::size_t a = 0; a < q.m(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    if (n.maps[a] * f.comps[s] != f.comps[t] * m.maps[a]) return false;
  }
  return true;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

ModuleMorphism identity_morphism(const Representation& m) {
  ModuleMorphism f;
  for (int d : m.dims) f.comps.push_back(RatMatrix::identity(d));
  return f;
}

Representation simple_rep(const Quiver& q, int v) {
  std::vector<bool> supp(q.n(), false);
  supp[v] = true;
  return support_rep(q, supp);
}

Representation projective_rep(const Quiver& q, int v) { return support_rep(q, reachability(q)[v]); }

Representation injective_rep(const Quiver& q, int v) {
  auto r = reachability(q);
  std::vector<bool> supp(q.n());
  for (std::size_t u = 0; u < q.n(); ++u) supp[u] = r[u][v];
  return support_rep(q, supp);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation s;
  for (std::size_t v = 0; v < a.dims.size(); ++v) s.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    const auto& x = a.maps[i];
    const auto& y = b.maps[i];
    RatMatrix z(x.rows() + y.rows(), x.cols() + y.cols());
    z.set_block(0, 0, x);
    z.set_block(x.rows(), x.cols(), y);
    s.maps.push_back(z);
  }
  return s;
}

ModuleMorphism projective_map(const Quiver& q, int arrow) {
  const auto& a = q.arrows[arrow];
  return inclusion_like(projective_rep(q, a.tgt), projective_rep(q, a.src));
}

ModuleMorphism injective_map(const Quiver& q, int arrow) {
  const auto& a = q.arrows[arrow];
  return inclusion_like(injective_rep(q, a.tgt), injective_rep(q, a.src));
}

std::vector<ModuleMorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n) {
  Delta d = build_delta(q, m, n);
  std::vector<Vec> ker;
  if (d.ambient == 0) {
    for (std::size_t i = 0; i < d.vars; ++i) ker.push_back(unit(d.vars, i));
  } else {
    ker = kernel_basis(d.mat);
  }
  std::vector<ModuleMorphism> out;
  for (const auto& k : ker) {
    ModuleMorphism f;
    for (std::size_t v = 0; v < q.n(); ++v) f.comps.push_back(block_of(k, d.var_off[v], n.dims[v], m.dims[v]));
    out.push_back(f);
  }
  return out;
}

int hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
  Delta d = build_delta(q, m, n);
  return static_cast<int>(d.vars - (d.ambient ? rank(d.mat) : 0));
}

int ext1_dim(const Quiver& q, const Representation& m, const Representation& n) {
  Delta d = build_delta(q, m, n);
  return static_cast<int>(d.ambient - (d.vars ? rank(d.mat) : 0));
}

ExtSpace::ExtSpace(const Quiver& q, const Representation& m, const Representation& n) {
  Delta d = build_delta(q, m, n);
  ambient_ = d.ambient;
  img_ = Echelon(ambient_);
  if (d.vars)
    for (const auto& c : image_basis(d.mat)) img_.insert(c);
  for (auto j : img_.non_pivots()) {
    free_.push_back(j);
    reps_.push_back(unit(ambient_, j));
  }
}

Vec ExtSpace::coords(const Vec& x) const {
  Vec r = img_.reduce(x);
  Vec c;
  for (auto j : free_) c.push_back(r[j]);
  return c;
}

Vec ExtSpace::precompose(const Quiver& q, const Representation& m2, const Representation& m,
                         const Representation& n, const Vec& e, const ModuleMorphism& g) {
  auto off = arrow_offsets(q, m, n);
  auto off2 = arrow_offsets(q, m2, n);
  Vec out(off2.back());
  for (std::size_t a = 0; a < q.m(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    put_block(out, off2[a], block_of(e, off[a], n.dims[t], m.dims[s]) * g.comps[s]);
  }
  return out;
}

Vec ExtSpace::postcompose(const Quiver& q, const Representation& m, const Representation& n,
                          const Representation& n2, const Vec& e, const ModuleMorphism& f) {
  auto off = arrow_offsets(q, m, n);
  auto off2 = arrow_offsets(q, m, n2);
  Vec out(off2.back());
  for (std::size_t a = 0; a < q.m(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    put_block(out, off2[a], f.comps[t] * block_of(e, off[a], n.dims[t], m.dims[s]));
  }
  return out;
}

bool is_indecomposable(const Quiver& q, const Representation& m) {
  if (m.is_zero()) return false;
  auto end = hom_basis(q, m, m);
  if (end.size() == 1) return true;
  // Jacobson radical of End(M) as the kernel of the trace form.
  std::size_t k = end.size();
  RatMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = module_trace(compose(end[i], end[j]));
  return k - kernel_basis(g).size() == 1;
}

bool is_isomorphic(const Quiver& q, const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return false;
  auto hom = hom_basis(q, a, b);
  if (hom.empty()) return a.is_zero();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ModuleMorphism f;
    for (std::size_t v = 0; v < q.n(); ++v) f.comps.push_back(RatMatrix(b.dims[v], a.dims[v]));
    for (const auto& h : hom) {
      Rat c = coef(rng);
      for (std::size_t v = 0; v < q.n(); ++v) f.comps[v] = f.comps[v] + h.comps[v].scaled(c);
    }
    bool ok = true;
    for (std::size_t v = 0; v < q.n() && ok; ++v) ok = rank(f.comps[v]) == static_cast<std::size_t>(a.dims[v]);
    if (ok) return true;
  }
  return false;
}

Representation ar_translate_inv(const Quiver& q, const Representation& m) {
  std::vector<Representation> inj;
  std::vector<ExtSpace> ext;
  Representation r;
  for (std::size_t v = 0; v < q.n(); ++v) {
    inj.push_back(injective_rep(q, static_cast<int>(v)));
    ext.emplace_back(q, inj.back(), m);
    r.dims.push_back(ext.back().dim());
  }
  for (std::size_t a = 0; a < q.m(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    auto g = injective_map(q, static_cast<int>(a));  // I_w -> I_v
    RatMatrix x(r.dims[w], r.dims[v]);
    for (std::size_t i = 0; i < ext[v].representatives().size(); ++i) {
      Vec e = ExtSpace::precompose(q, inj[w], inj[v], m, ext[v].representatives()[i], g);
      Vec c = ext[w].coords(e);
      for (std::size_t j = 0; j < c.size(); ++j) x(j, i) = c[j];
    }
    r.maps.push_back(x);
  }
  return r;
}

Representation ar_translate(const Quiver& q, const Representation& m) {
  std::vector<Representation> proj;
  std::vector<ExtSpace> ext;
  Representation r;
  for (std::size_t v = 0; v < q.n(); ++v) {
    proj.push_back(projective_rep(q, static_cast<int>(v)));
    ext.emplace_back(q, m, proj.back());
    r.dims.push_back(ext.back().dim());
  }
  for (std::size_t a = 0; a < q.m(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    auto f = projective_map(q, static_cast<int>(a));  // P_w -> P_v
    // Ext(M,P_w) -> Ext(M,P_v), then dualize.
    RatMatrix x(r.dims[w], r.dims[v]);
    for (std::size_t i = 0; i < ext[w].representatives().size(); ++i) {
      Vec e = ExtSpace::postcompose(q, m, proj[w], proj[v], ext[w].representatives()[i], f);
      Vec c = ext[v].coords(e);
      for (std::size_t j = 0; j < c.size(); ++j) x(i, j) = c[j];
    }
    r.maps.push_back(x);
  }
  return r;
}

ModuleMorphism ar_translate_inv(const Quiver& q, const Representation& m, const Representation& n,
                                const ModuleMorphism& f) {
  ModuleMorphism out;
  for (std::size_t v = 0; v < q.n(); ++v) {
    auto inj = injective_rep(q, static_cast<int>(v));
    ExtSpace em(q, inj, m), en(q, inj, n);
    RatMatrix x(en.dim(), em.dim());
    for (std::size_t i = 0; i < em.representatives().size(); ++i) {
      Vec c = en.coords(ExtSpace::postcompose(q, inj, m, n, em.representatives()[i], f));
      for (std::size_t j = 0; j < c.size(); ++j) x(j, i) = c[j];
    }
    out.comps.push_back(x);
  }
  return out;
}

ModuleMorphism ar_translate(const Quiver& q, const Representation& m, const Representation& n,
                            const ModuleMorphism& f) {
  ModuleMorphism out;
  for (std::size_t v = 0; v < q.n(); ++v) {
    auto proj = projective_rep(q, static_cast<int>(v));
    ExtSpace em(q, m, proj), en(q, n, proj);
    // Ext(N,P_v) -> Ext(M,P_v) by precomposition with f, then dualize.
    RatMatrix x(em.dim(), en.dim());
    for (std::size_t i = 0; i < en.representatives().size(); ++i) {
      Vec c = em.coords(ExtSpace::precompose(q, m, n, proj, en.representatives()[i], f));
      for (std::size_t j = 0; j < c.size(); ++j) x(i, j) = c[j];
    }
    out.comps.push_back(x.transpose());
  }
  return out;
}

int IndecTable::find(int orbit, int level) const {
  auto it = index.find({orbit, level});
  return it == index.end() ? -1 : it->second;
}

IndecTable knit_indecomposables(const Quiver& q) {
  IndecTable t;
  t.q = q;
  t.type = dynkin_type(q);
  int n = static_cast<int>(q.n());
  std::vector<std::vector<int>> inj_dims;
  for (int j = 0; j < n; ++j) inj_dims.push_back(injective_rep(q, j).dims);
  t.nu.assign(n, {-1, -1});
  t.orbit_length.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Representation m = projective_rep(q, i);
    for (int level = 0; !m.is_zero(); ++level) {
      if (!is_indecomposable(q, m)) throw NotIndecomposable("translate of an indecomposable split");
      Indec x;
      x.dimv = m.dims;
      x.orbit = i;
      x.level = level;
      x.projective = level == 0;
      for (int j = 0; j < n; ++j)
        if (inj_dims[j] == m.dims) {
          x.injective = true;
          t.nu[j] = {i, level};
        }
      Representation next = ar_translate_inv(q, m);
      x.rep = std::move(m);
      t.index[{i, level}] = static_cast<int>(t.items.size());
      t.items.push_back(std::move(x));
      m = std::move(next);
      t.orbit_length[i] = level + 1;
    }
    if (!t.items.back().injective) throw NotIndecomposable("orbit did not end at an injective");
  }
  return t;
}

std::vector<std::vector<int>> ext1_table(const IndecTable& t) {
  std::size_t k = t.size();
  std::vector<std::vector<int>> e(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) e[i][j] = ext1_dim(t.q, t.items[i].rep, t.items[j].rep);
  return e;
}

std::vector<std::vector<int>> hom_table(const IndecTable& t) {
  std::size_t k = t.size();
  std::vector<std::vector<int>> h(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h[i][j] = hom_dim(t.q, t.items[i].rep, t.items[j].rep);
  return h;
}

std::vector<std::vector<int>> enumerate_tilting_modules(const IndecTable& t) {
  auto e = ext1_table(t);
  int k = static_cast<int>(t.size());
  std::size_t n = t.q.n();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < k; ++i) {
      if (e[i][i]) continue;
      bool ok = true;
      for (int j : cur)
        if (e[i][j] || e[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace qtilt
