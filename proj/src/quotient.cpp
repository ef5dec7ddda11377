#include "qtilt/quotient.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qtilt/cycles.hpp"

namespace qtilt {

PathSpace::PathSpace(const Quiver& q, int max_len) : max_len_(max_len), n_(q.n()) {
  blocks_.assign(n_ * n_, {});
  pos_.assign(n_ * n_, {});
  auto out = q.out_arrows();
  std::vector<Path> layer;
  for (std::size_t v = 0; v < n_; ++v) layer.push_back(Path::trivial_at(static_cast<int>(v)));
  for (int len = 0; len < max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      blocks_[p.src * n_ + p.tgt].push_back(p);
      if (len + 1 < max_len)
        for (int a : out[p.tgt]) next.push_back(p.then(q, a));
    }
    layer = std::move(next);
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& bl = blocks_[b];
    std::sort(bl.begin(), bl.end(), [](const Path& x, const Path& y) {
      if (x.length() != y.length()) return x.length() > y.length();
      return x.arrows < y.arrows;
    });
    for (std::size_t i = 0; i < bl.size(); ++i) pos_[b][bl[i].arrows] = static_cast<int>(i);
  }
}

int PathSpace::index(const Path& p) const {
  if (static_cast<int>(p.length()) >= max_len_) return -1;
  const auto& m = pos_[p.src * n_ + p.tgt];
  auto it = m.find(p.arrows);
  return it == m.end() ? -1 : it->second;
}

Vec PathSpace::vector_of(const Path& p) const {
  Vec v(block(p.src, p.tgt).size());
  int i = index(p);
  if (i >= 0) v[i] = 1;
  return v;
}

Vec PathSpace::vector_of(const Relation& r) const {
  Vec v(block(r.src(), r.tgt()).size());
  for (const auto& t : r.terms) {
    int i = index(t.path);
    if (i >= 0) v[i] += t.coef;
  }
  return v;
}

Relation PathSpace::relation_of(int s, int t, const Vec& v) const {
  Relation r;
  const auto& bl = block(s, t);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r.terms.push_back(Term{v[i], bl[i]});
  return normalized(r);
}

Vec PathSpace::post(int s, int t, const Vec& x, const Quiver& q, int a) const {
  int t2 = q.arrows[a].tgt;
  Vec out(block(s, t2).size());
  const auto& bl = block(s, t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Path p = bl[i].then(q, a);
    int k = index(p);
    if (k >= 0) out[k] += x[i];
  }
  return out;
}

Vec PathSpace::pre(int s, int t, const Vec& x, const Quiver& q, int a) const {
  int s2 = q.arrows[a].src;
  Vec out(block(s2, t).size());
  const auto& bl = block(s, t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Path p = concat(Path::of_arrow(q, a), bl[i]);
    int k = index(p);
    if (k >= 0) out[k] += x[i];
  }
  return out;
}

namespace {

// Ideal generated by the relations inside paths of length < L.
std::vector<Echelon> ideal_closure(const Quiver& q, const PathSpace& sp, const std::vector<Relation>& rels) {
  std::size_t n = q.n();
  std::vector<Echelon> ideal;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) ideal.emplace_back(sp.block(static_cast<int>(s), static_cast<int>(t)).size());
  auto out = q.out_arrows();
  auto in = q.in_arrows();
  struct Item {
    int s, t;
    Vec v;
  };
  std::deque<Item> queue;
  for (const auto& r : rels) {
    Vec v = sp.vector_of(r);
    if (ideal[r.src() * n + r.tgt()].insert(v)) queue.push_back(Item{r.src(), r.tgt(), v});
  }
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    for (int a : out[it.t]) {
      int t2 = q.arrows[a].tgt;
      Vec w = sp.post(it.s, it.t, it.v, q, a);
      if (ideal[it.s * n + t2].insert(w)) queue.push_back(Item{it.s, t2, std::move(w)});
    }
    for (int a : in[it.s]) {
      int s2 = q.arrows[a].src;
      Vec w = sp.pre(it.s, it.t, it.v, q, a);
      if (ideal[s2 * n + it.t].insert(w)) queue.push_back(Item{s2, it.t, std::move(w)});
    }
  }
  return ideal;
}

}  // namespace

QuotientBasis::QuotientBasis(const Presentation& p) : pres_(p), n_(p.quiver.n()) {
  pres_.validate();
  const Quiver& q = pres_.quiver;
  int bound = pres_.bound();
  for (int L = 2; L <= bound + 1; ++L) {
    PathSpace sp(q, L);
    auto ideal = ideal_closure(q, sp, pres_.relations);
    bool done = true;
    for (std::size_t b = 0; b < n_ * n_ && done; ++b) {
      const auto& bl = sp.block(static_cast<int>(b / n_), static_cast<int>(b % n_));
      for (std::size_t i = 0; i < bl.size(); ++i) {
        if (static_cast<int>(bl[i].length()) != L - 1) continue;
        if (!ideal[b].contains(unit(bl.size(), i))) {
          done = false;
          break;
        }
      }
    }
    if (!done) continue;
    space_ = std::move(sp);
    ideal_ = std::move(ideal);
    basis_.assign(n_ * n_, {});
    basis_cols_.assign(n_ * n_, {});
    for (std::size_t b = 0; b < n_ * n_; ++b) {
      const auto& bl = space_.block(static_cast<int>(b / n_), static_cast<int>(b % n_));
      for (auto c : ideal_[b].non_pivots()) {
        basis_cols_[b].push_back(c);
        basis_[b].push_back(bl[c]);
      }
    }
    return;
  }
  throw TruncationTooSmall("paths of length " + std::to_string(bound) + " do not all vanish in " + q.name);
}

std::size_t QuotientBasis::dim() const {
  std::size_t d = 0;
  for (const auto& b : basis_) d += b.size();
  return d;
}

bool QuotientBasis::is_schurian() const {
  for (const auto& b : basis_)
    if (b.size() > 1) return false;
  return true;
}

Vec QuotientBasis::reduce(int s, int t, const Vec& coords) const {
  std::size_t b = s * n_ + t;
  Vec r = ideal_[b].reduce(coords);
  Vec out(basis_cols_[b].size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = r[basis_cols_[b][k]];
  return out;
}

Vec QuotientBasis::reduce(const Path& p) const { return reduce(p.src, p.tgt, space_.vector_of(p)); }

bool QuotientBasis::in_ideal(const Relation& r) const {
  return is_zero(reduce(r.src(), r.tgt(), space_.vector_of(r)));
}

std::vector<Relation> minimal_generators(const Quiver& q, const PathSpace& sp, const std::vector<Echelon>& ideal,
                                         const std::vector<Relation>& preferred) {
  std::size_t n = q.n();
  auto out = q.out_arrows();
  auto in = q.in_arrows();
  std::vector<Echelon> rad_ideal;
  for (std::size_t b = 0; b < n * n; ++b)
    rad_ideal.emplace_back(sp.block(static_cast<int>(b / n), static_cast<int>(b % n)).size());
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      int si = static_cast<int>(s), ti = static_cast<int>(t);
      for (const auto& x : ideal[s * n + t].rows()) {
        for (int a : out[t]) rad_ideal[s * n + q.arrows[a].tgt].insert(sp.post(si, ti, x, q, a));
        for (int a : in[s]) rad_ideal[q.arrows[a].src * n + t].insert(sp.pre(si, ti, x, q, a));
      }
    }
  std::vector<Relation> result;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      int si = static_cast<int>(s), ti = static_cast<int>(t);
      const Echelon& m = rad_ideal[s * n + t];
      std::vector<Vec> cands;
      for (const auto& r : preferred)
        if (r.src() == si && r.tgt() == ti) cands.push_back(sp.vector_of(r));
      for (const auto& x : ideal[s * n + t].rows()) cands.push_back(x);
      Echelon comb = m;
      Echelon reps(m.dim());
      for (const auto& v : cands) {
        Vec r = m.reduce(v);
        if (comb.insert(r)) reps.insert(r);
      }
      for (const auto& row : reps.rows()) result.push_back(sp.relation_of(si, ti, row));
    }
  return result;
}

std::vector<Relation> minimal_relations(const QuotientBasis& qb) {
  std::vector<Echelon> ideal;
  std::size_t n = qb.presentation().quiver.n();
  for (std::size_t b = 0; b < n * n; ++b) ideal.push_back(qb.ideal_block(static_cast<int>(b / n), static_cast<int>(b % n)));
  return minimal_generators(qb.presentation().quiver, qb.space(), ideal, qb.presentation().relations);
}

Presentation with_minimal_relations(const Presentation& p) {
  QuotientBasis qb(p);
  Presentation out = p;
  out.relations = minimal_relations(qb);
  return out;
}

Presentation cut_quotient(const Presentation& p, const std::vector<int>& cut) {
  for (int a : cut)
    if (a < 0 || a >= static_cast<int>(p.quiver.m())) throw NotAdmissibleCut("cut arrow out of range");
  if (!is_admissible_cut(p.quiver, cut)) throw NotAdmissibleCut("cut does not meet every oriented chordless cycle once");
  std::vector<int> remap(p.quiver.m(), -1);
  int next = 0;
  for (std::size_t a = 0; a < p.quiver.m(); ++a)
    if (std::find(cut.begin(), cut.end(), static_cast<int>(a)) == cut.end()) remap[a] = next++;
  Presentation out;
  out.quiver = p.quiver.without_arrows(cut);
  out.truncation = p.truncation;
  for (const auto& r : p.relations) {
    Relation nr;
    for (const auto& t : r.terms) {
      bool keep = true;
      Path np{t.path.src, t.path.tgt, {}};
      for (int a : t.path.arrows) {
        if (remap[a] < 0) {
          keep = false;
          break;
        }
        np.arrows.push_back(remap[a]);
      }
      if (keep) nr.terms.push_back(Term{t.coef, np});
    }
    nr = normalized(nr);
    if (!nr.terms.empty()) out.relations.push_back(nr);
  }
  return with_minimal_relations(out);
}

std::vector<std::vector<int>> quiver_isomorphisms(const Quiver& q1, const Quiver& q2, std::size_t limit) {
  std::vector<std::vector<int>> found;
  std::size_t n = q1.n();
  if (n != q2.n() || q1.m() != q2.m()) return found;
  std::vector<std::vector<int>> c1(n, std::vector<int>(n, 0)), c2 = c1;
  std::vector<int> in1(n, 0), out1(n, 0), in2(n, 0), out2(n, 0);
  for (const auto& a : q1.arrows) {
    ++c1[a.src][a.tgt];
    ++out1[a.src];
    ++in1[a.tgt];
  }
  for (const auto& a : q2.arrows) {
    ++c2[a.src][a.tgt];
    ++out2[a.src];
    ++in2[a.tgt];
  }
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (limit && found.size() >= limit) return;
    if (v == n) {
      found.push_back(phi);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || in1[v] != in2[w] || out1[v] != out2[w]) continue;
      bool ok = c1[v][v] == c2[w][w];
      for (std::size_t u = 0; u < v && ok; ++u)
        ok = c1[u][v] == c2[phi[u]][w] && c1[v][u] == c2[w][phi[u]];
      if (!ok) continue;
      phi[v] = static_cast<int>(w);
      used[w] = true;
      rec(v + 1);
      used[w] = false;
      phi[v] = -1;
    }
  };
  rec(0);
  return found;
}

std::optional<std::vector<int>> quiver_iso(const Quiver& q1, const Quiver& q2) {
  auto all = quiver_isomorphisms(q1, q2, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

Rat rat_pow(const Rat& x, long e) {
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class a, b;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(a.get_mpz_t(), num.get_mpz_t(), k);
  mpz_pow_ui(b.get_mpz_t(), den.get_mpz_t(), k);
  Rat r(a, b);
  r.canonicalize();
  return e < 0 ? Rat(1 / r) : r;
}

std::optional<Rat> rat_root(const Rat& x, unsigned long d) {
  if (d == 1) return x;
  bool neg = sgn(x) < 0;
  if (neg && d % 2 == 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  if (neg) num = -num;
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return std::nullopt;
  Rat r(neg ? mpz_class(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

// Solves prod_a lam_a^{E[j][a]} = r[j] over nonzero rationals by diagonalizing E
// with unimodular row and column operations.
std::optional<std::vector<Rat>> solve_binomial(std::vector<std::vector<long>> e, std::vector<Rat> r, std::size_t m) {
  std::size_t k = e.size();
  std::vector<std::vector<long>> w(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) w[i][i] = 1;
  auto row_add = [&](std::size_t i, std::size_t j, long c) {  // row_i += c row_j
    for (std::size_t a = 0; a < m; ++a) e[i][a] += c * e[j][a];
    r[i] *= rat_pow(r[j], c);
  };
  auto col_add = [&](std::size_t i, std::size_t j, long c) {  // col_i += c col_j
    for (std::size_t a = 0; a < k; ++a) e[a][i] += c * e[a][j];
    for (std::size_t a = 0; a < m; ++a) w[a][i] += c * w[a][j];
  };
  std::size_t t = 0;
  for (; t < k && t < m; ++t) {
    while (true) {
      std::size_t bi = k, bj = m;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (e[i][j] != 0 && (bi == k || std::labs(e[i][j]) < std::labs(e[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == k) goto diagonal;
      std::swap(e[t], e[bi]);
      std::swap(r[t], r[bi]);
      for (std::size_t a = 0; a < k; ++a) std::swap(e[a][t], e[a][bj]);
      for (std::size_t a = 0; a < m; ++a) std::swap(w[a][t], w[a][bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i)
        if (e[i][t] != 0) {
          row_add(i, t, -(e[i][t] / e[t][t]));
          if (e[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < m; ++j)
        if (e[t][j] != 0) {
          col_add(j, t, -(e[t][j] / e[t][t]));
          if (e[t][j] != 0) clean = false;
        }
      if (clean) break;
    }
  }
diagonal:
  std::size_t rank = t;
  std::vector<Rat> z(m, Rat(1));
  for (std::size_t i = 0; i < k; ++i) {
    if (i < rank) {
      long d = e[i][i];
      Rat target = d < 0 ? Rat(1 / r[i]) : r[i];
      auto root = rat_root(target, static_cast<unsigned long>(std::labs(d)));
      if (!root) return std::nullopt;
      z[i] = *root;
    } else if (r[i] != 1) {
      return std::nullopt;
    }
  }
  std::vector<Rat> lam(m, Rat(1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (w[a][b] != 0) lam[a] *= rat_pow(z[b], w[a][b]);
  return lam;
}

Path map_path(const Path& p, const std::vector<int>& vmap, const std::vector<int>& amap) {
  Path out{vmap[p.src], vmap[p.tgt], {}};
  for (int a : p.arrows) out.arrows.push_back(amap[a]);
  return out;
}

}  // namespace

std::optional<PresentationIso> schurian_iso(const Presentation& p1, const Presentation& p2) {
  QuotientBasis a1(p1), a2(p2);
  if (a1.dim() != a2.dim()) return std::nullopt;
  if (!a1.is_schurian() || !a2.is_schurian()) throw NotSchurian("schurian_iso needs schurian algebras");
  const Quiver& q1 = a1.presentation().quiver;
  const Quiver& q2 = a2.presentation().quiver;
  std::size_t n = q1.n(), m = q1.m();
  for (const auto& phi : quiver_isomorphisms(q1, q2)) {
    bool dims_ok = true;
    for (std::size_t x = 0; x < n && dims_ok; ++x)
      for (std::size_t y = 0; y < n && dims_ok; ++y)
        dims_ok = a1.block_dim(static_cast<int>(x), static_cast<int>(y)) == a2.block_dim(phi[x], phi[y]);
    if (!dims_ok) continue;
    std::vector<int> amap(m, -1);
    for (std::size_t a = 0; a < m; ++a) {
      const auto& ar = q1.arrows[a];
      for (std::size_t b = 0; b < m; ++b)
        if (q2.arrows[b].src == phi[ar.src] && q2.arrows[b].tgt == phi[ar.tgt]) amap[a] = static_cast<int>(b);
    }
    // each relation maps to sum_k c_k lam(p_k) a_k b where b spans the target block
    std::vector<std::vector<long>> eqs;
    std::vector<Rat> rhs;
    bool feasible = true;
    for (const auto& rel : a1.presentation().relations) {
      std::vector<std::pair<Rat, std::vector<long>>> live;
      for (const auto& t : rel.terms) {
        Vec c = a2.reduce(map_path(t.path, phi, amap));
        if (c.empty() || sgn(c[0]) == 0) continue;
        std::vector<long> ex(m, 0);
        for (int a : t.path.arrows) ++ex[a];
        live.emplace_back(t.coef * c[0], ex);
      }
      if (live.size() == 1) {
        feasible = false;
        break;
      }
      if (live.size() == 2) {
        std::vector<long> ex(m);
        for (std::size_t a = 0; a < m; ++a) ex[a] = live[0].second[a] - live[1].second[a];
        eqs.push_back(ex);
        rhs.push_back(-live[1].first / live[0].first);
      }
    }
    if (!feasible) continue;
    auto lam = solve_binomial(eqs, rhs, m);
    if (!lam) continue;
    // relations with three or more surviving terms are only verified, not solved
    bool ok = true;
    for (const auto& rel : a1.presentation().relations) {
      int s = phi[rel.src()], t = phi[rel.tgt()];
      Vec acc(a2.block_dim(s, t));
      for (const auto& term : rel.terms) {
        Rat f = term.coef;
        for (int a : term.path.arrows) f *= (*lam)[a];
        axpy(acc, f, a2.reduce(map_path(term.path, phi, amap)));
      }
      if (!is_zero(acc)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return PresentationIso{phi, amap, *lam};
  }
  return std::nullopt;
}

}  // namespace qtilt
