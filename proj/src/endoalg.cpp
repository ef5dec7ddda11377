#include "qtilt/endoalg.hpp"

#include <map>
#include <tuple>

namespace qtilt {

namespace {

// b_j * x for a full coordinate vector x.
Vec left_mul(const ConcreteAlgebra& a, int j, const Vec& x) {
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (const auto& [k, v] : a.product(j, static_cast<int>(i))) out[k] += x[i] * v;
  }
  return out;
}

// x * b_i
Vec right_mul(const ConcreteAlgebra& a, const Vec& x, int i) {
  Vec out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (const auto& [k, v] : a.product(static_cast<int>(j), i)) out[k] += x[j] * v;
  }
  return out;
}

// Two-sided ideal generated by the given vectors.
std::vector<Vec> ideal_closure(const ConcreteAlgebra& a, const std::vector<Vec>& gens) {
  Echelon left(a.dim());
  std::vector<Vec> lv;
  for (const auto& g : gens)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec x = left_mul(a, static_cast<int>(j), g);
      if (left.insert(x)) lv.push_back(x);
    }
  Echelon both(a.dim());
  std::vector<Vec> out;
  for (const auto& x : lv)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec y = right_mul(a, x, static_cast<int>(i));
      if (both.insert(y)) out.push_back(y);
    }
  return out;
}

}  // namespace

std::vector<std::vector<int>> graded_hom_dims(const DerivedCategory& d, const std::vector<ZVertex>& t, int k) {
  std::size_t n = t.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b] = d.hom_dim(t[a], d.F(t[b], k));
  return out;
}

ConcreteAlgebra end_algebra(const DerivedCategory& d, const std::vector<ZVertex>& t, int lo, int hi,
                            bool truncate) {
  int n = static_cast<int>(t.size());
  if (!truncate)
    for (int k : {lo, hi})
      for (const auto& row : graded_hom_dims(d, t, k))
        for (int x : row)
          if (x) throw WindowTooSmall("Hom(T, F^" + std::to_string(k) + " T) does not vanish");
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(std::to_string(a + 1));
  std::vector<BasisLabel> basis;
  std::map<std::tuple<int, int, int>, int> start;  // (deg, src, tgt) -> first basis index
  std::vector<int> pos;
  for (int k = lo; k <= hi; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int dim = d.hom_dim(t[a], d.F(t[b], k));
        start[{k, a, b}] = static_cast<int>(basis.size());
        for (int p = 0; p < dim; ++p) {
          std::string nm = "h" + std::to_string(k) + "_" + names[a] + "_" + names[b];
          if (dim > 1) nm += "_" + std::to_string(p);
          basis.push_back(BasisLabel{a, b, k, nm});
          pos.push_back(p);
        }
      }
  std::vector<int> idem(n);
  for (int a = 0; a < n; ++a) {
    if (lo > 0 || hi < 0) throw WindowTooSmall("window must contain degree 0");
    idem[a] = start[{0, a, a}];
  }
  ConcreteAlgebra alg(names, basis, idem, true);
  std::size_t dim = basis.size();
  std::map<std::pair<int, int>, Vec> lifted;  // (j, p) -> F^p(b_j)
  auto idem_of = [&](int i) { return basis[i].deg == 0 && basis[i].src == basis[i].tgt; };
  for (std::size_t i = 0; i < dim; ++i) {
    if (idem_of(static_cast<int>(i))) continue;
    const auto& bi = basis[i];
    for (std::size_t j = 0; j < dim; ++j) {
      const auto& bj = basis[j];
      if (bj.src != bi.tgt || idem_of(static_cast<int>(j))) continue;
      int p = bi.deg, q = bj.deg, a = bi.src, b = bi.tgt, c = bj.tgt;
      ZVertex x = t[a], y = d.F(t[b], p), z = d.F(t[c], p + q);
      int target = d.hom_dim(x, z);
      if (p + q < lo || p + q > hi) {
        if (truncate || target == 0) continue;
        throw WindowTooSmall("product leaves the grading window");
      }
      if (target == 0) continue;
      auto key = std::make_pair(static_cast<int>(j), p);
      auto it = lifted.find(key);
      if (it == lifted.end()) {
        Vec g(d.hom_dim(t[b], d.F(t[c], q)));
        g[pos[j]] = 1;
        it = lifted.emplace(key, d.apply_F(t[b], d.F(t[c], q), g, p)).first;
      }
      Vec f(d.hom_dim(x, y));
      f[pos[i]] = 1;
      Vec r = d.compose(x, y, z, f, it->second);
      SparseVec sv;
      int s0 = start[{p + q, a, c}];
      for (std::size_t e = 0; e < r.size(); ++e)
        if (sgn(r[e]) != 0) sv.emplace_back(s0 + static_cast<int>(e), r[e]);
      alg.set_product(static_cast<int>(j), static_cast<int>(i), std::move(sv));
    }
  }
  return alg;
}

ConcreteAlgebra cluster_algebra(const DerivedCategory& d, const std::vector<ZVertex>& t, int lo, int hi) {
  return end_algebra(d, t, lo, hi, false);
}

std::vector<Vec> degree_one_generators(const ConcreteAlgebra& c) {
  std::vector<Vec> out;
  std::size_t n = c.n();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<Vec> units;
      for (int i : c.block(static_cast<int>(s), static_cast<int>(t)))
        if (c.label(i).deg == 1) units.push_back(unit(c.dim(), i));
      if (units.empty()) continue;
      std::vector<Vec> sub;
      for (std::size_t b = 0; b < c.dim(); ++b) {
        const auto& lb = c.label(static_cast<int>(b));
        if (lb.deg != 0 || lb.src == lb.tgt) continue;
        for (const auto& u : units) {
          Vec x = left_mul(c, static_cast<int>(b), u);
          if (!is_zero(x)) sub.push_back(x);
          Vec y = right_mul(c, u, static_cast<int>(b));
          if (!is_zero(y)) sub.push_back(y);
        }
      }
      for (auto& r : quotient_representatives(units, sub, c.dim())) out.push_back(r);
    }
  return out;
}

Bimodule ext2_bimodule(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  if (gldim(end_algebra(d, t)) > 2) throw GldimTooLarge("Ext^2 bimodule needs gldim <= 2");
  auto r = end_algebra(d, t, 0, 1, true);
  Bimodule m;
  std::size_t n = t.size();
  m.block_dims.assign(n, std::vector<int>(n, 0));
  m.top_dims.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (r.label(static_cast<int>(i)).deg == 1) {
      ++m.dim;
      ++m.block_dims[r.label(static_cast<int>(i)).src][r.label(static_cast<int>(i)).tgt];
    }
  for (const auto& g : degree_one_generators(r))
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (sgn(g[i]) != 0) {
        ++m.top_dims[r.label(static_cast<int>(i)).src][r.label(static_cast<int>(i)).tgt];
        break;
      }
  return m;
}

RelationExtension relation_extension(const DerivedCategory& d, const std::vector<ZVertex>& t,
                                     const std::string& name) {
  if (gldim(end_algebra(d, t)) > 2) throw GldimTooLarge("relation extension needs gldim <= 2");
  RelationExtension r;
  r.algebra = end_algebra(d, t, 0, 1, true);
  r.presentation = extract_presentation(r.algebra, name).presentation;
  return r;
}

PiReport projection_pi(const ConcreteAlgebra& c, const ConcreteAlgebra& r) {
  PiReport rep;
  std::vector<int> to_r(c.dim(), -1);
  std::size_t next = 0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const auto& lc = c.label(static_cast<int>(i));
    if (lc.deg != 0 && lc.deg != 1) {
      rep.kernel.push_back(static_cast<int>(i));
      continue;
    }
    if (next >= r.dim()) throw GradingMismatch("R has fewer degree 0/1 basis elements than C");
    const auto& lr = r.label(static_cast<int>(next));
    if (lr.src != lc.src || lr.tgt != lc.tgt || lr.deg != lc.deg)
      throw GradingMismatch("basis labels of C and R disagree");
    to_r[i] = static_cast<int>(next++);
  }
  if (next != r.dim()) throw GradingMismatch("R has more basis elements than degrees 0/1 of C");

  auto project = [&](const SparseVec& v) {
    std::map<int, Rat> out;
    for (const auto& [k, x] : v)
      if (to_r[k] >= 0) out[to_r[k]] += x;
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
  };
  rep.multiplicative = true;
  rep.split = true;
  for (std::size_t i = 0; i < c.dim() && rep.multiplicative; ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (c.label(static_cast<int>(i)).tgt != c.label(static_cast<int>(j)).src) continue;
      auto left = project(c.product(static_cast<int>(j), static_cast<int>(i)));
      std::map<int, Rat> right;
      if (to_r[i] >= 0 && to_r[j] >= 0)
        for (const auto& [k, x] : r.product(to_r[j], to_r[i])) right[k] += x;
      if (left != right) {
        rep.multiplicative = false;
        break;
      }
      bool deg0 = c.label(static_cast<int>(i)).deg == 0 && c.label(static_cast<int>(j)).deg == 0;
      if (deg0)
        for (const auto& [k, x] : c.product(static_cast<int>(j), static_cast<int>(i)))
          if (c.label(k).deg != 0) rep.split = false;
    }

  auto rad = radical(c);
  auto rad2 = radical_power(c, rad, 2);
  rep.kernel_in_rad2 = true;
  for (int k : rep.kernel) {
    const auto& l = c.label(k);
    Echelon e(c.block(l.src, l.tgt).size());
    for (const auto& v : rad2[l.src * c.n() + l.tgt]) e.insert(v);
    if (!e.contains(unit(e.dim(), c.block_pos(k)))) rep.kernel_in_rad2 = false;
  }

  // <eta>^2 = C (eta C eta) C
  auto eta = degree_one_generators(c);
  std::vector<Vec> mid;
  for (const auto& x : eta)
    for (const auto& y : eta)
      for (std::size_t b = 0; b < c.dim(); ++b) {
        Vec v = c.mul(y, left_mul(c, static_cast<int>(b), x));
        if (!is_zero(v)) mid.push_back(v);
      }
  auto sq = ideal_closure(c, mid);
  Echelon sqe(c.dim()), ker(c.dim());
  for (const auto& v : sq) sqe.insert(v);
  for (int k : rep.kernel) ker.insert(unit(c.dim(), k));
  rep.kernel_is_eta_square = sqe.rank() == ker.rank();
  for (const auto& v : sq)
    if (!ker.contains(v)) rep.kernel_is_eta_square = false;

  auto qc = extract_presentation(c, "C").presentation.quiver;
  auto qr = extract_presentation(r, "R").presentation.quiver;
  rep.quivers_iso = quiver_iso(qc, qr).has_value();
  return rep;
}

CondBC cond_bc(const ConcreteAlgebra& c) {
  CondBC out;
  auto eta = degree_one_generators(c);
  for (std::size_t i = 0; i < eta.size(); ++i)
    for (std::size_t j = 0; j < eta.size(); ++j)
      for (std::size_t b = 0; b < c.dim(); ++b) {
        if (c.label(static_cast<int>(b)).deg != 0) continue;
        Vec v = c.mul(eta[j], left_mul(c, static_cast<int>(b), eta[i]));
        if (!is_zero(v)) {
          out.holds = false;
          out.witness = "eta" + std::to_string(j) + " * " + c.label(static_cast<int>(b)).name + " * eta" +
                        std::to_string(i) + " != 0";
          return out;
        }
      }
  return out;
}

RealizeResult realize_presentation(const DerivedCategory& d, const Presentation& p, int lo, int hi) {
  RealizeResult res;
  QuotientBasis qb(p);
  for (const auto& t : d.enumerate_tilting_complexes(lo, hi)) {
    ++res.candidates;
    std::size_t dim = 0;
    for (const auto& row : graded_hom_dims(d, t, 0))
      for (int x : row) dim += x;
    if (dim != qb.dim()) continue;
    auto ex = extract_presentation(end_algebra(d, t), "B");
    if (ex.presentation.quiver.m() != p.quiver.m()) continue;
    try {
      if (schurian_iso(ex.presentation, p)) {
        res.complex = t;
        return res;
      }
    } catch (const NotSchurian&) {
    }
  }
  return res;
}

}  // namespace qtilt
