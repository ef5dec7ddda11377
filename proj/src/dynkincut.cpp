#include "qtilt/dynkincut.hpp"

#include <algorithm>

#include "qtilt/algebra.hpp"
#include "qtilt/cycles.hpp"
#include "qtilt/forms.hpp"
#include "qtilt/quotient.hpp"

namespace qtilt {

Presentation synth_cluster_relations(const Quiver& q) {
  for (const auto& c : chordless_cycles(q))
    if (!c.oriented) throw NotClusterQuiver("chordless cycle that is not oriented");
  for (std::size_t a = 0; a < q.m(); ++a) {
    const auto& ar = q.arrows[a];
    if (ar.src == ar.tgt) throw NotClusterQuiver("loop at " + q.vertices[ar.src]);
    if (q.arrow_count(ar.src, ar.tgt) > 1) throw NotClusterQuiver("multiple arrows " + ar.id);
    if (q.arrow_count(ar.tgt, ar.src) > 0) throw NotClusterQuiver("2-cycle through " + ar.id);
  }
  Presentation p;
  p.quiver = q;
  for (std::size_t a = 0; a < q.m(); ++a) {
    auto paths = shortest_antiparallel_paths(q, static_cast<int>(a));
    if (paths.size() > 2) throw NotClusterQuiver("arrow " + q.arrows[a].id + " has more than two antiparallel paths");
    Relation r;
    if (paths.size() == 1) r.terms = {Term{1, paths[0]}};
    if (paths.size() == 2) r.terms = {Term{1, paths[0]}, Term{-1, paths[1]}};
    if (!r.terms.empty()) p.relations.push_back(normalized(r));
  }
  p.validate();
  return p;
}

namespace {

bool same_ideal(const Presentation& a, const Presentation& b) {
  QuotientBasis qa(a), qb(b);
  if (qa.dim() != qb.dim()) return false;
  for (const auto& r : a.relations)
    if (!qb.in_ideal(r)) return false;
  for (const auto& r : b.relations)
    if (!qa.in_ideal(r)) return false;
  return true;
}

}  // namespace

IdempotentQuotient idempotent_quotient(const Presentation& c, const std::vector<int>& remove) {
  const Quiver& q = c.quiver;
  std::vector<int> keep, vmap(q.n(), -1);
  for (std::size_t v = 0; v < q.n(); ++v)
    if (std::find(remove.begin(), remove.end(), static_cast<int>(v)) == remove.end()) {
      vmap[v] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(v));
    }
  IdempotentQuotient out;
  Presentation& p = out.quotient;
  p.quiver = q.full_subquiver(keep);
  p.truncation = c.truncation;
  std::vector<int> amap(q.m(), -1);
  for (std::size_t a = 0; a < q.m(); ++a) {
    const auto& ar = q.arrows[a];
    if (vmap[ar.src] >= 0 && vmap[ar.tgt] >= 0) amap[a] = p.quiver.arrow_index(ar.id);
  }
  // killing e is an algebra map kQ -> kQ', so the images of generators generate
  for (const auto& r : c.relations) {
    Relation nr;
    for (const auto& t : r.terms) {
      Path np{vmap[t.path.src], vmap[t.path.tgt], {}};
      bool alive = np.src >= 0;
      for (int a : t.path.arrows) {
        alive = alive && amap[a] >= 0;
        np.arrows.push_back(amap[a]);
      }
      if (alive) nr.terms.push_back(Term{t.coef, np});
    }
    nr = normalized(nr);
    if (!nr.terms.empty()) p.relations.push_back(nr);
  }
  p = with_minimal_relations(p);
  try {
    out.cluster = synth_cluster_relations(p.quiver);
    out.consistent = same_ideal(p, *out.cluster);
    if (!out.consistent) out.detail = "relations differ from the cluster-tilted relations on the same quiver";
  } catch (const NotClusterQuiver& e) {
    out.detail = e.what();
  }
  return out;
}

Quiver augmented_quiver(const Presentation& b) {
  Quiver q = b.quiver;
  int k = 0;
  for (const auto& r : with_minimal_relations(b).relations) {
    std::string id;
    do id = "eta" + std::to_string(++k);
    while (q.arrow_index(id) >= 0);
    q.add_arrow(id, r.tgt(), r.src());
  }
  return q;
}

std::optional<std::vector<int>> find_cut_realization(const Presentation& b, const Presentation& c) {
  for (const auto& cut : enumerate_admissible_cuts(c.quiver)) {
    if (c.quiver.m() - cut.size() != b.quiver.m()) continue;
    auto quo = cut_quotient(c, cut);
    if (!quiver_iso(quo.quiver, b.quiver)) continue;
    try {
      if (schurian_iso(quo, b)) return cut;
    } catch (const NotSchurian&) {
    }
  }
  return std::nullopt;
}

namespace {

void paths_between(const Quiver& q, int a, int b, std::vector<Path>& out) {
  auto outs = q.out_arrows();
  std::vector<Path> stack{Path::trivial_at(a)};
  while (!stack.empty()) {
    Path p = stack.back();
    stack.pop_back();
    if (p.tgt == b) out.push_back(p);
    if (p.length() > q.n()) continue;  // directed quivers have no longer paths
    for (int x : outs[p.tgt]) stack.push_back(p.then(q, x));
  }
}

bool starts_with(const Path& mu, const Path& p) {
  return mu.src == p.src && p.length() <= mu.length() && std::equal(p.arrows.begin(), p.arrows.end(), mu.arrows.begin());
}
bool ends_with(const Path& mu, const Path& p) {
  return mu.tgt == p.tgt && p.length() <= mu.length() &&
         std::equal(p.arrows.rbegin(), p.arrows.rend(), mu.arrows.rbegin());
}

bool unique_involvement(const std::vector<Relation>& rels, std::size_t h, int alpha) {
  for (std::size_t k = 0; k < rels.size(); ++k)
    if (k != h && rels[k].involves_arrow(alpha)) return false;
  return true;
}

// rho = alpha mu_1 - gamma with mu_1 a prefix of mu (first) or rho = mu_2 alpha - gamma with mu_2 a suffix.
bool decomposes(const std::vector<Relation>& rels, std::size_t h, const Path& mu, bool first) {
  const Relation& r = rels[h];
  for (const auto& t : r.terms) {
    const auto& arr = t.path.arrows;
    int alpha = first ? arr.back() : arr.front();
    Path rest{first ? t.path.src : -1, first ? -1 : t.path.tgt, {}};
    if (first) {
      rest.arrows.assign(arr.begin(), arr.end() - 1);
      if (!starts_with(mu, rest)) continue;
    } else {
      rest.arrows.assign(arr.begin() + 1, arr.end());
      if (!ends_with(mu, rest)) continue;
    }
    bool gamma_free = true;
    for (const auto& u : r.terms)
      if (&u != &t && u.path.contains_arrow(alpha)) gamma_free = false;
    if (gamma_free && unique_involvement(rels, h, alpha)) return true;
  }
  return false;
}

}  // namespace

CondD cond_d_check(const Presentation& b) {
  CondD out;
  const Quiver& q = b.quiver;
  auto rels = with_minimal_relations(b).relations;
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels.size(); ++j) {
      std::vector<Path> mus;
      paths_between(q, rels[i].src(), rels[j].tgt(), mus);
      for (const auto& mu : mus) {
        if (decomposes(rels, i, mu, true) || decomposes(rels, j, mu, false)) continue;
        out.holds = false;
        out.rho1 = static_cast<int>(i);
        out.rho2 = static_cast<int>(j);
        out.mu = mu;
        out.witness = "rho1 = " + relation_string(q, rels[i]) + ", rho2 = " + relation_string(q, rels[j]) +
                      ", mu = " + path_string(q, mu);
        return out;
      }
    }
  return out;
}

Decision iterated_tilted_dynkin_decision(const Presentation& b) {
  Decision d;
  Presentation bm = with_minimal_relations(b);
  d.stage = "gldim";
  auto a = from_presentation(bm);
  auto res = simple_resolutions(a);
  d.gldim = gldim(res);
  if (d.gldim < 0 || d.gldim > 2) {
    d.detail = d.gldim < 0 ? "infinite global dimension" : "global dimension " + std::to_string(d.gldim);
    return d;
  }
  d.stage = "directed";
  if (!bm.quiver.is_acyclic() || !oriented_chordless_cycles(bm.quiver).empty()) {
    d.detail = "quiver has an oriented cycle";
    return d;
  }
  d.stage = "tits";
  if (!is_positive_definite(tits_matrix(bm.quiver, ext_dims(res, 2)))) {
    d.detail = "Tits form is not positive definite";
    return d;
  }
  d.stage = "synth";
  try {
    d.cluster = synth_cluster_relations(augmented_quiver(bm));
  } catch (const NotClusterQuiver& e) {
    d.detail = e.what();
    return d;
  }
  d.stage = "cut";
  auto cut = find_cut_realization(bm, *d.cluster);
  if (!cut) {
    d.detail = "no admissible cut of the cluster-tilted algebra is isomorphic to the input";
    return d;
  }
  d.cut = *cut;
  d.yes = true;
  return d;
}

}  // namespace qtilt
