#include "qtilt/corpus.hpp"

#include "qtilt/algebra.hpp"
#include "qtilt/cycles.hpp"
#include "qtilt/dynkin.hpp"
#include "qtilt/dynkincut.hpp"
#include "qtilt/endoalg.hpp"
#include "qtilt/forms.hpp"
#include "qtilt/quotient.hpp"
#include "qtilt/rolling.hpp"

namespace qtilt {

std::vector<Quiver> orientations(const Quiver& q) {
  std::vector<Quiver> out;
  std::size_t m = q.m();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    Quiver r = q;
    for (std::size_t a = 0; a < m; ++a)
      if (mask >> a & 1) std::swap(r.arrows[a].src, r.arrows[a].tgt);
    bool seen = false;
    for (const auto& o : out) seen = seen || quiver_iso(o, r).has_value();
    if (!seen) out.push_back(r);
  }
  return out;
}

namespace {

bool iso(const Presentation& a, const Presentation& b) {
  try {
    return schurian_iso(a, b).has_value();
  } catch (const NotSchurian&) {
    return false;
  }
}

std::string where(const Quiver& q, const std::vector<int>& t) {
  std::string s = q.name + " [";
  for (int x : t) s += " " + std::to_string(x);
  return s + " ]";
}

}  // namespace

CorpusReport run_corpus(const std::string& type, const CorpusOptions& opt) {
  CorpusReport rep;
  rep.type = type;
  Quiver base = dynkin_quiver(type);
  std::vector<Presentation> clusters;
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

  auto qs = orientations(base);
  rep.orientations = static_cast<int>(qs.size());
  for (std::size_t o = 0; o < qs.size(); ++o) {
    qs[o].name = type + "_" + std::to_string(o);
    DerivedCategory d(qs[o]);
    for (const auto& tm : enumerate_tilting_modules(d.table())) {
      ++rep.tilting_modules;
      std::vector<ZVertex> t;
      for (int m : tm) t.push_back(d.coordinate({m, 0}));
      auto b = end_algebra(d, t);
      if (gldim(b) > 2) fail("tilted algebra of gldim > 2 at " + where(qs[o], tm));
      auto bp = extract_presentation(b, "B").presentation;
      auto r = relation_extension(d, t);
      auto c = cluster_algebra(d, t);
      auto pi = projection_pi(c, r.algebra);
      if (!pi.holds() || !pi.kernel.empty()) fail("projection at " + where(qs[o], tm));
      if (!cond_bc(c).holds || !cond_d_check(bp).holds) fail("R(B) = C(B) criteria at " + where(qs[o], tm));
      Presentation synth;
      try {
        synth = synth_cluster_relations(r.presentation.quiver);
      } catch (const NotClusterQuiver& e) {
        fail(std::string("synth: ") + e.what() + " at " + where(qs[o], tm));
        continue;
      }
      if (!iso(synth, r.presentation)) fail("synthesized relations differ at " + where(qs[o], tm));
      if (!find_cut_realization(bp, r.presentation)) fail("B is not a cut of R(B) at " + where(qs[o], tm));
      bool known = false;
      for (const auto& k : clusters) known = known || iso(k, r.presentation);
      if (!known) clusters.push_back(r.presentation);
    }
  }
  rep.cluster_tilted = static_cast<int>(clusters.size());

  for (const auto& c : clusters) {
    for (const auto& cut : enumerate_admissible_cuts(c.quiver)) {
      ++rep.cuts;
      auto b = cut_quotient(c, cut);
      auto res = simple_resolutions(from_presentation(b));
      int gd = gldim(res);
      if (gd < 0 || gd > 2) continue;
      ++rep.cut_quotients;
      std::string at = format_presentation(b);
      if (!b.quiver.is_acyclic() || !oriented_chordless_cycles(b.quiver).empty()) fail("cut quotient with a cycle:\n" + at);
      if (!is_positive_definite(tits_matrix(b.quiver, ext_dims(res, 2)))) fail("Tits form not positive definite:\n" + at);
      auto v = iterated_tilted_dynkin_decision(b);
      if (v.yes)
        ++rep.verified;
      else
        fail("verify-iff " + v.stage + ": " + v.detail + "\n" + at);
    }
  }

  DerivedCategory d(base);
  for (const auto& t : d.enumerate_tilting_complexes(0, opt.roll_hi)) {
    if (gldim(end_algebra(d, t)) > 2) continue;
    ++rep.roll_traces;
    try {
      auto tr = roll_sequence(d, t, opt.roll_steps);
      if (tr.tilted_at < 0) fail("rolling did not reach a tilted algebra");
      auto rq = relation_extension(d, t).presentation.quiver;
      for (const auto& s : tr.steps)
        if (!quiver_iso(relation_extension(d, s.complex).presentation.quiver, rq)) fail("R quiver changed along a roll");
    } catch (const std::exception& e) {
      fail(std::string("roll: ") + e.what());
    }
  }
  return rep;
}

}  // namespace qtilt
