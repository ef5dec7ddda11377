// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "qtilt/algebra.hpp"
#include "qtilt/corpus.hpp"
#include "qtilt/cycles.hpp"
#include "qtilt/dynkincut.hpp"
#include "qtilt/endoalg.hpp"
#include "qtilt/forms.hpp"
#include "qtilt/rolling.hpp"

using namespace qtilt;

namespace {

std::string data(const std::string& name) { return std::string(QTILT_DATA_DIR) + "/" + name; }
Presentation load(const std::string& name) { return load_presentation(data(name)); }

// Collects the first failed expectation of a criterion.
struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
};

int euler(const RatMatrix& e, const std::vector<int>& x, const std::vector<int>& y) {
  Vec a, b;
  for (int v : x) a.push_back(v);
  for (int v : y) b.push_back(v);
  return static_cast<int>(dot(a, e * b).get_num().get_si());
}

void knitting(Check& c) {
  std::vector<std::pair<std::string, std::size_t>> cases;
  for (std::size_t n = 1; n <= 8; ++n) cases.push_back({"A" + std::to_string(n), n * (n + 1) / 2});
  for (std::size_t n = 4; n <= 8; ++n) cases.push_back({"D" + std::to_string(n), n * (n - 1)});
  cases.push_back({"E6", 36});
  for (const auto& [name, count] : cases) {
    Quiver q = dynkin_quiver(name);
    auto t = knit_indecomposables(q);
    auto roots = oracle::positive_roots(q);
    std::set<std::vector<int>> dims;
    for (const auto& x : t.items) dims.insert(x.dimv);
    c.expect(t.size() == count, name + ": " + std::to_string(t.size()) + " indecomposables");
    c.expect(roots.size() == count && dims == roots, name + ": dimension vectors differ from the root oracle");
  }
}

void serre(Check& c) {
  for (const char* name : {"A4", "D5"}) {
    Quiver q = dynkin_quiver(name);
    auto t = knit_indecomposables(q);
    auto e = euler_form_hereditary(q);
    auto hom = hom_table(t);
    auto ext = ext1_table(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto tau = ar_translate(q, t.items[i].rep);
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::string at = std::string(name) + " pair " + std::to_string(i) + "," + std::to_string(j);
        c.expect(hom_dim(q, t.items[j].rep, tau) == ext[i][j], "Serre duality at " + at);
        c.expect(!(hom[i][j] > 0 && ext[i][j] > 0), "Hom and Ext both nonzero at " + at);
        c.expect(hom[i][j] - ext[i][j] == euler(e, t.items[i].dimv, t.items[j].dimv), "Euler form at " + at);
      }
    }
  }
}

void tilting_counts(Check& c) {
  for (auto [name, expected] : std::vector<std::pair<std::string, int>>{{"A2", 2}, {"A3", 5}}) {
    auto t = knit_indecomposables(dynkin_quiver(name));
    auto ext = ext1_table(t);
    int n = static_cast<int>(t.q.n()), m = static_cast<int>(t.size()), brute = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (__builtin_popcount(mask) != n) continue;
      bool rigid = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if ((mask >> i & 1) && (mask >> j & 1) && ext[i][j]) rigid = false;
      brute += rigid;
    }
    c.expect(brute == expected, name + ": brute force found " + std::to_string(brute));
    c.expect(static_cast<int>(enumerate_tilting_modules(t).size()) == expected, name + ": enumeration disagrees");
  }
}

void three_cycle(Check& c) {
  DerivedCategory a3(dynkin_quiver("A3"));
  auto b = load("a3rel.pres");
  auto r = realize_presentation(a3, b, 0, 0);
  c.expect(r.complex.has_value(), "A3 one-relation algebra not realized by a tilting module");
  if (!r.complex) return;
  auto rel = relation_extension(a3, *r.complex);
  c.expect(schurian_iso(rel.presentation, load("cycle3.pres")).has_value(), "R(B) is not the 3-cycle");
  c.expect(rel.presentation.relations.size() == 3, "R(B) does not have three relations");
  for (const auto& x : rel.presentation.relations)
    c.expect(x.is_zero_relation() && x.terms[0].path.length() == 2, "R(B) relation is not a length-2 zero relation");
  auto pi = projection_pi(cluster_algebra(a3, *r.complex), rel.algebra);
  c.expect(pi.holds() && pi.kernel.empty(), "C(B) has a nonzero kernel");
  auto cuts = enumerate_admissible_cuts(rel.presentation.quiver);
  c.expect(cuts.size() == 3, "3-cycle does not have three admissible cuts");
  for (const auto& cut : cuts) {
    auto q = cut_quotient(rel.presentation, cut);
    int gd = gldim(from_presentation(q));
    c.expect(gd >= 0 && gd <= 2, "cut quotient of gldim " + std::to_string(gd));
    c.expect(iterated_tilted_dynkin_decision(q).yes, "cut quotient rejected by verify-iff");
  }
}

void d8(Check& c) {
  DerivedCategory d(dynkin_quiver("D8"));
  auto t = d.coordinates(load_complex(data("d8.cplx")));
  c.expect(d.is_tilting_complex(t).tilting, "starting complex is not tilting");
  auto tr = roll_to_tilted(d, t);
  c.expect(tr.tilted_at == 3, "first tilted step is " + std::to_string(tr.tilted_at));
  for (int h = 0; h < 4 && h < static_cast<int>(tr.steps.size()); ++h)
    c.expect(schurian_iso(tr.steps[h].presentation, load("d8_b" + std::to_string(h) + ".pres")).has_value(),
             "B" + std::to_string(h) + " differs from its fixture");
  auto seq = roll_sequence(d, t, 11);
  for (int h = 5; h <= 8; ++h)
    c.expect(schurian_iso(seq.steps[h].presentation, seq.steps[h + 3].presentation).has_value(),
             "B" + std::to_string(h) + " is not isomorphic to B" + std::to_string(h + 3));
  auto rq = load("d8_r.pres").quiver;
  for (int h = 0; h <= 8; ++h)
    c.expect(quiver_iso(relation_extension(d, seq.steps[h].complex).presentation.quiver, rq).has_value(),
             "quiver of R(B" + std::to_string(h) + ") differs");
}

void gldim3_roll(Check& c) {
  DerivedCategory a4(dynkin_quiver("A4"));
  auto t = a4.coordinates(load_complex(data("a4_gldim3.cplx")));
  c.expect(a4.is_tilting_complex(t).tilting, "complex is not tilting");
  auto rc = roll_preserves(a4, t);
  c.expect(rc.gldim == 3, "gldim is " + std::to_string(rc.gldim));
  c.expect(!rc.rolled_verdict.tilting, "rolled complex is tilting");
  bool witness = false;
  for (const auto& w : rc.rolled_verdict.witnesses)
    witness |= w.a == 3 && w.b == 0 && w.shift == 1 && rc.rolled[3] == a4.F_inv(t[3]) && rc.rolled[0] == t[0];
  c.expect(witness, "no witness Hom(F^-1 T4, T1[1])");
}

void split_extension(Check& c) {
  for (const char* name : {"A3", "A4"}) {
    DerivedCategory d(dynkin_quiver(name));
    int used = 0;
    for (const auto& t : d.enumerate_tilting_complexes(0, 2)) {
      if (gldim(end_algebra(d, t)) > 2) continue;
      ++used;
      auto rep = projection_pi(cluster_algebra(d, t), end_algebra(d, t, 0, 1, true));
      std::string at = std::string(name) + " complex " + std::to_string(used);
      c.expect(rep.multiplicative, "pi not multiplicative at " + at);
      c.expect(rep.split, "pi o sigma != id at " + at);
      c.expect(rep.kernel_in_rad2, "kernel not in rad^2 at " + at);
      c.expect(rep.kernel_is_eta_square, "kernel differs from <eta>^2 at " + at);
      c.expect(rep.quivers_iso, "quivers of C and R differ at " + at);
    }
    c.expect(used > 0, std::string("no complexes over ") + name);
  }
}

void corpus(Check& c) {
  for (const char* name : {"A4", "D4"}) {
    auto rep = run_corpus(name);
    c.expect(rep.ok(), std::string(name) + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
    c.expect(rep.cut_quotients > 0 && rep.verified == rep.cut_quotients, std::string(name) + ": not every cut verified");
  }
}

void not_a_cut(Check& c) {
  auto b = load("notcut_b.pres");
  auto q = load("notcut_r.pres").quiver;
  c.expect(quiver_iso(augmented_quiver(b), q).has_value(), "augmented quiver differs from the Q_R(B) fixture");
  auto cl = synth_cluster_relations(q);
  c.expect(!find_cut_realization(b, cl), "B realized as a cut");
  std::vector<int> ab{q.arrow_index("alpha"), q.arrow_index("beta")};
  c.expect(!is_admissible_cut(q, ab), "{alpha, beta} is admissible");
  auto over = overcut_cycles(q, ab);
  bool gba = over.size() == 1 && over[0].arrows.size() == 3 &&
             std::count(over[0].arrows.begin(), over[0].arrows.end(), q.arrow_index("gamma")) == 1;
  c.expect(gba, "overcut cycle is not gamma beta alpha");
  c.expect(!iterated_tilted_dynkin_decision(b).yes, "verify-iff answered YES");
}

void relext_not_cluster(Check& c) {
  auto b = load("kernel_b.pres");
  DerivedCategory a5(dynkin_quiver("A5"));
  auto r = realize_presentation(a5, b);
  c.expect(r.complex.has_value(), "B not realized over A5");
  if (!r.complex) return;
  auto ca = cluster_algebra(a5, *r.complex);
  auto rel = relation_extension(a5, *r.complex);
  auto pi = projection_pi(ca, rel.algebra);
  auto bx = extract_presentation(end_algebra(a5, *r.complex), "B").presentation;
  auto iso = schurian_iso(b, bx);
  c.expect(iso.has_value(), "realized algebra differs from B");
  if (!iso) return;
  int tr = iso->vertex_map[b.quiver.vertex_index("TR")], tl = iso->vertex_map[b.quiver.vertex_index("TL")];
  bool psi_phi = false;
  for (int k : pi.kernel) psi_phi |= ca.label(k).src == tr && ca.label(k).tgt == tl && ca.label(k).deg == 2;
  c.expect(!pi.kernel.empty() && psi_phi, "kernel of pi does not contain psi phi");
  c.expect(!cond_bc(ca).holds, "condition (c) holds");
  auto cd = cond_d_check(b);
  auto rels = with_minimal_relations(b).relations;
  c.expect(!cd.holds && cd.mu.trivial() && b.quiver.vertices[cd.mu.src] == "BM" &&
               relation_string(b.quiver, rels[cd.rho1]) == "delta*gamma" &&
               relation_string(b.quiver, rels[cd.rho2]) == "beta*alpha",
           "condition (d) does not fail at (delta gamma, beta alpha) with mu = e_BM");
  auto cp = extract_presentation(ca, "C").presentation;
  c.expect(!schurian_iso(rel.presentation, cp).has_value(), "R(B) isomorphic to C(B)");
  c.expect(schurian_iso(cp, load("kernel_c.pres")).has_value(), "C(B) differs from its fixture");
  for (int h : {0, 1, 2})
    c.expect(!cond_d_check(load("d8_b" + std::to_string(h) + ".pres")).holds, "condition (d) holds for B" + std::to_string(h));
}

void monotone(Check& c) {
  auto check_trace = [&](const RollTrace& tr, const std::string& at) {
    for (std::size_t h = 1; h < tr.steps.size(); ++h) {
      int prev = tr.steps[h - 1].n, cur = tr.steps[h].n;
      c.expect(prev > 0 ? cur < prev : cur == 0, "potential " + std::to_string(prev) + " -> " + std::to_string(cur) + " at " + at);
    }
  };
  for (const char* name : {"A3", "A4", "D4"}) {
    DerivedCategory d(dynkin_quiver(name));
    for (const auto& t : d.enumerate_tilting_complexes(0, 2))
      if (gldim(end_algebra(d, t)) <= 2) check_trace(roll_sequence(d, t, 8), name);
  }
  DerivedCategory d8(dynkin_quiver("D8"));
  check_trace(roll_sequence(d8, d8.coordinates(load_complex(data("d8.cplx"))), 11), "D8");
}

void no_cut(Check& c) {
  auto q = load("nocut.pres").quiver;
  c.expect(!oriented_chordless_cycles(q).empty(), "quiver has no oriented chordless cycles");
  c.expect(enumerate_admissible_cuts(q).empty(), "an admissible cut was found");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"knitting counts", knitting},
      {"Serre duality and directedness", serre},
      {"tilting module counts", tilting_counts},
      {"3-cycle pipeline", three_cycle},
      {"D8 rolling reproduction", d8},
      {"gldim 3 rolling counterexample", gldim3_roll},
      {"split extension suite over A3 and A4", split_extension},
      {"cut corpus over A4 and D4", corpus},
      {"algebra that is not a cut of its relation extension", not_a_cut},
      {"relation extension differs from C(B)", relext_not_cluster},
      {"potential monotonicity", monotone},
      {"quiver without admissible cut", no_cut},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first;
    if (!c.ok) std::cout << ": " << c.why.str();
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
