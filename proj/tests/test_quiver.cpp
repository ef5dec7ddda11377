#include <algorithm>

#include "doctest.h"
#include "qtilt/cycles.hpp"
#include "qtilt/quotient.hpp"

using namespace qtilt;

namespace {

Presentation load(const std::string& name) { return load_presentation(std::string(QTILT_DATA_DIR) + "/" + name); }

Quiver linear_a(int n) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i - 1, i);
  return q;
}

std::vector<std::string> ids(const Quiver& q, const std::vector<int>& arrows) {
  std::vector<std::string> out;
  for (int a : arrows) out.push_back(q.arrows[a].id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  auto p = load("twoideals_i2.pres");
  CHECK(p.quiver.n() == 4);
  CHECK(p.quiver.m() == 5);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].terms.size() == 2);
  auto again = parse_presentation(format_presentation(p));
  CHECK(format_presentation(again) == format_presentation(p));
}

TEST_CASE("parse errors carry line and column") {
  const char* bad_len = "quiver X\nvertices 1 2\narrows\na: 1 -> 2\nrelations\na\n";
  try {
    parse_presentation(bad_len);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
    CHECK(e.col == 1);
  }
  CHECK_THROWS_AS(parse_presentation("quiver X\nvertices 1 2\narrows\na: 1 -> 3\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("quiver X\nvertices 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("quiver X\nvertices 1\narrows\na: 1 -> 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("quiver X\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\nrelations\na*b\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("quiver X\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\nrelations\n0*b*a\n"),
                  ParseError);
}

TEST_CASE("coefficients and commutativity relations") {
  auto p = parse_presentation(
      "quiver S\nvertices 1 2 3 4\narrows\na: 1 -> 2\nb: 2 -> 4\nc: 1 -> 3\nd: 3 -> 4\nrelations\n"
      "2*b*a - 3/2*d*c\n");
  REQUIRE(p.relations.size() == 1);
  QuotientBasis qb(p);
  CHECK(qb.dim() == 4 + 4 + 1);
  CHECK(qb.is_schurian());
}

TEST_CASE("basis of the quotient") {
  auto a3 = load("a3rel.pres");
  QuotientBasis qb(a3);
  CHECK(qb.dim() == 5);
  auto c3 = load("cycle3.pres");
  QuotientBasis qc(c3);
  CHECK(qc.dim() == 6);
  CHECK(qc.is_schurian());
  QuotientBasis qa(load("a2.pres"));
  CHECK(qa.dim() == 3);
  auto bad = load("cycle3.pres");
  bad.relations.pop_back();
  bad.relations.pop_back();
  bad.relations.pop_back();
  bad.truncation = 5;
  CHECK_THROWS_AS(QuotientBasis{bad}, TruncationTooSmall);
}

TEST_CASE("chordless cycles") {
  auto c3 = load("cycle3.pres").quiver;
  auto cs = chordless_cycles(c3);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].oriented);
  CHECK(cs[0].vertices.size() == 3);

  auto q = load("twoideals_i1.pres").quiver;
  auto c49 = chordless_cycles(q);
  REQUIRE(c49.size() == 2);
  int oriented = 0;
  for (const auto& c : c49) {
    if (c.oriented) {
      ++oriented;
      CHECK(ids(q, c.arrows) == std::vector<std::string>{"alpha", "beta", "gamma"});
    } else {
      CHECK(ids(q, c.arrows) == std::vector<std::string>{"alpha", "alpha1", "alpha2"});
    }
    // each vertex meets exactly two arrows of the full subquiver
    auto sub = q.full_subquiver(c.vertices);
    std::vector<int> deg(sub.n(), 0);
    for (const auto& a : sub.arrows) {
      ++deg[a.src];
      ++deg[a.tgt];
    }
    for (int d : deg) CHECK(d == 2);
  }
  CHECK(oriented == 1);
  CHECK(chordless_cycles(linear_a(4)).empty());

  Quiver two;
  two.add_vertex("1");
  two.add_vertex("2");
  two.add_arrow("x", 0, 1);
  two.add_arrow("y", 1, 0);
  auto c2 = chordless_cycles(two);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].oriented);
}

TEST_CASE("admissible cuts") {
  auto c3 = load("cycle3.pres").quiver;
  CHECK(enumerate_admissible_cuts(c3).size() == 3);
  auto acyclic = enumerate_admissible_cuts(linear_a(4));
  REQUIRE(acyclic.size() == 1);
  CHECK(acyclic[0].empty());
  auto nocut = load("nocut.pres").quiver;
  CHECK(nocut.n() == 11);
  CHECK(nocut.m() == 16);
  CHECK(oriented_chordless_cycles(nocut).size() == 7);
  CHECK(enumerate_admissible_cuts(nocut).empty());
  auto qt = load("twoideals_i1.pres").quiver;
  for (const auto& cut : enumerate_admissible_cuts(qt)) {
    CHECK(cut.size() == 1);
    for (const auto& c : oriented_chordless_cycles(qt)) {
      int hits = 0;
      for (int a : c.arrows) hits += std::count(cut.begin(), cut.end(), a);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("cut quotients") {
  auto c3 = load("cycle3.pres");
  int c = c3.quiver.arrow_index("c");
  auto b = cut_quotient(c3, {c});
  CHECK(b.quiver.m() == 2);
  REQUIRE(b.relations.size() == 1);
  CHECK(relation_string(b.quiver, b.relations[0]) == "b*a");
  CHECK(QuotientBasis(b).dim() <= QuotientBasis(c3).dim());

  auto p1 = load("twoideals_i1.pres"), p2 = load("twoideals_i2.pres");
  int alpha = p1.quiver.arrow_index("alpha");
  auto b1 = cut_quotient(p1, {alpha});
  auto b2 = cut_quotient(p2, {alpha});
  REQUIRE(b1.relations.size() == 1);
  CHECK(relation_string(b1.quiver, b1.relations[0]) == "gamma*beta");
  REQUIRE(b2.relations.size() == 2);
  CHECK(QuotientBasis(b1).dim() == 14);
  CHECK(QuotientBasis(b2).dim() == 12);
  CHECK_FALSE(schurian_iso(b1, b2).has_value());

  auto same = cut_quotient(load("a3rel.pres"), {});
  CHECK(format_presentation(same) == format_presentation(load("a3rel.pres")));
  CHECK_THROWS_AS(cut_quotient(c3, {}), NotAdmissibleCut);
}

TEST_CASE("schurian isomorphism") {
  auto c3 = load("cycle3.pres");
  auto id = schurian_iso(c3, c3);
  REQUIRE(id.has_value());
  auto relabeled = parse_presentation(
      "quiver D\nvertices x y z\narrows\nu: y -> z\nv: z -> x\nw: x -> y\nrelations\nv*u\nw*v\nu*w\n");
  CHECK(schurian_iso(c3, relabeled).has_value());
  CHECK_FALSE(schurian_iso(c3, load("a3rel.pres")).has_value());

  // scalars are found for rescaled commutativity relations
  auto sq1 = parse_presentation(
      "quiver S\nvertices 1 2 3 4\narrows\na: 1 -> 2\nb: 2 -> 4\nc: 1 -> 3\nd: 3 -> 4\nrelations\nb*a - d*c\n");
  auto sq2 = parse_presentation(
      "quiver S\nvertices 1 2 3 4\narrows\na: 1 -> 2\nb: 2 -> 4\nc: 1 -> 3\nd: 3 -> 4\nrelations\nb*a + 7*d*c\n");
  auto iso = schurian_iso(sq1, sq2);
  REQUIRE(iso.has_value());
  auto nonschur = parse_presentation("quiver K\nvertices 1 2\narrows\na: 1 -> 2\nb: 1 -> 2\nrelations\n");
  CHECK_THROWS_AS(schurian_iso(nonschur, nonschur), NotSchurian);
}

TEST_CASE("antiparallel and parallel paths") {
  auto c3 = load("cycle3.pres").quiver;
  auto ap = shortest_antiparallel_paths(c3, c3.arrow_index("a"));
  REQUIRE(ap.size() == 1);
  CHECK(path_string(c3, ap[0]) == "c*b");
  CHECK(shortest_antiparallel_paths(linear_a(4), 1).empty());

  // G(2,2): two length-two branches v1 -> v3 and an arrow back
  auto g = parse_presentation(
      "quiver G\nvertices 1 2 2p 3\narrows\na: 1 -> 2\nb: 2 -> 3\nc: 1 -> 2p\nd: 2p -> 3\neta: 3 -> 1\nrelations\n");
  CHECK(shortest_antiparallel_paths(g.quiver, g.quiver.arrow_index("eta")).size() == 2);

  auto qt = load("twoideals_i1.pres").quiver;
  CHECK(shortest_parallel_paths(qt, qt.arrow_index("alpha")).size() == 1);
  CHECK(parallel_paths(qt, qt.arrow_index("alpha")).size() == 1);
  CHECK(antiparallel_paths(qt, qt.arrow_index("beta")).size() == 2);
  CHECK(shortest_antiparallel_paths(qt, qt.arrow_index("beta")).size() == 1);
}

TEST_CASE("minimal relations drop redundant generators") {
  auto p = load("a3rel.pres");
  p.relations.push_back(p.relations[0]);
  p.relations[1].terms[0].coef = 5;
  auto m = with_minimal_relations(p);
  CHECK(m.relations.size() == 1);
}

TEST_CASE("dot output is deterministic") {
  auto p = load("cycle3.pres");
  CHECK(to_dot(p) == to_dot(load("cycle3.pres")));
  CHECK(to_dot(p).find("style=dashed") != std::string::npos);
}
