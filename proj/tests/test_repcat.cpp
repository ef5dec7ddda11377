#include "doctest.h"
#include "oracles.hpp"
#include "qtilt/forms.hpp"
#include "qtilt/repcat.hpp"

using namespace qtilt;

namespace {

Vec as_vec(const std::vector<int>& d) {
  Vec v;
  for (int x : d) v.push_back(x);
  return v;
}

int euler(const RatMatrix& e, const std::vector<int>& x, const std::vector<int>& y) {
  return static_cast<int>(dot(as_vec(x), e * as_vec(y)).get_num().get_si());
}

}  // namespace

TEST_CASE("Dynkin builtins") {
  CHECK(dynkin_type(dynkin_quiver("A5")).str() == "A5");
  CHECK(dynkin_type(dynkin_quiver("D6")).str() == "D6");
  CHECK(dynkin_type(dynkin_quiver("E7")).str() == "E7");
  CHECK_THROWS_AS(dynkin_quiver("F4"), NotDynkin);
  Quiver tri;
  for (const char* v : {"1", "2", "3", "4", "5", "6", "7"}) tri.add_vertex(v);
  // three arms of length two: affine E6
  for (auto [s, t] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})
    tri.add_arrow("x" + std::to_string(s) + std::to_string(t), s, t);
  CHECK_THROWS_AS(dynkin_type(tri), NotDynkin);
}

TEST_CASE("Hom and Ext over A2 and A3") {
  Quiver a2 = dynkin_quiver("A2");
  auto s1 = simple_rep(a2, 0), s2 = simple_rep(a2, 1), p1 = projective_rep(a2, 0);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK(ext1_dim(a2, s1, s2) == 1);
  CHECK(ext1_dim(a2, s2, s1) == 0);
  CHECK(hom_dim(a2, s2, p1) == 1);
  CHECK(hom_dim(a2, p1, s2) == 0);
  CHECK(hom_dim(a2, p1, s1) == 1);
  CHECK(is_isomorphic(a2, ar_translate(a2, s1), s2));
  CHECK(ar_translate(a2, p1).is_zero());
  CHECK(is_isomorphic(a2, ar_translate_inv(a2, s2), s1));

  Quiver a3 = dynkin_quiver("A3");
  auto p1_3 = projective_rep(a3, 0);
  CHECK(hom_dim(a3, projective_rep(a3, 2), p1_3) == 1);
  CHECK_FALSE(is_indecomposable(a3, direct_sum(simple_rep(a3, 0), simple_rep(a3, 2))));
  CHECK(is_indecomposable(a3, p1_3));
  for (std::size_t a = 0; a < a3.m(); ++a) {
    auto f = projective_map(a3, static_cast<int>(a));
    CHECK(is_morphism(a3, projective_rep(a3, a3.arrows[a].tgt), projective_rep(a3, a3.arrows[a].src), f));
    auto g = injective_map(a3, static_cast<int>(a));
    CHECK(is_morphism(a3, injective_rep(a3, a3.arrows[a].tgt), injective_rep(a3, a3.arrows[a].src), g));
  }
}

TEST_CASE("translate is inverse on non-projectives of D4") {
  Quiver d4 = dynkin_quiver("D4");
  auto t = knit_indecomposables(d4);
  for (const auto& x : t.items) {
    if (x.projective) continue;
    auto tm = ar_translate(d4, x.rep);
    CHECK(is_indecomposable(d4, tm));
    CHECK(is_isomorphic(d4, ar_translate_inv(d4, tm), x.rep));
    CHECK(tm.dims == t.items[t.find(x.orbit, x.level - 1)].dimv);
  }
  // functoriality on a nonzero morphism between non-injectives
  const auto& m = t.items[t.find(1, 0)].rep;
  const auto& n = t.items[t.find(0, 0)].rep;
  auto hom = hom_basis(d4, m, n);
  REQUIRE_FALSE(hom.empty());
  auto tm = ar_translate_inv(d4, m), tn = ar_translate_inv(d4, n);
  auto f = ar_translate_inv(d4, m, n, hom[0]);
  CHECK(is_morphism(d4, tm, tn, f));
  auto back = ar_translate(d4, tm, tn, f);
  CHECK(is_morphism(d4, ar_translate(d4, tm), ar_translate(d4, tn), back));
}

TEST_CASE("knitting counts match positive roots") {
  std::vector<std::pair<std::string, std::size_t>> cases{
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"D4", 12}, {"D5", 20}, {"E6", 36}};
  for (const auto& [name, count] : cases) {
    CAPTURE(name);
    Quiver q = dynkin_quiver(name);
    auto t = knit_indecomposables(q);
    CHECK(t.size() == count);
    auto roots = oracle::positive_roots(q);
    CHECK(roots.size() == count);
    std::set<std::vector<int>> seen;
    for (const auto& x : t.items) seen.insert(x.dimv);
    CHECK(seen == roots);
    for (std::size_t j = 0; j < q.n(); ++j) CHECK(t.nu[j].first >= 0);
  }
}

TEST_CASE("Serre duality, directedness and the Euler form") {
  for (const char* name : {"A4", "D5"}) {
    CAPTURE(name);
    Quiver q = dynkin_quiver(name);
    auto t = knit_indecomposables(q);
    auto e = euler_form_hereditary(q);
    auto hom = hom_table(t);
    auto ext = ext1_table(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto tau = ar_translate(q, t.items[i].rep);
      for (std::size_t j = 0; j < t.size(); ++j) {
        CHECK(hom[i][j] - ext[i][j] == euler(e, t.items[i].dimv, t.items[j].dimv));
        CHECK(ext[i][j] == hom_dim(q, t.items[j].rep, tau));
        if (i != j) CHECK_FALSE((hom[i][j] > 0 && hom[j][i] > 0));
      }
      CHECK(hom[i][i] == 1);
      CHECK(ext[i][i] == 0);
    }
  }
}

TEST_CASE("tilting modules") {
  CHECK(enumerate_tilting_modules(knit_indecomposables(dynkin_quiver("A2"))).size() == 2);
  CHECK(enumerate_tilting_modules(knit_indecomposables(dynkin_quiver("A3"))).size() == 5);
  CHECK(static_cast<long>(enumerate_tilting_modules(knit_indecomposables(dynkin_quiver("A4"))).size()) ==
        oracle::catalan(4));
}
