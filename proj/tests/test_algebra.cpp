#include "doctest.h"
#include "qtilt/algebra.hpp"
#include "qtilt/forms.hpp"

using namespace qtilt;

namespace {

Presentation load(const std::string& name) { return load_presentation(std::string(QTILT_DATA_DIR) + "/" + name); }

Presentation hereditary_a(int n) {
  Presentation p;
  for (int i = 1; i <= n; ++i) p.quiver.add_vertex(std::to_string(i));
  for (int i = 1; i < n; ++i) p.quiver.add_arrow("a" + std::to_string(i), i - 1, i);
  return p;
}

// Cartan matrix C_ij = dim e_j A e_i; the Euler form is C^{-T} in the simple basis.
RatMatrix cartan_euler(const ConcreteAlgebra& a) {
  std::size_t n = a.n();
  RatMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(a.block(static_cast<int>(i), static_cast<int>(j)).size());
  RatMatrix inv(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec col = solve(c, unit(n, k));
    for (std::size_t i = 0; i < n; ++i) inv(i, k) = col[i];
  }
  return inv.transpose();
}

}  // namespace

TEST_CASE("radical of small algebras") {
  auto a2 = from_presentation(hereditary_a(2));
  auto r = radical(a2);
  CHECK(r.dim() == 1);
  CHECK(r.nilpotency == 2);
  Presentation fields;
  fields.quiver.add_vertex("1");
  fields.quiver.add_vertex("2");
  CHECK(radical(from_presentation(fields)).dim() == 0);
  auto c3 = from_presentation(load("cycle3.pres"));
  auto rc = radical(c3);
  CHECK(rc.dim() == 3);
  CHECK(rc.nilpotency <= static_cast<int>(c3.dim()) + 1);
  c3.verify();
}

TEST_CASE("global dimension") {
  CHECK(gldim(from_presentation(hereditary_a(3))) == 1);
  CHECK(gldim(from_presentation(hereditary_a(1))) == 0);
  auto a3 = from_presentation(load("a3rel.pres"));
  CHECK(gldim(a3) == 2);
  auto e2 = ext_dims(a3, 2);
  CHECK(e2[0][2] == 1);
  int total = 0;
  for (auto& row : e2)
    for (int x : row) total += x;
  CHECK(total == 1);
  CHECK(gldim(from_presentation(load("cycle3.pres"))) == -1);
}

TEST_CASE("extraction round trip") {
  for (const char* f : {"a3rel.pres", "cycle3.pres", "twoideals_i2.pres", "a2.pres"}) {
    auto p = load(f);
    auto a = from_presentation(p);
    auto ex = extract_presentation(a);
    CHECK(QuotientBasis(ex.presentation).dim() == a.dim());
    if (QuotientBasis(p).is_schurian()) CHECK(schurian_iso(p, ex.presentation).has_value());
    CHECK(ex.presentation.relations.size() == with_minimal_relations(p).relations.size());
  }
  auto ex = extract_presentation(from_presentation(hereditary_a(3)));
  CHECK(ex.presentation.relations.empty());
  CHECK(ex.presentation.quiver.m() == 2);
}

TEST_CASE("Euler forms") {
  Quiver a2 = hereditary_a(2).quiver;
  auto e = euler_form_hereditary(a2);
  Vec p1{1, 1}, s1{1, 0}, s2{0, 1};
  CHECK(dot(p1, e * s1) == 1);
  CHECK(dot(s1, e * s2) == -1);
  for (std::size_t i = 0; i < 2; ++i) CHECK(e(i, i) == 1);
  CHECK_THROWS_AS(euler_form_hereditary(load("cycle3.pres").quiver), CyclicQuiver);
}

TEST_CASE("Tits form and positivity") {
  auto h3 = from_presentation(hereditary_a(3));
  auto t = tits_matrix(hereditary_a(3).quiver, ext_dims(h3, 2));
  CHECK(t == symmetrize(euler_form_hereditary(hereditary_a(3).quiver)));
  CHECK(is_positive_definite(t));

  auto p = load("a3rel.pres");
  auto a = from_presentation(p);
  auto res = simple_resolutions(a);
  auto ta = tits_matrix(p.quiver, ext_dims(res, 2));
  CHECK(leading_principal_minors(ta) == std::vector<Rat>{2, 3, 4});
  CHECK(ta(0, 2) == 1);
  CHECK(is_positive_definite(ta));
  // with gldim <= 2 the Tits and Euler forms agree
  CHECK(symmetrize(euler_form(res)) == ta);
  CHECK(symmetrize(cartan_euler(a)) == ta);
  CHECK(quadratic_value(ta, Vec{1, 1, 1}) == 2);

  std::vector<Vec> k{{2, -2}, {-2, 2}};
  CHECK_FALSE(is_positive_definite(RatMatrix::from_rows(k)));
  CHECK(is_positive_definite(RatMatrix::identity(4)));
}

TEST_CASE("sign condition") {
  auto c3 = load("cycle3.pres").quiver;
  std::vector<Vec> cut{{2, -1, 1}, {-1, 2, -1}, {1, -1, 2}};
  CHECK(sign_condition_check(c3, RatMatrix::from_rows(cut)));
  std::vector<Vec> neg{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK_FALSE(sign_condition_check(c3, RatMatrix::from_rows(neg)));
  std::vector<Vec> bad{{2, -2, 1}, {-2, 2, -1}, {1, -1, 2}};
  CHECK_THROWS_AS(sign_condition_check(c3, RatMatrix::from_rows(bad)), CompanionMismatch);
  auto a3 = hereditary_a(3).quiver;
  CHECK(sign_condition_check(a3, symmetrize(euler_form_hereditary(a3))));
}
