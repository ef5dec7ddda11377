#include "doctest.h"
#include "qtilt/linalg.hpp"

using namespace qtilt;

namespace {
RatMatrix mat(std::vector<std::vector<int>> rows) {
  std::vector<Vec> vs;
  for (auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(x);
    vs.push_back(v);
  }
  return RatMatrix::from_rows(vs);
}
}  // namespace

TEST_CASE("kernel of the all-ones 2x2 matrix") {
  auto k = kernel_basis(mat({{1, 1}, {1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("rank of the identity") { CHECK(rank(RatMatrix::identity(5)) == 5); }

TEST_CASE("solve is exact") {
  auto x = solve(mat({{2}}), Vec{Rat(3)});
  CHECK(x[0] == Rat(3, 2));
  CHECK_THROWS_AS(solve(mat({{1, 1}, {2, 2}}), Vec{Rat(1), Rat(3)}), InconsistentSystem);
  CHECK_FALSE(try_solve(mat({{0}}), Vec{Rat(1)}).has_value());
}

TEST_CASE("rank plus nullity and kernel annihilation") {
  auto a = mat({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  auto k = kernel_basis(a);
  CHECK(rank(a) + k.size() == a.cols());
  for (const auto& v : k) CHECK(is_zero(a * v));
  Vec b{Rat(3), Rat(6), Rat(1)};
  auto x = solve(a, b);
  CHECK((a * x) == b);
}

TEST_CASE("leading principal minors") {
  auto m1 = leading_principal_minors(RatMatrix::identity(3));
  CHECK(m1 == std::vector<Rat>{1, 1, 1});
  CHECK(leading_principal_minors(mat({{2, -1}, {-1, 2}})) == std::vector<Rat>{2, 3});
  CHECK(leading_principal_minors(mat({{2, -1, 1}, {-1, 2, -1}, {1, -1, 2}})) == std::vector<Rat>{2, 3, 4});
  CHECK_THROWS_AS(leading_principal_minors(mat({{1, 2}, {0, 1}})), NotSymmetric);
}

TEST_CASE("dimension mismatches are reported") {
  CHECK_THROWS_AS(mat({{1, 2}}) * mat({{1, 2}}), DimensionMismatch);
  CHECK_THROWS_AS(add(Vec(2), Vec(3)), DimensionMismatch);
}

TEST_CASE("subspace operations") {
  std::vector<Vec> a{{1, 0, 0}, {0, 1, 0}};
  std::vector<Vec> b{{0, 1, 0}, {0, 0, 1}};
  CHECK(subspace_sum(a, b, 3).size() == 3);
  auto inter = subspace_intersection(a, b, 3);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0][0] == 0);
  CHECK(inter[0][2] == 0);
  auto reps = quotient_representatives(a, {Vec{1, 1, 0}}, 3);
  CHECK(reps.size() == 1);
  CHECK(image_basis(mat({{1, 2}, {2, 4}})).size() == 1);
}

TEST_CASE("determinant and echelon") {
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
  Echelon e(3);
  CHECK(e.insert(Vec{1, 1, 0}));
  CHECK(e.insert(Vec{0, 1, 1}));
  CHECK_FALSE(e.insert(Vec{1, 2, 1}));
  CHECK(e.contains(Vec{2, 1, -1}));
  CHECK(e.non_pivots() == std::vector<std::size_t>{2});
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == Rat(-1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}
