#include "qtilt/forms.hpp"

#include "qtilt/cycles.hpp"

namespace qtilt {

RatMatrix euler_form_hereditary(const Quiver& q) {
  if (!q.is_acyclic()) throw CyclicQuiver("the Euler form of a path algebra needs an acyclic quiver");
  RatMatrix e = RatMatrix::identity(q.n());
  for (const auto& a : q.arrows) e(a.src, a.tgt) -= 1;
  return e;
}

RatMatrix euler_form(const std::vector<Resolution>& res) {
  std::size_t n = res.size();
  RatMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (res[i].pd < 0) throw std::invalid_argument("infinite projective dimension");
    for (std::size_t k = 0; k < res[i].terms.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) e(i, j) += (k % 2 ? -1 : 1) * res[i].terms[k][j];
  }
  return e;
}

RatMatrix tits_matrix(const Quiver& q, const std::vector<std::vector<int>>& ext2) {
  std::size_t n = q.n();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  for (const auto& ar : q.arrows) {
    a(ar.src, ar.tgt) -= 1;
    a(ar.tgt, ar.src) -= 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a(i, j) += ext2[i][j] + ext2[j][i];
  return a;
}

Rat quadratic_value(const RatMatrix& a, const Vec& x) { return dot(x, a * x) / 2; }

RatMatrix symmetrize(const RatMatrix& e) { return e + e.transpose(); }

bool is_positive_definite(const RatMatrix& a) {
  for (const auto& m : leading_principal_minors(a))
    if (sgn(m) <= 0) return false;
  return true;
}

bool sign_condition_check(const Quiver& q, const RatMatrix& a) {
  std::size_t n = q.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat arrows = q.arrow_count(static_cast<int>(i), static_cast<int>(j)) +
                   q.arrow_count(static_cast<int>(j), static_cast<int>(i));
      if (abs(a(i, j)) != arrows) throw CompanionMismatch("|A_ij| differs from the number of arrows");
    }
  for (const auto& c : oriented_chordless_cycles(q)) {
    int positive = 0;
    for (int ar : c.arrows)
      if (sgn(a(q.arrows[ar].src, q.arrows[ar].tgt)) > 0) ++positive;
    if (positive != 1) return false;
  }
  return true;
}

}  // namespace qtilt
