#pragma once
// Euler and Tits forms and quasi-Cartan companions.

#include <stdexcept>
#include <vector>

#include "qtilt/algebra.hpp"

namespace qtilt {

struct CyclicQuiver : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CompanionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// E_ij = delta_ij - #(arrows i -> j); <x,y> = x^T E y.
RatMatrix euler_form_hereditary(const Quiver& q);
// E_ij = sum_k (-1)^k dim Ext^k(S_i, S_j); needs finite global dimension.
RatMatrix euler_form(const std::vector<Resolution>& res);

// Symmetric matrix A with q_B(x) = x^T A x / 2:
// A_ii = 2, A_ij = -#arrows between i and j + ext2[i][j] + ext2[j][i].
RatMatrix tits_matrix(const Quiver& q, const std::vector<std::vector<int>>& ext2);
Rat quadratic_value(const RatMatrix& a, const Vec& x);
RatMatrix symmetrize(const RatMatrix& e);  // E + E^T

bool is_positive_definite(const RatMatrix& a);
bool sign_condition_check(const Quiver& q, const RatMatrix& a);

}  // namespace qtilt
