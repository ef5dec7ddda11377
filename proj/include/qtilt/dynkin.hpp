#pragma once
// Builtin Dynkin quivers and recognition of Dynkin trees.

#include <stdexcept>
#include <string>

#include "qtilt/quiver.hpp"

namespace qtilt {

struct NotDynkin : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DynkinType {
  char family = 'A';
  int rank = 0;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
};

// A_n: 1 -> 2 -> ... -> n.  D_n: 1 -> ... -> n-2 with n-2 -> n-1 and n-2 -> n.
// E_n: 1 -> ... -> n-1 with 3 -> n.
Quiver dynkin_quiver(char family, int n);
Quiver dynkin_quiver(const std::string& name);  // "A4", "D8", "E6"
DynkinType dynkin_type(const Quiver& q);         // throws NotDynkin

}  // namespace qtilt
