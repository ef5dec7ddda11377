#pragma once
// Rolling of tilting complexes over a Dynkin derived category:
// rho(T) = T' + F^{-1} X with X the summands of T on the section Sigma(T).

#include <optional>
#include <stdexcept>
#include <vector>

#include "qtilt/derived.hpp"
#include "qtilt/quiver.hpp"

namespace qtilt {

struct PotentialNotDecreasing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MaxStepsExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rolled {
  std::vector<ZVertex> complex;  // summand i of the input stays at index i
  Section sigma;                 // Sigma(T)
  std::vector<int> moved;        // indices of X
  bool hom_x_rest_zero = false;  // Hom(X, T') = 0
  bool below_tau_sigma = false;  // rho(T) < tau Sigma(T)
};
Rolled roll(const DerivedCategory& d, const std::vector<ZVertex>& t);

struct RollCheck {
  int gldim = 0;
  std::vector<ZVertex> rolled;
  TiltingVerdict rolled_verdict;
  std::optional<int> rolled_gldim;  // only when rho(T) is tilting
  // Hom(tau X_a, T'_b[k]) != 0 for k in {0, -1}; witness.a indexes X, witness.b indexes T'
  std::vector<TiltingWitness> tau_x_witnesses;
  // Hom(F^{-1} X_a, T'_b[j]) != 0 for j != 0; empty iff rho(T) is tilting
  std::vector<TiltingWitness> shifted_witnesses;
  // gldim <= 2 implies rho(T) tilting of gldim <= 2, and the witness criterion agrees
  bool consistent() const;
};
RollCheck roll_preserves(const DerivedCategory& d, const std::vector<ZVertex>& t);

struct Potential {
  std::vector<int> m;  // m(i) = sum_j d(T_i, T_j)
  std::vector<int> G;  // summands outside mod H(Sigma)[0]
  int n = 0;
};
Potential potential(const DerivedCategory& d, const std::vector<ZVertex>& t, const Section& s);

// A section whose module region contains every summand, if one exists.
std::optional<Section> module_section(const DerivedCategory& d, const std::vector<ZVertex>& t);

struct RollStep {
  std::vector<ZVertex> complex;
  Presentation presentation;
  int gldim = 0;
  Section sigma;
  int n = 0;
  bool tilted = false;
  std::optional<Section> witness;  // module_section when tilted
};
struct RollTrace {
  std::vector<RollStep> steps;
  int tilted_at = -1;  // first tilted step
};

// steps + 1 entries for h = 0..steps.
RollTrace roll_sequence(const DerivedCategory& d, const std::vector<ZVertex>& t, int steps);
// Stops at the first tilted step; throws MaxStepsExceeded past max_steps rolls.
RollTrace roll_to_tilted(const DerivedCategory& d, const std::vector<ZVertex>& t, int max_steps = 64);

}  // namespace qtilt
