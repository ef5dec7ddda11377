#pragma once
// Endomorphism algebras of complexes over a Dynkin derived category, graded by
// powers of F, and the maps relating B, its relation extension R(B) and the
// orbit algebra C(B).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/algebra.hpp"
#include "qtilt/derived.hpp"

namespace qtilt {

struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GldimTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GradingMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (+)_{lo <= k <= hi} Hom(T, F^k T) with product g * f = F^a(g) o f.
// truncate: products landing outside the window are set to zero (used for R(B));
// otherwise Hom(T, F^k T) must vanish at the window boundary and beyond it.
ConcreteAlgebra end_algebra(const DerivedCategory& d, const std::vector<ZVertex>& t, int lo, int hi,
                            bool truncate = false);

inline ConcreteAlgebra end_algebra(const DerivedCategory& d, const std::vector<ZVertex>& t) {
  return end_algebra(d, t, 0, 0, true);
}
ConcreteAlgebra cluster_algebra(const DerivedCategory& d, const std::vector<ZVertex>& t, int lo = -3, int hi = 6);

// dims[a][b] = dim Hom(T_a, F^k T_b)
std::vector<std::vector<int>> graded_hom_dims(const DerivedCategory& d, const std::vector<ZVertex>& t, int k);

// Ext^2(DB, B) realized as Hom(T, FT) with its B-B-bimodule structure.
struct Bimodule {
  int dim = 0;
  std::vector<std::vector<int>> block_dims;  // [src][tgt]
  // Generators of the bimodule as a count per (src, tgt): top of E over rad B.
  std::vector<std::vector<int>> top_dims;
};
Bimodule ext2_bimodule(const DerivedCategory& d, const std::vector<ZVertex>& t);

struct RelationExtension {
  ConcreteAlgebra algebra;  // degrees 0 and 1
  Presentation presentation;
};
RelationExtension relation_extension(const DerivedCategory& d, const std::vector<ZVertex>& t,
                                     const std::string& name = "R");

// Degree-1 elements of a graded algebra that generate its degree-1 part as a
// bimodule over the degree-0 part, in full coordinates.
std::vector<Vec> degree_one_generators(const ConcreteAlgebra& c);

struct PiReport {
  bool multiplicative = false;
  std::vector<int> kernel;  // basis indices of C outside degrees 0 and 1
  bool kernel_in_rad2 = false;
  bool kernel_is_eta_square = false;
  bool split = false;        // pi o sigma = id on B
  bool quivers_iso = false;  // quiver(C) ~ quiver(R)
  bool holds() const {
    return multiplicative && kernel_in_rad2 && kernel_is_eta_square && split && quivers_iso;
  }
};
// c graded over a window containing {0, 1}; r the truncation to degrees {0, 1} of the same complex.
PiReport projection_pi(const ConcreteAlgebra& c, const ConcreteAlgebra& r);

// Conditions (b)/(c): eta_j * mu * eta_i = 0 in C for all degree-one generators
// and degree-zero basis elements mu. Returns a violating triple description if any.
struct CondBC {
  bool holds = true;
  std::string witness;
};
CondBC cond_bc(const ConcreteAlgebra& c);

// Brute-force search for a tilting complex with summands in shifts lo..hi whose
// endomorphism algebra is isomorphic to p (schurian presentations only).
struct RealizeResult {
  std::optional<std::vector<ZVertex>> complex;
  std::size_t candidates = 0;
};
RealizeResult realize_presentation(const DerivedCategory& d, const Presentation& p, int lo = 0, int hi = 2);

}  // namespace qtilt
