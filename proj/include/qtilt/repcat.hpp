#pragma once
// Representations of Dynkin quivers: Hom and Ext^1, the AR translate and
// knitting of all indecomposables.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qtilt/dynkin.hpp"
#include "qtilt/linalg.hpp"

namespace qtilt {

struct NotIndecomposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Representation {
  std::vector<int> dims;
  std::vector<RatMatrix> maps;  // maps[a] : dims[src] -> dims[tgt]

  static Representation zero(const Quiver& q);
  bool is_zero() const;
  int total_dim() const;
  void validate(const Quiver& q) const;
};

struct ModuleMorphism {
  std::vector<RatMatrix> comps;  // comps[v] : M_v -> N_v
};

bool is_morphism(const Quiver& q, const Representation& m, const Representation& n, const ModuleMorphism& f);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g after f
ModuleMorphism identity_morphism(const Representation& m);

Representation simple_rep(const Quiver& q, int v);
Representation projective_rep(const Quiver& q, int v);  // P_v, tree quivers
Representation injective_rep(const Quiver& q, int v);   // I_v, tree quivers
Representation direct_sum(const Representation& a, const Representation& b);
// Canonical maps P_w -> P_v and I_w -> I_v for an arrow v -> w.
ModuleMorphism projective_map(const Quiver& q, int arrow);
ModuleMorphism injective_map(const Quiver& q, int arrow);

std::vector<ModuleMorphism> hom_basis(const Quiver& q, const Representation& m, const Representation& n);
int hom_dim(const Quiver& q, const Representation& m, const Representation& n);

// Ext^1(M,N) as the cokernel of
//   delta: (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_s(a), N_t(a)),  f |-> N_a f_s - f_t M_a.
class ExtSpace {
 public:
  ExtSpace(const Quiver& q, const Representation& m, const Representation& n);
  int dim() const { return static_cast<int>(reps_.size()); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& representatives() const { return reps_; }
  Vec coords(const Vec& ambient_vec) const;  // coordinates modulo the image of delta

  // e in the ambient space of (M,N); g : M' -> M gives e o g in that of (M',N).
  static Vec precompose(const Quiver& q, const Representation& m2, const Representation& m,
                        const Representation& n, const Vec& e, const ModuleMorphism& g);
  // f : N -> N' gives f o e in the ambient space of (M,N').
  static Vec postcompose(const Quiver& q, const Representation& m, const Representation& n,
                         const Representation& n2, const Vec& e, const ModuleMorphism& f);

 private:
  std::size_t ambient_ = 0;
  Echelon img_;
  std::vector<std::size_t> free_;  // non-pivot coordinates spanning a complement of the image
  std::vector<Vec> reps_;
};

int ext1_dim(const Quiver& q, const Representation& m, const Representation& n);

bool is_indecomposable(const Quiver& q, const Representation& m);
bool is_isomorphic(const Quiver& q, const Representation& a, const Representation& b);

// tau^{-1} M via (tau^{-1} M)_v = Ext^1(I_v, M); zero when M is injective.
Representation ar_translate_inv(const Quiver& q, const Representation& m);
// tau M via (tau M)_v = D Ext^1(M, P_v); zero when M is projective.
Representation ar_translate(const Quiver& q, const Representation& m);
ModuleMorphism ar_translate_inv(const Quiver& q, const Representation& m, const Representation& n,
                                const ModuleMorphism& f);
ModuleMorphism ar_translate(const Quiver& q, const Representation& m, const Representation& n,
                            const ModuleMorphism& f);

struct Indec {
  Representation rep;
  std::vector<int> dimv;
  int orbit = 0;  // M = tau^{-level} P_orbit
  int level = 0;
  bool projective = false;
  bool injective = false;
};

struct IndecTable {
  Quiver q;
  DynkinType type;
  std::vector<Indec> items;
  std::map<std::pair<int, int>, int> index;  // (orbit, level) -> item
  std::vector<std::pair<int, int>> nu;       // I_j = tau^{-nu[j].second} P_{nu[j].first}
  std::vector<int> orbit_length;             // number of levels in each orbit

  int find(int orbit, int level) const;  // -1 if absent
  std::size_t size() const { return items.size(); }
};

IndecTable knit_indecomposables(const Quiver& q);

// All n-element sets of indecomposables without Ext^1 in either direction.
std::vector<std::vector<int>> enumerate_tilting_modules(const IndecTable& t);
std::vector<std::vector<int>> ext1_table(const IndecTable& t);
std::vector<std::vector<int>> hom_table(const IndecTable& t);

}  // namespace qtilt
