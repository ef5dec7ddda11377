#pragma once
// The bounded derived category of a Dynkin path algebra, realized as the
// mesh category of ZQ. A vertex (i, l) stands for tau^{-l} P_i; every
// indecomposable object has exactly one such coordinate.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtilt/repcat.hpp"

namespace qtilt {

struct ZVertex {
  int orbit = 0;
  int level = 0;
  bool operator<(const ZVertex& o) const { return orbit != o.orbit ? orbit < o.orbit : level < o.level; }
  bool operator==(const ZVertex& o) const { return orbit == o.orbit && level == o.level; }
  bool operator!=(const ZVertex& o) const { return !(*this == o); }
};

// A module stalk M[shift] with M an entry of the IndecTable.
struct DObject {
  int indec = 0;
  int shift = 0;
};

// File form of a complex: summand shift^k(tau^{-t} P_i).
struct ComplexSummand {
  int vertex = 0;
  int tau = 0;
  int shift = 0;
};

struct DComplex {
  std::string quiver_name;
  std::vector<ComplexSummand> summands;
};

struct Section {
  std::vector<int> level;  // per orbit
  ZVertex at(int orbit) const { return ZVertex{orbit, level[orbit]}; }
  bool operator==(const Section& o) const { return level == o.level; }
};

struct TiltingWitness {
  int a = 0, b = 0;  // summand indices
  int shift = 0;     // Hom(T_a, T_b[shift]) != 0
  int dim = 0;
};

struct TiltingVerdict {
  bool tilting = false;
  std::string reason;
  std::vector<TiltingWitness> witnesses;
};

class DerivedCategory {
 public:
  explicit DerivedCategory(const Quiver& q);

  const Quiver& quiver() const { return table_.q; }
  const IndecTable& table() const { return table_; }
  int n() const { return static_cast<int>(table_.q.n()); }
  int coxeter_number() const { return coxeter_; }
  int height(const ZVertex& x) const { return 2 * x.level + c_[x.orbit]; }
  int height_offset(int orbit) const { return c_[orbit]; }
  int graph_distance(int i, int j) const { return dist_[i][j]; }

  ZVertex tau(const ZVertex& x) const { return {x.orbit, x.level - 1}; }
  ZVertex tau_inv(const ZVertex& x) const { return {x.orbit, x.level + 1}; }
  ZVertex shift(const ZVertex& x, int k) const;
  ZVertex F(const ZVertex& x, int k = 1) const;  // (tau^{-1} o [1])^k
  ZVertex F_inv(const ZVertex& x) const { return F(x, -1); }

  ZVertex coordinate(const DObject& x) const;
  DObject object(const ZVertex& x) const;
  std::string label(const ZVertex& x) const;  // e.g. "tau^-2 P3 [1]"
  std::vector<ZVertex> coordinates(const DComplex& c) const;
  DComplex to_complex(const std::vector<ZVertex>& t) const;  // module stalk form

  std::vector<ZVertex> successors(const ZVertex& x) const;
  std::vector<ZVertex> predecessors(const ZVertex& x) const;

  // Path order of the AR quiver.
  bool leq(const ZVertex& x, const ZVertex& y) const;
  int distance(const ZVertex& x, const ZVertex& y) const;  // 0 when there is no path

  int hom_dim(const ZVertex& x, const ZVertex& y) const;
  // Morphisms are coordinate vectors in the chosen basis of Hom(x, y).
  Vec compose(const ZVertex& x, const ZVertex& y, const ZVertex& z, const Vec& f, const Vec& g) const;  // g o f
  Vec apply_F(const ZVertex& x, const ZVertex& y, const Vec& f, int k) const;  // F^k(f)
  // Basis element b of Hom(x, y) as a path of vertices from x to y.
  std::vector<ZVertex> basis_path(const ZVertex& x, const ZVertex& y, int b) const;

  TiltingVerdict is_tilting_complex(const std::vector<ZVertex>& t) const;
  // Hom(x, y[i]) = 0 = Hom(y, x[i]) for all i != 0.
  bool compatible(const ZVertex& x, const ZVertex& y) const;
  // All tilting complexes whose summands are module stalks shifted by lo..hi,
  // with at least one summand in shift lo.
  std::vector<std::vector<ZVertex>> enumerate_tilting_complexes(int lo, int hi) const;

  bool is_section(const Section& s) const;
  Section section_of(const std::vector<ZVertex>& t) const;
  // Coordinates of tau^{-1} Sigma[-1], the projectives of H(Sigma), indexed by orbit.
  std::vector<ZVertex> projective_slice(const Section& s) const;
  bool in_module_region(const ZVertex& x, const Section& s) const;
  // All sections whose vertices lie in [lo, hi] by height.
  std::vector<Section> sections_between(int lo, int hi) const;

 private:
  struct Node {
    int dim = 0;
    std::map<ZVertex, RatMatrix> in;                  // maps from predecessors
    std::vector<std::vector<ZVertex>> paths;          // path from the source for each basis element
  };
  using Functor = std::map<ZVertex, Node>;  // Hom((orbit, 0), -)

  const Functor& functor(int orbit) const;
  const Node* node(const ZVertex& x, const ZVertex& y) const;
  Vec eval_path(const ZVertex& x, const std::vector<ZVertex>& path, Vec v) const;

  IndecTable table_;
  std::vector<int> c_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<int>> nbr_;
  std::vector<int> sigma_, t_;  // I_i = tau^{-t_i} P_{sigma(i)}
  int coxeter_ = 0;
  mutable std::map<int, Functor> functors_;
};

DComplex parse_complex(const std::string& text);  // throws ParseError
DComplex load_complex(const std::string& path);
std::string format_complex(const DComplex& c);
bool same_summands(std::vector<ZVertex> a, std::vector<ZVertex> b);

}  // namespace qtilt
