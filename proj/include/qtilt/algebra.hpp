#pragma once
// Finite-dimensional algebras given by a basis and structure constants,
// with radical, presentation extraction and projective resolutions.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtilt/quotient.hpp"

namespace qtilt {

struct NotBasic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A basis element lives in e_tgt A e_src: it is a map from src to tgt.
struct BasisLabel {
  int src = 0;
  int tgt = 0;
  int deg = 0;
  std::string name;
};

class ConcreteAlgebra {
 public:
  ConcreteAlgebra() = default;
  ConcreteAlgebra(std::vector<std::string> vertex_names, std::vector<BasisLabel> basis,
                  std::vector<int> idempotents, bool graded = false);

  std::size_t n() const { return vertex_names_.size(); }
  std::size_t dim() const { return basis_.size(); }
  bool graded() const { return graded_; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(int i) const { return basis_[i]; }
  int idempotent(int v) const { return idempotents_[v]; }

  // Basis indices of e_t A e_s, and an element's position inside its block.
  const std::vector<int>& block(int s, int t) const { return blocks_[s * n() + t]; }
  int block_pos(int i) const { return block_pos_[i]; }

  // b_j * b_i with b_i applied first; zero unless tgt(i) == src(j).
  void set_product(int j, int i, SparseVec v);
  const SparseVec& product(int j, int i) const { return products_[static_cast<std::size_t>(j) * dim() + i]; }

  Vec mul(const Vec& x, const Vec& y) const;  // full coordinates, x * y
  // x in block (s,t), y in block (r,s): x * y in block (r,t), block coordinates.
  Vec mul_block(const Vec& x, int s, int t, const Vec& y, int r) const;
  Vec embed(int s, int t, const Vec& block_coords) const;

  // Checks orthogonality and completeness of idempotents, label compatibility,
  // degree additivity and associativity on all basis triples (or `samples` random ones).
  void verify(std::size_t samples = 0, unsigned seed = 1) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<BasisLabel> basis_;
  std::vector<int> idempotents_;
  bool graded_ = false;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_pos_;
  std::vector<SparseVec> products_;
};

ConcreteAlgebra from_presentation(const Presentation& p);

// Radical per block (s,t), in block coordinates.
struct Radical {
  std::vector<std::vector<Vec>> blocks;
  int nilpotency = 0;  // least L with rad^L = 0
  std::size_t dim() const;
};

Radical radical(const ConcreteAlgebra& a);
// rad^k per block, for k >= 1.
std::vector<std::vector<Vec>> radical_power(const ConcreteAlgebra& a, const Radical& r, int k);

struct Extraction {
  Presentation presentation;
  std::vector<Vec> arrow_lifts;  // full coordinates, one per arrow
};

// Arrow ids are a<src>_<tgt>, with a numeric suffix for repeated pairs.
Extraction extract_presentation(const ConcreteAlgebra& a, const std::string& name = "A");

struct Resolution {
  // terms[k][w] = multiplicity of P_w in the k-th term of a minimal
  // projective resolution of S_v, which is dim Ext^k(S_v, S_w).
  std::vector<std::vector<int>> terms;
  int pd = -1;  // -1 when the resolution did not stop within the cap
};

std::vector<Resolution> simple_resolutions(const ConcreteAlgebra& a, int cap = 0);
int gldim(const ConcreteAlgebra& a);  // -1 for infinite (or beyond the cap)
std::vector<std::vector<int>> ext_dims(const ConcreteAlgebra& a, int k);
int gldim(const std::vector<Resolution>& res);
std::vector<std::vector<int>> ext_dims(const std::vector<Resolution>& res, int k);

}  // namespace qtilt
