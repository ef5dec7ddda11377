#pragma once
// The quotient kQ/I by truncation, minimal relations, cut quotients and
// isomorphism tests for presentations.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qtilt/quiver.hpp"

namespace qtilt {

struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSchurian : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAdmissibleCut : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All paths of length < max_len, grouped by (source, target).  Within a
// block, paths are ordered longest first so that echelon pivots fall on long
// paths and reduced forms are supported on short ones.
class PathSpace {
 public:
  PathSpace() = default;
  PathSpace(const Quiver& q, int max_len);

  int max_len() const { return max_len_; }
  std::size_t n() const { return n_; }
  const std::vector<Path>& block(int s, int t) const { return blocks_[s * n_ + t]; }
  int index(const Path& p) const;  // -1 if too long
  Vec vector_of(const Relation& r) const;
  Vec vector_of(const Path& p) const;
  Relation relation_of(int s, int t, const Vec& v) const;

  // x * (arrow a applied after) and (arrow a applied before) * x, truncated.
  Vec post(int s, int t, const Vec& x, const Quiver& q, int a) const;
  Vec pre(int s, int t, const Vec& x, const Quiver& q, int a) const;

 private:
  int max_len_ = 0;
  std::size_t n_ = 0;
  std::vector<std::vector<Path>> blocks_;
  std::vector<std::map<std::vector<int>, int>> pos_;
};

class QuotientBasis {
 public:
  explicit QuotientBasis(const Presentation& p);

  const Presentation& presentation() const { return pres_; }
  // Every path of length >= loewy() lies in I.
  int loewy() const { return space_.max_len() - 1; }
  std::size_t dim() const;
  std::size_t block_dim(int s, int t) const { return basis_[s * n_ + t].size(); }
  const std::vector<Path>& block_basis(int s, int t) const { return basis_[s * n_ + t]; }
  bool is_schurian() const;
  const PathSpace& space() const { return space_; }

  // Coordinates in block_basis(p.src, p.tgt).
  Vec reduce(const Path& p) const;
  Vec reduce(int s, int t, const Vec& path_coords) const;
  bool in_ideal(const Relation& r) const;
  // Ideal I/(paths of length >= max_len) in block (s,t), as echelon rows.
  const Echelon& ideal_block(int s, int t) const { return ideal_[s * n_ + t]; }

 private:
  Presentation pres_;
  std::size_t n_ = 0;
  PathSpace space_;
  std::vector<Echelon> ideal_;
  std::vector<std::vector<Path>> basis_;
  std::vector<std::vector<std::size_t>> basis_cols_;
};

// A basis of I/(R I + I R) with short representatives.  `ideal` holds the
// ideal inside sp block by block (index s * n + t); R^(sp.max_len() - 1) must lie in it.
std::vector<Relation> minimal_generators(const Quiver& q, const PathSpace& sp, const std::vector<Echelon>& ideal,
                                         const std::vector<Relation>& preferred);
std::vector<Relation> minimal_relations(const QuotientBasis& qb);
Presentation with_minimal_relations(const Presentation& p);

Presentation cut_quotient(const Presentation& p, const std::vector<int>& cut_arrows);

// Vertex bijections q1 -> q2 preserving arrow multiplicities.
std::vector<std::vector<int>> quiver_isomorphisms(const Quiver& q1, const Quiver& q2, std::size_t limit = 0);
std::optional<std::vector<int>> quiver_iso(const Quiver& q1, const Quiver& q2);

struct PresentationIso {
  std::vector<int> vertex_map;  // vertex of p1 -> vertex of p2
  std::vector<int> arrow_map;   // arrow of p1 -> arrow of p2
  std::vector<Rat> scalars;     // alpha -> scalars[alpha] * arrow_map[alpha]
};

std::optional<PresentationIso> schurian_iso(const Presentation& p1, const Presentation& p2);

}  // namespace qtilt
