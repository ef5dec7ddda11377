#pragma once
// Exact rational linear algebra over GMP rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtilt {

using Rat = mpq_class;
using Vec = std::vector<Rat>;
using SparseVec = std::vector<std::pair<int, Rat>>;

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const Rat& q);
Rat parse_rational(const std::string& s);  // "p" or "p/q", throws std::invalid_argument

bool is_zero(const Vec& v);
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
void axpy(Vec& y, const Rat& a, const Vec& x);  // y += a x
Rat dot(const Vec& a, const Vec& b);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
  static RatMatrix from_cols(const std::vector<Vec>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix operator*(const RatMatrix& o) const;
  Vec operator*(const Vec& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& s) const;
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  // Block helpers used when stacking linear systems.
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

struct Rref {
  RatMatrix m;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::vector<Vec> kernel_basis(const RatMatrix& m);
Vec solve(const RatMatrix& a, const Vec& b);  // throws InconsistentSystem
std::optional<Vec> try_solve(const RatMatrix& a, const Vec& b);
std::vector<Vec> image_basis(const RatMatrix& m);  // basis of the column space
Rat determinant(RatMatrix m);
std::vector<Rat> leading_principal_minors(const RatMatrix& m);

// Subspaces are given by spanning lists of vectors of a common length.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim);
std::vector<Vec> subspace_sum(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);
std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                       std::size_t dim);
// Vectors of v completing a basis of w (w inside v) to a basis of v.
std::vector<Vec> quotient_representatives(const std::vector<Vec>& v, const std::vector<Vec>& w,
                                          std::size_t dim);

// Incrementally maintained reduced row echelon form.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  // Reduces v so that it is zero on every pivot column.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return qtilt::is_zero(reduce(v)); }
  // Returns true if v was independent of the current rows.
  bool insert(const Vec& v);

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qtilt
