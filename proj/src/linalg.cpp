#include "qtilt/linalg.hpp"

#include <sstream>

namespace qtilt {

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false, digit = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || !digit || k + 1 == s.size()) throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (s[k] >= '0' && s[k] <= '9') {
      digit = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!digit) throw std::invalid_argument("bad rational: " + s);
  Rat q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub");
  Vec r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& s) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& y, const Rat& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols[0].size();
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_cols");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec RatMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<long>(i * cols_),
             data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec RatMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

Vec RatMatrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  Vec r(rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (sgn((*this)(i, k)) != 0) r[i] += (*this)(i, k) * v[k];
  }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  RatMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  RatMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
  RatMatrix r(*this);
  for (auto& x : r.data_) x *= s;
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Rref rref(RatMatrix m) {
  Rref out;
  std::size_t r = 0;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && sgn(m(p, c)) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const RatMatrix& m) {
  Rref r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vec v(C);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> try_solve(const RatMatrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m(i, a.cols());
  return x;
}

Vec solve(const RatMatrix& a, const Vec& b) {
  auto x = try_solve(a, b);
  if (!x) throw InconsistentSystem("linear system has no solution");
  return *x;
}

std::vector<Vec> image_basis(const RatMatrix& m) {
  Rref r = rref(m);
  std::vector<Vec> out;
  for (auto p : r.pivots) out.push_back(m.col(p));
  return out;
}

Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<Rat> leading_principal_minors(const RatMatrix& m) {
  if (!m.is_symmetric()) throw NotSymmetric("leading_principal_minors needs a symmetric matrix");
  std::vector<Rat> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = m(i, j);
    out.push_back(determinant(b));
  }
  return out;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vs) e.insert(v);
  return e.rows();
}

std::vector<Vec> subspace_sum(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : a) e.insert(v);
  for (const auto& v : b) e.insert(v);
  return e.rows();
}

std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                       std::size_t dim) {
  auto ba = span_basis(a, dim);
  auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // x in both iff x = A s = B t; kernel of [A | -B].
  RatMatrix m(dim, ba.size() + bb.size());
  for (std::size_t j = 0; j < ba.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = ba[j][i];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, ba.size() + j) = -bb[j][i];
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(m)) {
    Vec x(dim);
    for (std::size_t j = 0; j < ba.size(); ++j) axpy(x, k[j], ba[j]);
    out.push_back(std::move(x));
  }
  return span_basis(out, dim);
}

std::vector<Vec> quotient_representatives(const std::vector<Vec>& v, const std::vector<Vec>& w,
                                          std::size_t dim) {
  Echelon e(dim);
  for (const auto& x : w) e.insert(x);
  std::vector<Vec> reps;
  for (const auto& x : v)
    if (e.insert(x)) reps.push_back(x);
  return reps;
}

std::vector<std::size_t> Echelon::non_pivots() const {
  std::vector<std::size_t> out;
  std::vector<bool> piv(dim_, false);
  for (auto p : pivots_) piv[p] = true;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!piv[c]) out.push_back(c);
  return out;
}

Vec Echelon::reduce(Vec v) const {
  if (v.size() != dim_) throw DimensionMismatch("Echelon::reduce");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (sgn(c) == 0) continue;
    Rat f = c;
    axpy(v, -f, rows_[r]);
  }
  return v;
}

bool Echelon::insert(const Vec& v0) {
  Vec v = reduce(v0);
  std::size_t p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rat f = row[p];
    axpy(row, -f, v);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace qtilt
