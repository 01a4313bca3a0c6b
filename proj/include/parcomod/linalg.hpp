#pragma once

#include "parcomod/field.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace parcomod {

using Vec = std::vector<FieldElem>;

// (index, coefficient) pairs with strictly increasing index and nonzero coefficient.
using SparseVec = std::vector<std::pair<std::size_t, FieldElem>>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldElem& c, const Vec& v);
void axpy(Vec& y, const FieldElem& a, const Vec& x);  // y += a*x
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  Vec apply(const Vec& x) const;  // M x
  bool is_zero() const;
  // Row-major flattening (length rows*cols).
  const Vec& data() const { return a_; }
  static Matrix from_data(std::size_t rows, std::size_t cols, Vec data);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t r_ = 0, c_ = 0;
  Vec a_;
};

Matrix scale(const FieldElem& c, const Matrix& m);
FieldElem trace(const Matrix& m);
FieldElem determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

struct RrefResult {
  Matrix form;                     // rank nonzero rows first, then zero rows
  std::size_t rank = 0;
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Dense reference elimination with first-nonzero pivoting.
RrefResult rref(const Matrix& m);
// Basis (as rows) of { x : M x = 0 }, one vector per free column, in column order.
std::vector<Vec> kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
// Some x with M x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Incremental sparse row reduction. Rows are kept fully reduced against each
// other, so the final basis equals the dense rref of the same span.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ambient) : n_(ambient) {}
  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  // Reduces v in place against the stored rows; returns true if v is now zero.
  bool reduce(SparseVec& v) const;
  // Adds v to the span; returns true if the rank grew.
  bool insert(const Vec& v);
  bool insert(SparseVec v);
  bool contains(const Vec& v) const;
  // Rows sorted by pivot column (the canonical rref basis).
  std::vector<Vec> basis() const;
  const std::map<std::size_t, SparseVec>& rows() const { return rows_; }

 private:
  std::size_t n_;
  std::map<std::size_t, SparseVec> rows_;  // pivot column -> monic reduced row
};

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& coords);
  // { x : M x = 0 } inside k^{M.cols()}.
  static Subspace kernel_of(const Matrix& m);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  bool contains(const Vec& v) const;
  // Coordinates w.r.t. the echelon basis; nullopt if v is not in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  // v minus its component along the basis, using pivot elimination.
  Vec residual(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Preimage under M : k^{cols} -> k^{rows} of this subspace (ambient = rows).
  Subspace preimage(const Matrix& m) const;
  // Image of this subspace under M.
  Subspace image(const Matrix& m) const;
  bool is_subspace_of(const Subspace& o) const;

  // Projection k^n -> k^{n-dim} onto the complement spanned by the non-pivot
  // coordinates: row i of the result picks the i-th non-pivot coordinate of
  // the residual.
  Matrix quotient_map() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check(const Subspace& o) const;
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace parcomod
