#include "parcomod/linalg.hpp"

#include <algorithm>

namespace parcomod {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = FieldElem(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vec scale(const FieldElem& c, const Vec& v) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

void axpy(Vec& y, const FieldElem& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec d(n);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, Vec data) {
  if (data.size() != rows * cols) throw DimensionMismatch("matrix data length");
  Matrix m;
  m.r_ = rows;
  m.c_ = cols;
  m.a_ = std::move(data);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != c_) throw DimensionMismatch("set_row: length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * c_));
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != r_) throw DimensionMismatch("set_col: length mismatch");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != c_) throw DimensionMismatch("apply: length mismatch");
  Vec y(r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i) {
      const FieldElem& a = (*this)(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

bool Matrix::is_zero() const { return is_zero_vec(a_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const FieldElem& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shape mismatch");
  return Matrix::from_data(a.r_, a.c_, add(a.a_, b.a_));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference shape mismatch");
  return Matrix::from_data(a.r_, a.c_, sub(a.a_, b.a_));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

Matrix scale(const FieldElem& c, const Matrix& m) {
  return Matrix::from_data(m.rows(), m.cols(), scale(c, m.data()));
}

FieldElem trace(const Matrix& m) {
  FieldElem t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

FieldElem determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = m.rows();
  FieldElem det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return FieldElem(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    FieldElem inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      FieldElem f = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).is_zero()) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElem(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.form = m;
  Matrix& a = res.form;
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    FieldElem inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      FieldElem f = a(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<Vec> kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = FieldElem(1);
    for (std::size_t i = 0; i < r.rank; ++i)
      if (!r.form(i, f).is_zero()) v[r.pivots[i]] = -r.form(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  if (r.rank > 0 && r.pivots[r.rank - 1] == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, m.cols());
  return x;
}

// ---------------------------------------------------------------------------

namespace {

// y -= f * x for sparse vectors; result stays sorted and zero-free.
void sparse_axpy_neg(SparseVec& y, const FieldElem& f, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, -(f * x[j].second));
      ++j;
    } else {
      FieldElem v = y[i].second - f * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

const FieldElem* sparse_get(const SparseVec& v, std::size_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

}  // namespace

bool SparseEchelon::reduce(SparseVec& v) const {
  // Entries are eliminated left to right; a pivot column can only appear
  // in v at positions not yet eliminated because stored rows are reduced.
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    FieldElem f = v[pos].second;
    std::size_t col = v[pos].first;
    sparse_axpy_neg(v, f, it->second);
    auto next = std::lower_bound(v.begin(), v.end(), col + 1,
                                 [](const auto& e, std::size_t k) { return e.first < k; });
    pos = static_cast<std::size_t>(next - v.begin());
  }
  return v.empty();
}

bool SparseEchelon::insert(const Vec& v) {
  if (v.size() != n_) throw DimensionMismatch("SparseEchelon::insert length mismatch");
  return insert(to_sparse(v));
}

bool SparseEchelon::insert(SparseVec v) {
  if (reduce(v)) return false;
  std::size_t piv = v.front().first;
  FieldElem inv = v.front().second.inverse();
  for (auto& e : v) e.second *= inv;
  for (auto& [c, row] : rows_) {
    const FieldElem* f = sparse_get(row, piv);
    if (f != nullptr) {
      FieldElem ff = *f;
      sparse_axpy_neg(row, ff, v);
    }
  }
  rows_.emplace(piv, std::move(v));
  return true;
}

bool SparseEchelon::contains(const Vec& v) const {
  SparseVec s = to_sparse(v);
  return reduce(s);
}

std::vector<Vec> SparseEchelon::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [c, row] : rows_) out.push_back(to_dense(row, n_));
  return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient));
  s.basis_ = Matrix(r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) s.basis_(i, j) = r.form(i, j);
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& coords) {
  std::vector<Vec> vs;
  for (auto c : coords) vs.push_back(unit_vec(ambient, c));
  return span(vs, ambient);
}

Subspace Subspace::kernel_of(const Matrix& m) { return span(kernel(m), m.cols()); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j)
      ++k;
    else
      out.push_back(j);
  }
  return out;
}

Vec Subspace::residual(const Vec& v) const {
  if (v.size() != n_) throw DimensionMismatch("Subspace: vector length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    FieldElem f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(residual(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

void Subspace::check(const Subspace& o) const {
  if (n_ != o.n_) throw DimensionMismatch("Subspace: ambient dimension mismatch");
}

Subspace Subspace::sum(const Subspace& o) const {
  check(o);
  std::vector<Vec> vs = basis_vectors();
  for (auto& v : o.basis_vectors()) vs.push_back(v);
  return span(vs, n_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check(o);
  // x = sum a_i u_i = sum b_j v_j  <=>  [U^T | -V^T] (a,b) = 0
  std::size_t du = dim(), dv = o.dim();
  Matrix stacked(n_, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t k = 0; k < n_; ++k) stacked(k, i) = basis_(i, k);
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t k = 0; k < n_; ++k) stacked(k, du + j) = -o.basis_(j, k);
  std::vector<Vec> out;
  for (const Vec& sol : kernel(stacked)) {
    Vec x(n_);
    for (std::size_t i = 0; i < du; ++i)
      if (!sol[i].is_zero())
        for (std::size_t k = 0; k < n_; ++k)
          if (!basis_(i, k).is_zero()) x[k] += sol[i] * basis_(i, k);
    out.push_back(std::move(x));
  }
  return span(out, n_);
}

Subspace Subspace::preimage(const Matrix& m) const {
  if (m.rows() != n_) throw DimensionMismatch("preimage: map codomain mismatch");
  // x in preimage iff the residual of Mx vanishes: Q M x = 0 with Q the quotient map.
  Matrix q = quotient_map();
  return kernel_of(q * m);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != n_) throw DimensionMismatch("image: map domain mismatch");
  std::vector<Vec> out;
  for (const Vec& v : basis_vectors()) out.push_back(m.apply(v));
  return span(out, m.rows());
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  check(o);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o.contains(basis_.row(i))) return false;
  return true;
}

Matrix Subspace::quotient_map() const {
  std::vector<std::size_t> comp = non_pivots();
  Matrix q(comp.size(), n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec r = residual(unit_vec(n_, j));
    for (std::size_t i = 0; i < comp.size(); ++i) q(i, j) = r[comp[i]];
  }
  return q;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.basis_ == b.basis_;
}

}  // namespace parcomod
