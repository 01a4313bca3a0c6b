#include "parcomod/partial_comodule.hpp"

#include <deque>
#include <sstream>

namespace parcomod {

PartialComodule::PartialComodule(HopfPtr h, Matrix rho_, std::string prov)
    : H(std::move(h)), d(rho_.rows()), rho(std::move(rho_)), provenance(std::move(prov)) {
  if (rho.cols() != d * H->n)
    throw DimensionMismatch("coaction matrix must be d x (d*n) with n = dim H");
}

Vec PartialComodule::coact(const Vec& m) const {
  Vec r(d * n());
  for (std::size_t i = 0; i < d; ++i)
    if (!m[i].is_zero()) axpy(r, m[i], rho.row(i));
  return r;
}

Matrix PartialComodule::op(std::size_t a) const {
  const std::size_t nn = n();
  Matrix e(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e(j, i) = rho(i, j * nn + a);
  return e;
}

Matrix PartialComodule::op(const Vec& phi) const {
  const std::size_t nn = n();
  Matrix e(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      FieldElem s;
      for (std::size_t a = 0; a < nn; ++a)
        if (!phi[a].is_zero() && !rho(i, j * nn + a).is_zero()) s += phi[a] * rho(i, j * nn + a);
      e(j, i) = s;
    }
  return e;
}

std::vector<Matrix> PartialComodule::ops() const {
  std::vector<Matrix> r;
  for (std::size_t a = 0; a < n(); ++a) r.push_back(op(a));
  return r;
}

PartialComodule regular_comodule(HopfPtr h) {
  const std::size_t n = h->n;
  Matrix r(n, n * n);
  for (std::size_t i = 0; i < n; ++i) r.set_row(i, to_dense(h->comult[i], n * n));
  return PartialComodule(h, r, "regular");
}

PartialComodule one_dim_comodule(HopfPtr h, const Vec& r) {
  Matrix m(1, h->n);
  m.set_row(0, r);
  return PartialComodule(h, m, "one-dimensional");
}

std::string PcmReport::str() const {
  std::ostringstream os;
  for (int k = 0; k < 5; ++k) {
    os << "PCM" << k + 1 << (pcm[k] ? " pass" : " FAIL");
    if (!pcm[k]) os << " (basis vector " << witness[k] << ")";
    os << "\n";
  }
  os << "global " << (global ? "yes" : "no") << "\n";
  return os.str();
}

namespace {

// Sparse tensor over index tuples flattened row-major.
using Terms = std::vector<std::pair<std::size_t, FieldElem>>;

Terms sparse_row(const Matrix& m, std::size_t i) {
  Terms t;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(i, c).is_zero()) t.push_back({c, m(i, c)});
  return t;
}

}  // namespace

PcmReport check_pcm(const PartialComodule& m) {
  const HopfPtr& H = m.H;
  const std::size_t n = H->n, d = m.d;
  PcmReport rep;
  // Bilinear tables: u·S(v), S(u)·v.
  std::vector<SparseVec> mulS(n * n), Smul(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      mulS[u * n + v] = to_sparse(H->mul(H->basis(u), H->S(H->basis(v))));
      Smul[u * n + v] = to_sparse(H->mul(H->S(H->basis(u)), H->basis(v)));
    }
  std::vector<Terms> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = sparse_row(m.rho, i);

  const std::size_t n2 = n * n, n3 = n2 * n;
  for (std::size_t i = 0; i < d; ++i) {
    // PCM1
    {
      Vec r(d);
      for (const auto& [ja, c] : rows[i]) r[ja / n] += c * H->counit[ja % n];
      if (r != unit_vec(d, i) && rep.pcm[0]) {
        rep.pcm[0] = false;
        rep.witness[0] = std::to_string(i);
      }
    }
    // T2 (k, b, a) and T3 (l, c, b, a).
    Terms t2, t3;
    {
      Vec v(d * n2);
      for (const auto& [ja, c] : rows[i]) {
        std::size_t j = ja / n, a = ja % n;
        for (const auto& [kb, c2] : rows[j]) v[(kb / n) * n2 + (kb % n) * n + a] += c * c2;
      }
      for (std::size_t x = 0; x < v.size(); ++x)
        if (!v[x].is_zero()) t2.push_back({x, v[x]});
      Vec w(d * n3);
      for (const auto& [kba, c] : t2) {
        std::size_t k = kba / n2, ba = kba % n2;
        for (const auto& [lc, c2] : rows[k]) w[(lc / n) * n3 + (lc % n) * n2 + ba] += c * c2;
      }
      for (std::size_t x = 0; x < w.size(); ++x)
        if (!w[x].is_zero()) t3.push_back({x, w[x]});
    }
    // Each axiom: lhs from t2 through Δ on one leg, rhs from t3.
    Vec lhs2(d * n2), rhs2(d * n2), lhs3(d * n2), rhs3(d * n2), lhs4(d * n2), rhs4(d * n2),
        lhs5(d * n2), rhs5(d * n2);
    for (const auto& [kba, c] : t2) {
      std::size_t k = kba / n2, b = (kba / n) % n, a = kba % n;
      for (const auto& [xy, cd] : H->comult[b]) {
        std::size_t x = xy / n, y = xy % n;
        FieldElem cc = c * cd;
        for (const auto& [p, cp] : mulS[y * n + a]) lhs2[k * n2 + x * n + p] += cc * cp;
        for (const auto& [p, cp] : Smul[y * n + a]) lhs4[k * n2 + x * n + p] += cc * cp;
      }
      for (const auto& [xy, cd] : H->comult[a]) {
        std::size_t x = xy / n, y = xy % n;
        FieldElem cc = c * cd;
        for (const auto& [p, cp] : mulS[b * n + x]) lhs3[k * n2 + p * n + y] += cc * cp;
        for (const auto& [p, cp] : Smul[b * n + x]) lhs5[k * n2 + p * n + y] += cc * cp;
      }
    }
    for (const auto& [lcba, c] : t3) {
      std::size_t l = lcba / n3, cc = (lcba / n2) % n, b = (lcba / n) % n, a = lcba % n;
      for (const auto& [p, cp] : mulS[b * n + a]) rhs2[l * n2 + cc * n + p] += c * cp;
      for (const auto& [p, cp] : Smul[b * n + a]) rhs4[l * n2 + cc * n + p] += c * cp;
      for (const auto& [p, cp] : mulS[cc * n + b]) rhs3[l * n2 + p * n + a] += c * cp;
      for (const auto& [p, cp] : Smul[cc * n + b]) rhs5[l * n2 + p * n + a] += c * cp;
    }
    auto mark = [&](int k, bool ok) {
      if (!ok && rep.pcm[k]) {
        rep.pcm[k] = false;
        rep.witness[k] = std::to_string(i);
      }
    };
    mark(1, lhs2 == rhs2);
    mark(2, lhs3 == rhs3);
    mark(3, lhs4 == rhs4);
    mark(4, lhs5 == rhs5);
    // Global coassociativity.
    if (rep.global) {
      Vec g(d * n2);
      for (const auto& [ja, c] : rows[i])
        for (const auto& [xy, cd] : H->comult[ja % n]) g[(ja / n) * n2 + xy] += c * cd;
      Vec t(d * n2);
      for (const auto& [x, c] : t2) t[x] = c;
      rep.global = g == t;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

Vec AlgebraStructure::mul(const Vec& a, const Vec& b) const {
  Vec r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!b[j].is_zero()) axpy(r, a[i] * b[j], mult[i * d + j]);
  }
  return r;
}

PcReport check_partial_comodule_algebra(const PartialComodule& m, const AlgebraStructure& alg) {
  const HopfPtr& H = m.H;
  const std::size_t n = H->n, d = m.d, n2 = n * n;
  if (alg.d != d) throw DimensionMismatch("algebra structure has the wrong dimension");
  for (std::size_t i = 0; i < d; ++i)
    if (alg.mul(alg.unit, unit_vec(d, i)) != unit_vec(d, i) ||
        alg.mul(unit_vec(d, i), alg.unit) != unit_vec(d, i))
      throw std::invalid_argument("declared unit of the comodule algebra is not a unit");
  PcReport rep;
  PcmReport pcm = check_pcm(m);
  rep.pc1 = pcm.pcm[0];
  // Products in M⊗H and M⊗H⊗H.
  auto mul_mh = [&](const Vec& u, const Vec& v) {
    Vec r(d * n);
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (u[x].is_zero()) continue;
      for (std::size_t y = 0; y < v.size(); ++y) {
        if (v[y].is_zero()) continue;
        Vec mm = alg.mul(unit_vec(d, x / n), unit_vec(d, y / n));
        const auto& hh = H->mult[(x % n) * n + y % n];
        for (std::size_t p = 0; p < d; ++p)
          if (!mm[p].is_zero())
            for (const auto& [q, c] : hh) r[p * n + q] += u[x] * v[y] * mm[p] * c;
      }
    }
    return r;
  };
  auto mul_mhh = [&](const Vec& u, const Vec& v) {
    Vec r(d * n2);
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (u[x].is_zero()) continue;
      for (std::size_t y = 0; y < v.size(); ++y) {
        if (v[y].is_zero()) continue;
        Vec mm = alg.mul(unit_vec(d, x / n2), unit_vec(d, y / n2));
        const auto& h1 = H->mult[((x / n) % n) * n + (y / n) % n];
        const auto& h2 = H->mult[(x % n) * n + y % n];
        FieldElem c0 = u[x] * v[y];
        for (std::size_t p = 0; p < d; ++p) {
          if (mm[p].is_zero()) continue;
          for (const auto& [q1, c1] : h1)
            for (const auto& [q2, c2] : h2) r[p * n2 + q1 * n + q2] += c0 * mm[p] * c1 * c2;
        }
      }
    }
    return r;
  };
  auto delta_leg = [&](const Vec& u) {
    Vec r(d * n2);
    for (std::size_t x = 0; x < u.size(); ++x)
      if (!u[x].is_zero())
        for (const auto& [ab, c] : H->comult[x % n]) r[(x / n) * n2 + ab] += u[x] * c;
    return r;
  };
  auto rho2 = [&](const Vec& u) {
    Vec r(d * n2);
    for (std::size_t x = 0; x < u.size(); ++x)
      if (!u[x].is_zero()) {
        Vec inner = m.coact(unit_vec(d, x / n));
        for (std::size_t y = 0; y < inner.size(); ++y)
          if (!inner[y].is_zero()) r[y * n + x % n] += u[x] * inner[y];
      }
    return r;
  };
  for (std::size_t i = 0; i < d && rep.pc2; ++i)
    for (std::size_t j = 0; j < d && rep.pc2; ++j)
      if (m.coact(alg.mult[i * d + j]) != mul_mh(m.coact(unit_vec(d, i)), m.coact(unit_vec(d, j)))) {
        rep.pc2 = false;
        rep.witness = "PC2 at " + std::to_string(i) + "," + std::to_string(j);
      }
  Vec r1 = m.coact(alg.unit);
  Vec r1x1(d * n2);
  for (std::size_t x = 0; x < r1.size(); ++x)
    if (!r1[x].is_zero())
      for (std::size_t u = 0; u < n; ++u)
        if (!H->unit[u].is_zero()) r1x1[x * n + u] = r1[x] * H->unit[u];
  for (std::size_t i = 0; i < d; ++i) {
    Vec ra = m.coact(unit_vec(d, i));
    Vec dl = delta_leg(ra), mid = rho2(ra);
    if (rep.pc3_left && mul_mhh(r1x1, dl) != mid) {
      rep.pc3_left = false;
      if (rep.witness.empty()) rep.witness = "PC3 left at " + std::to_string(i);
    }
    if (rep.pc3_right && mul_mhh(dl, r1x1) != mid) {
      rep.pc3_right = false;
      if (rep.witness.empty()) rep.witness = "PC3 right at " + std::to_string(i);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

OperatorAlgebra generated_algebra(const std::vector<Matrix>& gens, std::size_t d) {
  SparseEchelon ech(d * d);
  std::deque<Matrix> queue;
  auto add = [&](const Matrix& x) {
    if (ech.insert(x.data())) queue.push_back(x);
  };
  add(Matrix::identity(d));
  for (const auto& g : gens) add(g);
  while (!queue.empty()) {
    Matrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) add(g * x);
  }
  OperatorAlgebra alg;
  alg.d = d;
  for (auto& v : ech.basis()) alg.basis.push_back(Matrix::from_data(d, d, v));
  return alg;
}

OperatorAlgebra operator_algebra(const PartialComodule& m) { return generated_algebra(m.ops(), m.d); }

Subspace spin(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds, std::size_t d) {
  SparseEchelon ech(d);
  std::deque<Vec> queue;
  auto add = [&](const Vec& v) {
    if (ech.insert(v)) queue.push_back(v);
  };
  for (const auto& s : seeds) add(s);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) add(g.apply(v));
  }
  return Subspace::span(ech.basis(), d);
}

Simplicity is_simple(const PartialComodule& m) {
  Simplicity s;
  const std::size_t d = m.d;
  auto gens = m.ops();
  OperatorAlgebra alg = generated_algebra(gens, d);
  s.algebra_dim = alg.dim();
  if (d > 0 && alg.dim() == d * d) {
    s.kind = Simplicity::SimpleCertified;
    return s;
  }
  if (d == 0) {
    s.kind = Simplicity::NotSimple;
    s.witness = Subspace(0);
    return s;
  }
  auto try_seed = [&](const Vec& v) {
    if (is_zero_vec(v)) return false;
    Subspace sub = spin(gens, {v}, d);
    if (sub.dim() < d) {
      s.kind = Simplicity::NotSimple;
      s.witness = sub;
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < d; ++i)
    if (try_seed(unit_vec(d, i))) return s;
  // 0/±1 combinations of two and three basis vectors.
  const long signs[2] = {1, -1};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (long sj : signs) {
        Vec v = unit_vec(d, i);
        v[j] = FieldElem(sj);
        if (try_seed(v)) return s;
        for (std::size_t k = j + 1; k < d; ++k)
          for (long sk : signs) {
            Vec w = v;
            w[k] = FieldElem(sk);
            if (try_seed(w)) return s;
          }
      }
  s.kind = Simplicity::Inconclusive;
  return s;
}

std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Subspace& v) {
  const std::size_t k = v.dim();
  auto basis = v.basis_vectors();
  std::vector<Matrix> out;
  for (const auto& op : ops) {
    Matrix r(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = v.coordinates(op.apply(basis[j]));
      if (!c) throw std::invalid_argument("subspace is not invariant under the operators");
      r.set_col(j, *c);
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Subspace of the ambient space spanned by the images of coordinate vectors.
Subspace lift_subspace(const Subspace& inner, const Subspace& outer) {
  std::vector<Vec> vs;
  auto ob = outer.basis_vectors();
  for (const auto& c : inner.basis_vectors()) {
    Vec x(outer.ambient());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) axpy(x, c[i], ob[i]);
    vs.push_back(x);
  }
  return Subspace::span(vs, outer.ambient());
}

// Proper nonzero invariant subspace in coordinates, if one is found.
std::optional<Subspace> proper_invariant(const std::vector<Matrix>& r, std::size_t k) {
  auto try_seed = [&](const Vec& x) -> std::optional<Subspace> {
    Subspace s = spin(r, {x}, k);
    if (s.dim() > 0 && s.dim() < k) return s;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < k; ++i)
    if (auto s = try_seed(unit_vec(k, i))) return s;
  // Kernels and images of commuting operators are invariant.
  auto comm = intertwiners(r, r);
  for (const auto& f : comm) {
    std::size_t rk = rank(f);
    if (rk > 0 && rk < k) return Subspace::kernel_of(f);
  }
  // Eigenspaces of commuting operators; eigenvalues are tried among small
  // rationals and the roots of unity of the field.
  std::vector<FieldElem> lambdas;
  for (long q : {1L, -1L, 2L, -2L}) lambdas.push_back(FieldElem(q));
  lambdas.push_back(FieldElem(Rational(1, 2)));
  lambdas.push_back(FieldElem(Rational(-1, 2)));
  const int order = default_field_order();
  const FieldElem z = *field_symbol("zeta", order);
  FieldElem pw = z;
  for (int t = 1; t < order; ++t, pw = pw * z) lambdas.push_back(pw);
  for (const auto& f : comm)
    for (const auto& l : lambdas) {
      Matrix g = f - scale(l, Matrix::identity(k));
      std::size_t rk = rank(g);
      if (rk > 0 && rk < k) return Subspace::kernel_of(g);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (long sj : {1L, -1L}) {
        Vec x = unit_vec(k, i);
        x[j] = FieldElem(sj);
        if (auto s = try_seed(x)) return s;
      }
  return std::nullopt;
}

}  // namespace

std::optional<Subspace> find_simple_subspace(const std::vector<Matrix>& ops, const Subspace& v) {
  Subspace cur = v;
  while (cur.dim() > 0) {
    auto r = restrict_ops(ops, cur);
    const std::size_t k = cur.dim();
    if (generated_algebra(r, k).dim() == k * k) return cur;
    auto inner = proper_invariant(r, k);
    if (!inner) return std::nullopt;
    cur = lift_subspace(*inner, cur);
  }
  return std::nullopt;
}

std::vector<Matrix> intertwiners(const std::vector<Matrix>& as, const std::vector<Matrix>& bs) {
  if (as.size() != bs.size()) throw DimensionMismatch("operator lists differ in length");
  if (as.empty()) throw std::invalid_argument("intertwiners of empty operator lists");
  const std::size_t dm = as[0].rows(), dn = bs[0].rows();
  if (dm == 0 || dn == 0) return {};
  // Unknown f (dn x dm), flattened row-major.
  SparseEchelon ech(dn * dm);
  for (std::size_t t = 0; t < as.size(); ++t) {
    const Matrix &em = as[t], &en = bs[t];
    for (std::size_t p = 0; p < dn; ++p)
      for (std::size_t q = 0; q < dm; ++q) {
        Vec row(dn * dm);
        for (std::size_t k = 0; k < dm; ++k)
          if (!em(k, q).is_zero()) row[p * dm + k] += em(k, q);
        for (std::size_t k = 0; k < dn; ++k)
          if (!en(p, k).is_zero()) row[k * dm + q] -= en(p, k);
        if (!is_zero_vec(row)) ech.insert(row);
      }
  }
  std::vector<Vec> ker;
  if (ech.rank() == 0) {
    for (std::size_t i = 0; i < dn * dm; ++i) ker.push_back(unit_vec(dn * dm, i));
  } else {
    ker = kernel(Matrix::from_rows(ech.basis(), dn * dm));
  }
  std::vector<Matrix> out;
  for (auto& v : ker) out.push_back(Matrix::from_data(dn, dm, v));
  return out;
}

std::vector<Matrix> hom_space(const PartialComodule& m, const PartialComodule& n) {
  if (m.H->n != n.H->n) throw DimensionMismatch("comodules over different algebras");
  if (m.d == 0 || n.d == 0) return {};
  return intertwiners(m.ops(), n.ops());
}

IsoResult iso_test(const PartialComodule& m, const PartialComodule& n, bool both_simple) {
  IsoResult r;
  auto homs = hom_space(m, n);
  r.hom_dim = homs.size();
  if (m.d != n.d) {
    r.kind = IsoResult::NotIsomorphic;
    return r;
  }
  if (m.d == 0) {
    r.kind = IsoResult::Isomorphic;
    r.map = Matrix(0, 0);
    return r;
  }
  if (homs.empty()) {
    r.kind = IsoResult::NotIsomorphic;
    return r;
  }
  const std::size_t d = m.d;
  auto invertible = [](const Matrix& f) { return !determinant(f).is_zero(); };
  if (both_simple) {
    // Schur: every nonzero morphism between simples is invertible.
    r.kind = IsoResult::Isomorphic;
    r.map = homs[0];
    return r;
  }
  Matrix generic(d, d);
  for (std::size_t i = 0; i < homs.size(); ++i)
    generic = generic + scale(FieldElem(static_cast<long>(i + 1)), homs[i]);
  if (invertible(generic)) {
    r.kind = IsoResult::Isomorphic;
    r.map = generic;
    return r;
  }
  // Deterministic small-integer combinations.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int t = 0; t < 100; ++t) {
    Matrix f(d, d);
    for (const auto& h : homs) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      long c = static_cast<long>((state >> 33) % 7) - 3;
      if (c) f = f + scale(FieldElem(c), h);
    }
    if (invertible(f)) {
      r.kind = IsoResult::Isomorphic;
      r.map = f;
      return r;
    }
  }
  r.kind = IsoResult::Undecided;
  return r;
}

PartialComodule shift_by_grouplike(const PartialComodule& m, const Vec& g) {
  if (!m.H->is_grouplike(g)) throw std::invalid_argument("shift element is not grouplike");
  const std::size_t n = m.n(), d = m.d;
  Matrix lg = m.H->left_mult(g);
  Matrix r(d, d * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec part(n);
      for (std::size_t a = 0; a < n; ++a) part[a] = m.rho(i, j * n + a);
      if (is_zero_vec(part)) continue;
      Vec img = lg.apply(part);
      for (std::size_t a = 0; a < n; ++a) r(i, j * n + a) = img[a];
    }
  return PartialComodule(m.H, r, m.provenance + " shifted by " + format_element(*m.H, g));
}

PartialComodule direct_sum(const std::vector<PartialComodule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no comodules");
  HopfPtr H = parts[0].H;
  const std::size_t n = H->n;
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.H->n != n) throw DimensionMismatch("direct sum over different algebras");
    total += p.d;
  }
  Matrix r(total, total * n);
  std::size_t off = 0;
  std::string prov;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.d; ++i)
      for (std::size_t j = 0; j < p.d; ++j)
        for (std::size_t a = 0; a < n; ++a) r(off + i, (off + j) * n + a) = p.rho(i, j * n + a);
    off += p.d;
    prov += (prov.empty() ? "" : " (+) ") + p.provenance;
  }
  return PartialComodule(H, r, prov);
}

Json comodule_to_json(const PartialComodule& m) {
  Json j;
  j["algebra"] = m.H->name;
  j["dim"] = m.d;
  j["rho"] = to_json(m.rho);
  j["provenance"] = m.provenance;
  return j;
}

PartialComodule comodule_from_json(const Json& j, HopfPtr h) {
  if (j.contains("algebra") && j["algebra"].is_object())
    h = std::make_shared<const FiniteDimHopf>(hopf_from_json(j["algebra"]));
  if (!h) throw std::invalid_argument("comodule JSON needs an algebra");
  std::size_t d = j.at("dim").get<std::size_t>();
  Matrix rho = d == 0 ? Matrix(0, 0) : matrix_from_json(j.at("rho"), h->field_order);
  if (rho.rows() != d) throw DimensionMismatch("rho row count differs from dim");
  return PartialComodule(h, rho, j.value("provenance", std::string()));
}

}  // namespace parcomod
