#include "parcomod/construction.hpp"

#include <algorithm>
#include <deque>
#include <iostream>
#include <set>

namespace parcomod {

namespace {

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

// Coordinates in a subspace or a ConstructionError naming the context.
Vec coords_or_throw(const Subspace& s, const Vec& v, const char* what) {
  auto c = s.coordinates(v);
  if (!c) throw ConstructionError(std::string("element outside ") + what);
  return *c;
}

Vec combine(const std::vector<Vec>& basis, const Vec& c, std::size_t n) {
  Vec x(n);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) axpy(x, c[i], basis[i]);
  return x;
}

int compare_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = FieldElem::compare(a[i], b[i])) return c;
  return 0;
}

bool all_rational(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_rational(); });
}

}  // namespace

// ---------------------------------------------------------------------------

SubcentralCheck is_subcentral(const FiniteDimHopf& h, const Vec& e) {
  SubcentralCheck c;
  if (e.size() != h.n) throw DimensionMismatch("element has the wrong length");
  c.nonzero = !is_zero_vec(e);
  if (!c.nonzero) {
    c.failure = "e is zero";
    return c;
  }
  c.idempotent = h.mul(e, e) == e;
  if (!c.idempotent) {
    c.failure = "e is not idempotent";
    return c;
  }
  Vec de = h.comul(e), e1 = kron(e, h.one()), ee = kron(e, e);
  Vec left = h.mul2(e1, de), right = h.mul2(de, e1);
  c.subcentral = left == right;
  if (!c.subcentral) c.failure = "e e(1)⊗e(2) differs from e(1)e⊗e(2)";
  c.strong = c.subcentral && left == ee;
  return c;
}

Subspace coideal_subalgebra_closure(const FiniteDimHopf& h, const std::vector<Vec>& gens) {
  const std::size_t n = h.n;
  SparseEchelon ech(n);
  std::vector<Vec> span;
  std::deque<Vec> queue;
  auto add = [&](const Vec& v) {
    if (!is_zero_vec(v) && ech.insert(v)) {
      span.push_back(v);
      queue.push_back(v);
    }
  };
  add(h.one());
  for (const auto& g : gens) add(g);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    Vec d = h.comul(v);
    for (std::size_t a = 0; a < n; ++a) {
      Vec comp(n);
      for (std::size_t i = 0; i < n; ++i) comp[i] = d[i * n + a];
      add(comp);
    }
    const std::size_t cnt = span.size();
    for (std::size_t k = 0; k < cnt; ++k) {
      add(h.mul(span[k], v));
      add(h.mul(v, span[k]));
    }
  }
  return Subspace::span(ech.basis(), n);
}

SubcentralIdempotent generate_coideal_subalgebra(HopfPtr h, const Vec& e) {
  auto chk = is_subcentral(*h, e);
  if (!chk.ok()) throw std::invalid_argument("not a subcentral idempotent: " + chk.failure);
  SubcentralIdempotent s;
  s.H = h;
  s.e = e;
  s.strong = chk.strong;
  s.A = coideal_subalgebra_closure(*h, {e});
  for (const auto& u : s.A.basis_vectors())
    if (h->mul(e, u) != h->mul(u, e)) throw ConstructionError("e is not central in A_e");
  return s;
}

// ---------------------------------------------------------------------------

Vec QuotientCoalgebra::delta(const Vec& c) const {
  Vec r(m * m);
  for (std::size_t i = 0; i < m; ++i)
    if (!c[i].is_zero())
      for (const auto& [k, v] : comult[i]) r[k] += c[i] * v;
  return r;
}

bool QuotientCoalgebra::is_grouplike(const Vec& c) const {
  FieldElem eps;
  for (std::size_t i = 0; i < m; ++i) eps += c[i] * counit[i];
  return eps.is_one() && delta(c) == kron(c, c);
}

Vec QuotientCoalgebra::act(const Vec& h, const Vec& c) const {
  Vec x(H->n);
  for (std::size_t i = 0; i < m; ++i)
    if (!c[i].is_zero()) x[lift[i]] += c[i];
  return project(H->mul(h, x));
}

QuotientCoalgebra quotient_coalgebra(const SubcentralIdempotent& a) {
  const FiniteDimHopf& h = *a.H;
  const std::size_t n = h.n;
  QuotientCoalgebra q;
  q.H = a.H;
  Matrix eps(1, n);
  eps.set_row(0, h.counit);
  Subspace aplus = a.A.intersect(Subspace::kernel_of(eps));
  std::vector<Vec> gens;
  for (const auto& v : aplus.basis_vectors())
    for (std::size_t i = 0; i < n; ++i) gens.push_back(h.mul(h.basis(i), v));
  q.HAplus = Subspace::span(gens, n);
  q.pi = q.HAplus.quotient_map();
  q.m = q.pi.rows();
  q.lift = q.HAplus.non_pivots();

  auto pi2 = [&](const Vec& d) {
    Vec r(q.m * q.m);
    for (std::size_t x = 0; x < d.size(); ++x) {
      if (d[x].is_zero()) continue;
      Vec pa = q.pi.col(x / n), pb = q.pi.col(x % n);
      for (std::size_t i = 0; i < q.m; ++i)
        if (!pa[i].is_zero())
          for (std::size_t j = 0; j < q.m; ++j)
            if (!pb[j].is_zero()) r[i * q.m + j] += d[x] * pa[i] * pb[j];
    }
    return r;
  };
  for (const auto& w : q.HAplus.basis_vectors()) {
    if (!h.eps(w).is_zero()) throw ConstructionError("HA+ is not inside ker ε");
    if (!is_zero_vec(pi2(h.comul(w)))) throw ConstructionError("HA+ is not a coideal");
    for (std::size_t i = 0; i < n; ++i)
      if (!q.HAplus.contains(h.mul(h.basis(i), w)))
        throw ConstructionError("HA+ is not a left ideal");
  }
  for (std::size_t c = 0; c < q.m; ++c) {
    q.comult.push_back(to_sparse(pi2(h.comul(h.basis(q.lift[c])))));
    q.counit.push_back(h.counit[q.lift[c]]);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (pi2(h.comul(h.basis(i))) != q.delta(q.pi.col(i)))
      throw ConstructionError("induced comultiplication is not compatible with π");

  std::vector<Vec> cands;
  for (std::size_t i = 0; i < n; ++i) cands.push_back(q.pi.col(i));
  for (auto g : h.grouplikes) cands.push_back(q.pi.col(g));
  for (const auto& [name, v] : h.named) cands.push_back(q.project(v));
  for (auto c : cands) {
    FieldElem ep;
    for (std::size_t i = 0; i < q.m; ++i) ep += c[i] * q.counit[i];
    if (ep.is_zero()) continue;
    c = scale(ep.inverse(), c);
    if (!q.is_grouplike(c)) continue;
    if (std::find(q.grouplikes.begin(), q.grouplikes.end(), c) == q.grouplikes.end())
      q.grouplikes.push_back(c);
  }
  return q;
}

// ---------------------------------------------------------------------------

bool check_hbar_comodule(const QuotientCoalgebra& q, const HbarComodule& w) {
  const std::size_t d = w.dim, m = q.m;
  if (w.rho.rows() != d || w.rho.cols() != d * m) return false;
  for (std::size_t i = 0; i < d; ++i) {
    Vec counit(d);
    Vec lhs(d * m * m), rhs(d * m * m);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < m; ++c) {
        const FieldElem& v = w.rho(i, j * m + c);
        if (v.is_zero()) continue;
        counit[j] += v * q.counit[c];
        for (const auto& [xy, cd] : q.comult[c]) rhs[j * m * m + xy] += v * cd;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t b = 0; b < m; ++b)
            if (!w.rho(j, k * m + b).is_zero())
              lhs[k * m * m + b * m + c] += v * w.rho(j, k * m + b);
      }
    if (counit != unit_vec(d, i) || lhs != rhs) return false;
  }
  return true;
}

HbarComodule grouplike_comodule(const QuotientCoalgebra& q, const Vec& g, std::string label) {
  if (!q.is_grouplike(g)) throw std::invalid_argument("element of the quotient is not grouplike");
  HbarComodule w;
  w.dim = 1;
  w.rho = Matrix(1, q.m);
  w.rho.set_row(0, g);
  w.label = std::move(label);
  return w;
}

std::vector<HbarComodule> simple_hbar_comodules(const QuotientCoalgebra& q, bool* used_spinning) {
  const std::size_t m = q.m;
  std::vector<HbarComodule> out;
  for (std::size_t i = 0; i < q.grouplikes.size(); ++i)
    out.push_back(grouplike_comodule(q, q.grouplikes[i], "g" + std::to_string(i)));
  if (used_spinning) *used_spinning = false;
  if (out.size() == m) return out;
  if (used_spinning) *used_spinning = true;

  // Regular right comodule: E_c(b_x) = Σ_y Δ̄(b_x)[y, c] b_y.
  std::vector<Matrix> ops(m, Matrix(m, m));
  for (std::size_t x = 0; x < m; ++x)
    for (const auto& [yc, v] : q.comult[x]) ops[yc % m](yc / m, x) += v;
  std::vector<std::vector<Matrix>> found;
  std::size_t total = 0;
  for (const auto& w : out) {
    found.push_back({});
    for (std::size_t c = 0; c < m; ++c) found.back().push_back(Matrix(1, 1));
    for (std::size_t c = 0; c < m; ++c) found.back()[c](0, 0) = w.rho(0, c);
    total += 1;
  }
  auto consider = [&](const Vec& seed) {
    Subspace cyc = spin(ops, {seed}, m);
    auto s = find_simple_subspace(ops, cyc);
    if (!s) return;
    auto r = restrict_ops(ops, *s);
    for (const auto& f : found)
      if (f[0].rows() == r[0].rows() && !intertwiners(f, r).empty()) return;
    const std::size_t d = s->dim();
    HbarComodule w;
    w.dim = d;
    w.rho = Matrix(d, d * m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) w.rho(i, j * m + c) = r[c](j, i);
    w.label = "s" + std::to_string(out.size());
    if (!check_hbar_comodule(q, w)) throw ConstructionError("spun subcomodule is not a comodule");
    out.push_back(std::move(w));
    found.push_back(std::move(r));
    total += d * d;
  };
  for (std::size_t i = 0; i < m && total < m; ++i) consider(unit_vec(m, i));
  for (std::size_t i = 0; i < m && total < m; ++i)
    for (std::size_t j = i + 1; j < m && total < m; ++j)
      for (long sj : {1L, -1L}) {
        Vec v = unit_vec(m, i);
        v[j] = FieldElem(sj);
        if (total < m) consider(v);
      }
  if (total != m)
    throw ConstructionError("simple comodules of the quotient account for " + std::to_string(total) +
                            " of " + std::to_string(m) + " dimensions");
  return out;
}

// ---------------------------------------------------------------------------

HeBicomodule he_bicomodule(const SubcentralIdempotent& a, const QuotientCoalgebra& q) {
  const FiniteDimHopf& h = *a.H;
  const std::size_t n = h.n, m = q.m;
  HeBicomodule he;
  he.H = a.H;
  he.e = a.e;
  std::vector<Vec> be(n);
  for (std::size_t i = 0; i < n; ++i) be[i] = h.mul(h.basis(i), a.e);
  he.He = Subspace::span(be, n);
  const std::size_t k = he.He.dim();
  std::vector<Vec> bec(n);
  for (std::size_t i = 0; i < n; ++i) bec[i] = coords_or_throw(he.He, be[i], "He");
  auto xs = he.He.basis_vectors();

  Matrix rho(k, k * n);
  he.lambda = Matrix(k, m * k);
  for (std::size_t j = 0; j < k; ++j) {
    Vec d = h.comul(xs[j]);
    // ρ_e: for each right leg b, Σ_a d[a,b] b_a e.
    for (std::size_t b = 0; b < n; ++b) {
      Vec y(k);
      for (std::size_t a2 = 0; a2 < n; ++a2)
        if (!d[a2 * n + b].is_zero()) axpy(y, d[a2 * n + b], bec[a2]);
      for (std::size_t l = 0; l < k; ++l) rho(j, l * n + b) = y[l];
    }
    // λ: for each quotient coordinate c, Σ_{a,b} d[a,b] π(b_a)[c] b_b ∈ He.
    for (std::size_t c = 0; c < m; ++c) {
      Vec z(n);
      for (std::size_t x = 0; x < d.size(); ++x)
        if (!d[x].is_zero() && !q.pi(c, x / n).is_zero()) z[x % n] += d[x] * q.pi(c, x / n);
      Vec zc = coords_or_throw(he.He, z, "H̄⊗He under λ");
      for (std::size_t l = 0; l < k; ++l) he.lambda(j, c * k + l) = zc[l];
    }
  }
  he.rho_e = PartialComodule(a.H, rho, "He");

  if (!check_pcm(he.rho_e).ok()) throw ConstructionError("ρ_e is not a partial coaction");
  for (std::size_t j = 0; j < k; ++j) {
    Vec cu(k);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t l = 0; l < k; ++l) cu[l] += q.counit[c] * he.lambda(j, c * k + l);
    if (cu != unit_vec(k, j)) throw ConstructionError("λ is not counital");
    // (id⊗ρ_e)λ = (λ⊗id)ρ_e over (c, l, b).
    Vec lhs(m * k * n), rhs(m * k * n);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t l = 0; l < k; ++l) {
        const FieldElem& v = he.lambda(j, c * k + l);
        if (v.is_zero()) continue;
        for (std::size_t x = 0; x < k * n; ++x)
          if (!rho(l, x).is_zero()) lhs[c * k * n + x] += v * rho(l, x);
      }
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t b = 0; b < n; ++b) {
        const FieldElem& v = rho(j, l * n + b);
        if (v.is_zero()) continue;
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t l2 = 0; l2 < k; ++l2)
            if (!he.lambda(l, c * k + l2).is_zero())
              rhs[c * k * n + l2 * n + b] += v * he.lambda(l, c * k + l2);
      }
    if (lhs != rhs) throw ConstructionError("the coactions on He do not commute");
  }
  return he;
}

namespace {

// Restricts the coaction v -> Σ v[i,j] w_i ⊗ ρ_e(x_j) to a subspace of W⊗He.
PartialComodule restrict_coaction(const HeBicomodule& he, std::size_t dw, const Subspace& space,
                                  std::string prov) {
  const std::size_t n = he.H->n, k = he.He.dim(), d = space.dim();
  const Matrix& r = he.rho_e.rho;
  Matrix rho(d, d * n);
  auto basis = space.basis_vectors();
  for (std::size_t t = 0; t < d; ++t) {
    const Vec& v = basis[t];
    std::vector<Vec> parts(n, Vec(dw * k));
    for (std::size_t i = 0; i < dw; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const FieldElem& c = v[i * k + j];
        if (c.is_zero()) continue;
        for (std::size_t l = 0; l < k; ++l)
          for (std::size_t b = 0; b < n; ++b)
            if (!r(j, l * n + b).is_zero()) parts[b][i * k + l] += c * r(j, l * n + b);
      }
    for (std::size_t b = 0; b < n; ++b) {
      Vec pc = coords_or_throw(space, parts[b], "the cotensor product");
      for (std::size_t s = 0; s < d; ++s) rho(t, s * n + b) = pc[s];
    }
  }
  return PartialComodule(he.H, rho, std::move(prov));
}

}  // namespace

PartialComodule cotensor_comodule(const HbarComodule& w, const HeBicomodule& he,
                                  const QuotientCoalgebra& q, Subspace* space) {
  const std::size_t dw = w.dim, k = he.He.dim(), m = q.m;
  if (w.rho.cols() != dw * m) throw DimensionMismatch("comodule over a different quotient");
  Matrix D(dw * m * k, dw * k);
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t col = i * k + j;
      for (std::size_t i2 = 0; i2 < dw; ++i2)
        for (std::size_t c = 0; c < m; ++c)
          if (!w.rho(i, i2 * m + c).is_zero()) D(i2 * m * k + c * k + j, col) += w.rho(i, i2 * m + c);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t l = 0; l < k; ++l)
          if (!he.lambda(j, c * k + l).is_zero()) D(i * m * k + c * k + l, col) -= he.lambda(j, c * k + l);
    }
  Subspace ker = Subspace::kernel_of(D);
  if (space) *space = ker;
  std::string prov = "cotensor e=" + format_element(*he.H, he.e) + " W=" + w.label;
  if (ker.dim() == 0) {
    std::cerr << "warning: empty cotensor product for " << prov << "\n";
    return PartialComodule(he.H, Matrix(0, 0), prov + " (empty)");
  }
  return restrict_coaction(he, dw, ker, prov);
}

PartialComodule coinvariants(const HeBicomodule& he, const QuotientCoalgebra& q, Subspace* space) {
  const std::size_t k = he.He.dim(), m = q.m;
  Vec one = q.project(he.H->one());
  Matrix D(m * k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t l = 0; l < k; ++l) D(c * k + l, j) += he.lambda(j, c * k + l);
      D(c * k + j, j) -= one[c];
    }
  Subspace ker = Subspace::kernel_of(D);
  if (space) *space = ker;
  return restrict_coaction(he, 1, ker, "coinvariants e=" + format_element(*he.H, he.e));
}

Subspace ae_times_e(const SubcentralIdempotent& a) {
  std::vector<Vec> vs;
  for (const auto& u : a.A.basis_vectors()) vs.push_back(a.H->mul(u, a.e));
  return Subspace::span(vs, a.H->n);
}

ConstructionResult run_construction(HopfPtr h, const Vec& e) {
  ConstructionResult r;
  r.sub = generate_coideal_subalgebra(h, e);
  r.q = quotient_coalgebra(r.sub);
  r.he = he_bicomodule(r.sub, r.q);
  r.ws = simple_hbar_comodules(r.q, &r.spinning_used);
  for (const auto& w : r.ws) {
    if (!check_hbar_comodule(r.q, w)) throw ConstructionError("invalid comodule over the quotient");
    r.comodules.push_back(cotensor_comodule(w, r.he, r.q));
  }
  Subspace coinv, triv;
  coinvariants(r.he, r.q, &coinv);
  Vec one = r.q.project(h->one());
  cotensor_comodule(grouplike_comodule(r.q, one, "trivial"), r.he, r.q, &triv);
  if (coinv != triv) throw ConstructionError("coinvariants differ from the trivial cotensor product");
  r.dim_Ae = coinv.dim();
  std::vector<Vec> lifted;
  auto hb = r.he.He.basis_vectors();
  for (const auto& c : coinv.basis_vectors()) lifted.push_back(combine(hb, c, h->n));
  r.coinvariants_equal_ae = Subspace::span(lifted, h->n) == ae_times_e(r.sub);
  return r;
}

// ---------------------------------------------------------------------------
// Group case

std::map<std::size_t, std::size_t> GroupClassification::blocks() const {
  std::map<std::size_t, std::size_t> b;
  for (const auto& row : rows) b[row.dim_I] += row.index;
  return b;
}

std::size_t GroupClassification::total() const {
  std::size_t t = 0;
  for (const auto& [d, c] : blocks()) t += d * d * c;
  return t;
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& k) {
  std::string s = "{";
  for (std::size_t i = 0; i < k.elements.size(); ++i) s += (i ? "," : "") + g.labels[k.elements[i]];
  return s + "}";
}

std::vector<Vec> character_orbit(const FiniteGroup& k, const Vec& e) {
  std::vector<Vec> orbit;
  for (const auto& nu : linear_characters(k, e.empty() ? default_field_order() : e[0].order())) {
    Vec x(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = nu[i] * e[i];
    if (std::find(orbit.begin(), orbit.end(), x) == orbit.end()) orbit.push_back(x);
  }
  return orbit;
}

namespace {

// Preferred members first: rational coefficients, then greater coefficient vector.
bool preferred(const Vec& a, const Vec& b) {
  bool ra = all_rational(a), rb = all_rational(b);
  if (ra != rb) return ra;
  return compare_vec(a, b) > 0;
}

}  // namespace

GroupClassification classify_group_simples(const FiniteGroup& g, bool reference_order,
                                           bool build_comodules) {
  GroupClassification out;
  out.G = g;
  out.kG = std::make_shared<const FiniteDimHopf>(build_group_algebra(g));
  const int N = out.kG->field_order;
  std::vector<CatalogIdempotent> reference;
  if (reference_order && g.name == "s3") reference = s3_table_idempotents();

  auto subs = subgroups(g);
  for (std::size_t si = 0; si < subs.size(); ++si) {
    const Subgroup& K = subs[si];
    FiniteGroup kg = subgroup_as_group(g, K);
    auto prims = central_primitive_idempotents(kg, N);
    const std::size_t r = prims.size();
    std::vector<Vec> seen;
    std::vector<GroupRow> rows;
    for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
      Vec e(kg.order);
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1) e = add(e, prims[i]);
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < kg.order; ++i)
        if (!e[i].is_zero()) support.push_back(i);
      if (subgroup_generated(kg, support).elements.size() != kg.order) continue;
      auto orbit = character_orbit(kg, e);
      for (const auto& x : orbit) seen.push_back(x);
      std::sort(orbit.begin(), orbit.end(), preferred);
      GroupRow row;
      row.subgroup_index = si;
      row.K = K;
      row.subgroup_label = subgroup_label(g, K);
      row.index = K.index();
      std::vector<Vec> embedded;
      for (const auto& x : orbit) embedded.push_back(embed_subgroup_element(g, K, x));
      std::size_t rep = 0;
      for (const auto& p : reference) {
        if (p.algebra_name != row.subgroup_label) continue;
        Vec pe = parse_element(*out.kG, p.expr);
        for (std::size_t i = 0; i < embedded.size(); ++i)
          if (embedded[i] == pe) rep = i;
      }
      row.e = embedded[rep];
      for (std::size_t i = 0; i < embedded.size(); ++i)
        if (i != rep) row.equivalents.push_back(embedded[i]);
      if (build_comodules) {
        auto res = run_construction(out.kG, row.e);
        if (res.comodules.size() != row.index)
          throw ConstructionError("number of coset comodules differs from the index");
        row.simples = std::move(res.comodules);
        row.dim_I = row.simples.front().d;
      } else {
        // dim kKe = rank of right multiplication by e on kK.
        std::vector<Vec> ke;
        for (auto h2 : K.elements) ke.push_back(out.kG->mul(out.kG->basis(h2), row.e));
        row.dim_I = Subspace::span(ke, g.order).dim();
      }
      rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const GroupRow& a, const GroupRow& b) { return a.dim_I < b.dim_I; });
    if (!reference.empty()) {
      auto pos = [&](const GroupRow& row) {
        for (std::size_t i = 0; i < reference.size(); ++i)
          if (reference[i].algebra_name == row.subgroup_label &&
              parse_element(*out.kG, reference[i].expr) == row.e)
            return i;
        return reference.size();
      };
      std::stable_sort(rows.begin(), rows.end(),
                       [&](const GroupRow& a, const GroupRow& b) { return pos(a) < pos(b); });
    }
    for (auto& row : rows) out.rows.push_back(std::move(row));
  }
  return out;
}

RedundancyReport redundancy_check(const FiniteGroup& g) {
  struct Entry {
    std::size_t subgroup, orbit, coset;
    PartialComodule m;
  };
  HopfPtr kG = std::make_shared<const FiniteDimHopf>(build_group_algebra(g));
  std::vector<Entry> entries;
  auto subs = subgroups(g);
  for (std::size_t si = 0; si < subs.size(); ++si) {
    FiniteGroup kg = subgroup_as_group(g, subs[si]);
    auto prims = central_primitive_idempotents(kg, kG->field_order);
    std::vector<std::vector<Vec>> orbits;
    for (std::size_t mask = 1; mask < (std::size_t(1) << prims.size()); ++mask) {
      Vec e(kg.order);
      for (std::size_t i = 0; i < prims.size(); ++i)
        if (mask >> i & 1) e = add(e, prims[i]);
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < kg.order; ++i)
        if (!e[i].is_zero()) support.push_back(i);
      if (subgroup_generated(kg, support).elements.size() != kg.order) continue;
      std::size_t oi = orbits.size();
      for (std::size_t k = 0; k < orbits.size(); ++k)
        if (std::find(orbits[k].begin(), orbits[k].end(), e) != orbits[k].end()) oi = k;
      if (oi == orbits.size()) orbits.push_back(character_orbit(kg, e));
      auto res = run_construction(kG, embed_subgroup_element(g, subs[si], e));
      for (std::size_t c = 0; c < res.comodules.size(); ++c)
        entries.push_back({si, oi, c, std::move(res.comodules[c])});
    }
  }
  RedundancyReport r;
  r.simples = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const auto &a = entries[i], &b = entries[j];
      const bool predicted = a.subgroup == b.subgroup && a.orbit == b.orbit && a.coset == b.coset;
      auto iso = iso_test(a.m, b.m, true);
      ++r.pairs;
      if (iso.kind == IsoResult::Undecided) {
        ++r.undecided;
        continue;
      }
      const bool observed = iso.kind == IsoResult::Isomorphic;
      r.predicted_isomorphic += predicted;
      r.observed_isomorphic += observed;
      r.agree += predicted == observed;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Kac algebra

std::vector<KacRow> kac_table(HopfPtr kac) {
  std::vector<KacRow> rows;
  for (const auto& ci : kac_table_idempotents()) {
    KacRow row;
    row.algebra_name = ci.algebra_name;
    row.expr = ci.expr;
    row.e = parse_element(*kac, ci.expr);
    auto res = run_construction(kac, row.e);
    row.dim_Ae = res.dim_Ae;
    row.coideal_dim = res.sub.A.dim();
    row.simples = std::move(res.comodules);
    row.spinning_used = res.spinning_used;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// kG* bridge

BridgeReport dual_group_bridge(const FiniteGroup& g, const std::vector<std::size_t>& X,
                               std::size_t irrep) {
  const std::size_t n = g.order;
  std::vector<char> inX(n, 0);
  for (auto x : X) {
    if (x >= n) throw std::invalid_argument("subset element out of range");
    inX[x] = 1;
  }
  if (!inX[g.identity]) throw std::invalid_argument("the subset must contain the identity");
  BridgeReport rep;
  rep.x_size = std::count(inX.begin(), inX.end(), 1);

  // Left stabilizer K and right coset representatives of K inside X.
  std::vector<std::size_t> kel;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      if (inX[x]) ok = inX[g.mul(k, x)];
    if (ok) kel.push_back(k);
  }
  Subgroup K = subgroup_generated(g, kel);
  if (K.elements != kel) throw ConstructionError("left stabilizer is not a subgroup");
  rep.stabilizer_order = kel.size();
  std::vector<std::size_t> reps;  // g_i with X = ∪ K g_i
  std::vector<std::size_t> coset_of(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    for (auto k : kel) coset_of[g.mul(k, x)] = reps.size();
    reps.push_back(x);
  }

  FiniteGroup kg = subgroup_as_group(g, K);
  const int N = default_field_order();
  auto prims = central_primitive_idempotents(kg, N);
  if (irrep >= prims.size()) throw std::out_of_range("irreducible index out of range");
  // Simple kK-module W inside kK e_χ.
  auto hk = build_group_algebra(kg, N);
  std::vector<Matrix> lm;
  for (std::size_t h = 0; h < kg.order; ++h) lm.push_back(hk.left_mult(hk.basis(h)));
  std::vector<Vec> ve;
  for (std::size_t h = 0; h < kg.order; ++h) ve.push_back(hk.mul(hk.basis(h), prims[irrep]));
  auto wsub = find_simple_subspace(lm, Subspace::span(ve, kg.order));
  if (!wsub) throw ConstructionError("no simple submodule found");
  auto act = restrict_ops(lm, *wsub);  // act[h] = action of K.elements[h]
  const std::size_t dw = wsub->dim();
  auto kpos = [&](std::size_t x) {
    return std::size_t(std::lower_bound(kel.begin(), kel.end(), x) - kel.begin());
  };

  auto H = std::make_shared<const FiniteDimHopf>(build_dual_group_algebra(g, N));
  Vec e(n);
  for (std::size_t x = 0; x < n; ++x)
    if (inX[x]) e[x] = FieldElem(1);
  auto sub = generate_coideal_subalgebra(H, e);
  auto q = quotient_coalgebra(sub);
  auto he = he_bicomodule(sub, q);
  if (q.m != kel.size()) throw ConstructionError("quotient has the wrong dimension");

  HbarComodule W;
  W.dim = dw;
  W.rho = Matrix(dw, dw * q.m);
  W.label = "irrep" + std::to_string(irrep);
  for (std::size_t i = 0; i < dw; ++i)
    for (std::size_t t = 0; t < kel.size(); ++t) {
      Vec ph = q.pi.col(kel[t]);
      for (std::size_t j = 0; j < dw; ++j)
        if (!act[t](j, i).is_zero())
          for (std::size_t c = 0; c < q.m; ++c) W.rho(i, j * q.m + c) += act[t](j, i) * ph[c];
    }
  if (!check_hbar_comodule(q, W)) throw ConstructionError("representation is not a comodule");
  Subspace space;
  PartialComodule M = cotensor_comodule(W, he, q, &space);
  rep.dim_cotensor = M.d;

  // Module kX^-1 ⊗_kK W with basis (i, j) for the cosets K g_i ⊆ X.
  std::vector<std::size_t> F;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (inX[reps[i]]) F.push_back(i);
  const std::size_t dm = F.size() * dw;
  rep.dim_module = dm;
  rep.expected_dim = F.size() * dw;
  auto fpos = [&](std::size_t coset) -> std::optional<std::size_t> {
    for (std::size_t t = 0; t < F.size(); ++t)
      if (F[t] == coset) return t;
    return std::nullopt;
  };

  // θ(g_i^-1 ⊗ w) = Σ_{h∈K} h·w ⊗ p_{h g_i}, in cotensor coordinates.
  const std::size_t k = he.He.dim();
  Matrix theta(M.d, dm);
  for (std::size_t t = 0; t < F.size(); ++t)
    for (std::size_t j = 0; j < dw; ++j) {
      Vec v(dw * k);
      for (std::size_t s = 0; s < kel.size(); ++s) {
        Vec hx = act[s].col(j);
        Vec px = coords_or_throw(he.He, H->basis(g.mul(kel[s], reps[F[t]])), "He");
        for (std::size_t a = 0; a < dw; ++a)
          if (!hx[a].is_zero())
            for (std::size_t l = 0; l < k; ++l)
              if (!px[l].is_zero()) v[a * k + l] += hx[a] * px[l];
      }
      auto c = space.coordinates(v);
      if (!c) return rep;
      theta.set_col(t * dw + j, *c);
    }
  rep.theta_bijective = M.d == dm && rank(theta) == dm;

  bool inter = true;
  for (std::size_t x = 0; x < n && inter; ++x) {
    // Partial action of x on the module side.
    Matrix act_m(dm, dm);
    for (std::size_t t = 0; t < F.size(); ++t) {
      std::size_t y = g.mul(reps[F[t]], g.inv[x]);  // g_i x^-1
      if (!inX[y]) continue;
      std::size_t cj = coset_of[y];
      auto tj = fpos(cj);
      if (!tj) continue;
      std::size_t hprime = g.mul(y, g.inv[reps[cj]]);  // y = h' g_j
      const Matrix& a = act[kpos(g.inv[hprime])];
      for (std::size_t j = 0; j < dw; ++j)
        for (std::size_t j2 = 0; j2 < dw; ++j2) act_m(*tj * dw + j2, t * dw + j) = a(j2, j);
    }
    inter = theta * act_m == M.op(x) * theta;
  }
  rep.theta_intertwines = inter;
  return rep;
}

}  // namespace parcomod
