#include "parcomod/onedim.hpp"

#include <sstream>

namespace parcomod {

namespace {

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

// (f⊗g)(t) for linear maps given as functions on basis vectors.
template <class F, class G>
Vec apply_legs(const FiniteDimHopf& h, const Vec& t, F f, G g) {
  const std::size_t n = h.n;
  std::vector<Vec> fi(n), gi(n);
  std::vector<bool> have_f(n), have_g(n);
  Vec r(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const FieldElem& c = t[a * n + b];
      if (c.is_zero()) continue;
      if (!have_f[a]) fi[a] = f(h.basis(a)), have_f[a] = true;
      if (!have_g[b]) gi[b] = g(h.basis(b)), have_g[b] = true;
      axpy(r, c, kron(fi[a], gi[b]));
    }
  return r;
}

bool passes_pp(const FiniteDimHopf& h, const Vec& e) {
  auto s = is_subcentral(h, e);
  return s.nonzero && s.idempotent && s.strong;
}

void require_passing(const FiniteDimHopf& h, const Vec& r) {
  if (!check_r(h, r).ok()) throw std::invalid_argument("element does not define a partial comodule");
  if (!h.antipode_inverse_matrix()) throw std::invalid_argument("antipode is not invertible");
}

}  // namespace

std::string RCheck::str() const {
  std::ostringstream os;
  for (int k = 0; k < 5; ++k) os << (k ? " " : "") << "PCM" << k + 1 << "r=" << (eq[k] ? "pass" : "FAIL");
  return os.str();
}

RCheck check_r(const FiniteDimHopf& h, const Vec& r) {
  RCheck c;
  const Vec sr = h.S(r);
  const Vec dr = h.comul(r);
  auto id = [](const Vec& x) { return x; };
  c.eq[0] = h.eps(r) == FieldElem(1L);
  c.eq[1] = kron(r, h.mul(r, sr)) == apply_legs(h, dr, id, [&](const Vec& x) { return h.mul(x, sr); });
  c.eq[2] = apply_legs(h, dr, [&](const Vec& x) { return h.mul(r, h.S(x)); }, id) == kron(h.mul(r, sr), r);
  c.eq[3] = kron(r, h.mul(sr, r)) == apply_legs(h, dr, id, [&](const Vec& x) { return h.mul(h.S(x), r); });
  c.eq[4] = kron(h.mul(sr, r), r) == apply_legs(h, dr, [&](const Vec& x) { return h.mul(sr, x); }, id);
  return c;
}

ClosureFacts closure_facts(HopfPtr hp, const Vec& r) {
  const FiniteDimHopf& h = *hp;
  require_passing(h, r);
  ClosureFacts f;
  const Vec sr = h.S(r), sir = h.S_inv(r);
  f.regular = h.mul(h.mul(r, sr), r) == r && h.mul(h.mul(sr, r), sr) == sr;
  f.antipode_image = check_r(h, sr).ok();
  f.antipode_inverse_image = check_r(h, sir).ok();
  f.translates = true;
  for (auto g : h.grouplikes) f.translates &= check_r(h, h.mul(h.basis(g), r)).ok();

  const Vec el = h.mul(r, sr), es = h.mul(sir, r);
  f.left_idempotent = passes_pp(h, el);
  f.sub_idempotent = passes_pp(h, es) && is_subcentral(h, es).ok();
  if (f.left_idempotent && f.sub_idempotent) {
    auto al = generate_coideal_subalgebra(hp, el);
    auto as = generate_coideal_subalgebra(hp, es);
    auto ql = quotient_coalgebra(al);
    auto qs = quotient_coalgebra(as);
    f.grouplike_images = ql.is_grouplike(ql.project(sr)) && qs.is_grouplike(qs.project(r));
    f.integral = true;
    for (const auto& a : as.A.basis_vectors()) {
      Vec ea = scale(h.eps(a), es);
      f.integral &= h.mul(a, es) == ea && h.mul(es, a) == ea;
    }
  }
  return f;
}

Reconstruction reconstruct(HopfPtr hp, const Vec& r) {
  const FiniteDimHopf& h = *hp;
  require_passing(h, r);
  Reconstruction rec;
  rec.e = h.mul(h.S_inv(r), r);
  auto sub = generate_coideal_subalgebra(hp, rec.e);
  auto q = quotient_coalgebra(sub);
  auto w = grouplike_comodule(q, q.project(r), "pi(r)");
  auto he = he_bicomodule(sub, q);
  Subspace space;
  PartialComodule m = cotensor_comodule(w, he, q, &space);
  rec.cotensor_dim = space.dim();
  if (rec.cotensor_dim != 1) return rec;
  Vec v(h.n);
  const Vec coords = space.basis_vector(0);
  for (std::size_t j = 0; j < he.He.dim(); ++j) axpy(v, coords[j], he.He.basis_vector(j));
  rec.spanned_by_r = !is_zero_vec(v) && Subspace::span({v, r}, h.n).dim() == 1;
  rec.coaction_is_r = m.rho.row(0) == r;
  rec.isomorphic = iso_test(m, one_dim_comodule(hp, r), true).kind == IsoResult::Isomorphic;
  return rec;
}

std::vector<Vec> classify_group_onedim(const FiniteGroup& g) {
  std::vector<Vec> out;
  for (const auto& k : subgroups(g)) {
    const FieldElem w(Rational(1, static_cast<long>(k.elements.size())));
    for (auto rep : k.left_reps) {
      Vec r(g.order);
      for (auto x : k.elements) r[g.mul(rep, x)] = w;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<FieldElem> default_gamma_samples(int field_order) {
  if (field_order % 4 != 0) throw std::invalid_argument("the field must contain a primitive 4th root of unity");
  FieldElem z = *field_symbol("zeta", field_order);
  FieldElem i = FieldElem(1L);
  for (int t = 0; t < field_order / 4; ++t) i = i * z;
  return {FieldElem(1L), FieldElem(-1L), FieldElem(2L), i};
}

std::vector<H4Entry> h4_catalog(HopfPtr hp, const std::vector<FieldElem>& gammas) {
  const FiniteDimHopf& h = *hp;
  if (h.n != 4 || h.labels != std::vector<std::string>{"1", "g", "x", "gx"})
    throw std::invalid_argument("expected the Sweedler algebra on {1, g, x, gx}");
  const FieldElem half(Rational(1, 2));
  std::vector<H4Entry> out;
  for (const auto& gamma : gammas) {
    auto add = [&](int fam, std::string desc, Vec r) {
      H4Entry e;
      e.family = fam;
      e.description = std::move(desc);
      e.gamma = gamma;
      e.passes = check_r(h, r).ok();
      e.r = std::move(r);
      out.push_back(std::move(e));
    };
    add(1, "1", h.basis(0));
    add(2, "g", h.basis(1));
    add(3, "(1+g)/2", Vec{half, half, FieldElem(), FieldElem()});
    add(4, "(1+g)/2 + gamma x", Vec{half, half, gamma, FieldElem()});
    add(5, "(1+g)/2 + gamma gx", Vec{half, half, FieldElem(), gamma});
  }
  return out;
}

}  // namespace parcomod
