#include "parcomod/hopf.hpp"

#include "parcomod/expr.hpp"

#include <sstream>

namespace parcomod {

std::optional<std::size_t> FiniteDimHopf::label_index(const std::string& l) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  return std::nullopt;
}

Vec FiniteDimHopf::mul(const Vec& a, const Vec& b) const {
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      FieldElem c = a[i] * b[j];
      for (const auto& [k, m] : mult[i * n + j]) r[k] += c * m;
    }
  }
  return r;
}

Vec FiniteDimHopf::comul(const Vec& a) const {
  Vec r(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [k, c] : comult[i]) r[k] += a[i] * c;
  }
  return r;
}

FieldElem FiniteDimHopf::eps(const Vec& a) const {
  FieldElem r;
  for (std::size_t i = 0; i < n; ++i)
    if (!a[i].is_zero() && !counit[i].is_zero()) r += a[i] * counit[i];
  return r;
}

Vec FiniteDimHopf::S(const Vec& a) const {
  Vec r(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j].is_zero()) continue;
    for (const auto& [k, c] : antipode[j]) r[k] += a[j] * c;
  }
  return r;
}

Vec FiniteDimHopf::S_inv(const Vec& a) const {
  if (antipode_inverse) {
    Vec r(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j].is_zero()) continue;
      for (const auto& [k, c] : (*antipode_inverse)[j]) r[k] += a[j] * c;
    }
    return r;
  }
  auto inv = antipode_inverse_matrix();
  if (!inv) throw std::domain_error("antipode of " + name + " is not invertible");
  return inv->apply(a);
}

Vec FiniteDimHopf::iterated_comul(const Vec& a, int k) const {
  Vec cur = a;
  std::size_t width = 1;  // number of leading legs kept fixed
  for (int step = 0; step < k; ++step) {
    Vec next(width * n * n);
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      if (cur[idx].is_zero()) continue;
      std::size_t head = idx / n, last = idx % n;
      for (const auto& [t, c] : comult[last]) next[head * n * n + t] += cur[idx] * c;
    }
    cur = std::move(next);
    width *= n;
  }
  return cur;
}

Vec FiniteDimHopf::mul2(const Vec& a, const Vec& b) const {
  Vec r(n * n);
  for (std::size_t x = 0; x < n * n; ++x) {
    if (a[x].is_zero()) continue;
    std::size_t a1 = x / n, a2 = x % n;
    for (std::size_t y = 0; y < n * n; ++y) {
      if (b[y].is_zero()) continue;
      std::size_t b1 = y / n, b2 = y % n;
      FieldElem c = a[x] * b[y];
      for (const auto& [p, cp] : mult[a1 * n + b1])
        for (const auto& [q, cq] : mult[a2 * n + b2]) r[p * n + q] += c * cp * cq;
    }
  }
  return r;
}

Matrix FiniteDimHopf::left_mult(const Vec& a) const {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, mul(a, basis(j)));
  return m;
}

Matrix FiniteDimHopf::right_mult(const Vec& a) const {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, mul(basis(j), a));
  return m;
}

Matrix FiniteDimHopf::antipode_matrix() const {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, to_dense(antipode[j], n));
  return m;
}

std::optional<Matrix> FiniteDimHopf::antipode_inverse_matrix() const {
  if (antipode_inverse) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_col(j, to_dense((*antipode_inverse)[j], n));
    return m;
  }
  return inverse(antipode_matrix());
}

bool FiniteDimHopf::is_grouplike(const Vec& g) const {
  if (g.size() != n) return false;
  if (!eps(g).is_one()) return false;
  Vec gg(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!g[j].is_zero()) gg[i * n + j] = g[i] * g[j];
  }
  return comul(g) == gg;
}

bool FiniteDimHopf::is_rational() const {
  auto rat_sparse = [](const std::vector<SparseVec>& vs) {
    for (const auto& v : vs)
      for (const auto& e : v)
        if (!e.second.is_rational()) return false;
    return true;
  };
  auto rat_vec = [](const Vec& v) {
    for (const auto& x : v)
      if (!x.is_rational()) return false;
    return true;
  };
  return rat_sparse(mult) && rat_sparse(comult) && rat_sparse(antipode) && rat_vec(unit) &&
         rat_vec(counit);
}

// ---------------------------------------------------------------------------

bool HopfReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string HopfReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "pass " : "FAIL ") << c.axiom;
    if (!c.ok) os << "  witness: " << c.witness;
    os << "\n";
  }
  return os.str();
}

void check_shapes(const FiniteDimHopf& h) {
  std::size_t n = h.n;
  auto bad = [&](const std::string& what) {
    throw DimensionMismatch(h.name + ": inconsistent shape of " + what);
  };
  if (h.labels.size() != n) bad("basis labels");
  if (h.mult.size() != n * n) bad("mult");
  if (h.unit.size() != n) bad("unit");
  if (h.comult.size() != n) bad("comult");
  if (h.counit.size() != n) bad("counit");
  if (h.antipode.size() != n) bad("antipode");
  for (const auto& v : h.mult)
    for (const auto& e : v)
      if (e.first >= n) bad("mult entry");
  for (const auto& v : h.comult)
    for (const auto& e : v)
      if (e.first >= n * n) bad("comult entry");
  for (const auto& v : h.antipode)
    for (const auto& e : v)
      if (e.first >= n) bad("antipode entry");
  for (auto g : h.grouplikes)
    if (g >= n) bad("grouplike index");
  if (h.antipode_inverse && h.antipode_inverse->size() != n) bad("antipode inverse");
}

HopfReport verify_hopf(const FiniteDimHopf& h) {
  check_shapes(h);
  const std::size_t n = h.n;
  HopfReport rep;
  auto lab = [&](std::size_t i) { return h.labels[i]; };
  auto add = [&](const std::string& axiom, std::optional<std::string> witness) {
    rep.checks.push_back({axiom, !witness.has_value(), witness.value_or("")});
  };

  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = to_dense(h.mult[i * n + j], n);
  std::vector<Vec> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = to_dense(h.comult[i], n * n);

  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        for (std::size_t k = 0; k < n && !w; ++k)
          if (h.mul(prod[i * n + j], h.basis(k)) != h.mul(h.basis(i), prod[j * n + k]))
            w = lab(i) + "," + lab(j) + "," + lab(k);
    add("associativity", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      if (h.mul(h.unit, h.basis(i)) != h.basis(i) || h.mul(h.basis(i), h.unit) != h.basis(i))
        w = lab(i);
    add("unitality", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec left(n * n * n), right(n * n * n);
      for (const auto& [ab, c] : h.comult[i]) {
        std::size_t a = ab / n, b = ab % n;
        for (const auto& [xy, d] : h.comult[a]) left[xy * n + b] += c * d;
        for (const auto& [xy, d] : h.comult[b]) right[a * n * n + xy] += c * d;
      }
      if (left != right) w = lab(i);
    }
    add("coassociativity", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec l(n), r(n);
      for (const auto& [ab, c] : h.comult[i]) {
        std::size_t a = ab / n, b = ab % n;
        l[b] += h.counit[a] * c;
        r[a] += c * h.counit[b];
      }
      if (l != h.basis(i) || r != h.basis(i)) w = lab(i);
    }
    add("counitality", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        if (h.comul(prod[i * n + j]) != h.mul2(delta[i], delta[j])) w = lab(i) + "," + lab(j);
    Vec uu(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!h.unit[a].is_zero() && !h.unit[b].is_zero()) uu[a * n + b] = h.unit[a] * h.unit[b];
    if (!w && h.comul(h.unit) != uu) w = "unit";
    add("comultiplication is an algebra map", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        if (h.eps(prod[i * n + j]) != h.counit[i] * h.counit[j]) w = lab(i) + "," + lab(j);
    if (!w && !h.eps(h.unit).is_one()) w = "unit";
    add("counit is an algebra map", w);
  }
  {
    std::optional<std::string> wl, wr;
    for (std::size_t i = 0; i < n; ++i) {
      Vec l(n), r(n);
      for (const auto& [ab, c] : h.comult[i]) {
        std::size_t a = ab / n, b = ab % n;
        Vec sa = to_dense(h.antipode[a], n), sb = to_dense(h.antipode[b], n);
        axpy(l, c, h.mul(sa, h.basis(b)));
        axpy(r, c, h.mul(h.basis(a), sb));
      }
      Vec target = scale(h.counit[i], h.unit);
      if (!wl && l != target) wl = lab(i);
      if (!wr && r != target) wr = lab(i);
    }
    add("antipode: mu(S x id)Delta = eta eps", wl);
    add("antipode: mu(id x S)Delta = eta eps", wr);
  }
  {
    std::optional<std::string> w;
    for (auto g : h.grouplikes)
      if (!w && !h.is_grouplike(h.basis(g))) w = lab(g);
    add("declared grouplikes", w);
  }
  if (h.antipode_inverse) {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      if (h.S(h.S_inv(h.basis(i))) != h.basis(i) || h.S_inv(h.S(h.basis(i))) != h.basis(i))
        w = lab(i);
    add("declared antipode inverse", w);
  }
  return rep;
}

FiniteDimHopf dual_hopf(const FiniteDimHopf& h) {
  check_shapes(h);
  const std::size_t n = h.n;
  FiniteDimHopf d;
  d.name = h.name + "*";
  d.field_order = h.field_order;
  d.n = n;
  for (const auto& l : h.labels) d.labels.push_back("p_" + l);
  // p_a p_b = sum_c <Δ(b_c), b_a⊗b_b> p_c
  std::vector<Vec> m(n * n, Vec(n));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [ab, v] : h.comult[c]) m[ab][c] += v;
  for (auto& v : m) d.mult.push_back(to_sparse(v));
  d.unit = h.counit;
  // Δ(p_c) = sum_{a,b} <b_a b_b, b_c>-coefficient p_a⊗p_b
  std::vector<Vec> dc(n, Vec(n * n));
  for (std::size_t ab = 0; ab < n * n; ++ab)
    for (const auto& [c, v] : h.mult[ab]) dc[c][ab] += v;
  for (auto& v : dc) d.comult.push_back(to_sparse(v));
  d.counit = h.unit;
  // S*(p_b) = p_b ∘ S: coefficient at p_c is S(b_c)_b, i.e. the transpose.
  std::vector<Vec> s(n, Vec(n));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [b, v] : h.antipode[c]) s[b][c] += v;
  for (auto& v : s) d.antipode.push_back(to_sparse(v));
  if (h.antipode_inverse) {
    std::vector<Vec> si(n, Vec(n));
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [b, v] : (*h.antipode_inverse)[c]) si[b][c] += v;
    std::vector<SparseVec> sp;
    for (auto& v : si) sp.push_back(to_sparse(v));
    d.antipode_inverse = std::move(sp);
  }
  return d;
}

FiniteDimHopf change_basis(const FiniteDimHopf& h, const Matrix& p, std::vector<std::string> labels) {
  const std::size_t n = h.n;
  auto pinv_opt = inverse(p);
  if (!pinv_opt) throw std::invalid_argument("change_basis: singular basis matrix");
  const Matrix& pinv = *pinv_opt;
  FiniteDimHopf r;
  r.name = h.name;
  r.field_order = h.field_order;
  r.n = n;
  r.labels = std::move(labels);
  std::vector<Vec> nb(n);
  for (std::size_t i = 0; i < n; ++i) nb[i] = p.col(i);
  auto to_new = [&](const Vec& v) { return pinv.apply(v); };
  r.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.mult[i * n + j] = to_sparse(to_new(h.mul(nb[i], nb[j])));
  r.unit = to_new(h.unit);
  r.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec d = h.comul(nb[i]);
    Vec out(n * n);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      if (d[ab].is_zero()) continue;
      std::size_t a = ab / n, b = ab % n;
      for (std::size_t x = 0; x < n; ++x) {
        if (pinv(x, a).is_zero()) continue;
        for (std::size_t y = 0; y < n; ++y)
          if (!pinv(y, b).is_zero()) out[x * n + y] += d[ab] * pinv(x, a) * pinv(y, b);
      }
    }
    r.comult[i] = to_sparse(out);
  }
  r.counit.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.counit[i] = h.eps(nb[i]);
  r.antipode.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.antipode[i] = to_sparse(to_new(h.S(nb[i])));
  for (std::size_t i = 0; i < n; ++i)
    if (r.is_grouplike(r.basis(i))) r.grouplikes.push_back(i);
  for (const auto& [k, v] : h.named) r.named[k] = to_new(v);
  return r;
}

Matrix unit_first_change(const FiniteDimHopf& h) {
  const std::size_t n = h.n;
  std::size_t j = 0;
  while (j < n && h.unit[j].is_zero()) ++j;
  if (j == n) throw std::invalid_argument("zero unit");
  // columns: unit, then the old basis vectors except b_j
  Matrix p(n, n);
  p.set_col(0, h.unit);
  std::size_t col = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) p.set_col(col++, h.basis(i));
  return p;
}

FiniteDimHopf with_unit_first(const FiniteDimHopf& h) {
  if (h.unit == h.basis(0)) return h;
  Matrix p = unit_first_change(h);
  std::vector<std::string> labels{"1"};
  for (std::size_t c = 1; c < h.n; ++c)
    for (std::size_t i = 0; i < h.n; ++i)
      if (!p(i, c).is_zero()) labels.push_back(h.labels[i]);
  FiniteDimHopf r = change_basis(h, p, labels);
  r.name = h.name;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct ElemValue {
  bool scalar = true;
  FieldElem s;
  Vec v;
};

struct ElemOps {
  const FiniteDimHopf& h;
  Vec as_vec(const ElemValue& x) { return x.scalar ? scale(x.s, h.unit) : x.v; }
  static ElemValue scal(FieldElem s) { return ElemValue{true, std::move(s), {}}; }
  ElemValue vec(Vec v) { return ElemValue{false, FieldElem(0, h.field_order), std::move(v)}; }

  ElemValue number(const mpz_class& z) { return scal(FieldElem(Rational(z), 0 + h.field_order)); }
  ElemValue ident(const std::string& s) {
    if (auto i = h.label_index(s)) return vec(h.basis(*i));
    auto it = h.named.find(s);
    if (it != h.named.end()) return vec(it->second);
    if (auto z = field_symbol(s, h.field_order)) return scal(*z);
    throw ParseError("unknown symbol '" + s + "' for algebra " + h.name);
  }
  ElemValue add(const ElemValue& a, const ElemValue& b) {
    if (a.scalar && b.scalar) return scal(a.s + b.s);
    return vec(parcomod::add(as_vec(a), as_vec(b)));
  }
  ElemValue sub(const ElemValue& a, const ElemValue& b) {
    if (a.scalar && b.scalar) return scal(a.s - b.s);
    return vec(parcomod::sub(as_vec(a), as_vec(b)));
  }
  ElemValue mul(const ElemValue& a, const ElemValue& b) {
    if (a.scalar && b.scalar) return scal(a.s * b.s);
    if (a.scalar) return vec(scale(a.s, b.v));
    if (b.scalar) return vec(scale(b.s, a.v));
    return vec(h.mul(a.v, b.v));
  }
  ElemValue div(const ElemValue& a, const ElemValue& b) {
    if (!b.scalar) throw ParseError("division by an algebra element");
    FieldElem inv = b.s.inverse();
    if (a.scalar) return scal(a.s * inv);
    return vec(scale(inv, a.v));
  }
  ElemValue neg(const ElemValue& a) {
    if (a.scalar) return scal(-a.s);
    return vec(scale(FieldElem(-1), a.v));
  }
  ElemValue pow(const ElemValue& a, long e) {
    if (a.scalar) return scal(a.s.pow(e));
    if (e < 0) throw ParseError("negative power of an algebra element");
    Vec r = h.unit;
    for (long i = 0; i < e; ++i) r = h.mul(r, a.v);
    return vec(r);
  }
};

}  // namespace

Vec parse_element(const FiniteDimHopf& h, std::string_view text) {
  auto ast = parse_expr(text);
  ElemOps ops{h};
  ElemValue v = eval_expr<ElemValue>(*ast, ops);
  return ops.as_vec(v);
}

std::string format_element(const FiniteDimHopf& h, const Vec& v) {
  mpz_class den = 1;
  for (const auto& c : v)
    for (const auto& q : c.coeffs()) den = lcm(den, mpz_class(q.get_den()));
  std::string body;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    FieldElem c = v[i] * FieldElem(Rational(den), v[i].order());
    bool is_unit = h.labels[i] == "1";
    std::string piece;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational();
      neg = q < 0;
      Rational a = abs(q);
      if (is_unit)
        piece = a.get_str();
      else
        piece = (a == 1 ? "" : a.get_str() + "*") + h.labels[i];
    } else {
      piece = "(" + c.str("zeta") + ")" + (is_unit ? "" : "*" + h.labels[i]);
    }
    if (terms == 0)
      body += neg ? "-" + piece : piece;
    else
      body += (neg ? " - " : " + ") + piece;
    ++terms;
  }
  if (terms == 0) return "0";
  if (den == 1) return body;
  return (terms > 1 ? "(" + body + ")" : body) + "/" + den.get_str();
}

}  // namespace parcomod
