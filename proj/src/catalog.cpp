#include "parcomod/catalog.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace parcomod {

// ---------------------------------------------------------------------------
// Groups

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> labels,
                                    std::vector<std::size_t> table) {
  FiniteGroup g;
  g.name = std::move(name);
  g.order = labels.size();
  g.labels = std::move(labels);
  g.table = std::move(table);
  const std::size_t n = g.order;
  if (n == 0) throw InvalidGroup("empty group");
  if (g.table.size() != n * n) throw InvalidGroup("Cayley table has wrong size");
  for (auto v : g.table)
    if (v >= n) throw InvalidGroup("Cayley table entry out of range");
  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) id = e;
  }
  if (!id) throw InvalidGroup("no identity element");
  g.identity = *id;
  g.inv.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inv[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (g.inv[a] == n) throw InvalidGroup("element " + g.labels[a] + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw InvalidGroup("Cayley table is not associative");
  return g;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  if (k < 0) return power(inv[a], -k);
  std::size_t r = identity;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < order; ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

namespace {

FiniteGroup cyclic(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table("c" + std::to_string(n), labels, t);
}

// r^i f^j with f r f = r^-1; element index i + m*j.
FiniteGroup dihedral(std::size_t m, const std::string& name, const std::string& r,
                     const std::string& f) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      std::string l = i == 0 ? "" : i == 1 ? r : r + std::to_string(i);
      if (j == 1) l += f;
      labels.push_back(l.empty() ? "1" : l);
    }
  const std::size_t n = 2 * m;
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
      std::size_t e = j ? (i + m - k) % m : (i + k) % m;
      t[a * n + b] = e + m * ((j + l) % 2);
    }
  return FiniteGroup::from_table(name, labels, t);
}

FiniteGroup quaternion() {
  // Units 1, i, j, k; element index 2*unit + (sign < 0).
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::string> labels = {"1", "m1", "i", "mi", "j", "mj", "k", "mk"};
  std::vector<std::size_t> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_prod[ua][ub];
      t[a * 8 + b] = 2 * unit_prod[ua][ub] + (s < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table("q8", labels, t);
}

}  // namespace

FiniteGroup build_group(const std::string& preset) {
  if (preset == "klein") {
    std::vector<std::size_t> t(16);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
    return FiniteGroup::from_table("klein", {"1", "a", "b", "ab"}, t);
  }
  if (preset == "s3") return dihedral(3, "s3", "s", "a");
  if (preset == "d8") return dihedral(4, "d8", "r", "f");
  if (preset == "q8") return quaternion();
  if (preset.size() >= 2 && preset[0] == 'c' &&
      std::all_of(preset.begin() + 1, preset.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t n = std::stoul(preset.substr(1));
    if (n >= 1 && n <= 64) return cyclic(n);
  }
  throw std::invalid_argument("unknown group preset '" + preset + "'");
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["labels"] = g.labels;
  Json rows = Json::array();
  for (std::size_t a = 0; a < g.order; ++a) {
    std::vector<std::size_t> row(g.table.begin() + a * g.order, g.table.begin() + (a + 1) * g.order);
    rows.push_back(row);
  }
  j["cayley"] = rows;
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  auto n = j.at("order").get<std::size_t>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw InvalidGroup("label count differs from order");
  std::vector<std::size_t> t;
  const Json& rows = j.at("cayley");
  if (rows.size() != n) throw InvalidGroup("Cayley table has wrong size");
  for (const auto& r : rows) {
    auto row = r.get<std::vector<std::size_t>>();
    if (row.size() != n) throw InvalidGroup("Cayley table has wrong size");
    t.insert(t.end(), row.begin(), row.end());
  }
  return FiniteGroup::from_table(j.value("name", std::string("G")), labels, t);
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(std::size_t g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

std::vector<std::size_t> closure(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order, 0);
  std::deque<std::size_t> queue{g.identity};
  in[g.identity] = 1;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      std::size_t b = g.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        queue.push_back(b);
      }
    }
  }
  std::vector<std::size_t> r;
  for (std::size_t a = 0; a < g.order; ++a)
    if (in[a]) r.push_back(a);
  return r;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::size_t> elems) {
  Subgroup k;
  k.elements = std::move(elems);
  std::vector<char> left(g.order, 0), right(g.order, 0);
  for (std::size_t a = 0; a < g.order; ++a) {
    if (!left[a]) {
      k.left_reps.push_back(a);
      for (auto h : k.elements) left[g.mul(a, h)] = 1;
    }
    if (!right[a]) {
      k.right_reps.push_back(a);
      for (auto h : k.elements) right[g.mul(h, a)] = 1;
    }
  }
  return k;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  return make_subgroup(g, closure(g, gens));
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> found;
  for (std::size_t a = 0; a < g.order; ++a) found.insert(closure(g, {a}));
  // Every subgroup is an iterated join of cyclic ones.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<std::size_t> u;
        std::set_union(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                       std::back_inserter(u));
        if (found.insert(closure(g, u)).second) grew = true;
      }
  }
  std::vector<std::vector<std::size_t>> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> r;
  for (auto& e : all) r.push_back(make_subgroup(g, e));
  return r;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& k) {
  const std::size_t m = k.elements.size();
  std::vector<std::string> labels;
  for (auto e : k.elements) labels.push_back(g.labels[e]);
  std::vector<std::size_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto p = g.mul(k.elements[a], k.elements[b]);
      t[a * m + b] = std::lower_bound(k.elements.begin(), k.elements.end(), p) - k.elements.begin();
    }
  std::string name = "{";
  for (std::size_t i = 0; i < m; ++i) name += (i ? "," : "") + labels[i];
  return FiniteGroup::from_table(name + "}", labels, t);
}

// ---------------------------------------------------------------------------
// Hopf algebras

FiniteDimHopf build_group_algebra(const FiniteGroup& g, int N) {
  const std::size_t n = g.order;
  FiniteDimHopf h;
  h.name = "k" + g.name;
  h.field_order = N;
  h.n = n;
  h.labels = g.labels;
  h.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.mult[a * n + b] = {{g.mul(a, b), FieldElem(1L)}};
  h.unit = unit_vec(n, g.identity);
  for (std::size_t a = 0; a < n; ++a) h.comult.push_back({{a * n + a, FieldElem(1L)}});
  h.counit.assign(n, FieldElem(1L));
  for (std::size_t a = 0; a < n; ++a) h.antipode.push_back({{g.inv[a], FieldElem(1L)}});
  h.antipode_inverse = h.antipode;
  for (std::size_t a = 0; a < n; ++a) h.grouplikes.push_back(a);
  return h;
}

FiniteDimHopf build_dual_group_algebra(const FiniteGroup& g, int N) {
  const std::size_t n = g.order;
  FiniteDimHopf h;
  h.name = "k" + g.name + "*";
  h.field_order = N;
  h.n = n;
  for (const auto& l : g.labels) h.labels.push_back("p_" + l);
  h.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) h.mult[a * n + a] = {{a, FieldElem(1L)}};
  h.unit.assign(n, FieldElem(1L));
  h.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.comult[g.mul(a, b)].push_back({a * n + b, FieldElem(1L)});
  h.counit = unit_vec(n, g.identity);
  for (std::size_t a = 0; a < n; ++a) h.antipode.push_back({{g.inv[a], FieldElem(1L)}});
  h.antipode_inverse = h.antipode;
  for (std::size_t a = 0; a < n; ++a)
    if (h.is_grouplike(h.basis(a))) h.grouplikes.push_back(a);
  return h;
}

namespace {

Vec tensor(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

}  // namespace

FiniteDimHopf build_sweedler(int N) {
  if (N % 4 != 0) throw std::invalid_argument("sweedler needs a primitive 4th root of unity (4 | N)");
  // g^a x^b at index a + 2b.
  auto prod = [](std::size_t p, std::size_t q) {
    std::size_t a = p % 2, b = p / 2, c = q % 2, d = q / 2;
    Vec r(4);
    if (b + d < 2) r[(a + c) % 2 + 2 * (b + d)] = FieldElem((b * c) % 2 ? -1L : 1L);
    return r;
  };
  FiniteDimHopf h;
  h.name = "sweedler";
  h.field_order = N;
  h.n = 4;
  h.labels = {"1", "g", "x", "gx"};
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) h.mult.push_back(to_sparse(prod(p, q)));
  h.unit = unit_vec(4, 0);
  Vec dg = tensor(unit_vec(4, 1), unit_vec(4, 1));
  Vec dx = add(tensor(unit_vec(4, 0), unit_vec(4, 2)), tensor(unit_vec(4, 2), unit_vec(4, 1)));
  h.comult = {to_sparse(tensor(unit_vec(4, 0), unit_vec(4, 0))), to_sparse(dg), to_sparse(dx),
              {}};
  h.comult[3] = to_sparse(h.mul2(dg, dx));
  h.counit = {FieldElem(1L), FieldElem(1L), FieldElem(0L), FieldElem(0L)};
  // S(g) = g, S(x) = gx, S(gx) = S(x)S(g) = gxg = -x.
  h.antipode = {{{0, FieldElem(1L)}}, {{1, FieldElem(1L)}}, {{3, FieldElem(1L)}}, {{2, FieldElem(-1L)}}};
  h.grouplikes = {0, 1};
  return h;
}

FiniteDimHopf build_kac(int N) {
  if (N % 8 != 0) throw std::invalid_argument("kac needs a primitive 8th root of unity (8 | N)");
  // Monomial x^a y^b z^c <-> basis index.
  static const std::size_t idx[2][2][2] = {{{0, 3}, {2, 6}}, {{1, 5}, {4, 7}}};  // [a][b][c]
  struct Mono {
    std::size_t a, b, c;
  };
  static const Mono mono[8] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                               {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  auto prod = [&](std::size_t p, std::size_t q) {
    Mono u = mono[p], v = mono[q];
    // z x = y z and z y = x z, so z^c x^a' y^b' swaps exponents when c = 1.
    std::size_t A = u.a ^ (u.c ? v.b : v.a), B = u.b ^ (u.c ? v.a : v.b);
    Vec r(8);
    if (u.c + v.c < 2) {
      r[idx[A][B][u.c + v.c]] = FieldElem(1L);
      return r;
    }
    // z^2 = (1 + x + y - xy)/2
    Rational half(1, 2);
    r[idx[A][B][0]] += FieldElem(half);
    r[idx[A ^ 1][B][0]] += FieldElem(half);
    r[idx[A][B ^ 1][0]] += FieldElem(half);
    r[idx[A ^ 1][B ^ 1][0]] += FieldElem(-half);
    return r;
  };
  FiniteDimHopf h;
  h.name = "kac";
  h.field_order = N;
  h.n = 8;
  h.labels = {"1", "x", "y", "z", "xy", "xz", "yz", "xyz"};
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) h.mult.push_back(to_sparse(prod(p, q)));
  h.unit = unit_vec(8, 0);
  h.comult.resize(8);
  for (std::size_t p = 0; p < 8; ++p) {
    Mono u = mono[p];
    Vec g = unit_vec(8, idx[u.a][u.b][0]);
    Vec dg = tensor(g, g);
    if (!u.c) {
      h.comult[p] = to_sparse(dg);
      continue;
    }
    Rational half(1, 2);
    Vec e1 = unit_vec(8, 0), ex = unit_vec(8, 1), ey = unit_vec(8, 2), ez = unit_vec(8, 3);
    Vec pre = scale(FieldElem(half), tensor(e1, e1));
    axpy(pre, FieldElem(half), tensor(e1, ex));
    axpy(pre, FieldElem(half), tensor(ey, e1));
    axpy(pre, FieldElem(-half), tensor(ey, ex));
    Vec dz = h.mul2(pre, tensor(ez, ez));
    h.comult[p] = to_sparse(h.mul2(dg, dz));
  }
  h.counit.assign(8, FieldElem(1L));
  // S(x^a y^b z) = z y^b x^a = x^b y^a z; S(x^a y^b) = x^a y^b.
  for (std::size_t p = 0; p < 8; ++p) {
    Mono u = mono[p];
    h.antipode.push_back({{u.c ? idx[u.b][u.a][1] : p, FieldElem(1L)}});
  }
  for (std::size_t a = 0; a < 8; ++a)
    if (h.is_grouplike(h.basis(a))) h.grouplikes.push_back(a);
  FieldElem i = FieldElem::root_of_unity(4, 1, N);
  FieldElem one(1L, N), half(Rational(1, 2), N);
  FieldElem lo = (one - i) * half, hi = (one + i) * half;
  Vec s(8), sbar(8), t(8, FieldElem(Rational(1, 8), N));
  s[3] = lo;
  s[5] = hi;
  sbar[3] = hi;
  sbar[5] = lo;
  h.named["s"] = s;
  h.named["sbar"] = sbar;
  h.named["t"] = t;
  return h;
}

bool is_group_preset(const std::string& preset) {
  try {
    build_group(preset);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

FiniteDimHopf build_algebra(const std::string& preset, int N) {
  if (preset == "sweedler") return build_sweedler(N);
  if (preset == "kac") return build_kac(N);
  if (!preset.empty() && preset.back() == '*') {
    auto g = preset.substr(0, preset.size() - 1);
    if (is_group_preset(g)) return build_dual_group_algebra(build_group(g), N);
  }
  if (is_group_preset(preset)) return build_group_algebra(build_group(preset), N);
  throw std::invalid_argument("unknown algebra preset '" + preset + "'");
}

// ---------------------------------------------------------------------------
// Characters

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order, 0);
  std::vector<std::vector<std::size_t>> r;
  for (std::size_t a = 0; a < g.order; ++a) {
    if (seen[a]) continue;
    std::set<std::size_t> cls;
    for (std::size_t x = 0; x < g.order; ++x) cls.insert(g.mul(g.mul(x, a), g.inv[x]));
    for (auto c : cls) seen[c] = 1;
    r.emplace_back(cls.begin(), cls.end());
  }
  return r;
}

std::vector<ClassFunction> linear_characters(const FiniteGroup& g, int N) {
  std::vector<std::size_t> gens;
  {
    std::vector<std::size_t> cur = closure(g, {});
    for (std::size_t a = 0; a < g.order; ++a)
      if (!std::binary_search(cur.begin(), cur.end(), a)) {
        gens.push_back(a);
        cur = closure(g, gens);
      }
  }
  // Candidate exponents e with zeta_N^(e * ord) = 1.
  std::vector<std::vector<long>> options;
  for (auto s : gens) {
    std::vector<long> opt;
    long o = static_cast<long>(g.element_order(s));
    for (long e = 0; e < N; ++e)
      if ((e * o) % N == 0) opt.push_back(e);
    options.push_back(opt);
  }
  std::vector<ClassFunction> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // Extend along right multiplication by generators; reject on conflict.
    std::vector<long> val(g.order, -1);
    val[g.identity] = 0;
    std::deque<std::size_t> q{g.identity};
    bool ok = true;
    while (!q.empty() && ok) {
      std::size_t a = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        std::size_t b = g.mul(a, gens[k]);
        long v = (val[a] + options[k][choice[k]]) % N;
        if (val[b] < 0) {
          val[b] = v;
          q.push_back(b);
        } else if (val[b] != v) {
          ok = false;
        }
      }
    }
    for (std::size_t a = 0; a < g.order && ok; ++a)
      for (std::size_t b = 0; b < g.order && ok; ++b)
        ok = val[g.mul(a, b)] == (val[a] + val[b]) % N;
    if (ok) {
      ClassFunction chi;
      for (auto v : val) chi.push_back(FieldElem::zeta_power(v, N));
      out.push_back(chi);
    }
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  return out;
}

CharacterTable characters(const FiniteGroup& g, int N) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  t.irreducibles = linear_characters(g, N);
  const std::size_t n = g.order;
  if (!g.is_abelian()) {
    ClassFunction chi(n, FieldElem(0L, N));
    if (n == 6) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t o = g.element_order(a);
        chi[a] = FieldElem(o == 1 ? 2L : o == 3 ? -1L : 0L, N);
      }
    } else if (n == 8) {
      for (std::size_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        chi[a] = FieldElem(a == g.identity ? 2L : central ? -2L : 0L, N);
      }
    } else {
      throw UnsupportedGroup("no irreducible character table for non-abelian group of order " +
                             std::to_string(n));
    }
    t.irreducibles.push_back(chi);
  }
  // Orthogonality and degree checks.
  FieldElem sum_sq(0L, N);
  for (const auto& chi : t.irreducibles) sum_sq += chi[g.identity] * chi[g.identity];
  if (sum_sq != FieldElem(static_cast<long>(n), N))
    throw UnsupportedGroup("field Q(zeta_" + std::to_string(N) + ") does not split " + g.name);
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    for (std::size_t j = 0; j < t.irreducibles.size(); ++j) {
      FieldElem s(0L, N);
      for (std::size_t a = 0; a < n; ++a) s += t.irreducibles[i][a] * t.irreducibles[j][g.inv[a]];
      if (s != FieldElem(i == j ? static_cast<long>(n) : 0L, N))
        throw std::logic_error("character row orthogonality fails for " + g.name);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      FieldElem s(0L, N);
      for (const auto& chi : t.irreducibles) s += chi[a] * chi[g.inv[b]];
      long expect = 0;
      for (const auto& cls : t.classes)
        if (std::count(cls.begin(), cls.end(), a) && std::count(cls.begin(), cls.end(), b))
          expect = static_cast<long>(n / cls.size());
      if (s != FieldElem(expect, N))
        throw std::logic_error("character column orthogonality fails for " + g.name);
    }
  return t;
}

std::vector<Vec> central_primitive_idempotents(const FiniteGroup& k, int N) {
  CharacterTable t = characters(k, N);
  std::vector<Vec> r;
  const std::size_t n = k.order;
  for (const auto& chi : t.irreducibles) {
    FieldElem c = chi[k.identity] * FieldElem(Rational(1, static_cast<long>(n)), N);
    Vec e(n);
    for (std::size_t h = 0; h < n; ++h) e[h] = c * chi[k.inv[h]];
    r.push_back(e);
  }
  return r;
}

Vec embed_subgroup_element(const FiniteGroup& g, const Subgroup& k, const Vec& v) {
  Vec r(g.order);
  for (std::size_t i = 0; i < k.elements.size(); ++i) r[k.elements[i]] = v[i];
  return r;
}

// ---------------------------------------------------------------------------
// Declared data

std::vector<std::pair<std::string, std::vector<std::string>>> kac_coideal_subalgebras() {
  return {{"<1>", {"1"}},
          {"<1,x>", {"1", "x"}},
          {"<1,y>", {"1", "y"}},
          {"<1,xy>", {"1", "xy"}},
          {"<1,x,y,xy>", {"1", "x", "y", "xy"}},
          {"S1", {"1", "xy", "s", "xy*s"}},
          {"S2", {"1", "xy", "sbar", "xy*sbar"}},
          {"A", {"1", "x", "y", "z", "xy", "xz", "yz", "xyz"}}};
}

std::vector<CatalogIdempotent> kac_table_idempotents() {
  return {{"<1>", "1"},
          {"<1,x>", "(1 + x)/2"},
          {"<1,y>", "(1 + y)/2"},
          {"<1,xy>", "(1 + xy)/2"},
          {"<1,x,y,xy>", "(1 + x + y + xy)/4"},
          {"<1,x,y,xy>", "(3 - x - y - xy)/4"},
          {"S1", "(1 + xy + s + xy*s)/4"},
          {"S1", "(2 + (1 + zeta8)*s + (1 - zeta8)*xy*s)/4"},
          {"S1", "(3 - xy - s - xy*s)/4"},
          {"S2", "(1 + xy + sbar + xy*sbar)/4"},
          // The form with zeta8 in place of zeta8^3 is not idempotent.
          {"S2", "(2 + (1 + zeta8^3)*sbar + (1 - zeta8^3)*xy*sbar)/4"},
          {"S2", "(3 - xy - sbar - xy*sbar)/4"},
          {"A", "(1 + x + y + xy + z + xz + yz + xyz)/8"},
          {"A", "(3 - x - y + 3*xy + z + xz + yz + xyz)/8"},
          {"A", "(5 + x + y - 3*xy + z + xz + yz + xyz)/8"},
          {"A", "(7 - x - y - xy - z - xz - yz - xyz)/8"}};
}

std::string kac_s2_non_idempotent_literal() {
  return "(2 + (1 - zeta8)*sbar + (1 + zeta8)*xy*sbar)/4";
}

std::vector<CatalogIdempotent> s3_table_idempotents() {
  return {{"{1}", "1"},
          {"{1,a}", "(1 + a)/2"},
          {"{1,sa}", "(1 + sa)/2"},
          {"{1,s2a}", "(1 + s2a)/2"},
          {"{1,s,s2}", "(1 + s + s2)/3"},
          {"{1,s,s2}", "(2 - s - s2)/3"},
          {"{1,s,s2,a,sa,s2a}", "(1 + s + s2 + a + sa + s2a)/6"},
          {"{1,s,s2,a,sa,s2a}", "(5 - s - s2 - a - sa - s2a)/6"}};
}

}  // namespace parcomod
