#include "parcomod/field.hpp"

#include "parcomod/expr.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace parcomod {

FieldMismatch::FieldMismatch(int a, int b)
    : std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

namespace {

using Poly = std::vector<mpz_class>;

Poly poly_divexact(const Poly& num, const Poly& den) {
  // den monic
  Poly r = num;
  size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (size_t i = q.size(); i-- > 0;) {
    mpz_class c = r[i + dn];
    q[i] = c;
    if (c != 0)
      for (size_t j = 0; j <= dn; ++j) r[i + j] -= c * den[j];
  }
  return q;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

int& default_order_slot() {
  static int order = [] {
    if (const char* env = std::getenv("PARCOMOD_FIELD_N")) {
      int n = std::atoi(env);
      if (n >= 1) return n;
    }
    return 24;
  }();
  return order;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divexact(p, cyclotomic_polynomial(d));
  return p;
}

CyclotomicField::CyclotomicField(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
  degree_ = static_cast<int>(phi_.size()) - 1;
  if (degree_ != euler_phi(order)) throw std::logic_error("cyclotomic degree mismatch");
  int count = std::max(2 * degree_ - 1, order_);
  powers_.resize(count);
  std::vector<Rational> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce with the monic modulus
    Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * Rational(phi_[i]);
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry.find(order);
  if (it == registry.end())
    it = registry.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  return *it->second;
}

namespace {
std::atomic<const CyclotomicField*> g_default_field{nullptr};

const CyclotomicField& field_for(int order) {
  const CyclotomicField* f = g_default_field.load(std::memory_order_acquire);
  if (f != nullptr && f->order() == order) return *f;
  return CyclotomicField::get(order);
}

const CyclotomicField& default_field() {
  const CyclotomicField* f = g_default_field.load(std::memory_order_acquire);
  if (f == nullptr) {
    f = &CyclotomicField::get(default_order_slot());
    g_default_field.store(f, std::memory_order_release);
  }
  return *f;
}
}  // namespace

int default_field_order() { return default_order_slot(); }
void set_default_field_order(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  default_order_slot() = order;
  g_default_field.store(&CyclotomicField::get(order), std::memory_order_release);
}

std::string rational_str(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

FieldElem::FieldElem() : field_(&default_field()) {}
FieldElem::FieldElem(long v) : field_(&default_field()) {
  if (v != 0) c_.emplace_back(v);
}
FieldElem::FieldElem(const Rational& q) : field_(&default_field()) {
  if (q != 0) c_.push_back(q);
}
FieldElem::FieldElem(const Rational& q, int order) : field_(&field_for(order)) {
  if (q != 0) c_.push_back(q);
}

FieldElem FieldElem::from_coeffs(std::vector<Rational> coeffs, int order) {
  FieldElem r(Rational(0), order);
  int d = r.field_->degree();
  if (static_cast<int>(coeffs.size()) <= d) {
    r.c_ = std::move(coeffs);
    for (auto& q : r.c_) q.canonicalize();
  } else {
    r.c_.assign(d, 0);
    for (size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const auto& p = r.field_->power(static_cast<int>(k % order));
      for (int i = 0; i < d; ++i)
        if (p[i] != 0) r.c_[i] += coeffs[k] * p[i];
    }
  }
  r.trim();
  return r;
}

FieldElem FieldElem::zeta_power(long k, int order) {
  long m = ((k % order) + order) % order;
  FieldElem r(Rational(0), order);
  r.c_ = r.field_->power(static_cast<int>(m));
  r.trim();
  return r;
}

FieldElem FieldElem::root_of_unity(int m, long k, int order) {
  if (m <= 0 || order % m != 0)
    throw std::invalid_argument("Q(zeta_" + std::to_string(order) + ") has no primitive " +
                                std::to_string(m) + "-th root of unity");
  return zeta_power(k * (order / m), order);
}

void FieldElem::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool FieldElem::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational FieldElem::rational() const {
  if (!is_rational()) throw std::domain_error("field element is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

Rational FieldElem::coeff(int i) const {
  return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

static const CyclotomicField* common_field(const FieldElem& a, const FieldElem& b,
                                           const CyclotomicField* fa, const CyclotomicField* fb) {
  if (fa == fb) return fa;
  if (b.is_rational()) return fa;
  if (a.is_rational()) return fb;
  throw FieldMismatch(fa->order(), fb->order());
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  field_ = common_field(*this, o, field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  field_ = common_field(*this, o, field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const CyclotomicField* f = common_field(a, b, a.field_, b.field_);
  FieldElem r(Rational(0), f->order());
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1) {
    r.c_ = b.c_;
    for (auto& q : r.c_) q *= a.c_[0];
    return r;
  }
  if (b.c_.size() == 1) {
    r.c_ = a.c_;
    for (auto& q : r.c_) q *= b.c_[0];
    return r;
  }
  int d = f->degree();
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  if (static_cast<int>(prod.size()) > d) {
    for (size_t k = d; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const auto& p = f->power(static_cast<int>(k));
      for (int i = 0; i < d; ++i)
        if (p[i] != 0) prod[i] += prod[k] * p[i];
    }
    prod.resize(d);
  }
  r.c_ = std::move(prod);
  r.trim();
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }
FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = *this * o.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.c_ != b.c_) return false;
  return a.is_rational() || a.field_ == b.field_;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElem(Rational(1) / c_[0], order());
  // Solve M v = e0 where column j of M is zeta^j * a.
  int d = field_->degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    FieldElem col = *this * zeta_power(j, order());
    for (int i = 0; i < d; ++i) m[i][j] = col.coeff(i);
  }
  m[0][d] = 1;
  for (int c = 0, r = 0; c < d; ++c, ++r) {
    int p = r;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw std::logic_error("singular multiplication matrix for nonzero element");
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (int k = c; k <= d; ++k) m[r][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int k = c; k <= d; ++k) m[i][k] -= f * m[r][k];
    }
  }
  std::vector<Rational> v(d);
  for (int i = 0; i < d; ++i) v[i] = m[i][d];
  return from_coeffs(std::move(v), order());
}

FieldElem FieldElem::galois(long k) const {
  int n = order();
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, static_cast<long>(n)) != 1 && n > 1)
    throw std::invalid_argument("galois exponent not coprime to the order");
  FieldElem r(Rational(0), n);
  if (c_.empty()) return r;
  std::vector<Rational> acc(field_->degree(), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = field_->power(static_cast<int>((i * kk) % n));
    for (int j = 0; j < field_->degree(); ++j)
      if (p[j] != 0) acc[j] += c_[i] * p[j];
  }
  r.c_ = std::move(acc);
  r.trim();
  return r;
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = one(order()), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FieldElem::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    bool neg = c_[i] < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

int FieldElem::compare(const FieldElem& a, const FieldElem& b) {
  size_t n = std::max(a.c_.size(), b.c_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace {
struct FieldOps {
  int order;
  FieldElem number(const mpz_class& z) { return FieldElem(Rational(z), order); }
  FieldElem ident(const std::string& s) {
    if (auto v = field_symbol(s, order)) return *v;
    throw ParseError("unknown symbol '" + s + "' in field literal");
  }
  FieldElem add(FieldElem a, const FieldElem& b) { return a += b; }
  FieldElem sub(FieldElem a, const FieldElem& b) { return a -= b; }
  FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
  FieldElem div(const FieldElem& a, const FieldElem& b) { return a / b; }
  FieldElem neg(const FieldElem& a) { return -a; }
  FieldElem pow(const FieldElem& a, long e) { return a.pow(e); }
};
}  // namespace

std::optional<FieldElem> field_symbol(const std::string& name, int order) {
  if (name == "z" || name == "zeta") return FieldElem::zeta_power(1, order);
  if (name.size() > 4 && name.compare(0, 4, "zeta") == 0) {
    int m = 0;
    for (std::size_t i = 4; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9' || m > 1000000) return std::nullopt;
      m = m * 10 + (name[i] - '0');
    }
    if (m < 1 || order % m != 0) throw ParseError(name + " is not in Q(zeta_" + std::to_string(order) + ")");
    return FieldElem::root_of_unity(m, 1, order);
  }
  return std::nullopt;
}

FieldElem FieldElem::parse(std::string_view text, int order) {
  auto ast = parse_expr(text);
  FieldOps ops{order};
  return eval_expr<FieldElem>(*ast, ops);
}

}  // namespace parcomod
