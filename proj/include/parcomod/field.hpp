#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <optional>
#include <string_view>
#include <vector>

namespace parcomod {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(zeta_N)") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch(int a, int b);
};

// Q(zeta_N) = Q[x]/Phi_N(x). Instances are interned and live for the whole
// process, so raw pointers to them never dangle.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  // Phi_N coefficients, low degree first, length degree()+1, monic.
  const std::vector<mpz_class>& modulus() const { return phi_; }
  // zeta^k reduced, for 0 <= k < 2*degree() - 1 or k < order(), whichever is larger.
  const std::vector<Rational>& power(int k) const { return powers_[k]; }

 private:
  explicit CyclotomicField(int order);
  int order_;
  int degree_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<Rational>> powers_;
};

// Process-wide default cyclotomic order. First read honours PARCOMOD_FIELD_N.
int default_field_order();
void set_default_field_order(int order);

std::vector<mpz_class> cyclotomic_polynomial(int n);

class FieldElem {
 public:
  FieldElem();
  FieldElem(long v);  // NOLINT: implicit scalar embedding is intended
  FieldElem(const Rational& q);  // NOLINT
  FieldElem(const Rational& q, int order);

  static FieldElem zero(int order) { return FieldElem(Rational(0), order); }
  static FieldElem one(int order) { return FieldElem(Rational(1), order); }
  // zeta_N^k with N the field order.
  static FieldElem zeta_power(long k, int order);
  // zeta_m^k, requires m | order.
  static FieldElem root_of_unity(int m, long k, int order);
  static FieldElem from_coeffs(std::vector<Rational> coeffs, int order);
  static FieldElem parse(std::string_view text, int order);
  static FieldElem parse(std::string_view text) { return parse(text, default_field_order()); }

  int order() const { return field_->order(); }
  const CyclotomicField& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational() const;  // throws unless is_rational()
  Rational coeff(int i) const;
  // Power-basis coefficients with trailing zeros removed.
  const std::vector<Rational>& coeffs() const { return c_; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem inverse() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  FieldElem galois(long k) const;
  FieldElem conj() const { return galois(-1); }
  FieldElem pow(long e) const;

  // Textual form "1/2 + 1/2*z^2"; var names the generator.
  std::string str(std::string_view var = "z") const;

  // Deterministic total order (used only for canonical sorting).
  static int compare(const FieldElem& a, const FieldElem& b);

 private:
  void trim();
  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const FieldElem& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

std::string rational_str(const Rational& q);

// Field symbols usable in literals: "z" and "zeta" name zeta_N, "zetaM" names
// zeta_M = zeta_N^(N/M) and requires M | N.
std::optional<FieldElem> field_symbol(const std::string& name, int order);

}  // namespace parcomod
