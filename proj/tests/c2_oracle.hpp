#pragma once

// Hand-written arithmetic in kC2 on the basis {1, g}, independent of the
// library's structure constants: x = x0 + x1 g.

#include <gmpxx.h>

#include <array>

namespace c2oracle {

using Rational = mpq_class;
using El = std::array<Rational, 2>;
using Ten = std::array<std::array<Rational, 2>, 2>;  // Σ t[i][j] g^i ⊗ g^j

inline El mul(const El& x, const El& y) { return {x[0] * y[0] + x[1] * y[1], x[0] * y[1] + x[1] * y[0]}; }
inline Ten tensor(const El& x, const El& y) {
  Ten t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t[i][j] = x[i] * y[j];
  return t;
}
inline Ten mul(const Ten& a, const Ten& b) {
  Ten t{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) t[i ^ k][j ^ l] += a[i][j] * b[k][l];
  return t;
}
inline Ten delta(const El& x) { return {{{x[0], 0}, {0, x[1]}}}; }
inline const El kOne = {1, 0};

// The five equations for 1 -> 1⊗r. S is the identity on kC2 and fixes both legs of Δ.
inline bool passes(const El& r) {
  const El& sr = r;
  const Ten d = delta(r), sd = delta(r);
  const bool e1 = r[0] + r[1] == 1;
  const bool e2 = tensor(r, mul(r, sr)) == mul(d, tensor(kOne, sr));
  const bool e3 = mul(tensor(r, kOne), sd) == tensor(mul(r, sr), r);
  const bool e4 = tensor(r, mul(sr, r)) == mul(sd, tensor(kOne, r));
  const bool e5 = tensor(mul(sr, r), r) == mul(tensor(sr, kOne), d);
  return e1 && e2 && e3 && e4 && e5;
}

}  // namespace c2oracle
