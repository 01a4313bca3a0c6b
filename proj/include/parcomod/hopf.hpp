#pragma once

#include "parcomod/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace parcomod {

// Finite-dimensional Hopf algebra given by structure constants in a fixed basis.
// Tensor indices are row-major: the basis of H⊗H is (a, b) -> a*n + b.
struct FiniteDimHopf {
  std::string name;
  int field_order = 24;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> mult;    // mult[i*n + j] = b_i b_j
  Vec unit;                       // 1_H
  std::vector<SparseVec> comult;  // comult[i] = Δ(b_i) over H⊗H
  Vec counit;                     // ε(b_i)
  std::vector<SparseVec> antipode;  // antipode[j] = S(b_j)
  std::vector<std::size_t> grouplikes;
  std::optional<std::vector<SparseVec>> antipode_inverse;
  // Extra named elements usable in element literals (e.g. "s" in the Kac algebra).
  std::map<std::string, Vec> named;

  std::size_t dim() const { return n; }
  std::optional<std::size_t> label_index(const std::string& l) const;

  Vec basis(std::size_t i) const { return unit_vec(n, i); }
  Vec one() const { return unit; }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec comul(const Vec& a) const;          // length n^2
  FieldElem eps(const Vec& a) const;
  Vec S(const Vec& a) const;
  // Requires an invertible antipode; uses the declared inverse when present.
  Vec S_inv(const Vec& a) const;
  // Δ^{(k)}: H -> H^{⊗(k+1)}, iterated on the last leg.
  Vec iterated_comul(const Vec& a, int k) const;
  // Products in H⊗H (componentwise).
  Vec mul2(const Vec& a, const Vec& b) const;
  // Left multiplication operator L_a (column j = a b_j).
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
  Matrix antipode_matrix() const;
  std::optional<Matrix> antipode_inverse_matrix() const;

  bool is_grouplike(const Vec& g) const;
  bool is_rational() const;  // all structure constants in Q
};

using HopfPtr = std::shared_ptr<const FiniteDimHopf>;

struct AxiomCheck {
  std::string axiom;
  bool ok = true;
  std::string witness;  // basis indices/labels of a failing instance
};

struct HopfReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string str() const;
};

// Shape validation; throws DimensionMismatch.
void check_shapes(const FiniteDimHopf& h);
HopfReport verify_hopf(const FiniteDimHopf& h);

// Dual Hopf algebra on the dual basis p_i.
FiniteDimHopf dual_hopf(const FiniteDimHopf& h);

// Same algebra in the basis given by the columns of p (new basis in old coordinates).
FiniteDimHopf change_basis(const FiniteDimHopf& h, const Matrix& p, std::vector<std::string> labels);

// Basis change making basis[0] the unit; the basis vector replaced is the first
// one with a nonzero unit coordinate.
FiniteDimHopf with_unit_first(const FiniteDimHopf& h);
// The basis-change matrix used by with_unit_first (identity when b_0 = 1).
Matrix unit_first_change(const FiniteDimHopf& h);

// Element literal over basis labels, named elements and "zeta" (= zeta_N).
Vec parse_element(const FiniteDimHopf& h, std::string_view text);
// Compact element form "(5 - s - s2)/6"; coefficients outside Q use "zeta".
std::string format_element(const FiniteDimHopf& h, const Vec& v);

}  // namespace parcomod
