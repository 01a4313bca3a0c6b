#pragma once

#include "parcomod/hopf.hpp"
#include "parcomod/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parcomod {

// Right partial comodule (M, rho) over a finite-dimensional Hopf algebra.
// rho is d x (d*n): row i is rho(m_i) in M⊗H with (j, a) -> j*n + a.
struct PartialComodule {
  HopfPtr H;
  std::size_t d = 0;
  Matrix rho;
  std::string provenance;

  PartialComodule() = default;
  PartialComodule(HopfPtr h, Matrix rho_, std::string prov = {});

  std::size_t n() const { return H->n; }
  Vec coact(const Vec& m) const;  // rho(m), length d*n
  // E_a = (id⊗p_a)rho as a d x d matrix acting on column vectors.
  Matrix op(std::size_t a) const;
  std::vector<Matrix> ops() const;
  // E_phi for a functional phi on H given by its values on the basis.
  Matrix op(const Vec& phi) const;
};

PartialComodule regular_comodule(HopfPtr h);
// 1-dimensional comodule 1 -> 1⊗r.
PartialComodule one_dim_comodule(HopfPtr h, const Vec& r);

struct PcmReport {
  // PCM1..PCM5 in order.
  bool pcm[5] = {true, true, true, true, true};
  std::string witness[5];
  bool global = true;

  bool ok() const { return pcm[0] && pcm[1] && pcm[2] && pcm[3] && pcm[4]; }
  bool pcm23() const { return pcm[1] && pcm[2]; }
  bool pcm45() const { return pcm[3] && pcm[4]; }
  std::string str() const;
};

PcmReport check_pcm(const PartialComodule& m);

// Unital algebra structure on the space of a comodule: mult[i*d + j] = m_i m_j.
struct AlgebraStructure {
  std::size_t d = 0;
  std::vector<Vec> mult;
  Vec unit;
  Vec mul(const Vec& a, const Vec& b) const;
};

struct PcReport {
  bool pc1 = true, pc2 = true, pc3_left = true, pc3_right = true;
  std::string witness;
  bool ok() const { return pc1 && pc2 && pc3_left && pc3_right; }
};

// Throws std::invalid_argument if the declared unit is not a two-sided unit.
PcReport check_partial_comodule_algebra(const PartialComodule& m, const AlgebraStructure& alg);

// Unital matrix algebra generated by a set of d x d matrices.
struct OperatorAlgebra {
  std::size_t d = 0;
  std::vector<Matrix> basis;  // echelon basis of the flattened span
  std::size_t dim() const { return basis.size(); }
};

OperatorAlgebra generated_algebra(const std::vector<Matrix>& gens, std::size_t d);
OperatorAlgebra operator_algebra(const PartialComodule& m);

// Smallest subspace containing the given vectors and stable under all gens.
Subspace spin(const std::vector<Matrix>& gens, const std::vector<Vec>& seeds, std::size_t d);

// Operators restricted to an invariant subspace, in its echelon-basis coordinates.
// Throws std::invalid_argument when v is not invariant.
std::vector<Matrix> restrict_ops(const std::vector<Matrix>& ops, const Subspace& v);

// An invariant subspace of v on which the operators generate the full matrix
// algebra; nullopt when the search gives up. Uses spinning of small seeds and
// kernels of singular commuting operators.
std::optional<Subspace> find_simple_subspace(const std::vector<Matrix>& ops, const Subspace& v);

struct Simplicity {
  enum Kind { SimpleCertified, NotSimple, Inconclusive } kind = Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace for NotSimple
  std::size_t algebra_dim = 0;
};

Simplicity is_simple(const PartialComodule& m);

struct IsoResult {
  enum Kind { Isomorphic, NotIsomorphic, Undecided } kind = NotIsomorphic;
  std::optional<Matrix> map;  // f : M -> N with (f⊗id)rho_M = rho_N f
  std::size_t hom_dim = 0;
};

// Basis of { f : f A_k = B_k f for all k } as dB x dA matrices.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

// Space of comodule maps M -> N, each as a dN x dM matrix.
std::vector<Matrix> hom_space(const PartialComodule& m, const PartialComodule& n);
IsoResult iso_test(const PartialComodule& m, const PartialComodule& n, bool both_simple = false);

// rho^g(m) = m^(0) ⊗ g m^(1); throws if g is not grouplike.
PartialComodule shift_by_grouplike(const PartialComodule& m, const Vec& g);
PartialComodule direct_sum(const std::vector<PartialComodule>& parts);

Json comodule_to_json(const PartialComodule& m);
// "algebra" may be inline Hopf JSON or a name accepted by the resolver.
PartialComodule comodule_from_json(const Json& j, HopfPtr h);

}  // namespace parcomod
