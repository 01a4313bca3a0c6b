#pragma once

#include "parcomod/catalog.hpp"
#include "parcomod/partial_comodule.hpp"

#include <map>
#include <string>
#include <vector>

namespace parcomod {

// Raised when an internal invariant of the construction fails; indicates an
// arithmetic bug or invalid input structure constants.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubcentralCheck {
  bool nonzero = false, idempotent = false, subcentral = false;
  // e e(1)⊗e(2) = e⊗e = e(1)e⊗e(2)
  bool strong = false;
  std::string failure;  // first failed condition, empty when subcentral
  bool ok() const { return nonzero && idempotent && subcentral; }
};

SubcentralCheck is_subcentral(const FiniteDimHopf& h, const Vec& e);

// A subcentral idempotent e together with the right coideal subalgebra A_e it
// generates. Invariant: e is central in A_e.
struct SubcentralIdempotent {
  HopfPtr H;
  Vec e;
  Subspace A;
  bool strong = false;
};

// Smallest right coideal subalgebra containing 1 and e. Throws
// std::invalid_argument when e is not subcentral.
Subspace coideal_subalgebra_closure(const FiniteDimHopf& h, const std::vector<Vec>& gens);
SubcentralIdempotent generate_coideal_subalgebra(HopfPtr h, const Vec& e);

// H̄ = H/HA⁺ with basis indexed by the non-pivot coordinates of HA⁺.
struct QuotientCoalgebra {
  HopfPtr H;
  Subspace HAplus;
  Matrix pi;                    // m x n
  std::size_t m = 0;
  std::vector<std::size_t> lift;  // H basis index representing each H̄ basis vector
  std::vector<SparseVec> comult;  // Δ̄ over H̄⊗H̄, index c*m + d
  Vec counit;
  std::vector<Vec> grouplikes;    // in H̄ coordinates, in order of first appearance

  Vec project(const Vec& h) const { return pi.apply(h); }
  Vec delta(const Vec& c) const;
  bool is_grouplike(const Vec& c) const;
  // (ρ: H̄ -> H̄⊗H̄) viewed as left action of h on H̄: π(h b_c).
  Vec act(const Vec& h, const Vec& c) const;
};

QuotientCoalgebra quotient_coalgebra(const SubcentralIdempotent& a);

// Right H̄-comodule W, rho is dim x (dim*m), row i = ρ(w_i) over (j, c) -> j*m + c.
struct HbarComodule {
  std::size_t dim = 0;
  Matrix rho;
  std::string label;
};

bool check_hbar_comodule(const QuotientCoalgebra& q, const HbarComodule& w);
HbarComodule grouplike_comodule(const QuotientCoalgebra& q, const Vec& g, std::string label = {});
// Simple H̄-comodules up to isomorphism. Grouplikes are searched among the
// ε-normalized images of basis vectors, declared grouplikes and named
// elements; when they do not span H̄ the regular comodule is spun for the rest.
// Throws ConstructionError when the result does not account for all of H̄.
std::vector<HbarComodule> simple_hbar_comodules(const QuotientCoalgebra& q, bool* used_spinning = nullptr);

struct HeBicomodule {
  HopfPtr H;
  Vec e;
  Subspace He;      // inside H
  Matrix lambda;    // dimHe x (m*dimHe): row j = λ(x_j) over (c, l) -> c*dimHe + l
  PartialComodule rho_e;  // x -> x(1)e ⊗ x(2) in He coordinates
};

HeBicomodule he_bicomodule(const SubcentralIdempotent& a, const QuotientCoalgebra& q);

// W □ He with coaction w⊗x -> w⊗x(1)e⊗x(2). The underlying space is returned
// in W⊗He coordinates, (i, j) -> i*dimHe + j, when space is non-null.
PartialComodule cotensor_comodule(const HbarComodule& w, const HeBicomodule& he,
                                  const QuotientCoalgebra& q, Subspace* space = nullptr);
// {x ∈ He : λ(x) = π(1)⊗x} with the restricted coaction; space in He coordinates.
PartialComodule coinvariants(const HeBicomodule& he, const QuotientCoalgebra& q,
                             Subspace* space = nullptr);

// The subspace A_e·e of H.
Subspace ae_times_e(const SubcentralIdempotent& a);

// Full pipeline for one idempotent.
struct ConstructionResult {
  SubcentralIdempotent sub;
  QuotientCoalgebra q;
  HeBicomodule he;
  std::vector<HbarComodule> ws;
  std::vector<PartialComodule> comodules;  // one per W, same order
  std::size_t dim_Ae = 0;                  // dim of coinvariants
  bool spinning_used = false;
  bool coinvariants_equal_ae = false;
};

ConstructionResult run_construction(HopfPtr h, const Vec& e);

// Group case ---------------------------------------------------------------

struct GroupRow {
  std::size_t subgroup_index = 0;  // into subgroups(G)
  Subgroup K;
  std::string subgroup_label;      // "{1,s,s2}"
  Vec e;                           // in kG
  std::vector<Vec> equivalents;    // rest of the character orbit, sorted
  std::size_t dim_I = 0;
  std::size_t index = 0;           // [G:K]
  std::vector<PartialComodule> simples;  // one per left coset, coset order
};

struct GroupClassification {
  FiniteGroup G;
  HopfPtr kG;
  std::vector<GroupRow> rows;
  std::map<std::size_t, std::size_t> blocks() const;  // dim -> count
  std::size_t total() const;                          // Σ n²
};

std::string subgroup_label(const FiniteGroup& g, const Subgroup& k);

// Character orbit {ν·e} of a central idempotent of kK (kK coordinates).
std::vector<Vec> character_orbit(const FiniteGroup& k, const Vec& e);

// Representative choice: rational-coefficient members first, then the
// greatest coefficient vector in the field's total order. With reference_order the
// representatives and row order follow the reference S3 list where it applies.
GroupClassification classify_group_simples(const FiniteGroup& g, bool reference_order = false,
                                           bool build_comodules = true);

// Isomorphism classes against the character-orbit prediction: the simples
// from (K, e, gK) and (K', e', g'K') are isomorphic iff K = K', gK = g'K' and
// e' lies in the character orbit of e. Every subcentral idempotent of every
// subgroup is used, not only orbit representatives.
struct RedundancyReport {
  std::size_t simples = 0;
  std::size_t pairs = 0;
  std::size_t agree = 0;
  std::size_t predicted_isomorphic = 0;
  std::size_t observed_isomorphic = 0;
  std::size_t undecided = 0;
  bool ok() const { return pairs == agree && undecided == 0; }
};

RedundancyReport redundancy_check(const FiniteGroup& g);

// Kac algebra table ----------------------------------------------------------

struct KacRow {
  std::string algebra_name;
  std::string expr;
  Vec e;
  std::size_t dim_Ae = 0;
  std::size_t coideal_dim = 0;
  std::vector<PartialComodule> simples;
  bool spinning_used = false;
};

std::vector<KacRow> kac_table(HopfPtr kac);

// kG* bridge -------------------------------------------------------------------

struct BridgeReport {
  std::size_t x_size = 0;
  std::size_t stabilizer_order = 0;
  std::size_t dim_cotensor = 0;
  std::size_t dim_module = 0;
  std::size_t expected_dim = 0;  // [X:K]·dim W
  bool theta_bijective = false;
  bool theta_intertwines = false;
  bool ok() const {
    return theta_bijective && theta_intertwines && dim_cotensor == expected_dim &&
           dim_module == expected_dim;
  }
};

// X ⊆ G with 1 ∈ X, K its left stabilizer, W the irreducible representation
// of K with index irrep in characters(K). Throws std::invalid_argument when
// 1 ∉ X and std::out_of_range when irrep exceeds the number of irreducibles.
BridgeReport dual_group_bridge(const FiniteGroup& g, const std::vector<std::size_t>& X,
                               std::size_t irrep);

}  // namespace parcomod
