#pragma once

#include "parcomod/construction.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parcomod {

// Words over the letters 1..n-1 of a unit-first basis; the unit is the empty
// word, so the relation 1_H - 1 is built into the word basis.
using Word = std::vector<std::uint8_t>;
using WordPoly = std::vector<std::pair<Word, FieldElem>>;

// Generators of the defining ideal of H_par inside T(H) of degree <= 3.
struct RelationSpace {
  std::size_t n = 0;            // dim H
  std::vector<WordPoly> gens;   // nonzero generators, in (h, k) order
  std::size_t rank = 0;         // dimension of their span
};

// h must have b_0 = 1 (see with_unit_first).
RelationSpace build_relations(const FiniteDimHopf& h);

struct DegreeReport {
  int degree = 0;
  std::size_t leads = 0;
  std::vector<std::size_t> normal_words;  // by length, while finite
  std::optional<std::size_t> upper;       // number of normal words when finite
  double seconds = 0;
};

struct SaturationOptions {
  int max_degree = 6;
  std::size_t budget_mb = 4096;
  std::string checkpoint;  // written after each completed degree when non-empty
  bool resume = false;     // continue from checkpoint if it exists
  std::optional<std::size_t> stop_at;  // stop once the upper bound reaches this value
  std::function<void(const DegreeReport&)> progress;
};

struct SaturationResult {
  std::vector<DegreeReport> degrees;
  std::optional<std::size_t> upper;  // best finite upper bound
  bool budget_exceeded = false;
  bool stabilized = false;  // no new leading words at the last degree
  int reached_degree = 0;
  bool rational = true;     // coefficient field used by the engine
};

// Upper bounds for dim H_par: the rewriting system grows degree by degree and
// the normal words span T(H)/I. h is rebased to a unit-first basis internally.
SaturationResult saturate(const FiniteDimHopf& h, const SaturationOptions& opt = {});

// Block-diagonal operators, one block per bundle member.
using BlockElem = std::vector<Matrix>;

// Partial H-comodules seen as partial H*-modules: ops[a] acts as the dual
// basis functional p_a.
struct RepresentationBundle {
  std::vector<std::size_t> dims;
  std::vector<BlockElem> ops;  // one per basis index of H
  std::vector<std::string> names;
};

// Throws std::invalid_argument when a member fails PCM1-5.
RepresentationBundle bundle_from_comodules(const std::vector<PartialComodule>& ms);
RepresentationBundle group_bundle(const GroupClassification& c);
RepresentationBundle kac_bundle(const std::vector<KacRow>& rows);

struct BlockAlgebra {
  std::vector<std::size_t> dims;
  std::vector<BlockElem> basis;
  std::size_t dim() const { return basis.size(); }
};

BlockAlgebra generated_block_algebra(const std::vector<BlockElem>& gens,
                                     const std::vector<std::size_t>& dims);

// Dimension of the image of H_par in ⊕ End(M).
std::size_t lower_bound(const RepresentationBundle& b);

// "k^18 x M2^2 x M5" from a dim -> multiplicity map.
std::string block_string(const std::map<std::size_t, std::size_t>& blocks);
std::map<std::size_t, std::size_t> bundle_blocks(const RepresentationBundle& b);

struct CertifiedDim {
  enum Status { Certified, UpperLower } status = UpperLower;
  std::optional<std::size_t> upper;
  std::size_t lower = 0;
  std::map<std::size_t, std::size_t> blocks;
  SaturationResult saturation;
  bool budget_exceeded() const { return saturation.budget_exceeded; }
};

// An upper bound below a lower bound: an arithmetic or modelling bug.
class SoundnessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs saturation on the algebra acting on the bundle (the dual of the
// comodule algebra) and compares with the bundle's lower bound. Throws
// SoundnessViolation if an upper bound falls below the lower bound.
CertifiedDim certified_dim(const FiniteDimHopf& acting, const RepresentationBundle& b,
                           SaturationOptions opt = {});

struct AparReport {
  std::size_t dim = 0;
  bool semisimple = false;
  std::size_t center_dim = 0;
  std::map<std::size_t, std::size_t> blocks;  // simple module dim -> count
  bool blocks_resolved = false;               // Σ n² = dim and count = center_dim
};

// A_par generated by ε_φ = [φ(1)][S(φ(2))] over the dual basis of the acting
// algebra, realized on the bundle.
AparReport apar_analysis(const FiniteDimHopf& acting, const RepresentationBundle& b);
BlockAlgebra apar_algebra(const FiniteDimHopf& acting, const RepresentationBundle& b);

struct RestrictionImageReport {
  std::size_t image_dim = 0;    // subalgebra of Π A_e e generated by the images
  std::size_t product_dim = 0;  // Σ dim A_e e
  std::optional<std::size_t> apar_dim;
  bool matches_apar() const { return apar_dim && *apar_dim == image_dim; }
};

// ε_φ -> (e e(1) φ(e(2)))_e for the comodule algebra h and representatives es.
RestrictionImageReport restriction_image(HopfPtr h, const std::vector<Vec>& es,
                                         std::optional<std::size_t> apar_dim = std::nullopt);

}  // namespace parcomod
