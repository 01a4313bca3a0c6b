#pragma once

#include "parcomod/construction.hpp"

#include <string>
#include <vector>

namespace parcomod {

// The partial comodule axioms for 1 -> 1⊗r written as equations in H.
struct RCheck {
  bool eq[5] = {false, false, false, false, false};
  bool ok() const { return eq[0] && eq[1] && eq[2] && eq[3] && eq[4]; }
  std::string str() const;
};

RCheck check_r(const FiniteDimHopf& h, const Vec& r);

// Consequences of check_r for a passing r. Throws std::invalid_argument when r
// fails check_r or S is not invertible.
struct ClosureFacts {
  bool regular = false;            // rS(r)r = r and S(r)rS(r) = S(r)
  bool antipode_image = false;     // S(r) passes
  bool antipode_inverse_image = false;  // S^{-1}(r) passes
  bool translates = false;         // g r passes for every declared grouplike g
  bool left_idempotent = false;    // rS(r) is idempotent with ee(1)⊗e(2) = e⊗e = e(1)e⊗e(2)
  bool sub_idempotent = false;     // same for S^{-1}(r)r, which is also subcentral
  bool grouplike_images = false;   // π(S(r)) for rS(r) and π(r) for S^{-1}(r)r
  bool integral = false;           // ae = ε(a)e = ea on A generated by S^{-1}(r)r
  bool ok() const {
    return regular && antipode_image && antipode_inverse_image && translates && left_idempotent &&
           sub_idempotent && grouplike_images && integral;
  }
};

ClosureFacts closure_facts(HopfPtr h, const Vec& r);

// Rebuilds 1 -> 1⊗r from e = S^{-1}(r)r and W = k·π(r).
struct Reconstruction {
  Vec e;
  std::size_t cotensor_dim = 0;
  bool spanned_by_r = false;
  bool coaction_is_r = false;  // r -> r⊗r
  bool isomorphic = false;
  bool ok() const { return cotensor_dim == 1 && spanned_by_r && coaction_is_r && isomorphic; }
};

// Throws std::invalid_argument when r fails check_r or S is not invertible.
Reconstruction reconstruct(HopfPtr h, const Vec& r);

// g·(1/|K|)Σ_{h∈K} h over subgroups K (subgroups() order) and left coset
// representatives g, in kG coordinates.
std::vector<Vec> classify_group_onedim(const FiniteGroup& g);

// Sweedler algebra families at a fixed γ.
struct H4Entry {
  int family = 0;  // 1..5
  std::string description;
  FieldElem gamma;
  Vec r;
  bool passes = false;
};

std::vector<H4Entry> h4_catalog(HopfPtr h4, const std::vector<FieldElem>& gammas);
std::vector<FieldElem> default_gamma_samples(int field_order = default_field_order());

}  // namespace parcomod
