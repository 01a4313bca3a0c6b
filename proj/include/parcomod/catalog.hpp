#pragma once

#include "parcomod/hopf.hpp"
#include "parcomod/json_io.hpp"

#include <string>
#include <vector>

namespace parcomod {

class InvalidGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite group by Cayley table; table[a*order + b] = a*b. Group axioms are
// checked by from_table.
struct FiniteGroup {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inv;

  static FiniteGroup from_table(std::string name, std::vector<std::string> labels,
                                std::vector<std::size_t> table);

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  std::size_t power(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  std::optional<std::size_t> index_of(const std::string& label) const;
};

// Presets: c<n> (c1, c2, ...), klein, s3, d8, q8.
FiniteGroup build_group(const std::string& preset);
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

// Subgroup K <= G with deterministic coset representatives: the least element
// index in each coset, listed in increasing order (so the identity comes first).
struct Subgroup {
  std::vector<std::size_t> elements;    // sorted
  std::vector<std::size_t> left_reps;   // representatives g of gK
  std::vector<std::size_t> right_reps;  // representatives g of Kg
  std::size_t index() const { return left_reps.size(); }
  bool contains(std::size_t g) const;
};

// All subgroups, sorted by (order, element list).
std::vector<Subgroup> subgroups(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<std::size_t>& gens);
// K as a group in its own right; element i of the result is K.elements[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& k);

FiniteDimHopf build_group_algebra(const FiniteGroup& g, int field_order = default_field_order());
FiniteDimHopf build_dual_group_algebra(const FiniteGroup& g,
                                       int field_order = default_field_order());
FiniteDimHopf build_sweedler(int field_order = default_field_order());
// Kac-Paljutkin algebra on {1,x,y,z,xy,xz,yz,xyz}; named elements s, sbar, t.
// Requires 8 | field_order.
FiniteDimHopf build_kac(int field_order = default_field_order());

// Presets: group names give kG, "<group>*" gives kG*, plus sweedler and kac.
FiniteDimHopf build_algebra(const std::string& preset, int field_order = default_field_order());
bool is_group_preset(const std::string& preset);

// Class function on a group, one value per element.
using ClassFunction = std::vector<FieldElem>;

struct CharacterTable {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<ClassFunction> irreducibles;  // degree 1 first, then by degree
};

// Homomorphisms into the N-th roots of unity, found by exhaustive search over
// images of a generating set. Sorted by the exponent vector on the generators.
std::vector<ClassFunction> linear_characters(const FiniteGroup& g,
                                             int field_order = default_field_order());
// Irreducible characters for abelian groups and the non-abelian groups of
// order 6 and 8; orthogonality is verified before returning.
CharacterTable characters(const FiniteGroup& g, int field_order = default_field_order());
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

// e_chi = chi(1)/|K| sum_h chi(h^-1) h in kK coordinates, one per irreducible.
std::vector<Vec> central_primitive_idempotents(const FiniteGroup& k,
                                               int field_order = default_field_order());

// Embedding kK -> kG along K.elements.
Vec embed_subgroup_element(const FiniteGroup& g, const Subgroup& k, const Vec& v);

// Declared right coideal subalgebras and subcentral idempotents of the Kac
// algebra, in reference row order.
struct CatalogIdempotent {
  std::string algebra_name;  // "<1>", "<1,x>", "S1", ...
  std::string expr;          // element literal
};
std::vector<CatalogIdempotent> kac_table_idempotents();
// S2 dimension-2 literal written by analogy with S1; it fails e^2 = e and is
// kept only so the corrected catalog row can be checked against it.
std::string kac_s2_non_idempotent_literal();
// Spanning sets (element literals) of the eight right coideal subalgebras.
std::vector<std::pair<std::string, std::vector<std::string>>> kac_coideal_subalgebras();

// Reference representatives and row order for S3 (subgroup label,
// idempotent literal).
std::vector<CatalogIdempotent> s3_table_idempotents();

}  // namespace parcomod
