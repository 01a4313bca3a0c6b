#include <doctest.h>

#include "parcomod/catalog.hpp"
#include "parcomod/construction.hpp"

#include <algorithm>

using namespace parcomod;

namespace {

const char* kPresets[] = {"c1", "c2", "c3", "klein", "s3", "d8", "q8", "s3*", "d8*", "q8*", "sweedler", "kac"};

}  // namespace

TEST_SUITE("hopf_core") {
  TEST_CASE("catalog algebras satisfy the Hopf axioms") {
    for (const char* p : kPresets) {
      CAPTURE(p);
      FiniteDimHopf h = build_algebra(p);
      HopfReport r = verify_hopf(h);
      CHECK_MESSAGE(r.ok(), r.str());
    }
  }

  TEST_CASE("duals satisfy the Hopf axioms and the double dual is the original") {
    for (const char* p : {"c3", "s3", "sweedler", "kac"}) {
      CAPTURE(p);
      FiniteDimHopf h = build_algebra(p);
      FiniteDimHopf d = dual_hopf(h);
      CHECK(verify_hopf(d).ok());
      FiniteDimHopf dd = dual_hopf(d);
      CHECK(dd.mult == h.mult);
      CHECK(dd.comult == h.comult);
      CHECK(dd.antipode == h.antipode);
    }
  }

  TEST_CASE("a corrupted antipode is detected") {
    FiniteDimHopf h = build_algebra("s3");
    std::swap(h.antipode[1], h.antipode[2]);
    if (h.antipode[1] == h.antipode[2]) std::swap(h.antipode[1], h.antipode[3]);
    CHECK_FALSE(verify_hopf(h).ok());
  }

  TEST_CASE("shape errors are reported") {
    FiniteDimHopf h = build_algebra("c2");
    h.counit.pop_back();
    CHECK_THROWS_AS(check_shapes(h), DimensionMismatch);
  }

  TEST_CASE("unit-first basis change keeps the axioms") {
    for (const char* p : {"s3*", "klein*", "kac"}) {
      CAPTURE(p);
      FiniteDimHopf h = build_algebra(p);
      FiniteDimHopf u = with_unit_first(h);
      CHECK(u.unit == unit_vec(u.n, 0));
      CHECK(verify_hopf(u).ok());
    }
  }

  TEST_CASE("hopf json round trip") {
    for (const char* p : {"s3", "sweedler", "kac", "q8*"}) {
      CAPTURE(p);
      FiniteDimHopf h = build_algebra(p);
      FiniteDimHopf back = hopf_from_json(hopf_to_json(h));
      CHECK(back.n == h.n);
      CHECK(back.labels == h.labels);
      CHECK(back.mult == h.mult);
      CHECK(back.comult == h.comult);
      CHECK(back.counit == h.counit);
      CHECK(back.antipode == h.antipode);
      CHECK(back.unit == h.unit);
    }
  }

  TEST_CASE("element literals round trip through the compact form") {
    FiniteDimHopf h = build_algebra("kac");
    for (const char* lit : {"(1 + x)/2", "s", "sbar", "(2 + (1 + zeta8^3)*sbar + (1 - zeta8^3)*xy*sbar)/4"}) {
      CAPTURE(lit);
      Vec v = parse_element(h, lit);
      CHECK(parse_element(h, format_element(h, v)) == v);
    }
    CHECK_THROWS(parse_element(h, "q + 1"));
  }

  TEST_CASE("sweedler antipode has order four") {
    FiniteDimHopf h = build_algebra("sweedler");
    Matrix s = h.antipode_matrix();
    CHECK(s * s != Matrix::identity(4));
    CHECK(s * s * s * s == Matrix::identity(4));
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("subgroup counts") {
    CHECK(subgroups(build_group("s3")).size() == 6);
    CHECK(subgroups(build_group("d8")).size() == 10);
    CHECK(subgroups(build_group("q8")).size() == 6);
    CHECK(subgroups(build_group("klein")).size() == 5);
    CHECK(subgroups(build_group("c3")).size() == 2);
  }

  TEST_CASE("coset representatives are least elements with the identity first") {
    FiniteGroup g = build_group("s3");
    for (const Subgroup& k : subgroups(g)) {
      CHECK(k.left_reps.front() == g.identity);
      CHECK(k.left_reps.size() * k.elements.size() == g.order);
      CHECK(std::is_sorted(k.left_reps.begin(), k.left_reps.end()));
    }
  }

  TEST_CASE("linear characters") {
    CHECK(linear_characters(build_group("q8")).size() == 4);
    CHECK(linear_characters(build_group("d8")).size() == 4);
    CHECK(linear_characters(build_group("s3")).size() == 2);
    CHECK(linear_characters(build_group("c3")).size() == 3);
  }

  TEST_CASE("character tables are orthonormal and complete") {
    for (const char* p : {"s3", "d8", "q8", "klein", "c3"}) {
      CAPTURE(p);
      FiniteGroup g = build_group(p);
      CharacterTable t = characters(g);
      CHECK(t.classes.size() == t.irreducibles.size());
      FieldElem total;
      for (const auto& chi : t.irreducibles) total += chi[g.identity] * chi[g.identity];
      CHECK(total == FieldElem(long(g.order)));
    }
  }

  TEST_CASE("central primitive idempotents are orthogonal and sum to one") {
    FiniteGroup g = build_group("s3");
    FiniteDimHopf h = build_group_algebra(g);
    auto es = central_primitive_idempotents(g);
    CHECK(es.size() == 3);
    Vec sum = zero_vec(h.n);
    for (std::size_t i = 0; i < es.size(); ++i) {
      sum = add(sum, es[i]);
      CHECK(h.mul(es[i], es[i]) == es[i]);
      for (std::size_t j = i + 1; j < es.size(); ++j) CHECK(is_zero_vec(h.mul(es[i], es[j])));
    }
    CHECK(sum == h.one());
  }

  TEST_CASE("invalid group tables are rejected") {
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {"a", "b"}, {0, 1, 0, 1}), InvalidGroup);
    CHECK_THROWS(build_group("a5"));
  }

  TEST_CASE("analogous kac S2 literal fails e^2 = e and the catalog row is subcentral") {
    FiniteDimHopf h = build_kac();
    Vec literal = parse_element(h, kac_s2_non_idempotent_literal());
    CHECK(h.mul(literal, literal) != literal);
    bool found = false;
    for (const auto& row : kac_table_idempotents()) {
      Vec e = parse_element(h, row.expr);
      CAPTURE(row.algebra_name);
      CAPTURE(row.expr);
      CHECK(is_subcentral(h, e).ok());
      if (row.algebra_name == "S2") found = true;
    }
    CHECK(found);
  }

  TEST_CASE("kac coideal subalgebras are closed") {
    FiniteDimHopf h = build_kac();
    for (const auto& [name, span] : kac_coideal_subalgebras()) {
      CAPTURE(name);
      std::vector<Vec> gens;
      for (const auto& s : span) gens.push_back(parse_element(h, s));
      Subspace a = Subspace::span(gens, h.n);
      CHECK(coideal_subalgebra_closure(h, gens) == a);
    }
  }

  TEST_CASE("group json round trip") {
    FiniteGroup g = build_group("q8");
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.table == g.table);
    CHECK(back.labels == g.labels);
  }
}
