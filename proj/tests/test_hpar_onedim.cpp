#include <doctest.h>

#include "parcomod/hpar.hpp"
#include "parcomod/onedim.hpp"

#include "c2_oracle.hpp"

#include <cstdio>
#include <filesystem>
#include <random>

using namespace parcomod;

namespace {

HopfPtr algebra(const std::string& p) { return std::make_shared<const FiniteDimHopf>(build_algebra(p)); }

struct GroupSetup {
  GroupClassification cls;
  RepresentationBundle bundle;
  FiniteDimHopf acting;
};

GroupSetup group_setup(const std::string& g) {
  GroupSetup s{classify_group_simples(build_group(g), g == "s3"), {}, {}};
  s.bundle = group_bundle(s.cls);
  s.acting = dual_hopf(*s.cls.kG);
  return s;
}

}  // namespace

TEST_SUITE("hpar") {
  TEST_CASE("trivial group and kC2*") {
    auto c1 = group_setup("c1");
    CertifiedDim d1 = certified_dim(c1.acting, c1.bundle);
    CHECK(d1.status == CertifiedDim::Certified);
    CHECK(d1.upper == std::optional<std::size_t>(1));

    auto c2 = group_setup("c2");
    CertifiedDim d2 = certified_dim(c2.acting, c2.bundle);
    CHECK(d2.status == CertifiedDim::Certified);
    CHECK(d2.upper == std::optional<std::size_t>(3));
    CHECK(d2.lower == 3);
  }

  TEST_CASE("relations of kC2* have the expected generator span") {
    FiniteDimHopf h = with_unit_first(dual_hopf(build_algebra("c2")));
    RelationSpace r = build_relations(h);
    CHECK(r.n == 2);
    CHECK(r.rank > 0);
    CHECK(r.rank <= r.gens.size());
  }

  TEST_CASE("kS3* is certified at 51") {
    auto s = group_setup("s3");
    CHECK(lower_bound(s.bundle) == 51);
    CertifiedDim d = certified_dim(s.acting, s.bundle);
    CHECK(d.status == CertifiedDim::Certified);
    CHECK(d.upper == std::optional<std::size_t>(51));
    CHECK(block_string(d.blocks) == "k^18 x M2^2 x M5");
  }

  TEST_CASE("A_par of kS3*") {
    auto s = group_setup("s3");
    AparReport a = apar_analysis(s.acting, s.bundle);
    CHECK(a.dim == 13);
    CHECK(a.semisimple);
    CHECK(a.blocks == std::map<std::size_t, std::size_t>{{1, 9}, {2, 1}});
    CHECK(a.blocks_resolved);
    std::vector<Vec> es;
    for (const auto& row : s.cls.rows) es.push_back(row.e);
    RestrictionImageReport c = restriction_image(s.cls.kG, es, a.dim);
    CHECK(c.image_dim == 13);
    CHECK(c.matches_apar());
  }

  TEST_CASE("Sweedler partial Hopf algebra has no finite bound at low degree") {
    SaturationOptions opt;
    opt.max_degree = 4;
    SaturationResult r = saturate(dual_hopf(build_sweedler()), opt);
    CHECK_FALSE(r.upper.has_value());
    CHECK(r.reached_degree == 4);
  }

  TEST_CASE("kC2 partial Hopf algebra has dimension three") {
    SaturationResult r = saturate(build_algebra("c2"));
    CHECK(r.upper == std::optional<std::size_t>(3));
    CHECK(r.stabilized);
  }

  TEST_CASE("checkpoint and resume reproduce the direct run") {
    auto s = group_setup("s3");
    const std::string path =
        (std::filesystem::temp_directory_path() / "parcomod_test_checkpoint.json").string();
    std::remove(path.c_str());
    SaturationOptions first;
    first.max_degree = 3;
    first.checkpoint = path;
    SaturationResult partial = saturate(s.acting, first);
    CHECK(partial.reached_degree == 3);
    REQUIRE(std::filesystem::exists(path));

    SaturationOptions second;
    second.checkpoint = path;
    second.resume = true;
    SaturationResult resumed = saturate(s.acting, second);
    SaturationResult direct = saturate(s.acting);
    CHECK(resumed.upper == direct.upper);
    CHECK(resumed.upper == std::optional<std::size_t>(51));
    REQUIRE(resumed.degrees.size() == direct.degrees.size());
    for (std::size_t i = 0; i < direct.degrees.size(); ++i) {
      CHECK(resumed.degrees[i].leads == direct.degrees[i].leads);
      CHECK(resumed.degrees[i].upper == direct.degrees[i].upper);
    }
    std::remove(path.c_str());
  }

  TEST_CASE("repeated runs are identical") {
    auto s = group_setup("s3");
    SaturationResult a = saturate(s.acting), b = saturate(s.acting);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (std::size_t i = 0; i < a.degrees.size(); ++i) {
      CHECK(a.degrees[i].leads == b.degrees[i].leads);
      CHECK(a.degrees[i].normal_words == b.degrees[i].normal_words);
    }
  }

  TEST_CASE("memory budget is enforced") {
    SaturationOptions opt;
    opt.budget_mb = 0;
    SaturationResult r = saturate(dual_hopf(build_algebra("s3")), opt);
    CHECK(r.budget_exceeded);
  }

  TEST_CASE("block algebra generated by matrix units") {
    Matrix e11 = Matrix::from_rows({{FieldElem(1L), FieldElem(0L)}, {FieldElem(0L), FieldElem(0L)}}, 2);
    Matrix e12 = Matrix::from_rows({{FieldElem(0L), FieldElem(1L)}, {FieldElem(0L), FieldElem(0L)}}, 2);
    Matrix e21 = e12.transpose();
    BlockAlgebra a = generated_block_algebra({{e12}, {e21}}, {2});
    CHECK(a.dim() == 4);
    BlockAlgebra b = generated_block_algebra({{e11}}, {2});
    CHECK(b.dim() == 2);
  }
}

TEST_SUITE("onedim") {
  TEST_CASE("kC2 one-dimensional comodules agree with an independent enumeration") {
    auto h = algebra("c2");
    REQUIRE(h->labels == std::vector<std::string>{"1", "g"});
    std::vector<c2oracle::El> oracle;
    for (int an = -8; an <= 8; ++an)
      for (int bn = -8; bn <= 8; ++bn) {
        c2oracle::El r = {Rational(an, 4), Rational(bn, 4)};
        r[0].canonicalize();
        r[1].canonicalize();
        Vec v = {FieldElem(r[0]), FieldElem(r[1])};
        const bool lib = check_r(*h, v).ok();
        CHECK(lib == c2oracle::passes(r));
        if (c2oracle::passes(r)) oracle.push_back(r);
      }
    CHECK(oracle.size() == 3);
    auto cls = classify_group_onedim(build_group("c2"));
    CHECK(cls.size() == 3);
  }

  TEST_CASE("group counts") {
    CHECK(classify_group_onedim(build_group("klein")).size() == 11);
    CHECK(classify_group_onedim(build_group("s3")).size() == 18);
  }

  TEST_CASE("kS3 one-dimensional comodules pass and reconstruct") {
    auto h = algebra("s3");
    auto rs = classify_group_onedim(build_group("s3"));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CAPTURE(i);
      CHECK(check_r(*h, rs[i]).ok());
      CHECK(closure_facts(h, rs[i]).ok());
      CHECK(reconstruct(h, rs[i]).ok());
      for (std::size_t j = 0; j < i; ++j) CHECK(rs[i] != rs[j]);
    }
  }

  TEST_CASE("Sweedler families") {
    auto h = algebra("sweedler");
    auto gammas = default_gamma_samples();
    CHECK(gammas.size() == 4);
    auto entries = h4_catalog(h, gammas);
    CHECK(entries.size() == 5 * gammas.size());
    for (const auto& e : entries) {
      CAPTURE(e.description);
      CHECK(e.passes);
      CHECK(closure_facts(h, e.r).ok());
      CHECK(reconstruct(h, e.r).ok());
    }
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      const auto& f4 = entries[5 * k + 3];
      const auto& f5 = entries[5 * k + 4];
      auto m4 = one_dim_comodule(h, f4.r), m5 = one_dim_comodule(h, f5.r);
      CHECK(iso_test(m4, m5, true).kind == IsoResult::NotIsomorphic);
    }
  }

  TEST_CASE("Sweedler families collapse at gamma zero") {
    auto h = algebra("sweedler");
    auto entries = h4_catalog(h, {FieldElem()});
    REQUIRE(entries.size() == 5);
    CHECK(entries[3].r == entries[2].r);
    CHECK(entries[4].r == entries[2].r);
    CHECK(check_r(*h, parse_element(*h, "(1 - g)/2 + x")).eq[0] == false);
  }

  TEST_CASE("equations for r agree with the comodule axioms on random elements") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2), pick(0, 2);
    for (const char* p : {"c2", "c3", "klein", "s3", "s3*", "sweedler", "kac"}) {
      CAPTURE(p);
      auto h = algebra(p);
      for (int t = 0; t < 200; ++t) {
        Vec r = zero_vec(h->n);
        for (std::size_t i = 0; i < h->n; ++i)
          if (pick(rng) == 0) r[i] = FieldElem(Rational(coef(rng), 2));
        FieldElem e = h->eps(r);
        if (!e.is_zero()) r = scale(e.inverse(), r);
        CHECK(check_r(*h, r).ok() == check_pcm(one_dim_comodule(h, r)).ok());
      }
    }
  }

  TEST_CASE("non-solutions are rejected by the consequence checks") {
    auto h = algebra("s3");
    Vec bad = parse_element(*h, "(1 + s)/2");
    CHECK_FALSE(check_r(*h, bad).ok());
    CHECK_THROWS_AS(closure_facts(h, bad), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(h, bad), std::invalid_argument);
  }
}
