#include <doctest.h>

#include "parcomod/construction.hpp"
#include "parcomod/onedim.hpp"

#include "reference_tables.hpp"

#include <random>
#include <set>

using namespace parcomod;

namespace {

HopfPtr algebra(const std::string& p) { return std::make_shared<const FiniteDimHopf>(build_algebra(p)); }

// Every comodule the library constructs for a group or the Kac algebra.
std::vector<PartialComodule> constructed(const std::string& which) {
  std::vector<PartialComodule> out;
  if (which == "kac") {
    for (auto& row : kac_table(algebra("kac")))
      for (auto& m : row.simples) out.push_back(m);
  } else {
    auto c = classify_group_simples(build_group(which));
    for (auto& row : c.rows)
      for (auto& m : row.simples) out.push_back(m);
  }
  return out;
}

std::set<std::string> as_set(const FiniteDimHopf& h, const std::vector<Vec>& vs) {
  // Canonical keys through the formatter of a single algebra.
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(format_element(h, v));
  return s;
}

}  // namespace

TEST_SUITE("partial_comodule") {
  TEST_CASE("regular comodule is a global comodule") {
    for (const char* p : {"s3", "sweedler", "kac"}) {
      CAPTURE(p);
      PcmReport r = check_pcm(regular_comodule(algebra(p)));
      CHECK(r.ok());
      CHECK(r.global);
    }
  }

  TEST_CASE("one-dimensional comodules on kC2") {
    auto h = algebra("c2");
    CHECK(check_pcm(one_dim_comodule(h, parse_element(*h, "(1 + g)/2"))).ok());
    CHECK_FALSE(check_pcm(one_dim_comodule(h, parse_element(*h, "(1 + g)/2"))).global);
    CHECK(check_pcm(one_dim_comodule(h, parse_element(*h, "g"))).global);
    CHECK_FALSE(check_pcm(one_dim_comodule(h, zero_vec(2))).pcm[0]);
    CHECK_FALSE(check_pcm(one_dim_comodule(h, parse_element(*h, "(1 - g)/2"))).ok());
  }

  TEST_CASE("PCM2 and PCM3 hold exactly when PCM4 and PCM5 hold on constructed comodules") {
    for (const char* p : {"s3", "klein", "kac"}) {
      CAPTURE(p);
      for (const auto& m : constructed(p)) {
        PcmReport r = check_pcm(m);
        CHECK(r.ok());
        CHECK(r.pcm23() == r.pcm45());
      }
    }
  }

  TEST_CASE("PCM2 and PCM3 hold exactly when PCM4 and PCM5 hold on random one-dimensional coactions") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-2, 2), pick(0, 3);
    for (const char* p : {"c2", "c3", "s3", "sweedler", "kac"}) {
      CAPTURE(p);
      auto h = algebra(p);
      for (int t = 0; t < 60; ++t) {
        Vec r = zero_vec(h->n);
        for (std::size_t i = 0; i < h->n; ++i)
          if (pick(rng) == 0) r[i] = FieldElem(Rational(coef(rng), 2));
        // Half the samples are normalized so that PCM1 holds.
        FieldElem e = h->eps(r);
        if (t % 2 == 0 && !e.is_zero()) r = scale(e.inverse(), r);
        PcmReport rep = check_pcm(one_dim_comodule(h, r));
        CHECK(rep.pcm23() == rep.pcm45());
      }
    }
  }

  TEST_CASE("isomorphism test distinguishes shifts") {
    auto h = algebra("s3");
    auto c = classify_group_simples(build_group("s3"), true);
    const auto& row = c.rows[1];
    REQUIRE(row.simples.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK((iso_test(row.simples[i], row.simples[j], true).kind == IsoResult::Isomorphic) == (i == j));
    IsoResult self = iso_test(row.simples[0], row.simples[0]);
    REQUIRE(self.map);
  }

  TEST_CASE("simplicity of constructed comodules and of a direct sum") {
    auto c = classify_group_simples(build_group("s3"), true);
    const auto& big = c.rows.back().simples.front();
    CHECK(big.d == 5);
    CHECK(is_simple(big).kind == Simplicity::SimpleCertified);
    auto sum = direct_sum({c.rows[0].simples[0], c.rows[0].simples[1]});
    CHECK(is_simple(sum).kind == Simplicity::NotSimple);
  }

  TEST_CASE("grouplike shift rejects non-grouplikes") {
    auto h = algebra("s3");
    auto m = regular_comodule(h);
    CHECK_NOTHROW(shift_by_grouplike(m, parse_element(*h, "s")));
    CHECK_THROWS(shift_by_grouplike(m, parse_element(*h, "(1 + s)/2")));
  }

  TEST_CASE("regular comodule algebra satisfies the partial comodule algebra axioms") {
    auto h = algebra("kac");
    AlgebraStructure alg{h->n, {}, h->unit};
    for (std::size_t i = 0; i < h->n; ++i)
      for (std::size_t j = 0; j < h->n; ++j) alg.mult.push_back(h->mul(h->basis(i), h->basis(j)));
    CHECK(check_partial_comodule_algebra(regular_comodule(h), alg).ok());
  }

  TEST_CASE("comodule json round trip") {
    for (const char* p : {"s3", "kac"}) {
      CAPTURE(p);
      auto ms = constructed(p);
      for (std::size_t i = 0; i < ms.size(); i += 3) {
        PartialComodule back = comodule_from_json(comodule_to_json(ms[i]), ms[i].H);
        CHECK(back.d == ms[i].d);
        CHECK(back.rho == ms[i].rho);
      }
    }
  }
}

TEST_SUITE("construction") {
  TEST_CASE("kC2 has three simple partial comodules counted with multiplicity") {
    auto c = classify_group_simples(build_group("c2"));
    CHECK(c.rows.size() == 2);
    CHECK(c.total() == 3);
    CHECK(c.blocks() == std::map<std::size_t, std::size_t>{{1, 3}});
  }

  TEST_CASE("kS3 summary table") {
    auto c = classify_group_simples(build_group("s3"), true);
    REQUIRE(c.rows.size() == reference::kS3.size());
    for (std::size_t i = 0; i < reference::kS3.size(); ++i) {
      CAPTURE(i);
      const auto& row = c.rows[i];
      CHECK(row.dim_I == reference::kS3[i].dim_I);
      CHECK(row.index == reference::kS3[i].index);
      CHECK(row.simples.size() == row.index);
      for (const auto& m : row.simples) CHECK(m.d == row.dim_I);
      std::vector<Vec> got = row.equivalents;
      got.push_back(row.e);
      std::vector<Vec> want;
      for (const auto& lit : reference::kS3[i].orbit) want.push_back(parse_element(*c.kG, lit));
      CHECK(as_set(*c.kG, got) == as_set(*c.kG, want));
      CHECK(row.e == want.front());
    }
    CHECK(c.blocks() == reference::kS3Blocks);
    CHECK(c.total() == 51);
  }

  TEST_CASE("dihedral and quaternion groups") {
    auto d8 = classify_group_simples(build_group("d8"), false, false);
    CHECK(d8.blocks() == reference::kD8Blocks);
    CHECK(d8.total() == 180);
    auto q8 = classify_group_simples(build_group("q8"), false, false);
    CHECK(q8.blocks() == reference::kQ8Blocks);
    CHECK(q8.total() == 180);
  }

  TEST_CASE("kac algebra summary table") {
    auto kac = algebra("kac");
    auto rows = kac_table(kac);
    REQUIRE(rows.size() == reference::kKac.size());
    std::map<std::size_t, std::size_t> blocks;
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& want = reference::kKac[i];
      CAPTURE(want.idempotent);
      CHECK(rows[i].algebra_name == want.algebra);
      CHECK(rows[i].dim_Ae == want.dim_Ae);
      if (i != reference::kKacNonIdempotentRow) CHECK(rows[i].e == parse_element(*kac, want.idempotent));
      std::map<std::size_t, std::size_t> got;
      for (const auto& m : rows[i].simples) {
        ++got[m.d];
        ++blocks[m.d];
        total += m.d * m.d;
      }
      CHECK(got == want.simples);
    }
    CHECK(blocks == reference::kKacBlocks);
    CHECK(total == 180);
  }

  TEST_CASE("non-subcentral idempotents are rejected") {
    auto h = algebra("s3");
    Vec e = parse_element(*h, "(1 + s)/2");
    CHECK_FALSE(is_subcentral(*h, e).ok());
    CHECK_THROWS_AS(generate_coideal_subalgebra(h, e), std::invalid_argument);
  }

  TEST_CASE("coinvariants of He agree with Ae e") {
    auto h = algebra("s3");
    for (const char* lit : {"(2 - s - s2)/3", "(5 - s - s2 - a - sa - s2a)/6"}) {
      CAPTURE(lit);
      ConstructionResult r = run_construction(h, parse_element(*h, lit));
      CHECK(r.coinvariants_equal_ae);
      CHECK(r.dim_Ae == ae_times_e(r.sub).dim());
    }
  }

  TEST_CASE("isomorphism classes follow character orbits and cosets") {
    RedundancyReport r = redundancy_check(build_group("s3"));
    CHECK(r.simples > 0);
    CHECK(r.predicted_isomorphic > 0);
    CHECK(r.pairs == r.simples * (r.simples - 1) / 2);
    CHECK(r.undecided == 0);
    CHECK(r.agree == r.pairs);
    CHECK(r.predicted_isomorphic == r.observed_isomorphic);
  }

  TEST_CASE("partial modules over kG* agree with cotensor products") {
    FiniteGroup g = build_group("s3");
    std::size_t checked = 0;
    // X containing 1, enumerated as bitmasks over the non-identity elements.
    for (unsigned mask = 0; mask < (1u << (g.order - 1)); ++mask) {
      std::vector<std::size_t> X = {g.identity};
      for (std::size_t i = 0, bit = 0; i < g.order; ++i) {
        if (i == g.identity) continue;
        if (mask & (1u << bit)) X.push_back(i);
        ++bit;
      }
      for (std::size_t irrep = 0;; ++irrep) {
        try {
          BridgeReport r = dual_group_bridge(g, X, irrep);
          CHECK(r.ok());
          ++checked;
        } catch (const std::out_of_range&) {
          break;
        }
      }
    }
    CHECK(checked > 32);
    CHECK_THROWS_AS(dual_group_bridge(g, {1}, 0), std::invalid_argument);
  }
}
