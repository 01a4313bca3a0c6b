// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Criterion numbers given as arguments restrict the run.

#include "parcomod/cli.hpp"
#include "parcomod/json_io.hpp"

#include "c2_oracle.hpp"
#include "reference_tables.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <sstream>

using namespace parcomod;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(s < 10 ? 2 : 1);
  o << std::fixed << s << " s";
  return o.str();
}

HopfPtr algebra(const std::string& p) { return std::make_shared<const FiniteDimHopf>(build_algebra(p)); }

RunConfig cfg(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

std::set<std::string> keys(const FiniteDimHopf& h, const std::vector<Vec>& vs) {
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(format_element(h, v));
  return s;
}

std::map<std::size_t, std::size_t> dims_multiset(const Json& dims) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& d : dims) ++m[d.get<std::size_t>()];
  return m;
}

// 1. Hopf axioms for the catalog algebras and the duals of the groups.
Outcome hopf_verification() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for (std::string g : {"c2", "c3", "klein", "s3", "d8", "q8"})
    for (const auto& p : {g, g + "*"}) {
      o.require(verify_hopf(build_algebra(p)).ok(), p);
      ++n;
    }
  for (const char* p : {"sweedler", "kac"}) {
    o.require(verify_hopf(build_algebra(p)).ok(), p);
    ++n;
  }
  const double s = since(t0);
  o.require(s < 5, "runtime under 5 s");
  o.note(std::to_string(n) + " algebras");
  return o;
}

// 2. classify-group --group s3 against the reference table.
Outcome s3_table() {
  Outcome o;
  const auto t0 = Clock::now();
  RunConfig c = cfg("classify-group");
  c.group = "s3";
  RunReport r = run(c);
  o.require(r.exit_code == kExitOk, "exit code 0");
  const Json& rows = r.json["rows"];
  o.require(rows.size() == reference::kS3.size(), "8 rows");
  FiniteDimHopf h = build_algebra("s3");
  std::vector<bool> used(rows.size(), false);
  std::map<std::size_t, std::size_t> blocks;
  for (const auto& want : reference::kS3) {
    std::vector<Vec> orbit;
    for (const auto& lit : want.orbit) orbit.push_back(parse_element(h, lit));
    const auto want_keys = keys(h, orbit);
    bool found = false;
    for (std::size_t i = 0; i < rows.size() && !found; ++i) {
      if (used[i]) continue;
      std::vector<Vec> got = {parse_element(h, rows[i]["idempotent"].get<std::string>())};
      for (const auto& e : rows[i]["equivalent_idempotents"]) got.push_back(parse_element(h, e.get<std::string>()));
      if (keys(h, got) != want_keys) continue;
      found = rows[i]["dim_I"] == want.dim_I && rows[i]["index"] == want.index &&
              rows[i]["subgroup"] == want.subgroup && rows[i]["n_simples"] == want.index;
      used[i] = found;
    }
    o.require(found, "row " + want.orbit.front());
    blocks[want.dim_I] += want.index;
  }
  o.require(blocks == reference::kS3Blocks, "18 one-dim, 2 two-dim, 1 five-dim");
  o.require(r.json["sum_of_squares"] == 51, "sum of squares 51");

  // The reference representatives and row order are available on request.
  RunConfig p = c;
  p.reference_order = true;
  RunReport rp = run(p);
  bool same_order = rp.json["rows"].size() == reference::kS3.size();
  for (std::size_t i = 0; same_order && i < reference::kS3.size(); ++i)
    same_order = parse_element(h, rp.json["rows"][i]["idempotent"].get<std::string>()) ==
                 parse_element(h, reference::kS3[i].orbit.front());
  o.require(same_order, "reference representatives with --paper-order");
  o.require(since(t0) < 30, "runtime under 30 s");
  o.note("orbits compared as sets of field elements");
  return o;
}

// 3. hpar-dim --group s3 --dual.
Outcome s3_certified() {
  Outcome o;
  const auto t0 = Clock::now();
  RunConfig c = cfg("hpar-dim");
  c.group = "s3";
  c.dual = true;
  RunReport r = run(c);
  o.require(r.exit_code == kExitOk, "exit code 0");
  o.require(r.json["status"] == "Certified", "status Certified");
  o.require(r.json["dim"] == 51, "dim 51");
  o.require(r.json["blocks"] == "k^18 x M2^2 x M5", "blocks k^18 x M2^2 x M5");
  o.require(since(t0) < 600, "runtime under 10 min");
  o.note("status " + r.json.value("status", std::string("?")) + ", " + r.json.value("blocks", std::string("?")));
  return o;
}

// 4. A_par of kS3*.
Outcome s3_apar() {
  Outcome o;
  const auto t0 = Clock::now();
  RunConfig c = cfg("apar");
  c.group = "s3";
  RunReport r = run(c);
  o.require(r.json["dim"] == 13, "dim 13");
  o.require(r.json["blocks"] == "k^9 x M2", "blocks k^9 x M2");
  o.require(r.json["blocks_resolved"] == true, "blocks resolved");
  o.require(since(t0) < 60, "runtime under 1 min");
  o.note("dim " + r.json["dim"].dump() + ", " + r.json["blocks"].get<std::string>());
  return o;
}

// 5. tables --algebra kac --paper-order against the reference table.
Outcome kac_table_check() {
  Outcome o;
  RunConfig c = cfg("tables");
  c.algebra = "kac";
  c.reference_order = true;
  RunReport r = run(c);
  o.require(r.exit_code == kExitOk, "exit code 0");
  const Json& rows = r.json["rows"];
  o.require(rows.size() == reference::kKac.size(), "16 rows");
  FiniteDimHopf h = build_kac();
  std::size_t literal_matches = 0;
  int substitute = 0;
  for (std::size_t i = 0; i < std::min(rows.size(), reference::kKac.size()); ++i) {
    const auto& want = reference::kKac[i];
    const Vec got = parse_element(h, rows[i]["idempotent"].get<std::string>());
    const Vec literal = parse_element(h, want.idempotent);
    o.require(rows[i]["coideal_subalgebra"] == want.algebra, "coideal subalgebra of row " + std::to_string(i + 1));
    o.require(rows[i]["dim_Ae"] == want.dim_Ae, "dim Ae of row " + std::to_string(i + 1));
    o.require(dims_multiset(rows[i]["dims"]) == want.simples, "simple counts of row " + std::to_string(i + 1));
    if (got == literal) {
      ++literal_matches;
      continue;
    }
    // The one permitted difference: the reference entry is not idempotent and
    // the emitted one is that literal read with another primitive 8th
    // root of unity in place of zeta8.
    const bool literal_fails = h.mul(literal, literal) != literal;
    int conjugate = 0;
    for (int k : {3, 5, 7}) {
      std::string lifted = want.idempotent;
      const std::string root = "zeta8^" + std::to_string(k);
      for (std::size_t p = lifted.find("zeta8"); p != std::string::npos; p = lifted.find("zeta8", p + root.size()))
        lifted.replace(p, 5, root);
      if (got == parse_element(h, lifted)) conjugate = k;
    }
    const bool corrected = conjugate != 0 && h.mul(got, got) == got;
    if (corrected) substitute = conjugate;
    o.require(i == reference::kKacNonIdempotentRow && literal_fails && corrected,
              "idempotent of row " + std::to_string(i + 1));
  }
  o.require(r.json["sum_of_squares"] == 180, "total 180");
  o.note(std::to_string(literal_matches) + "/16 idempotents literally equal");
  if (substitute)
    o.note("the S2 dimension-2 reference literal fails e^2 = e; the emitted row is that literal with zeta8^" +
           std::to_string(substitute) + " in place of zeta8");
  return o;
}

// 6. Kac algebra: lower bound, certification and A_par.
Outcome kac_dimensions() {
  Outcome o;
  auto t0 = Clock::now();
  HopfPtr kac = algebra("kac");
  auto rows = kac_table(kac);
  RepresentationBundle b = kac_bundle(rows);
  const std::size_t lower = lower_bound(b);
  const double lower_s = since(t0);
  o.require(lower == 180, "lower bound 180");
  o.require(bundle_blocks(b) == reference::kKacBlocks, "bundle blocks k^23 x M2^5 x M3^7 x M5 x M7");
  o.require(lower_s < 300, "lower bound under 5 min");

  t0 = Clock::now();
  RunConfig c = cfg("hpar-dim");
  c.algebra = "kac";
  RunReport r = run(c);
  const double sat_s = since(t0);
  const std::string status = r.json.value("status", std::string("?"));
  if (sat_s < 3600) {
    o.require(status == "Certified", "status Certified");
    o.require(r.json["dim"] == 180, "dim 180");
    o.require(r.json["blocks"] == "k^23 x M2^5 x M3^7 x M5 x M7", "certified blocks");
  } else {
    o.require(r.json["upper"].is_null() || r.json["upper"].get<std::size_t>() >= 180, "upper >= 180");
    o.note("saturation over 60 min; downgraded to UpperLower");
  }

  RunConfig a = cfg("apar");
  a.algebra = "kac";
  RunReport ra = run(a);
  o.require(ra.json["dim"] == 36, "A_par dim 36");
  o.require(ra.json["blocks"] == "k^28 x M2^2", "A_par blocks k^28 x M2^2");
  o.note("lower 180 in " + fmt_seconds(lower_s) + ", " + status + " in " + fmt_seconds(sat_s) + ", A_par " +
         ra.json["dim"].dump() + " " + ra.json.value("blocks", std::string("?")));
  return o;
}

// 7. Lower bounds for kD8* and kQ8*; certification is reported but does not gate.
Outcome d8_q8() {
  Outcome o;
  for (const auto& [g, want] : {std::pair{std::string("d8"), reference::kD8Blocks},
                                std::pair{std::string("q8"), reference::kQ8Blocks}}) {
    const auto t0 = Clock::now();
    auto cl = classify_group_simples(build_group(g));
    RepresentationBundle b = group_bundle(cl);
    o.require(lower_bound(b) == 180, g + " lower bound 180");
    o.require(bundle_blocks(b) == want, g + " blocks " + block_string(want));
    const double s = since(t0);
    o.require(s < 600, g + " runtime under 10 min");
    CertifiedDim cd = certified_dim(dual_hopf(*cl.kG), b);
    o.note(g + ": lower 180 in " + fmt_seconds(s) + ", saturation " +
           (cd.status == CertifiedDim::Certified ? "certified" : "not certified") + " at degree " +
           std::to_string(cd.saturation.reached_degree) + " in " + fmt_seconds(since(t0) - s));
  }
  return o;
}

// 8. One-dimensional partial comodules.
Outcome onedim_checks() {
  Outcome o;
  const auto t0 = Clock::now();
  HopfPtr s3 = algebra("s3");
  auto rs = classify_group_onedim(build_group("s3"));
  o.require(rs.size() == 18, "S3 gives 18 elements");
  o.require(keys(*s3, rs).size() == rs.size(), "S3 elements distinct");
  for (const auto& r : rs) {
    o.require(check_r(*s3, r).ok(), "check_r " + format_element(*s3, r));
    o.require(reconstruct(s3, r).ok(), "reconstruction " + format_element(*s3, r));
  }

  HopfPtr h4 = algebra("sweedler");
  auto gammas = default_gamma_samples();
  auto entries = h4_catalog(h4, gammas);
  o.require(entries.size() == 5 * gammas.size(), "five families per gamma");
  for (const auto& e : entries) {
    o.require(e.passes, "family " + std::to_string(e.family) + " at gamma " + e.gamma.str());
    o.require(reconstruct(h4, e.r).ok(), "reconstruction of family " + std::to_string(e.family));
  }

  // Brute force over a rational grid with hand-written kC2 arithmetic.
  HopfPtr c2 = algebra("c2");
  std::set<std::string> oracle;
  for (int an = -8; an <= 8; ++an)
    for (int bn = -8; bn <= 8; ++bn) {
      c2oracle::El r = {c2oracle::Rational(an, 4), c2oracle::Rational(bn, 4)};
      r[0].canonicalize();
      r[1].canonicalize();
      if (c2oracle::passes(r)) oracle.insert(format_element(*c2, Vec{FieldElem(r[0]), FieldElem(r[1])}));
    }
  const auto built = keys(*c2, classify_group_onedim(build_group("c2")));
  o.require(oracle.size() == 3 && built == oracle, "C2 oracle agrees (3 elements)");
  o.require(since(t0) < 60, "runtime under 1 min");
  o.note("S3 18, H4 " + std::to_string(entries.size()) + " entries, C2 " + std::to_string(built.size()));
  return o;
}

// 9. Isomorphism classes of constructed simples against character orbits.
Outcome redundancy() {
  Outcome o;
  const auto t0 = Clock::now();
  RedundancyReport r = redundancy_check(build_group("s3"));
  o.require(r.ok(), "prediction matches iso_test on every pair");
  o.require(r.predicted_isomorphic == r.observed_isomorphic, "isomorphic pair counts agree");
  o.require(since(t0) < 300, "runtime under 5 min");
  o.note(std::to_string(r.simples) + " simples from every orbit member, " + std::to_string(r.pairs) + " pairs, " +
         std::to_string(r.observed_isomorphic) + " isomorphic");
  return o;
}

// 10. Partial kS3*-modules against cotensor products.
Outcome bridge() {
  Outcome o;
  const auto t0 = Clock::now();
  RunConfig c = cfg("dual-bridge");
  c.group = "s3";
  c.max_x = 6;
  RunReport r = run(c);
  o.require(r.json["ok"] == true, "every case is an isomorphism");
  for (const auto& cs : r.json["cases"]) o.require(cs["dim"] == cs["expected_dim"], "dimension [X:K] dim W");
  o.require(since(t0) < 300, "runtime under 5 min");
  o.note(r.json["count"].dump() + " (X, W) cases");
  return o;
}

// 11. Property suites.
Outcome properties() {
  Outcome o;
  std::size_t comodules = 0, closures = 0;
  auto pcm_equiv = [&](const PartialComodule& m) {
    PcmReport r = check_pcm(m);
    o.require(r.ok(), "constructed comodule satisfies PCM1-5");
    o.require(r.pcm23() == r.pcm45(), "PCM2 and PCM3 iff PCM4 and PCM5");
    PartialComodule back = comodule_from_json(comodule_to_json(m), m.H);
    o.require(back.rho == m.rho, "comodule round trip");
    ++comodules;
  };
  for (const char* g : {"c2", "c3", "klein", "s3", "d8", "q8"})
    for (const auto& row : classify_group_simples(build_group(g)).rows)
      for (const auto& m : row.simples) pcm_equiv(m);
  for (const auto& row : kac_table(algebra("kac")))
    for (const auto& m : row.simples) pcm_equiv(m);

  for (const char* g : {"c2", "c3", "klein", "s3", "d8", "q8"}) {
    HopfPtr h = algebra(g);
    for (const auto& r : classify_group_onedim(build_group(g))) {
      o.require(closure_facts(h, r).ok(), std::string("closure facts over ") + g);
      ++closures;
    }
  }
  HopfPtr h4 = algebra("sweedler");
  for (const auto& e : h4_catalog(h4, default_gamma_samples())) {
    o.require(closure_facts(h4, e.r).ok(), "closure facts over sweedler");
    ++closures;
  }

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dimd(1, 7), kd(0, 5), small(-2, 2);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = std::size_t(dimd(rng));
    auto make = [&] {
      std::vector<Vec> vs(std::size_t(kd(rng)), zero_vec(n));
      for (auto& v : vs)
        for (auto& x : v) x = FieldElem(long(small(rng)));
      return Subspace::span(vs, n);
    };
    Subspace u = make(), v = make();
    o.require(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim(), "dimension formula");
  }

  for (const char* p : {"c2", "s3", "d8*", "sweedler", "kac"}) {
    FiniteDimHopf h = build_algebra(p);
    FiniteDimHopf back = hopf_from_json(hopf_to_json(h));
    o.require(back.mult == h.mult && back.comult == h.comult && back.antipode == h.antipode, "hopf round trip");
  }
  o.note(std::to_string(comodules) + " comodules, " + std::to_string(closures) +
         " one-dimensional coactions, 1000 subspace pairs");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hopf verification", hopf_verification},
      {"kS3 classification table", s3_table},
      {"certified dim (kS3*)_par = 51", s3_certified},
      {"A_par(kS3*) = 13, k^9 x M2", s3_apar},
      {"Kac algebra table", kac_table_check},
      {"Kac algebra dimensions", kac_dimensions},
      {"kD8* and kQ8* lower bounds", d8_q8},
      {"one-dimensional classifications", onedim_checks},
      {"isomorphism classes follow character orbits", redundancy},
      {"kG* bridge", bridge},
      {"property suites", properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " ("
              << fmt_seconds(since(t0)) << ")";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
