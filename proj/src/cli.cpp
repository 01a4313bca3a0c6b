#include "parcomod/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace parcomod {

namespace {

HopfPtr share(FiniteDimHopf h) { return std::make_shared<const FiniteDimHopf>(std::move(h)); }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::vector<std::size_t> dims_of(const std::vector<PartialComodule>& ms) {
  std::vector<std::size_t> d;
  for (const auto& m : ms) d.push_back(m.d);
  return d;
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::vector<std::string> s;
  for (auto x : d) s.push_back(std::to_string(x));
  return join(s, " ");
}

Json blocks_json(const std::map<std::size_t, std::size_t>& b) {
  Json j = Json::object();
  for (const auto& [d, c] : b) j[std::to_string(d)] = c;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return Json::parse(in);
}

Json comodules_json(const std::vector<PartialComodule>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(comodule_to_json(m));
  return a;
}

RepresentationBundle bundle_from_file(const std::string& path, HopfPtr h) {
  Json j = read_json_file(path);
  if (!j.is_array()) throw std::invalid_argument("bundle file must hold a JSON array of partial comodules");
  std::vector<PartialComodule> ms;
  for (const auto& x : j) ms.push_back(comodule_from_json(x, h));
  return bundle_from_comodules(ms);
}

Json rcheck_json(const RCheck& r) {
  Json j = Json::array();
  for (bool b : r.eq) j.push_back(b);
  return j;
}

Json closure_json(const ClosureFacts& f) {
  return Json{{"regular", f.regular},
              {"antipode_image", f.antipode_image},
              {"antipode_inverse_image", f.antipode_inverse_image},
              {"translates", f.translates},
              {"left_idempotent", f.left_idempotent},
              {"sub_idempotent", f.sub_idempotent},
              {"grouplike_images", f.grouplike_images},
              {"integral", f.integral},
              {"ok", f.ok()}};
}

Json reconstruction_json(const FiniteDimHopf& h, const Reconstruction& r) {
  return Json{{"e", format_element(h, r.e)},
              {"cotensor_dim", r.cotensor_dim},
              {"spanned_by_r", r.spanned_by_r},
              {"coaction_is_r", r.coaction_is_r},
              {"isomorphic", r.isomorphic},
              {"ok", r.ok()}};
}

// Full verdict for one element r; sets ok to false on any failed check.
Json onedim_entry(HopfPtr h, const Vec& r, bool& ok) {
  Json j;
  j["r"] = format_element(*h, r);
  RCheck rc = check_r(*h, r);
  j["check_r"] = rcheck_json(rc);
  j["passes"] = rc.ok();
  const bool pcm = check_pcm(one_dim_comodule(h, r)).ok();
  j["agrees_with_pcm"] = pcm == rc.ok();
  ok &= pcm == rc.ok();
  if (rc.ok()) {
    auto f = closure_facts(h, r);
    auto rec = reconstruct(h, r);
    j["closure"] = closure_json(f);
    j["reconstruction"] = reconstruction_json(*h, rec);
    ok &= f.ok() && rec.ok();
  }
  return j;
}

std::vector<FieldElem> gamma_list(const RunConfig& c) {
  if (c.gammas.empty()) return default_gamma_samples();
  std::vector<FieldElem> g;
  for (const auto& s : c.gammas) g.push_back(FieldElem::parse(s));
  return g;
}

Json saturation_json(const SaturationResult& s) {
  Json a = Json::array();
  for (const auto& d : s.degrees)
    a.push_back(Json{{"degree", d.degree},
                     {"upper", d.upper ? Json(*d.upper) : Json(nullptr)},
                     {"leading_words", d.leads},
                     {"seconds", d.seconds}});
  return a;
}

}  // namespace

HopfPtr load_algebra(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("no algebra given");
  if (std::filesystem::is_regular_file(name)) return share(hopf_from_json(read_json_file(name)));
  return share(build_algebra(name));
}

void validate(const RunConfig& c) {
  static const std::vector<std::string> formats = {"json", "csv", "text"};
  if (std::find(formats.begin(), formats.end(), c.format) == formats.end())
    throw std::invalid_argument("unknown format " + c.format);
  if (c.max_degree < 1 || c.max_degree > 15) throw std::invalid_argument("max degree must lie in 1..15");
  if (c.budget_mb == 0) throw std::invalid_argument("memory budget must be positive");
  if (!c.algebra.empty() && !c.group.empty()) throw std::invalid_argument("give either --algebra or --group");
  if (c.threads < 0) throw std::invalid_argument("thread count must be non-negative");
}

std::string group_table_csv(const GroupClassification& c) {
  std::ostringstream os;
  os << kCsvSchemaLine << "\n" << kGroupCsvHeader << "\n";
  for (const auto& r : c.rows) {
    std::vector<std::string> eq;
    for (const auto& e : r.equivalents) eq.push_back(format_element(*c.kG, e));
    os << csv_field(r.subgroup_label) << "," << csv_field(format_element(*c.kG, r.e)) << ","
       << csv_field(join(eq, "; ")) << "," << r.dim_I << "," << r.index << "," << r.simples.size()
       << "," << dims_str(dims_of(r.simples)) << "\n";
  }
  return os.str();
}

std::string kac_table_csv(const std::vector<KacRow>& rows, const FiniteDimHopf&) {
  std::ostringstream os;
  os << kCsvSchemaLine << "\n" << kKacCsvHeader << "\n";
  for (const auto& r : rows)
    os << csv_field(r.algebra_name) << "," << csv_field(r.expr) << "," << r.dim_Ae << ","
       << r.simples.size() << "," << dims_str(dims_of(r.simples)) << "\n";
  return os.str();
}

RunReport run_verify(const RunConfig& c) {
  RunReport rep;
  std::vector<std::pair<std::string, HopfPtr>> algs;
  if (c.all) {
    for (std::string g : {"c2", "c3", "klein", "s3", "d8", "q8"}) {
      algs.emplace_back(g, load_algebra(g));
      algs.emplace_back(g + "*", load_algebra(g + "*"));
    }
    algs.emplace_back("sweedler", load_algebra("sweedler"));
    algs.emplace_back("kac", load_algebra("kac"));
  } else {
    std::string name = c.group.empty() ? c.algebra : c.group;
    HopfPtr h = load_algebra(name);
    if (c.dual) h = share(dual_hopf(*h));
    algs.emplace_back(h->name, h);
  }
  Json out = Json::array();
  bool all_ok = true;
  std::ostringstream text;
  for (const auto& [name, h] : algs) {
    HopfReport r = verify_hopf(*h);
    Json checks = Json::array();
    for (const auto& ch : r.checks)
      checks.push_back(Json{{"axiom", ch.axiom}, {"ok", ch.ok}, {"witness", ch.witness}});
    out.push_back(Json{{"algebra", name}, {"dim", h->n}, {"ok", r.ok()}, {"checks", checks}});
    all_ok &= r.ok();
    text << name << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
    if (!r.ok()) text << r.str();
  }
  rep.json = Json{{"algebras", out}, {"ok", all_ok}};
  rep.text = text.str();
  rep.exit_code = all_ok ? kExitOk : kExitVerificationFailed;
  return rep;
}

RunReport run_construct(const RunConfig& c) {
  RunReport rep;
  HopfPtr h = load_algebra(c.group.empty() ? c.algebra : c.group);
  if (c.idempotent.empty()) throw std::invalid_argument("--idempotent is required");
  Vec e = parse_element(*h, c.idempotent);
  auto sc = is_subcentral(*h, e);
  Json j;
  j["algebra"] = h->name;
  j["idempotent"] = format_element(*h, e);
  j["subcentral"] = sc.ok();
  if (!sc.ok()) {
    j["failure"] = sc.failure;
    rep.json = j;
    rep.text = "not a subcentral idempotent: " + sc.failure + "\n";
    rep.exit_code = kExitVerificationFailed;
    return rep;
  }
  auto res = run_construction(h, e);
  j["coideal_subalgebra_dim"] = res.sub.A.dim();
  j["quotient_dim"] = res.q.m;
  j["dim_Ae"] = res.dim_Ae;
  j["coinvariants_equal_Ae_e"] = res.coinvariants_equal_ae;
  std::vector<PartialComodule> chosen;
  if (!c.comodule_grouplike.empty()) {
    auto w = grouplike_comodule(res.q, res.q.project(parse_element(*h, c.comodule_grouplike)),
                                c.comodule_grouplike);
    chosen.push_back(cotensor_comodule(w, res.he, res.q));
  } else {
    chosen = res.comodules;
  }
  bool ok = res.coinvariants_equal_ae;
  Json ms = Json::array();
  for (const auto& m : chosen) {
    Json mj = comodule_to_json(m);
    auto pcm = check_pcm(m);
    mj["pcm"] = pcm.ok();
    if (m.d > 0) mj["simple"] = is_simple(m).kind == Simplicity::SimpleCertified;
    ok &= pcm.ok();
    ms.push_back(mj);
  }
  j["comodules"] = ms;
  rep.json = j;
  rep.text = "constructed " + std::to_string(chosen.size()) + " comodule(s)\n";
  rep.exit_code = ok ? kExitOk : kExitVerificationFailed;
  return rep;
}

RunReport run_classify(const RunConfig& c) {
  RunReport rep;
  std::ostringstream text;
  if (!c.group.empty()) {
    auto cl = classify_group_simples(build_group(c.group), c.reference_order);
    Json rows = Json::array();
    for (const auto& r : cl.rows) {
      std::vector<std::string> eq;
      for (const auto& e : r.equivalents) eq.push_back(format_element(*cl.kG, e));
      rows.push_back(Json{{"subgroup", r.subgroup_label},
                          {"idempotent", format_element(*cl.kG, r.e)},
                          {"equivalent_idempotents", eq},
                          {"dim_I", r.dim_I},
                          {"index", r.index},
                          {"n_simples", r.simples.size()},
                          {"dims", dims_of(r.simples)}});
    }
    rep.json = Json{{"group", cl.G.name}, {"rows", rows}, {"blocks", blocks_json(cl.blocks())},
                    {"sum_of_squares", cl.total()}};
    rep.csv = group_table_csv(cl);
    std::vector<PartialComodule> all;
    for (const auto& r : cl.rows) all.insert(all.end(), r.simples.begin(), r.simples.end());
    if (!c.bundle_out.empty()) write_file(c.bundle_out, comodules_json(all).dump() + "\n");
    text << cl.rows.size() << " rows, sum of squares " << cl.total() << "\n";
  } else {
    HopfPtr h = load_algebra(c.algebra.empty() ? "kac" : c.algebra);
    if (h->name != "kac") throw std::invalid_argument("tables are available for group presets and kac");
    // Catalog order is the reference row order, so --paper-order changes nothing here.
    auto rows = kac_table(h);
    Json js = Json::array();
    std::size_t total = 0;
    std::vector<PartialComodule> all;
    for (const auto& r : rows) {
      for (const auto& m : r.simples) total += m.d * m.d;
      all.insert(all.end(), r.simples.begin(), r.simples.end());
      js.push_back(Json{{"coideal_subalgebra", r.algebra_name},
                        {"idempotent", r.expr},
                        {"dim_Ae", r.dim_Ae},
                        {"coideal_dim", r.coideal_dim},
                        {"n_simples", r.simples.size()},
                        {"dims", dims_of(r.simples)},
                        {"spinning_used", r.spinning_used}});
    }
    const Vec literal = parse_element(*h, kac_s2_non_idempotent_literal());
    const bool literal_idempotent = h->mul(literal, literal) == literal;
    rep.json = Json{{"algebra", "kac"}, {"rows", js}, {"sum_of_squares", total},
                    {"corrected_rows", Json::array({Json{{"row", "S2"},
                                                         {"literal", kac_s2_non_idempotent_literal()},
                                                         {"literal_is_idempotent", literal_idempotent}}})}};
    rep.csv = kac_table_csv(rows, *h);
    if (!c.bundle_out.empty()) write_file(c.bundle_out, comodules_json(all).dump() + "\n");
    text << rows.size() << " rows, sum of squares " << total << "\n";
  }
  rep.text = text.str();
  return rep;
}

RunReport run_hpar(const RunConfig& c) {
  RunReport rep;
  HopfPtr h;
  HopfPtr acting;
  std::optional<RepresentationBundle> bundle;
  if (!c.group.empty()) {
    h = load_algebra(c.group);
    if (c.dual) {
      acting = share(dual_hopf(*h));
      bundle = c.bundle_file.empty() ? group_bundle(classify_group_simples(build_group(c.group)))
                                     : bundle_from_file(c.bundle_file, h);
    } else {
      acting = h;
    }
  } else {
    // Bundles are partial comodules over the named algebra, i.e. partial
    // modules over its dual, so the dual is the acting algebra.
    h = load_algebra(c.algebra);
    acting = share(dual_hopf(*h));
    if (!c.bundle_file.empty())
      bundle = bundle_from_file(c.bundle_file, h);
    else if (h->name == "kac")
      bundle = kac_bundle(kac_table(h));
  }
  SaturationOptions opt;
  opt.max_degree = c.max_degree;
  opt.budget_mb = c.budget_mb;
  opt.checkpoint = c.checkpoint;
  opt.resume = c.resume;
  std::ostringstream text;
  opt.progress = [&](const DegreeReport& d) {
    text << "degree " << d.degree << ": upper " << (d.upper ? std::to_string(*d.upper) : "unbounded")
         << ", " << d.leads << " leading words, " << d.seconds << " s\n";
  };
  Json j;
  j["algebra"] = acting->name;
  j["acting_dim"] = acting->n;
  if (bundle) {
    CertifiedDim cd = certified_dim(*acting, *bundle, opt);
    j["upper_bounds"] = saturation_json(cd.saturation);
    j["lower_bound"] = cd.lower;
    j["bundle_blocks"] = block_string(bundle_blocks(*bundle));
    if (cd.status == CertifiedDim::Certified) {
      j["status"] = "Certified";
      j["dim"] = cd.lower;
      j["blocks"] = block_string(cd.blocks);
    } else {
      j["status"] = cd.budget_exceeded() ? "BudgetExceeded" : "UpperLower";
      j["upper"] = cd.upper ? Json(*cd.upper) : Json(nullptr);
    }
    if (cd.budget_exceeded()) rep.exit_code = kExitBudget;
  } else {
    SaturationResult s = saturate(*acting, opt);
    j["upper_bounds"] = saturation_json(s);
    j["lower_bound"] = 1;  // the counit representation
    if (s.upper && *s.upper == 1) {
      j["status"] = "Certified";
      j["dim"] = 1;
      j["blocks"] = "k";
    } else {
      j["status"] = s.budget_exceeded ? "BudgetExceeded" : "UpperLower";
      j["upper"] = s.upper ? Json(*s.upper) : Json(nullptr);
    }
    if (s.budget_exceeded) rep.exit_code = kExitBudget;
  }
  text << "status " << j["status"].get<std::string>() << "\n";
  rep.json = j;
  rep.text = text.str();
  return rep;
}

RunReport run_apar(const RunConfig& c) {
  RunReport rep;
  HopfPtr h;
  RepresentationBundle bundle;
  std::vector<Vec> es;
  if (!c.group.empty()) {
    auto cl = classify_group_simples(build_group(c.group));
    h = cl.kG;
    bundle = group_bundle(cl);
    for (const auto& r : cl.rows) es.push_back(r.e);
  } else {
    h = load_algebra(c.algebra);
    if (h->name != "kac") throw std::invalid_argument("apar needs a group preset or kac");
    auto rows = kac_table(h);
    bundle = kac_bundle(rows);
    for (const auto& r : rows) es.push_back(r.e);
  }
  FiniteDimHopf acting = dual_hopf(*h);
  AparReport a = apar_analysis(acting, bundle);
  RestrictionImageReport cc = restriction_image(h, es, a.dim);
  rep.json = Json{{"algebra", acting.name},
                  {"dim", a.dim},
                  {"semisimple", a.semisimple},
                  {"center_dim", a.center_dim},
                  {"blocks", block_string(a.blocks)},
                  {"blocks_resolved", a.blocks_resolved},
                  {"restriction_map",
                   Json{{"image_dim", cc.image_dim},
                        {"product_dim", cc.product_dim},
                        {"matches_apar", cc.matches_apar()}}}};
  rep.text = "A_par dim " + std::to_string(a.dim) + ", " + block_string(a.blocks) + "\n";
  return rep;
}

RunReport run_onedim(const RunConfig& c) {
  RunReport rep;
  const std::string name = c.group.empty() ? c.algebra : c.group;
  HopfPtr h = load_algebra(name);
  bool ok = true;
  Json j;
  j["algebra"] = h->name;
  if (c.onedim_mode == "classify") {
    Json list = Json::array();
    if (is_group_preset(name)) {
      for (const auto& r : classify_group_onedim(build_group(name))) {
        Json e = onedim_entry(h, r, ok);
        ok &= e["passes"].get<bool>();
        list.push_back(e);
      }
    } else if (h->name == "sweedler") {
      for (const auto& f : h4_catalog(h, gamma_list(c))) {
        Json e = onedim_entry(h, f.r, ok);
        e["family"] = f.family;
        e["description"] = f.description;
        e["gamma"] = to_json(f.gamma);
        ok &= f.passes;
        list.push_back(e);
      }
    } else {
      throw std::invalid_argument("classification is available for group presets and sweedler");
    }
    j["elements"] = list;
    j["count"] = list.size();
  } else if (c.onedim_mode == "check" || c.onedim_mode == "reconstruct") {
    Vec r = parse_element(*h, c.expr);
    if (c.onedim_mode == "check") {
      j["elements"] = Json::array({onedim_entry(h, r, ok)});
    } else {
      auto rec = reconstruct(h, r);
      j["elements"] = Json::array({Json{{"r", format_element(*h, r)}, {"reconstruction", reconstruction_json(*h, rec)}}});
      ok &= rec.ok();
    }
  } else {
    throw std::invalid_argument("choose one of --classify, --check, --reconstruct");
  }
  j["ok"] = ok;
  rep.json = j;
  rep.text = std::string("onedim ") + (ok ? "ok" : "FAILED") + "\n";
  rep.exit_code = ok ? kExitOk : kExitVerificationFailed;
  return rep;
}

RunReport run_bridge(const RunConfig& c) {
  RunReport rep;
  FiniteGroup g = build_group(c.group.empty() ? "s3" : c.group);
  if (g.order > 16) throw std::invalid_argument("subset enumeration limited to groups of order <= 16");
  Json cases = Json::array();
  bool ok = true;
  std::size_t count = 0;
  const std::size_t others = g.order - 1;
  for (std::size_t mask = 0; mask < (std::size_t(1) << others); ++mask) {
    std::vector<std::size_t> X{g.identity};
    for (std::size_t t = 0, x = 0; x < g.order; ++x) {
      if (x == g.identity) continue;
      if (mask >> t++ & 1) X.push_back(x);
    }
    if (X.size() > c.max_x) continue;
    std::sort(X.begin(), X.end());
    for (std::size_t irr = 0;; ++irr) {
      BridgeReport r;
      try {
        r = dual_group_bridge(g, X, irr);
      } catch (const std::out_of_range&) {
        break;
      }
      ++count;
      ok &= r.ok();
      std::vector<std::string> labels;
      for (auto x : X) labels.push_back(g.labels[x]);
      cases.push_back(Json{{"X", labels},
                           {"irrep", irr},
                           {"stabilizer_order", r.stabilizer_order},
                           {"dim", r.dim_module},
                           {"expected_dim", r.expected_dim},
                           {"isomorphism", r.theta_bijective && r.theta_intertwines},
                           {"ok", r.ok()}});
    }
  }
  rep.json = Json{{"group", g.name}, {"cases", cases}, {"count", count}, {"ok", ok}};
  rep.text = std::to_string(count) + " bridge cases, " + (ok ? "all verified" : "FAILURES") + "\n";
  rep.exit_code = ok ? kExitOk : kExitVerificationFailed;
  return rep;
}

RunReport run(const RunConfig& c) {
  try {
    validate(c);
    if (c.command == "verify") return run_verify(c);
    if (c.command == "construct") return run_construct(c);
    if (c.command == "classify-group" || c.command == "tables") return run_classify(c);
    if (c.command == "hpar-dim") return run_hpar(c);
    if (c.command == "apar") return run_apar(c);
    if (c.command == "onedim") return run_onedim(c);
    if (c.command == "dual-bridge") return run_bridge(c);
    throw std::invalid_argument("unknown command " + c.command);
  } catch (const SoundnessViolation& e) {
    RunReport r;
    r.json = Json{{"error", e.what()}};
    r.text = std::string("soundness violation: ") + e.what() + "\n";
    r.exit_code = kExitVerificationFailed;
    return r;
  } catch (const ConstructionError& e) {
    RunReport r;
    r.json = Json{{"error", e.what()}};
    r.text = std::string("verification failure: ") + e.what() + "\n";
    r.exit_code = kExitVerificationFailed;
    return r;
  } catch (const std::logic_error& e) {
    // invalid_argument, parse errors and dimension mismatches derive from logic_error.
    RunReport r;
    r.json = Json{{"error", e.what()}};
    r.text = std::string("bad input: ") + e.what() + "\n";
    r.exit_code = kExitBadInput;
    return r;
  }
}

}  // namespace parcomod
