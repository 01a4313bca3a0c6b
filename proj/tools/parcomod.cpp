#include "parcomod/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace parcomod;

namespace {

void add_selection(CLI::App* app, RunConfig& c) {
  app->add_option("--algebra", c.algebra, "Preset (c2, s3, d8, q8, klein, sweedler, kac, s3*, ...) or Hopf JSON file");
  app->add_option("--group", c.group, "Group preset");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial comodules over finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--threads", c.threads, "Worker threads (computations are sequential; results do not depend on it)");
  app.add_option("--format", c.format, "Output format: json, csv or text")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the Hopf algebra axioms");
  add_selection(verify, c);
  verify->add_flag("--dual", c.dual, "Verify the dual instead");
  verify->add_flag("--all", c.all, "Verify every catalog algebra and the duals of the groups");

  auto* construct = app.add_subcommand("construct", "Partial comodules from a subcentral idempotent");
  add_selection(construct, c);
  construct->add_option("--idempotent", c.idempotent, "Element literal")->required();
  construct->add_option("--comodule-grouplike", c.comodule_grouplike, "Use only the comodule of this grouplike");

  for (const char* name : {"classify-group", "tables"}) {
    auto* t = app.add_subcommand(name, "Classification table of simple partial comodules");
    add_selection(t, c);
    t->add_flag("--paper-order", c.reference_order, "Reference representatives and row order");
    t->add_option("--bundle-out", c.bundle_out, "Write the simple comodules as a JSON array");
  }

  auto* hpar = app.add_subcommand("hpar-dim", "Upper and lower bounds for dim H_par");
  add_selection(hpar, c);
  hpar->add_flag("--dual", c.dual, "For groups: compute the partial Hopf algebra of kG*");
  hpar->add_option("--max-degree", c.max_degree, "Largest word length processed")->capture_default_str();
  hpar->add_option("--budget-mb", c.budget_mb, "Memory budget for stored relation terms")->capture_default_str();
  hpar->add_option("--checkpoint", c.checkpoint, "Checkpoint file written after each degree");
  hpar->add_flag("--resume", c.resume, "Continue from the checkpoint file");
  hpar->add_option("--bundle", c.bundle_file, "JSON array of partial comodules for the lower bound");

  auto* apar = app.add_subcommand("apar", "Structure of A_par and the restriction map");
  add_selection(apar, c);

  auto* onedim = app.add_subcommand("onedim", "One-dimensional partial comodules");
  add_selection(onedim, c);
  auto* cls = onedim->add_flag_callback("--classify", [&] { c.onedim_mode = "classify"; });
  auto* chk = onedim->add_option_function<std::string>("--check", [&](const std::string& e) {
    c.onedim_mode = "check";
    c.expr = e;
  });
  auto* rec = onedim->add_option_function<std::string>("--reconstruct", [&](const std::string& e) {
    c.onedim_mode = "reconstruct";
    c.expr = e;
  });
  cls->excludes(chk)->excludes(rec);
  chk->excludes(rec);
  onedim->add_option("--gamma", c.gammas, "Sample values of gamma for sweedler");

  auto* bridge = app.add_subcommand("dual-bridge", "Partial kG*-modules against cotensor products");
  add_selection(bridge, c);
  bridge->add_option("--max-x", c.max_x, "Largest |X|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "tables" && c.format == "json" && !app.get_option("--format")->count()) c.format = "csv";
  if (c.command == "classify-group" && !app.get_option("--format")->count()) c.format = "csv";

  RunReport r = run(c);
  std::cerr << r.text;
  if (c.format == "csv" && !r.csv.empty())
    std::cout << r.csv;
  else if (c.format == "text")
    std::cout << r.text;
  else
    std::cout << r.json.dump(2) << "\n";
  return r.exit_code;
}
