#include <doctest.h>

#include "parcomod/cli.hpp"

#include <filesystem>
#include <fstream>

using namespace parcomod;

namespace {

RunConfig cfg(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

std::string first_lines(const std::string& csv, int k) {
  std::string out;
  std::size_t pos = 0;
  for (int i = 0; i < k && pos < csv.size(); ++i) {
    std::size_t nl = csv.find('\n', pos);
    out += csv.substr(pos, nl - pos + 1);
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify exits cleanly for every catalog algebra") {
    RunConfig c = cfg("verify");
    c.all = true;
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.json["ok"] == true);
    CHECK(r.json["algebras"].size() >= 14);
  }

  TEST_CASE("bad input maps to exit code 4") {
    RunConfig c = cfg("verify");
    c.algebra = "a5";
    CHECK(run(c).exit_code == kExitBadInput);

    RunConfig f = cfg("verify");
    f.algebra = "s3";
    f.format = "xml";
    CHECK(run(f).exit_code == kExitBadInput);

    RunConfig t = cfg("hpar-dim");
    t.group = "s3";
    t.threads = -1;
    CHECK(run(t).exit_code == kExitBadInput);

    RunConfig e = cfg("construct");
    e.algebra = "s3";
    e.idempotent = "(1 + ";
    CHECK(run(e).exit_code == kExitBadInput);

    RunConfig m = cfg("onedim");
    m.algebra = "s3";
    m.onedim_mode = "check";
    m.expr = "q";
    CHECK(run(m).exit_code == kExitBadInput);
  }

  TEST_CASE("non-subcentral idempotent is reported without a crash") {
    RunConfig c = cfg("construct");
    c.algebra = "s3";
    c.idempotent = "(1 + s)/2";
    RunReport r = run(c);
    CHECK(r.exit_code == kExitVerificationFailed);
    CHECK(r.json["subcentral"] == false);
  }

  TEST_CASE("group table csv schema") {
    RunConfig c = cfg("tables");
    c.group = "s3";
    c.reference_order = true;
    c.format = "csv";
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(first_lines(r.csv, 2) == std::string(kCsvSchemaLine) + "\n" + kGroupCsvHeader + "\n");
    CHECK(r.json["sum_of_squares"] == 51);
    CHECK(r.json["rows"].size() == 8);
  }

  TEST_CASE("kac table csv schema and corrected row") {
    RunConfig c = cfg("tables");
    c.algebra = "kac";
    c.format = "csv";
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(first_lines(r.csv, 2) == std::string(kCsvSchemaLine) + "\n" + kKacCsvHeader + "\n");
    CHECK(r.json["sum_of_squares"] == 180);
    CHECK(r.json["corrected_rows"][0]["literal_is_idempotent"] == false);
  }

  TEST_CASE("hpar-dim reports certified dimensions and budget exhaustion") {
    RunConfig c = cfg("hpar-dim");
    c.group = "c2";
    c.dual = true;
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.json["status"] == "Certified");
    CHECK(r.json["dim"] == 3);

    RunConfig z = cfg("hpar-dim");
    z.group = "s3";
    z.budget_mb = 0;
    CHECK(run(z).exit_code == kExitBadInput);

    RunConfig b = cfg("hpar-dim");
    b.algebra = "kac";
    b.budget_mb = 1;
    RunReport rb = run(b);
    CHECK(rb.exit_code == kExitBudget);
    CHECK(rb.json["status"] == "BudgetExceeded");
  }

  TEST_CASE("bundle written by tables feeds hpar-dim") {
    const auto path = (std::filesystem::temp_directory_path() / "parcomod_test_bundle.json").string();
    RunConfig t = cfg("tables");
    t.group = "c3";
    t.bundle_out = path;
    REQUIRE(run(t).exit_code == kExitOk);
    REQUIRE(std::filesystem::exists(path));

    RunConfig h = cfg("hpar-dim");
    h.algebra = "c3";
    h.bundle_file = path;
    RunReport r = run(h);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.json["lower_bound"] == 8);
    CHECK(r.json["status"] == "Certified");
    std::filesystem::remove(path);
  }

  TEST_CASE("hopf json file as algebra") {
    const auto path = (std::filesystem::temp_directory_path() / "parcomod_test_hopf.json").string();
    {
      std::ofstream f(path);
      f << hopf_to_json(build_algebra("sweedler")).dump();
    }
    RunConfig c = cfg("verify");
    c.algebra = path;
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
    std::filesystem::remove(path);
  }

  TEST_CASE("onedim modes") {
    RunConfig c = cfg("onedim");
    c.algebra = "s3";
    c.onedim_mode = "classify";
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);

    RunConfig k = cfg("onedim");
    k.algebra = "sweedler";
    k.onedim_mode = "check";
    k.expr = "(1 - g)/2 + x";
    RunReport rk = run(k);
    CHECK(rk.json["elements"][0]["passes"] == false);
    CHECK(rk.json["elements"][0]["agrees_with_pcm"] == true);
  }

  TEST_CASE("dual-bridge over a small group") {
    RunConfig c = cfg("dual-bridge");
    c.group = "c2";
    RunReport r = run(c);
    CHECK(r.exit_code == kExitOk);
  }
}
