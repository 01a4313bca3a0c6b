#pragma once

#include "parcomod/hpar.hpp"
#include "parcomod/onedim.hpp"

#include <string>

namespace parcomod {

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 2, kExitBudget = 3, kExitBadInput = 4 };

struct RunConfig {
  std::string command;
  std::string algebra;  // preset name or Hopf JSON file
  std::string group;    // group preset
  bool dual = false;
  bool reference_order = false;
  std::string format = "json";  // json | csv | text
  std::string idempotent;
  std::string comodule_grouplike;
  int max_degree = 6;
  std::size_t budget_mb = 4096;
  std::string checkpoint;
  bool resume = false;
  std::string bundle_file;  // JSON array of partial comodules
  std::string bundle_out;
  std::string onedim_mode;  // classify | check | reconstruct
  std::string expr;
  std::vector<std::string> gammas;
  std::size_t max_x = 6;
  bool all = false;
  int threads = 0;
};

struct RunReport {
  Json json;
  std::string csv;    // set when format is csv
  std::string text;   // human-readable summary for stderr
  int exit_code = kExitOk;
};

// Throws std::invalid_argument for unusable configurations.
void validate(const RunConfig& c);

RunReport run_verify(const RunConfig& c);
RunReport run_construct(const RunConfig& c);
RunReport run_classify(const RunConfig& c);  // classify-group and tables
RunReport run_hpar(const RunConfig& c);
RunReport run_apar(const RunConfig& c);
RunReport run_onedim(const RunConfig& c);
RunReport run_bridge(const RunConfig& c);

// Dispatches on c.command; maps exceptions to exit codes.
RunReport run(const RunConfig& c);

// Hopf algebra from a preset name or a JSON file path.
HopfPtr load_algebra(const std::string& preset_or_file);

// Versioned CSV schemas.
inline constexpr const char* kGroupCsvHeader = "subgroup,idempotent,equivalent_idempotents,dim_I,index,n_simples,dims";
inline constexpr const char* kKacCsvHeader = "coideal_subalgebra,idempotent,dim_Ae,n_simples,dims";
inline constexpr const char* kCsvSchemaLine = "# parcomod-table v1";

std::string group_table_csv(const GroupClassification& c);
std::string kac_table_csv(const std::vector<KacRow>& rows, const FiniteDimHopf& kac);

}  // namespace parcomod
