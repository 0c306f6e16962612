#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zrl/prime_core.hpp"
#include "zrl/zeta_engine.hpp"

namespace zrl {

inline constexpr char kToolVersion[] = "zrl 0.1.0";
inline constexpr int kCriterionCount = 11;

enum class OutputFormat { Csv, Json };

// One self-check verdict. expected_pass records the documented expectation:
// two checks (brun-titchmarsh-sweep, bhp-sweep) assert claims with genuine
// small-x counterexamples, so they are expected to fail and the failures are
// themselves the finding. seconds is wall time and never enters data tables.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool expected_pass = true;
  std::string detail;
  std::string data_table;
  double seconds = 0.0;
};

// Inputs shared across criteria, built lazily so single-criterion runs pay
// only for what they touch.
class ReportEnv {
 public:
  const PiTable& pi_table();        // covers [0, 1.01e6]
  const ZeroCatalog& catalog100();  // build_catalog(100, 0.1)

 private:
  std::optional<PiTable> pi_;
  std::optional<ZeroCatalog> catalog_;
};

// id in [1, kCriterionCount].
CriterionResult run_criterion(int id, ReportEnv& env);

struct ReportDocument {
  std::string version;
  std::string config_echo;
  std::vector<CriterionResult> criteria;
};

ReportDocument run_report(ReportEnv& env, const std::string& config_echo);

// Everything except timings, byte-identical across runs of the same build.
std::string report_data_tables(const ReportDocument& doc);

std::string emit_report(const ReportDocument& doc, OutputFormat format);

}  // namespace zrl
