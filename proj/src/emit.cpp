#include "zrl/emit.hpp"

#include <cstdio>
#include <sstream>

namespace zrl {

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const std::vector<ChebyshevValue>& rows) {
  std::ostringstream out;
  out << "x,theta,psi,pi_count\n";
  for (const auto& r : rows)
    out << format_real(r.x) << ',' << format_real(r.theta) << ','
        << format_real(r.psi) << ',' << r.pi_count << '\n';
  return out.str();
}

std::string to_csv(const std::vector<IntervalCensus>& rows) {
  std::ostringstream out;
  out << "x,y,prime_count,log_sum\n";
  for (const auto& r : rows)
    out << format_real(r.x) << ',' << format_real(r.y) << ',' << r.prime_count
        << ',' << format_real(r.log_sum) << '\n';
  return out.str();
}

std::string to_csv(const ZeroCatalog& catalog) {
  std::ostringstream out;
  out << "index,ordinate,bracket_lo,bracket_hi,tolerance\n";
  for (const auto& z : catalog.zeros)
    out << z.index << ',' << format_real(z.ordinate) << ','
        << format_real(z.bracket_lo) << ',' << format_real(z.bracket_hi)
        << ',' << format_real(z.tolerance) << '\n';
  return out.str();
}

std::string to_csv(const std::vector<ExplicitEvaluation>& rows) {
  std::ostringstream out;
  out << "x,height,zeros_used,reconstructed,sieve_truth,residual,bound\n";
  for (const auto& r : rows)
    out << format_real(r.x) << ',' << format_real(r.height) << ','
        << r.zeros_used << ',' << format_real(r.reconstructed) << ','
        << format_real(r.sieve_truth) << ',' << format_real(r.residual) << ','
        << format_real(r.bound) << '\n';
  return out.str();
}

std::string to_csv(const OscillationReport& r) {
  std::ostringstream out;
  out << "x_lo,x_hi,sample_count,min_norm,max_norm,sign_changes,argmin,"
         "argmax\n";
  out << format_real(r.x_lo) << ',' << format_real(r.x_hi) << ','
      << r.sample_count << ',' << format_real(r.min_norm) << ','
      << format_real(r.max_norm) << ',' << r.sign_changes << ','
      << format_real(r.extremum_locations[0]) << ','
      << format_real(r.extremum_locations[1]) << '\n';
  return out.str();
}

std::string to_csv(const EnvelopeReport& report) {
  std::ostringstream out;
  out << "x,delta_abs,model_alpha,model_subexp,model_2140,model_rh\n";
  for (const auto& r : report.rows)
    out << format_real(r.x) << ',' << format_real(r.delta_abs) << ','
        << format_real(r.model_alpha) << ',' << format_real(r.model_subexp)
        << ',' << format_real(r.model_2140) << ',' << format_real(r.model_rh)
        << '\n';
  return out.str();
}

std::string to_csv(const std::vector<BoundCheckResult>& rows) {
  std::ostringstream out;
  out << "check_id,x,y,eps,lhs,rhs,pass,margin\n";
  for (const auto& r : rows)
    out << to_string(r.check_id) << ',' << format_real(r.x) << ','
        << format_real(r.y) << ',' << format_real(r.eps) << ','
        << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
        << bool_text(r.pass) << ',' << format_real(r.margin) << '\n';
  return out.str();
}

std::string to_csv(const std::vector<ProofChainReport>& rows) {
  std::ostringstream out;
  out << "x,beta,alpha,c_alpha,y,theta_diff,trivial_bound,alpha_bound,"
         "holds_3,holds_45,positive\n";
  for (const auto& r : rows)
    out << format_real(r.x) << ',' << format_real(r.beta) << ','
        << format_real(r.alpha) << ',' << format_real(r.c_alpha) << ','
        << format_real(r.y) << ',' << format_real(r.theta_diff) << ','
        << format_real(r.trivial_bound) << ',' << format_real(r.alpha_bound)
        << ',' << bool_text(r.holds_3) << ',' << bool_text(r.holds_45) << ','
        << bool_text(r.positive) << '\n';
  return out.str();
}

std::string to_csv(const FrontierTable& table) {
  std::ostringstream out;
  out << "x,beta,has_prime\n";
  for (const auto& c : table.cells)
    out << format_real(c.x) << ',' << format_real(c.beta) << ','
        << bool_text(c.has_prime) << '\n';
  return out.str();
}

std::string to_csv(const RegionScanResult& r) {
  std::ostringstream out;
  out << "height,sign_change_count,rvm_estimate,discrepancy\n";
  out << format_real(r.height) << ',' << r.sign_change_count << ','
      << format_real(r.rvm_estimate) << ',' << format_real(r.discrepancy)
      << '\n';
  return out.str();
}

ordered_json to_json(const ChebyshevValue& v) {
  return {{"x", v.x}, {"theta", v.theta}, {"psi", v.psi},
          {"pi_count", v.pi_count}};
}

ordered_json to_json(const IntervalCensus& c) {
  return {{"x", c.x}, {"y", c.y}, {"prime_count", c.prime_count},
          {"log_sum", c.log_sum}};
}

ordered_json to_json(const ZeroCatalog& catalog) {
  ordered_json zeros = ordered_json::array();
  for (const auto& z : catalog.zeros)
    zeros.push_back({{"index", z.index},
                     {"ordinate", z.ordinate},
                     {"bracket_lo", z.bracket_lo},
                     {"bracket_hi", z.bracket_hi},
                     {"tolerance", z.tolerance}});
  return {{"height", catalog.height},
          {"scan_step", catalog.scan_step},
          {"zeros", std::move(zeros)}};
}

ordered_json to_json(const ExplicitEvaluation& e) {
  return {{"x", e.x},
          {"height", e.height},
          {"zeros_used", e.zeros_used},
          {"reconstructed", e.reconstructed},
          {"sieve_truth", e.sieve_truth},
          {"residual", e.residual},
          {"bound", e.bound}};
}

ordered_json to_json(const OscillationReport& r) {
  return {{"x_lo", r.x_lo},
          {"x_hi", r.x_hi},
          {"sample_count", r.sample_count},
          {"min_norm", r.min_norm},
          {"max_norm", r.max_norm},
          {"sign_changes", r.sign_changes},
          {"argmin", r.extremum_locations[0]},
          {"argmax", r.extremum_locations[1]}};
}

ordered_json to_json(const EnvelopeReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"x", r.x},
                    {"delta_abs", r.delta_abs},
                    {"model_alpha", r.model_alpha},
                    {"model_subexp", r.model_subexp},
                    {"model_2140", r.model_2140},
                    {"model_rh", r.model_rh}});
  return {{"rows", std::move(rows)},
          {"sup_ratio_2140", report.sup_ratio_2140},
          {"sup_ratio_rh", report.sup_ratio_rh}};
}

ordered_json to_json(const BoundCheckResult& r) {
  return {{"check_id", to_string(r.check_id)},
          {"x", r.x},
          {"y", r.y},
          {"eps", r.eps},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"pass", r.pass},
          {"margin", r.margin}};
}

ordered_json to_json(const SweepSummary& s) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  return {{"check_id", to_string(s.check_id)},
          {"param_ranges",
           {{"x_min", s.x_min}, {"x_max", s.x_max}, {"y", s.y}}},
          {"total", s.total},
          {"failures", std::move(failures)},
          {"worst_margin", s.worst_margin}};
}

ordered_json to_json(const ProofChainReport& r) {
  return {{"x", r.x},
          {"beta", r.beta},
          {"alpha", r.alpha},
          {"c_alpha", r.c_alpha},
          {"y", r.y},
          {"theta_diff", r.theta_diff},
          {"trivial_bound", r.trivial_bound},
          {"alpha_bound", r.alpha_bound},
          {"holds_3", r.holds_3},
          {"holds_45", r.holds_45},
          {"positive", r.positive}};
}

ordered_json to_json(const FrontierTable& table) {
  ordered_json cells = ordered_json::array();
  for (const auto& c : table.cells)
    cells.push_back(
        {{"x", c.x}, {"beta", c.beta}, {"has_prime", c.has_prime}});
  return {{"x_grid", table.x_grid},
          {"beta_grid", table.beta_grid},
          {"cells", std::move(cells)}};
}

ordered_json to_json(const RegionScanResult& r) {
  return {{"height", r.height},
          {"sign_change_count", r.sign_change_count},
          {"rvm_estimate", r.rvm_estimate},
          {"discrepancy", r.discrepancy}};
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace zrl
