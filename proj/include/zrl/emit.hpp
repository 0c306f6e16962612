#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zrl/explicit_formula.hpp"
#include "zrl/prime_core.hpp"
#include "zrl/region_verifier.hpp"
#include "zrl/zeta_engine.hpp"

namespace zrl {

using ordered_json = nlohmann::ordered_json;

// All real-valued output goes through one formatter: %.12g, so identical
// doubles always serialize to identical bytes.
std::string format_real(double v);

// CSV: header row of the type's fields in declared order, LF endings,
// booleans as true/false, reals via format_real.
std::string to_csv(const std::vector<ChebyshevValue>& rows);
std::string to_csv(const std::vector<IntervalCensus>& rows);
std::string to_csv(const ZeroCatalog& catalog);
std::string to_csv(const std::vector<ExplicitEvaluation>& rows);
std::string to_csv(const OscillationReport& report);
std::string to_csv(const EnvelopeReport& report);
std::string to_csv(const std::vector<BoundCheckResult>& rows);
std::string to_csv(const std::vector<ProofChainReport>& rows);
std::string to_csv(const FrontierTable& table);
std::string to_csv(const RegionScanResult& result);

ordered_json to_json(const ChebyshevValue& v);
ordered_json to_json(const IntervalCensus& c);
ordered_json to_json(const ZeroCatalog& catalog);
ordered_json to_json(const ExplicitEvaluation& e);
ordered_json to_json(const OscillationReport& report);
ordered_json to_json(const EnvelopeReport& report);
ordered_json to_json(const BoundCheckResult& r);
ordered_json to_json(const SweepSummary& s);
ordered_json to_json(const ProofChainReport& rep);
ordered_json to_json(const FrontierTable& table);
ordered_json to_json(const RegionScanResult& result);

// Stable-order JSON text with a trailing newline.
std::string json_text(const ordered_json& j);

}  // namespace zrl
