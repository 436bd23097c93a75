#pragma once

#include <optional>
#include <string>

#include "hexmono/analysis.hpp"
#include "hexmono/engine.hpp"
#include "json.hpp"

namespace hexmono {

struct ReportOptions {
    std::optional<Window> window;
    int period_bound = 8;
    std::size_t max_features = 200;  // per-feature entries; counts always cover everything
};

// feature list, component summary, period report and class verdict
nlohmann::json analysis_report(const Patch& p, const ReportOptions& opt = {});
// true when the report shows an R1 or R2 violation
bool report_violates(const nlohmann::json& report);

nlohmann::json to_json(const LegalityReport& r);
nlohmann::json to_json(HexCoord c);

}  // namespace hexmono
