#pragma once

#include "nisv/config.hpp"
#include "nisv/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nisv {

using ParamMap = std::map<std::string, std::string>;

struct CheckDef {
    std::string id;
    std::string description;      ///< the identity under test, in plain words
    std::string primary_defect;   ///< defect used for sweep monotonicity
    std::function<CheckReport(const ParamMap&, const Config&)> run;
};

/// All registered checks, keyed by id.
const std::map<std::string, CheckDef>& check_registry();

/// Execute one check. Unknown ids and invalid parameters throw;
/// an ill-conditioned kernel cut becomes a failed report with diagnostics.
CheckReport run_check(const std::string& id, const ParamMap& params, const Config& cfg);

enum class SweepAxis { Order, LambdaSamples };

SweepAxis parse_axis(const std::string& name);

struct SweepResult {
    std::vector<CheckReport> reports;
    std::string primary_defect;
    bool monotone = false; ///< nonincreasing within slack, or below tolerance
};

/// Rerun a check along an axis (>= 2 increasing values).
SweepResult sweep(const std::string& id, const ParamMap& params, SweepAxis axis,
                  const std::vector<int>& values, const Config& cfg);

} // namespace nisv
