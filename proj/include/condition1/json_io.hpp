#pragma once

#include <condition1/condition1.hpp>
#include <condition1/sequences.hpp>

#include <nlohmann/json_fwd.hpp>

namespace condition1 {

// Stable certificate shape:
// {n, p, a, q, d, intervals: [[lo,hi],...], residuals: [{k, byP, byQ}],
//  verdict: "Holds" | {"FailsAt": [...]} | {"Inapplicable": reason}}
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json scan_to_json(const SequenceScan& scan);

}  // namespace condition1
