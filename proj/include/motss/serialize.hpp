#pragma once

#include <json.hpp>

#include "motss/adversary.hpp"
#include "motss/algorithms.hpp"
#include "motss/analysis.hpp"
#include "motss/bounds.hpp"
#include "motss/pareto.hpp"

namespace motss {

using json = nlohmann::json;

json to_json(const Bounds& b);
json to_json(const PriceVector& p);
json to_json(const InputSequence& seq);
json to_json(const RunOutcome& outcome);
json to_json(const ParetoFront& front);
json to_json(const RatioReport& report);
json to_json(const ZMethod& method);
json to_json(const ZValue& z);
json to_json(const AdversaryGame& game);
json to_json(const PlayResult& play);
json to_json(const MinimaxResult& mm);  // table omitted; see policy CSV

/// One CSV field per price component, %.17g.
std::string csv_row(std::span<const double> values);

}  // namespace motss
