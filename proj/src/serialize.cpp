#include "motss/serialize.hpp"

#include <sstream>

#include "motss/instance_io.hpp"

namespace motss {

json to_json(const Bounds& b) {
  json j{{"k", b.k()},
         {"m", b.min_prices()},
         {"M", b.max_prices()},
         {"phi", b.fluctuations()},
         {"interval_kind",
          b.interval_kind() == IntervalKind::Real ? "real" : "finite_grid"}};
  if (b.interval_kind() == IntervalKind::FiniteGrid) {
    json grids = json::array();
    for (int i = 0; i < b.k(); ++i) grids.push_back(b.grid(i));
    j["grids"] = std::move(grids);
  }
  return j;
}

json to_json(const PriceVector& p) { return json(p.values()); }

json to_json(const InputSequence& seq) {
  json prices = json::array();
  for (const auto& p : seq.prices()) prices.push_back(p.values());
  return json{{"bounds", to_json(seq.bounds())},
              {"T", seq.length()},
              {"prices", std::move(prices)}};
}

json to_json(const RunOutcome& outcome) {
  json j{{"decision", outcome.accepted() ? "accepted" : "rejected_all"},
         {"returned", outcome.returned.values()},
         {"trace", outcome.trace}};
  if (outcome.accepted()) j["accepted_at"] = *outcome.accepted_at;
  return j;
}

json to_json(const ParetoFront& front) {
  json members = json::array();
  for (const auto& m : front.members) members.push_back(m.values());
  return json{{"members", std::move(members)},
              {"source_indices", front.source_indices}};
}

json to_json(const RatioReport& report) {
  return json{{"value", report.value},
              {"witness", report.witness.values()},
              {"algorithm_return", report.algorithm_return.values()}};
}

json to_json(const ZMethod& method) {
  switch (method.type) {
    case ZMethod::Type::ClosedForm:
      return json{{"type", "closed_form"}, {"theorem", method.theorem}};
    case ZMethod::Type::NumericGrid:
      return json{{"type", "numeric_grid"},
                  {"resolution", method.resolution},
                  {"tolerance", method.tolerance}};
    case ZMethod::Type::DiscreteEnumeration:
      return json{{"type", "discrete_enumeration"},
                  {"points", method.resolution}};
  }
  return json();
}

json to_json(const ZValue& z) {
  return json{{"value", z.value},
              {"witness", z.witness.values()},
              {"method", to_json(z.method)},
              {"auxiliary", z.auxiliary}};
}

json to_json(const AdversaryGame& game) {
  return json{{"bounds", to_json(game.bounds)},
              {"probe", game.probe.values()},
              {"continuation_on_accept",
               game.continuation_on_accept.values()}};
}

json to_json(const PlayResult& play) {
  json instance = json::array();
  for (const auto& p : play.realized.prices()) instance.push_back(p.values());
  return json{{"realized_instance", std::move(instance)},
              {"outcome", to_json(play.outcome)},
              {"report", to_json(play.report)}};
}

json to_json(const MinimaxResult& mm) {
  return json{{"value", mm.value},
              {"instance_space_size", mm.instance_space_size},
              {"policy_entries", mm.optimal_policy.size()}};
}

std::string csv_row(std::span<const double> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? "," : "") << format_real(values[i]);
  }
  return os.str();
}

}  // namespace motss
