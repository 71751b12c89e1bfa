#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motss/adversary.hpp"
#include "motss/algorithms.hpp"
#include "motss/analysis.hpp"
#include "motss/bounds.hpp"
#include "motss/errors.hpp"
#include "motss/instance_io.hpp"
#include "motss/pareto.hpp"
#include "motss/random_instances.hpp"
#include "motss/scalarize.hpp"

namespace py = pybind11;
using namespace motss;

namespace {

std::vector<std::vector<double>> price_lists(
    const std::vector<PriceVector>& prices) {
  std::vector<std::vector<double>> out;
  out.reserve(prices.size());
  for (const auto& p : prices) out.push_back(p.values());
  return out;
}

Policy wrap_policy(const py::function& fn) {
  return [fn](std::span<const PriceVector> history, const PriceVector& price) {
    py::gil_scoped_acquire gil;
    return fn(price_lists({history.begin(), history.end()}), price.values())
        .cast<bool>();
  };
}

}  // namespace

PYBIND11_MODULE(_motss, m) {
  m.doc() = "online algorithms for the multi-objective time series search "
            "problem: balanced price policies, Pareto fronts, optimal "
            "competitive ratios and adversarial verification";

  py::register_exception<Error>(m, "MotssError");

  py::enum_<IntervalKind>(m, "IntervalKind")
      .value("Real", IntervalKind::Real)
      .value("FiniteGrid", IntervalKind::FiniteGrid);

  py::class_<Bounds>(m, "Bounds")
      .def_static("real", &Bounds::real, py::arg("m"), py::arg("M"))
      .def_static("finite_grid", &Bounds::finite_grid, py::arg("points"))
      .def_static("geometric_grid", &Bounds::geometric_grid, py::arg("m"),
                  py::arg("M"), py::arg("counts"))
      .def_property_readonly("k", &Bounds::k)
      .def_property_readonly("m", &Bounds::min_prices)
      .def_property_readonly("M", &Bounds::max_prices)
      .def_property_readonly("phi", &Bounds::fluctuations)
      .def_property_readonly("interval_kind", &Bounds::interval_kind)
      .def("grid", &Bounds::grid, py::arg("objective"))
      .def("is_canonical", &Bounds::is_canonical)
      .def("__repr__", [](const Bounds& b) {
        return "Bounds(k=" + std::to_string(b.k()) + ")";
      });

  m.def("validate_bounds", &validate_bounds, py::arg("m"), py::arg("M"));

  py::class_<CanonicalOrdering>(m, "CanonicalOrdering")
      .def_readonly("permutation", &CanonicalOrdering::permutation)
      .def_readonly("applied", &CanonicalOrdering::applied)
      .def("is_identity", &CanonicalOrdering::is_identity)
      .def("apply",
           [](const CanonicalOrdering& o, const std::vector<double>& v) {
             return o.apply(v);
           })
      .def("inverse",
           [](const CanonicalOrdering& o, const std::vector<double>& v) {
             return o.inverse(v);
           });

  m.def("canonicalize", [](const Bounds& b) { return canonicalize(b); });

  py::class_<Scalarization>(m, "Scalarization")
      .def_static("worst_component", &Scalarization::worst_component,
                  py::arg("k"))
      .def_static("arithmetic_mean", &Scalarization::arithmetic_mean,
                  py::arg("k"))
      .def_static("geometric_mean", &Scalarization::geometric_mean,
                  py::arg("k"))
      .def_static("best_component", &Scalarization::best_component,
                  py::arg("k"))
      .def_static("plateau_max", &Scalarization::plateau_max, py::arg("c"),
                  py::arg("bounds"))
      .def_static("identity", &Scalarization::identity)
      .def_static(
          "custom",
          [](int k, const py::function& fn, bool continuous,
             const std::string& name) {
            return Scalarization::custom(
                k,
                [fn](std::span<const double> v) {
                  py::gil_scoped_acquire gil;
                  return fn(std::vector<double>(v.begin(), v.end()))
                      .cast<double>();
                },
                continuous, name);
          },
          py::arg("k"), py::arg("fn"), py::arg("continuous") = false,
          py::arg("name") = "custom")
      .def_property_readonly("arity", &Scalarization::arity)
      .def_property_readonly("continuous", &Scalarization::continuous)
      .def_property_readonly("name", &Scalarization::name)
      .def("__call__",
           [](const Scalarization& f, const std::vector<double>& v) {
             return f(v);
           });

  m.def("check_monotone", &check_monotone, py::arg("f"),
        py::arg("sample_count"), py::arg("seed"));

  py::class_<InputSequence>(m, "InputSequence")
      .def(py::init<const Bounds&, std::vector<std::vector<double>>>(),
           py::arg("bounds"), py::arg("prices"))
      .def_property_readonly("bounds", &InputSequence::bounds,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("T", &InputSequence::length)
      .def_property_readonly(
          "prices",
          [](const InputSequence& s) { return price_lists(s.prices()); });

  py::class_<RunOutcome>(m, "RunOutcome")
      .def_property_readonly(
          "accepted_at",
          [](const RunOutcome& o) {
            return o.accepted_at ? py::cast(*o.accepted_at) : py::none();
          })
      .def_property_readonly("accepted", &RunOutcome::accepted)
      .def_property_readonly(
          "returned", [](const RunOutcome& o) { return o.returned.values(); })
      .def_readonly("trace", &RunOutcome::trace);

  m.def(
      "bpp_decide",
      [](const Scalarization& f, const Bounds& b,
         const std::vector<double>& p) {
        return bpp_decide(f, b, PriceVector(p, b));
      },
      py::arg("f"), py::arg("bounds"), py::arg("price"));
  m.def("run_bpp", &run_bpp, py::arg("f"), py::arg("sequence"));
  m.def("rpp_decide", &rpp_decide, py::arg("bounds"), py::arg("price"));
  m.def(
      "run_policy",
      [](const py::function& policy, const InputSequence& seq) {
        return run_generic(wrap_policy(policy), seq);
      },
      py::arg("policy"), py::arg("sequence"));

  py::class_<ParetoFront>(m, "ParetoFront")
      .def_property_readonly(
          "members",
          [](const ParetoFront& f) { return price_lists(f.members); })
      .def_readonly("source_indices", &ParetoFront::source_indices)
      .def("__len__", &ParetoFront::size);

  m.def("pareto_maximal", &pareto_maximal, py::arg("sequence"));

  py::class_<RatioReport>(m, "RatioReport")
      .def_readonly("value", &RatioReport::value)
      .def_property_readonly(
          "witness", [](const RatioReport& r) { return r.witness.values(); })
      .def_property_readonly("algorithm_return", [](const RatioReport& r) {
        return r.algorithm_return.values();
      });

  m.def("competitive_ratio", &competitive_ratio, py::arg("f"),
        py::arg("outcome"), py::arg("front"));

  py::class_<ZValue>(m, "ZValue")
      .def_readonly("value", &ZValue::value)
      .def_property_readonly(
          "witness", [](const ZValue& z) { return z.witness.values(); })
      .def_property_readonly(
          "method", [](const ZValue& z) { return z.method.describe(); })
      .def_readonly("auxiliary", &ZValue::auxiliary);

  m.def("z_closed_form", &z_closed_form, py::arg("f"), py::arg("bounds"));
  m.def("z_numeric", &z_numeric, py::arg("f"), py::arg("bounds"),
        py::arg("grid_resolution"), py::arg("tol") = 1e-9);
  m.def("z_discrete", &z_discrete, py::arg("f"), py::arg("bounds"));
  m.def(
      "balance_residual",
      [](const Scalarization& f, const Bounds& b,
         const std::vector<double>& x) {
        return balance_residual(f, b, PriceVector(x, b));
      },
      py::arg("f"), py::arg("bounds"), py::arg("x"));
  m.def(
      "solve_fiber",
      [](const Scalarization& f, const Bounds& b,
         const std::vector<double>& tail, double tol) -> py::object {
        const auto x1 = solve_fiber(f, b, tail, tol);
        return x1 ? py::cast(*x1) : py::none();
      },
      py::arg("f"), py::arg("bounds"), py::arg("tail"), py::arg("tol") = 1e-9);

  py::class_<AdversaryGame>(m, "AdversaryGame")
      .def_property_readonly(
          "probe", [](const AdversaryGame& g) { return g.probe.values(); })
      .def_property_readonly("continuation_on_accept",
                             [](const AdversaryGame& g) {
                               return g.continuation_on_accept.values();
                             });

  py::class_<PlayResult>(m, "PlayResult")
      .def_property_readonly(
          "realized",
          [](const PlayResult& p) { return price_lists(p.realized.prices()); })
      .def_readonly("outcome", &PlayResult::outcome)
      .def_readonly("report", &PlayResult::report);

  py::class_<MinimaxResult>(m, "MinimaxResult")
      .def_readonly("value", &MinimaxResult::value)
      .def_readonly("instance_space_size",
                    &MinimaxResult::instance_space_size)
      .def_property_readonly("optimal_policy", [](const MinimaxResult& mm) {
        py::dict table;
        for (const auto& [history, accept] : mm.optimal_policy) {
          table[py::tuple(py::cast(history))] = accept;
        }
        return table;
      });

  m.def("build_adversary", &build_adversary, py::arg("f"), py::arg("bounds"),
        py::arg("z"), py::arg("tol") = 1e-9);
  m.def(
      "play_adversary",
      [](const AdversaryGame& game, const std::string& policy,
         const Scalarization& f) {
        if (policy == "bpp") {
          return play_adversary(game, bpp_policy(f, game.bounds), f);
        }
        if (policy == "rpp") {
          return play_adversary(game, rpp_policy(game.bounds), f);
        }
        if (policy == "accept-first") {
          return play_adversary(game, accept_first_policy(), f);
        }
        if (policy == "reject-all") {
          return play_adversary(game, reject_all_policy(), f);
        }
        throw ConfigError("unknown policy '" + policy + "'");
      },
      py::arg("game"), py::arg("policy"), py::arg("f"));
  m.def(
      "play_adversary_with",
      [](const AdversaryGame& game, const py::function& policy,
         const Scalarization& f) {
        return play_adversary(game, wrap_policy(policy), f);
      },
      py::arg("game"), py::arg("policy"), py::arg("f"));

  m.def("enumerate_instances", &enumerate_instances, py::arg("bounds"),
        py::arg("horizon"), py::arg("budget") = 1'000'000);
  m.def("minimax_optimal_cr", &minimax_optimal_cr, py::arg("f"),
        py::arg("bounds"), py::arg("horizon"), py::arg("budget") = 1'000'000);
  m.def(
      "bpp_game_worst_cr",
      [](const Scalarization& f, const Bounds& b, int horizon,
         long long budget) {
        return game_worst_case_cr(f, b, horizon, bpp_policy(f, b), budget);
      },
      py::arg("f"), py::arg("bounds"), py::arg("horizon"),
      py::arg("budget") = 1'000'000);
  m.def(
      "game_worst_case_cr",
      [](const Scalarization& f, const Bounds& b, int horizon,
         const py::function& policy, long long budget) {
        return game_worst_case_cr(f, b, horizon, wrap_policy(policy), budget);
      },
      py::arg("f"), py::arg("bounds"), py::arg("horizon"), py::arg("policy"),
      py::arg("budget") = 1'000'000);

  m.def("generate_random_instances", &generate_random_instances,
        py::arg("bounds"), py::arg("max_length"), py::arg("count"),
        py::arg("seed"));
  m.def("parse_instance_file", &parse_instance_file, py::arg("path"));
  m.def("write_instance_file", &write_instance_file, py::arg("sequence"),
        py::arg("path"));
}
