#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>

#include "svred/commands.hpp"

namespace py = pybind11;
using namespace svred;

namespace {

std::pair<int, std::string> wrap(CommandResult result) { return {result.exit_code, result.report.dump(2)}; }

template <typename F>
std::pair<int, std::string> run(F&& body) {
  CommandResult result;
  {
    py::gil_scoped_release release;
    result = guarded(std::forward<F>(body));
  }
  return wrap(std::move(result));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduction certificates for squarefree monomial ideals.";

  m.def(
      "family", [](const std::string& name, const std::string& params) {
        return run([&] { return cmd_family(name, params); });
      },
      py::arg("name"), py::arg("params") = "");

  m.def(
      "check",
      [](const std::string& input, const std::string& mode, std::optional<unsigned> m_max, const std::string& ideal,
         const std::string& partition) {
        return run([&] { return cmd_check(input, mode, m_max, Selection{ideal, partition}); });
      },
      py::arg("input"), py::arg("mode"), py::arg("m_max") = py::none(), py::arg("ideal") = "",
      py::arg("partition") = "");

  m.def(
      "reduce",
      [](const std::string& input, std::optional<std::string> mode, std::optional<unsigned> m_max,
         const std::string& ideal, const std::string& partition) {
        return run([&] { return cmd_reduce(input, mode, m_max, Selection{ideal, partition}); });
      },
      py::arg("input"), py::arg("mode") = py::none(), py::arg("m_max") = py::none(), py::arg("ideal") = "",
      py::arg("partition") = "");

  m.def(
      "verify",
      [](const std::string& input, std::optional<std::string> mode, const std::string& ideal,
         const std::string& partition) {
        return run([&] { return cmd_verify(input, mode, Selection{ideal, partition}); });
      },
      py::arg("input"), py::arg("mode") = py::none(), py::arg("ideal") = "", py::arg("partition") = "");

  m.def(
      "invariants",
      [](const std::string& input, std::size_t betti_cap, std::optional<unsigned> spread_n_max, bool certify,
         std::optional<std::string> mode, const std::string& ideal, const std::string& partition) {
        InvariantsRequest request{betti_cap, spread_n_max, certify, std::move(mode)};
        return run([&] { return cmd_invariants(input, request, Selection{ideal, partition}); });
      },
      py::arg("input"), py::arg("betti_cap") = kDefaultBettiCap, py::arg("spread_n_max") = 8u,
      py::arg("certify") = false, py::arg("mode") = py::none(), py::arg("ideal") = "", py::arg("partition") = "");

  m.def(
      "search",
      [](const std::string& input, std::size_t node_limit, double time_limit_seconds,
         std::optional<std::size_t> r_target, unsigned workers, bool certify, const std::string& ideal,
         const std::string& partition) {
        SearchBudget budget;
        budget.node_limit = node_limit;
        budget.time_limit_seconds = time_limit_seconds;
        budget.r_target = r_target;
        budget.workers = workers;
        return run([&] { return cmd_search(input, budget, certify, Selection{ideal, partition}); });
      },
      py::arg("input"), py::arg("node_limit") = SearchBudget{}.node_limit,
      py::arg("time_limit_seconds") = SearchBudget{}.time_limit_seconds, py::arg("r_target") = py::none(),
      py::arg("workers") = 1u, py::arg("certify") = false, py::arg("ideal") = "", py::arg("partition") = "");
}
