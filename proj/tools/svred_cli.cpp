#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "svred/commands.hpp"
#include "svred/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw svred::PreconditionError("cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

int emit(const svred::CommandResult& result) {
  std::cout << result.report.dump(2) << "\n";
  if (result.report.contains("error")) std::cerr << "svred: " << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions of ideals from partitioned generating sets"};
  app.require_subcommand(1);

  svred::Defaults defaults;
  try {
    defaults = svred::defaults_from_environment();
  } catch (const std::exception& e) {
    return emit(svred::error_result(e));
  }

  std::string input_path;
  svred::Selection selection;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "Session, family or certificate document (default: stdin)");
    cmd->add_option("--ideal", selection.ideal, "Ideal name (default: last declared)");
    cmd->add_option("--partition", selection.partition, "Partition name (default: last declared)");
  };

  std::string family_name, family_params;
  auto* family = app.add_subcommand("family", "Emit a family document");
  family->add_option("name", family_name, "dual-ci, dual-ci-sum, even-cycle, k5, binomial, hypersurface")->required();
  family->add_option("params", family_params, "Parameters, e.g. 2,2 or 2,2+3,2");

  std::string mode;
  std::optional<unsigned> m_max;
  auto* check = app.add_subcommand("check", "Check a partition condition");
  check->add_option("--mode", mode, "sv, b or ba")->required()->check(CLI::IsMember({"sv", "b", "ba"}));
  check->add_option("--m-max", m_max, "Largest pair exponent for mode b");
  add_input(check);

  std::optional<std::string> reduce_mode;
  auto* reduce = app.add_subcommand("reduce", "Build a reduction certificate");
  reduce->add_option("--mode", reduce_mode, "sv, b, ba or oracle-only (default: the document's kind)");
  reduce->add_option("--m-max", m_max, "Largest pair exponent for mode b");
  add_input(reduce);

  auto* verify = app.add_subcommand("verify", "Verify a certificate");
  verify->add_option("--mode", reduce_mode, "Certificate kind when building one");
  add_input(verify);

  svred::InvariantsRequest request;
  request.betti_cap = defaults.betti_cap;
  unsigned spread = 8;
  auto* invariants = app.add_subcommand("invariants", "Height, pd, ara and analytic spread bounds");
  invariants->add_option("--spread", spread, "Powers used by the analytic spread estimate (0 disables)");
  invariants->add_option("--betti-cap", request.betti_cap, "Largest generator count for the Taylor complex");
  invariants->add_flag("--certify", request.certify, "Build and verify a certificate to sharpen the bounds");
  invariants->add_option("--mode", request.mode, "Certificate kind for --certify");
  add_input(invariants);

  svred::SearchBudget budget;
  budget.node_limit = defaults.search_nodes;
  budget.time_limit_seconds = defaults.search_seconds;
  bool certify = false;
  auto* search = app.add_subcommand("search", "Search for an SV partition");
  search->add_option("--nodes", budget.node_limit, "Node limit per subtree")->check(CLI::PositiveNumber);
  search->add_option("--seconds", budget.time_limit_seconds, "Time limit")->check(CLI::PositiveNumber);
  search->add_option("--r-target", budget.r_target, "Largest r (parts minus one)");
  search->add_option("--workers", budget.workers, "Parallel subtrees")->check(CLI::PositiveNumber);
  search->add_flag("--certify", certify, "Search with pd parts and certify ell = ara = pd");
  add_input(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : svred::kExitUsage;
  }

  std::string text;
  if (!family->parsed()) {
    try {
      text = read_input(input_path);
    } catch (const std::exception& e) {
      return emit(svred::error_result(e));
    }
  }

  if (family->parsed()) return emit(svred::cmd_family(family_name, family_params));
  if (check->parsed()) return emit(svred::cmd_check(text, mode, m_max, selection));
  if (reduce->parsed()) return emit(svred::cmd_reduce(text, reduce_mode, m_max, selection));
  if (verify->parsed()) return emit(svred::cmd_verify(text, reduce_mode, selection));
  if (invariants->parsed()) {
    request.spread_n_max = spread == 0 ? std::nullopt : std::optional<unsigned>(spread);
    return emit(svred::cmd_invariants(text, request, selection));
  }
  return emit(svred::cmd_search(text, budget, certify, selection));
}
