#include "svred/commands.hpp"

#include <cstdlib>

#include "svred/errors.hpp"

namespace svred {

namespace {

CertificateKind mode_kind(const std::string& mode) {
  if (mode == "sv") return CertificateKind::sv;
  if (mode == "b") return CertificateKind::b;
  if (mode == "ba") return CertificateKind::ba;
  if (mode == "oracle-only") return CertificateKind::oracle_only;
  throw PreconditionError("unknown mode '" + mode + "', expected sv, b or ba");
}

const char* mode_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::sv:
      return "sv";
    case CertificateKind::b:
      return "b";
    case CertificateKind::ba:
      return "ba";
    case CertificateKind::oracle_only:
      return "oracle-only";
  }
  return "sv";
}

const Partition& selected_partition(const CommandInput& input, const Selection& selection) {
  return input.session.partition(selection.partition).partition;
}

CertificateOptions options_for(const CommandInput& input, CertificateKind kind, std::optional<unsigned> m_max) {
  CertificateOptions options;
  options.m_max = m_max.value_or(input.kind == kind ? input.m_max : 4);
  if (kind == CertificateKind::ba) options.ba = input.ba;
  if (kind == CertificateKind::oracle_only) options.generators = input.generators;
  if (input.kind == kind) options.extra_checks = input.extra_checks;
  return options;
}

Certificate certificate_for(const CommandInput& input, const std::optional<std::string>& mode,
                            std::optional<unsigned> m_max, const Selection& selection) {
  const CertificateKind kind = mode ? mode_kind(*mode) : input.kind.value_or(CertificateKind::sv);
  const Partition& partition = selected_partition(input, selection);
  CertificateOptions options = options_for(input, kind, m_max);
  if (kind == CertificateKind::ba && !options.ba) options.ba = default_ba_data(partition);
  return build_certificate(kind, partition, options);
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(value, &end, 10);
  if (*end || v == 0) throw PreconditionError(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

double env_double(const char* name, double fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  double v = std::strtod(value, &end);
  if (*end || v <= 0) throw PreconditionError(std::string(name) + " must be a positive number");
  return v;
}

}  // namespace

Defaults defaults_from_environment() {
  Defaults d;
  d.betti_cap = env_size("SVRED_BETTI_CAP", d.betti_cap);
  d.search_nodes = env_size("SVRED_SEARCH_NODES", d.search_nodes);
  d.search_seconds = env_double("SVRED_SEARCH_SECONDS", d.search_seconds);
  return d;
}

CommandResult error_result(const std::exception& error) {
  std::string kind = "internal";
  int code = kExitUsage;
  if (const auto* e = dynamic_cast<const Error*>(&error)) {
    switch (e->kind()) {
      case ErrorKind::structural:
        kind = "structural";
        break;
      case ErrorKind::unsupported:
        kind = "unsupported";
        break;
      case ErrorKind::precondition:
        kind = "precondition";
        break;
      case ErrorKind::validation:
        kind = "validation";
        code = kExitFailed;
        break;
      case ErrorKind::resource:
        kind = "resource";
        break;
      case ErrorKind::parse:
        kind = "parse";
        break;
    }
  }
  Json err{{"kind", kind}, {"message", error.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&error)) {
    err["line"] = p->line();
    err["column"] = p->column();
  }
  if (const auto* p = dynamic_cast<const PreconditionError*>(&error); p && !p->witness().empty())
    err["witness"] = p->witness();
  return {code, Json{{"error", std::move(err)}}};
}

CommandResult cmd_family(const std::string& name, const std::string& params) {
  return guarded([&] { return CommandResult{kExitPass, bundle_to_json(make_family(name, params))}; });
}

CommandResult cmd_check(const std::string& text, const std::string& mode, std::optional<unsigned> m_max,
                        const Selection& selection) {
  return guarded([&] {
    const CommandInput input = parse_input(text);
    const Partition& partition = selected_partition(input, selection);
    const CertificateKind kind = mode_kind(mode);
    CheckResult result;
    switch (kind) {
      case CertificateKind::sv:
        result = check_sv(partition);
        break;
      case CertificateKind::b:
        result = check_b(partition, options_for(input, kind, m_max).m_max);
        break;
      case CertificateKind::ba:
        result = check_ba(partition, input.ba ? *input.ba : default_ba_data(partition));
        break;
      case CertificateKind::oracle_only:
        throw PreconditionError("check needs mode sv, b or ba");
    }
    Json report{{"command", "check"}, {"mode", mode_name(kind)}};
    report.update(check_to_json(result, partition));
    return CommandResult{result.passed ? kExitPass : kExitFailed, std::move(report)};
  });
}

CommandResult cmd_reduce(const std::string& text, const std::optional<std::string>& mode,
                         std::optional<unsigned> m_max, const Selection& selection) {
  return guarded([&] {
    const CommandInput input = parse_input(text);
    Certificate cert = certificate_for(input, mode, m_max, selection);
    const RingContext& ring = *cert.partition.ring();
    Json gens = Json::array();
    for (const auto& g : cert.generators) gens.push_back(g.to_string(ring.variables()));
    Json report{{"command", "reduce"},
                {"kind", to_string(cert.kind)},
                {"generators", std::move(gens)},
                {"certificate", certificate_to_json(cert)}};
    return CommandResult{kExitPass, std::move(report)};
  });
}

CommandResult cmd_verify(const std::string& text, const std::optional<std::string>& mode,
                         const Selection& selection) {
  return guarded([&] {
    const CommandInput input = parse_input(text);
    Certificate cert = input.certificate && !mode ? *input.certificate : certificate_for(input, mode, {}, selection);
    VerificationReport verification = verify_certificate(cert);
    if (verification.oracle_least_s) cert.oracle_result = verification.oracle_least_s;
    Json report{{"command", "verify"}, {"kind", to_string(cert.kind)}};
    report.update(verification_to_json(verification));
    report["certificate"] = certificate_to_json(cert);
    return CommandResult{verification.passed ? kExitPass : kExitFailed, std::move(report)};
  });
}

CommandResult cmd_invariants(const std::string& text, const InvariantsRequest& request, const Selection& selection) {
  return guarded([&] {
    const CommandInput input = parse_input(text);
    const Ideal& ideal = input.session.ideal(selection.ideal).ideal;
    std::optional<Certificate> cert;
    std::optional<VerificationReport> verification;
    if (request.certify) {
      cert = input.certificate ? *input.certificate : certificate_for(input, request.mode, {}, selection);
      verification = verify_certificate(*cert);
    }
    InvariantOptions options;
    options.betti_cap = request.betti_cap;
    options.spread_n_max = request.spread_n_max;
    InvariantReport report =
        ara_bounds(ideal, cert ? &*cert : nullptr, verification ? &*verification : nullptr, options);
    Json out{{"command", "invariants"}};
    out.update(invariants_to_json(report));
    out["betti"] = betti_to_json(multigraded_betti(ideal, request.betti_cap), *ideal.ring());
    if (verification) {
      out["verification"] = verification_to_json(*verification);
      if (verification->passed) {
        Ideal reduction(ideal.ring(), cert->generators);
        out["minimality"] = to_string(classify_minimality(reduction, ideal, report, *verification));
      } else {
        out["minimality"] = nullptr;
      }
    }
    return CommandResult{kExitPass, std::move(out)};
  });
}

CommandResult cmd_search(const std::string& text, const SearchBudget& budget, bool certify,
                         const Selection& selection) {
  return guarded([&] {
    const CommandInput input = parse_input(text);
    const Ideal& ideal = input.session.ideal(selection.ideal).ideal;
    Json out{{"command", "search"}};
    if (!certify) {
      SearchResult result = search_sv_partition(ideal, budget);
      out["r_target"] = budget.r_target ? Json(*budget.r_target) : Json(nullptr);
      out.update(search_to_json(result));
      return CommandResult{result.partition ? kExitPass : kExitFailed, std::move(out)};
    }
    EqualityResult result = certify_equalities(ideal, budget);
    out["r_target"] = result.pd - 1;
    out["pd"] = result.pd;
    out.update(search_to_json(result.search));
    out["report"] = result.report ? invariants_to_json(*result.report) : Json(nullptr);
    out["certificate"] = result.certificate ? certificate_to_json(*result.certificate) : Json(nullptr);
    return CommandResult{result.report ? kExitPass : kExitFailed, std::move(out)};
  });
}

}  // namespace svred
