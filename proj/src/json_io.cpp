#include "svred/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "svred/errors.hpp"

namespace svred {

namespace {

Json polys_to_json(const std::vector<Polynomial>& polys, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string(ring.variables()));
  return out;
}

std::vector<Polynomial> polys_from_json(const Json& doc, const RingContext& ring) {
  std::vector<Polynomial> out;
  for (const auto& item : doc) out.push_back(parse_polynomial(item.get<std::string>(), ring));
  return out;
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  Rational q(value.get<std::string>());
  q.canonicalize();
  return q;
}

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name))
    throw ValidationError(std::string("document is missing field '") + name + "'");
  return doc.at(name);
}

}  // namespace

Json ring_to_json(const RingContext& ring) {
  return Json{{"vars", ring.variables()},
              {"relations", polys_to_json(ring.relations(), ring)},
              {"local", ring.origin_local()}};
}

RingPtr ring_from_json(const Json& doc) {
  auto vars = field(doc, "vars").get<std::vector<std::string>>();
  auto scratch = RingContext::make(vars);
  std::vector<Polynomial> relations;
  if (doc.contains("relations")) relations = polys_from_json(doc.at("relations"), *scratch);
  return RingContext::make(std::move(vars), std::move(relations), doc.value("local", false));
}

Json ba_to_json(const BaData& ba) {
  Json matrices = Json::array();
  for (const auto& m : ba.matrices) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(rational_to_string(v));
      rows.push_back(std::move(r));
    }
    matrices.push_back(std::move(rows));
  }
  return Json{{"n", ba.n}, {"matrices", std::move(matrices)}};
}

BaData ba_from_json(const Json& doc) {
  BaData ba;
  ba.n = field(doc, "n").get<std::vector<unsigned>>();
  for (const auto& m : field(doc, "matrices")) {
    linalg::DenseMatrix matrix;
    for (const auto& row : m) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      matrix.push_back(std::move(r));
    }
    ba.matrices.push_back(std::move(matrix));
  }
  return ba;
}

Json containment_to_json(const ContainmentCheck& check) {
  return Json{{"through_level", check.through_level},
              {"power", check.power},
              {"generators", check.generator_indices},
              {"ideal_power", check.ideal_power}};
}

ContainmentCheck containment_from_json(const Json& doc) {
  return ContainmentCheck{field(doc, "through_level").get<std::size_t>(), field(doc, "power").get<unsigned>(),
                          field(doc, "generators").get<std::vector<std::size_t>>(),
                          field(doc, "ideal_power").get<unsigned>()};
}

namespace {

Json witness_to_json(const Witness& w, const Partition& partition) {
  const RingContext& ring = *partition.ring();
  Json elements_text = Json::array();
  for (std::size_t i : w.elements) elements_text.push_back(partition.part(w.level).at(i).to_string(ring.variables()));
  Json target = nullptr;
  if (w.target_level && w.target_index) target = Json::array({*w.target_level, *w.target_index});
  return Json{{"level", w.level},
              {"elements", w.elements},
              {"elements_text", std::move(elements_text)},
              {"target", std::move(target)},
              {"b", w.cofactor ? Json(w.cofactor->to_string(ring.variables())) : Json(nullptr)},
              {"exponent", w.exponent},
              {"via_oracle", w.via_oracle}};
}

Witness witness_from_json(const Json& doc, const RingContext& ring) {
  Witness w;
  w.level = field(doc, "level").get<std::size_t>();
  w.elements = field(doc, "elements").get<std::vector<std::size_t>>();
  const Json& target = field(doc, "target");
  if (!target.is_null()) {
    w.target_level = target.at(0).get<std::size_t>();
    w.target_index = target.at(1).get<std::size_t>();
  }
  const Json& b = field(doc, "b");
  if (!b.is_null()) w.cofactor = parse_polynomial(b.get<std::string>(), ring);
  w.exponent = doc.value("exponent", 1u);
  w.via_oracle = doc.value("via_oracle", false);
  return w;
}

Json parts_to_json(const Partition& partition) {
  Json parts = Json::array();
  for (const auto& part : partition.parts()) parts.push_back(polys_to_json(part, *partition.ring()));
  return parts;
}

}  // namespace

Json check_to_json(const CheckResult& result, const Partition& partition) {
  Json witnesses = Json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(witness_to_json(w, partition));
  Json failure = nullptr;
  if (result.failure) {
    Json elements = Json::array();
    for (std::size_t i : result.failure->elements)
      elements.push_back(partition.part(result.failure->level).at(i).to_string(partition.ring()->variables()));
    failure = Json{{"level", result.failure->level},
                   {"elements", result.failure->elements},
                   {"elements_text", std::move(elements)},
                   {"reason", result.failure->reason}};
  }
  return Json{{"passed", result.passed},
              {"witnesses", std::move(witnesses)},
              {"m_table", result.m_table},
              {"failure", std::move(failure)}};
}

Json certificate_to_json(const Certificate& c) {
  const RingContext& ring = *c.partition.ring();
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(witness_to_json(w, c.partition));
  Json extra = Json::array();
  for (const auto& e : c.extra_checks) extra.push_back(containment_to_json(e));
  return Json{{"kind", to_string(c.kind)},
              {"ring", ring_to_json(ring)},
              {"ideal", polys_to_json(c.partition.ideal().generators(), ring)},
              {"parts", parts_to_json(c.partition)},
              {"witnesses", std::move(witnesses)},
              {"m_table", c.m_table},
              {"ba", c.ba ? ba_to_json(*c.ba) : Json(nullptr)},
              {"generators", polys_to_json(c.generators, ring)},
              {"certified_N", optional_to_json(c.certified_n)},
              {"oracle_result", optional_to_json(c.oracle_result)},
              {"extra_checks", std::move(extra)}};
}

Certificate certificate_from_json(const Json& doc) {
  try {
    RingPtr ring = ring_from_json(field(doc, "ring"));
    Ideal ideal(ring, polys_from_json(field(doc, "ideal"), *ring));
    std::vector<std::vector<Polynomial>> parts;
    for (const auto& part : field(doc, "parts")) parts.push_back(polys_from_json(part, *ring));
    WitnessTable witnesses;
    for (const auto& w : doc.value("witnesses", Json::array())) witnesses.push_back(witness_from_json(w, *ring));
    std::optional<BaData> ba;
    if (doc.contains("ba") && !doc.at("ba").is_null()) ba = ba_from_json(doc.at("ba"));
    std::vector<ContainmentCheck> extra;
    for (const auto& e : doc.value("extra_checks", Json::array())) extra.push_back(containment_from_json(e));
    std::optional<unsigned> n;
    if (doc.contains("certified_N") && !doc.at("certified_N").is_null()) n = doc.at("certified_N").get<unsigned>();
    std::optional<unsigned> oracle;
    if (doc.contains("oracle_result") && !doc.at("oracle_result").is_null())
      oracle = doc.at("oracle_result").get<unsigned>();
    return Certificate{certificate_kind_from_string(field(doc, "kind").get<std::string>()),
                       Partition(std::move(ideal), std::move(parts)),
                       std::move(witnesses),
                       std::move(ba),
                       doc.value("m_table", std::vector<unsigned>{}),
                       polys_from_json(field(doc, "generators"), *ring),
                       n,
                       oracle,
                       std::move(extra)};
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
}

Json verification_to_json(const VerificationReport& report) {
  Json stages = Json::array();
  for (const auto& s : report.stages)
    stages.push_back(Json{{"stage", s.stage}, {"passed", s.passed}, {"detail", s.detail}});
  Json extra = Json::array();
  for (bool b : report.extra_check_results) extra.push_back(b);
  const StageResult* failed = report.failed_stage();
  return Json{{"passed", report.passed},
              {"stages", std::move(stages)},
              {"failed_stage", failed ? Json(failed->stage) : Json(nullptr)},
              {"s_max", report.s_max},
              {"oracle_least_s", optional_to_json(report.oracle_least_s)},
              {"extra_checks", std::move(extra)},
              {"generator_count", report.generator_count}};
}

Json invariants_to_json(const InvariantReport& r) {
  Json estimate = nullptr;
  if (r.ell_estimate)
    estimate = Json{{"value", *r.ell_estimate}, {"stabilized", r.ell_estimate_stabilized}, {"certified", false}};
  return Json{{"height", r.height},       {"pd", r.pd},
              {"mu", r.mu},               {"ara_lower", r.ara_lower},
              {"ara_upper", r.ara_upper}, {"ell_lower", r.ell_lower},
              {"ell_estimate", estimate}, {"ell_certified", optional_to_json(r.ell_certified)}};
}

Json betti_to_json(const BettiTable& table, const RingContext& ring) {
  Json entries = Json::array();
  for (const auto& e : table.entries)
    entries.push_back(Json{{"index", e.index}, {"multidegree", e.multidegree.to_string(ring.variables())}, {"rank", e.rank}});
  return Json{{"totals", table.totals}, {"pd", table.pd}, {"entries", std::move(entries)}};
}

Json search_to_json(const SearchResult& result) {
  Json partition = nullptr;
  if (result.partition) partition = parts_to_json(*result.partition);
  Json estimate = nullptr;
  if (result.ell_estimate)
    estimate = Json{{"value", *result.ell_estimate}, {"stabilized", result.ell_estimate_stabilized}, {"certified", false}};
  return Json{{"found", result.partition.has_value()},
              {"partition", std::move(partition)},
              {"parts", result.partition ? Json(result.partition->levels()) : Json(nullptr)},
              {"exhaustive", result.exhaustive},
              {"node_limit_hit", result.node_limit_hit},
              {"time_limit_hit", result.time_limit_hit},
              {"nodes", result.nodes},
              {"ell_estimate", std::move(estimate)},
              {"reason", result.reason.empty() ? Json(nullptr) : Json(result.reason)}};
}

Json bundle_to_json(const FamilyBundle& bundle) {
  const RingContext& ring = *bundle.ring();
  std::vector<Polynomial> reduction;
  switch (bundle.kind) {
    case CertificateKind::oracle_only:
      reduction = bundle.generators;
      break;
    case CertificateKind::ba:
      reduction = ba_generators(bundle.partition, *bundle.ba);
      break;
    default:
      reduction = sv_generators(bundle.partition);
  }
  Json extra = Json::array();
  for (const auto& e : bundle.extra_checks) extra.push_back(containment_to_json(e));
  Json expected = nullptr;
  if (bundle.expected)
    expected = Json{{"pd", optional_to_json(bundle.expected->pd)},
                    {"ell", optional_to_json(bundle.expected->ell)},
                    {"reduction_generators", optional_to_json(bundle.expected->reduction_generators)}};
  return Json{{"family", bundle.name},
              {"params", bundle.params},
              {"session", print_session(make_session(bundle.partition))},
              {"kind", to_string(bundle.kind)},
              {"m_max", bundle.m_max},
              {"ba", bundle.ba ? ba_to_json(*bundle.ba) : Json(nullptr)},
              {"reduction_generators", polys_to_json(reduction, ring)},
              {"extra_checks", std::move(extra)},
              {"expected", std::move(expected)}};
}

CommandInput parse_input(const std::string& text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  CommandInput input;
  if (first == text.end() || *first != '{') {
    input.session = parse_session(text);
    return input;
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON input: ") + e.what());
  }
  if (doc.contains("certificate") && doc.at("certificate").is_object()) doc = doc.at("certificate");
  if (doc.contains("parts") && doc.contains("ring")) {
    Certificate cert = certificate_from_json(doc);
    input.session = make_session(cert.partition);
    input.kind = cert.kind;
    input.ba = cert.ba;
    input.generators = cert.generators;
    input.extra_checks = cert.extra_checks;
    input.certificate = std::move(cert);
    return input;
  }
  input.session = parse_session(field(doc, "session").get<std::string>());
  try {
    if (doc.contains("kind")) input.kind = certificate_kind_from_string(doc.at("kind").get<std::string>());
    input.m_max = doc.value("m_max", 4u);
    if (doc.contains("ba") && !doc.at("ba").is_null()) input.ba = ba_from_json(doc.at("ba"));
    if (input.kind == CertificateKind::oracle_only && doc.contains("reduction_generators"))
      input.generators = polys_from_json(doc.at("reduction_generators"), *input.session.ring().ring);
    for (const auto& e : doc.value("extra_checks", Json::array())) input.extra_checks.push_back(containment_from_json(e));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed family document: ") + e.what());
  }
  return input;
}

}  // namespace svred
