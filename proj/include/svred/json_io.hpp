#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "svred/families.hpp"
#include "svred/invariants.hpp"
#include "svred/search.hpp"
#include "svred/session.hpp"
#include "svred/sv_engine.hpp"

namespace svred {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingContext& ring);
RingPtr ring_from_json(const Json& doc);

Json ba_to_json(const BaData& ba);
BaData ba_from_json(const Json& doc);

Json containment_to_json(const ContainmentCheck& check);
ContainmentCheck containment_from_json(const Json& doc);

Json check_to_json(const CheckResult& result, const Partition& partition);

/// Self-contained: carries the ring, the generators of I and the parts.
Json certificate_to_json(const Certificate& certificate);
Certificate certificate_from_json(const Json& doc);

Json verification_to_json(const VerificationReport& report);
Json invariants_to_json(const InvariantReport& report);
Json betti_to_json(const BettiTable& table, const RingContext& ring);
Json search_to_json(const SearchResult& result);

/// Family document: the session text plus the certificate recipe.
Json bundle_to_json(const FamilyBundle& bundle);

/// What a command reads: a session plus, for family documents, the
/// certificate recipe that came with it.
struct CommandInput {
  Session session;
  std::optional<CertificateKind> kind;
  unsigned m_max = 4;
  std::optional<BaData> ba;
  std::vector<Polynomial> generators;
  std::vector<ContainmentCheck> extra_checks;
  /// Set when the input was a certificate document.
  std::optional<Certificate> certificate;
};

/// Accepts grammar text, a family document, a report carrying a
/// certificate, or a bare certificate.
CommandInput parse_input(const std::string& text);

}  // namespace svred
