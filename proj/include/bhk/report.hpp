#pragma once

// JSON form of equivalence reports and membership certificates. Polynomials
// are written as strings over the certificate's ring, so a report can be read
// back and its certificates replayed without recomputing anything.

#include <optional>

#include "json.hpp"

#include "bhk/pipeline.hpp"

namespace bhk {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const MembershipCertificate& cert);
/// Throws ParseError on malformed input.
MembershipCertificate certificate_from_json(const Json& j);

Json cleave_to_json(const CleaveCertificate& cert);

/// seconds is written only when given, so reports without it are
/// reproducible byte for byte.
Json report_to_json(const EquivalenceReport& report,
                    std::optional<double> seconds = std::nullopt);

struct ReplaySummary {
  std::size_t replayed = 0;
  std::size_t failed = 0;
  [[nodiscard]] bool ok() const { return failed == 0; }
};

/// Re-validates every certificate stored in a report.
ReplaySummary replay_report(const Json& report);

} // namespace bhk
