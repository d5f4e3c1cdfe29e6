#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lc/catalog.hpp"
#include "lc/geometry.hpp"

namespace lc::report {

/// Configuration echo embedded in every report document; re-running the tool
/// with these values reproduces the document byte-for-byte apart from
/// duration_seconds.
struct RunManifest {
  std::string subcommand;
  std::string target;  // group id or "capstone"
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double tol_solve = 0.0;
  double tol_verify = 0.0;
  unsigned threads = 1;
  std::string version;
  double duration_seconds = 0.0;
};

nlohmann::json to_json(const geo::FailureCase& fc);
nlohmann::json to_json(const geo::VerificationReport& report);
nlohmann::json to_json(const catalog::BatteryItem& item);
nlohmann::json to_json(const RunManifest& manifest);

/// The versioned report document for one verification run.
nlohmann::json report_document(const RunManifest& manifest, const catalog::BatteryResult& result);

/// Deterministic text rendering of a report document. The text view is
/// derived from the JSON, so a parsed document re-renders byte-identically.
std::string render_text(const nlohmann::json& doc);

/// Shortest round-trip decimal rendering of a double (the JSON encoding).
std::string format_number(double value);

}  // namespace lc::report
