#include "lc/report_json.hpp"

#include <sstream>

namespace lc::report {

using nlohmann::json;

std::string format_number(double value) { return json(value).dump(); }

json to_json(const geo::FailureCase& fc) {
  json residuals = json::object();
  for (const auto& [name, res] : fc.residuals) residuals[name] = res;
  return json{
      {"triangle", {{"a", {fc.a.x, fc.a.y}}, {"b", {fc.b.x, fc.b.y}}, {"c", {fc.c.x, fc.c.y}}}},
      {"residuals", residuals},
  };
}

json to_json(const geo::VerificationReport& report) {
  json failures = json::array();
  for (const auto& fc : report.failures) failures.push_back(to_json(fc));
  json max_residuals = json::object();
  for (const auto& [name, res] : report.max_atom_residuals) max_residuals[name] = res;
  return json{
      {"group", report.group},
      {"hypothesis", report.hypothesis},
      {"conclusion", report.conclusion},
      {"samples_attempted", report.samples_attempted},
      {"samples_accepted", report.samples_accepted},
      {"premise_rejected", report.premise_rejected},
      {"near_threshold", report.near_threshold},
      {"max_conclusion_residual", report.max_conclusion_residual},
      {"max_atom_residuals", max_residuals},
      {"failure_count", report.failure_count},
      {"failures", failures},
      {"verdict", geo::to_string(report.verdict)},
  };
}

json to_json(const catalog::BatteryItem& item) {
  return json{
      {"name", item.name},
      {"tag", item.tag ? json(*item.tag) : json(nullptr)},
      {"expected", catalog::to_string(item.expected)},
      {"met", item.met},
      {"report", to_json(item.report)},
  };
}

json to_json(const RunManifest& manifest) {
  return json{
      {"subcommand", manifest.subcommand},
      {"target", manifest.target},
      {"seed", manifest.seed},
      {"samples", manifest.samples},
      {"tol_solve", manifest.tol_solve},
      {"tol_verify", manifest.tol_verify},
      {"threads", manifest.threads},
      {"version", manifest.version},
      {"duration_seconds", manifest.duration_seconds},
  };
}

json report_document(const RunManifest& manifest, const catalog::BatteryResult& result) {
  json items = json::array();
  for (const auto& item : result.items) items.push_back(to_json(item));
  return json{
      {"schema_version", 1},
      {"manifest", to_json(manifest)},
      {"group", result.group},
      {"items", items},
      {"overall", result.all_met ? "pass" : "fail"},
  };
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  const json& m = doc.at("manifest");
  out << "logic-composer " << m.at("subcommand").get<std::string>() << " "
      << m.at("target").get<std::string>() << "  seed=" << m.at("seed").dump()
      << " samples=" << m.at("samples").dump() << " tol_solve=" << m.at("tol_solve").dump()
      << " tol_verify=" << m.at("tol_verify").dump() << " threads=" << m.at("threads").dump()
      << " version=" << m.at("version").get<std::string>() << "\n";
  for (const json& item : doc.at("items")) {
    const json& r = item.at("report");
    out << "  [" << (item.at("met").get<bool>() ? "ok" : "FAIL") << "] "
        << item.at("name").get<std::string>();
    if (!item.at("tag").is_null()) out << " (" << item.at("tag").get<std::string>() << ")";
    out << ": " << r.at("hypothesis").get<std::string>() << " |- "
        << r.at("conclusion").get<std::string>() << "  expected "
        << item.at("expected").get<std::string>() << ", got "
        << r.at("verdict").get<std::string>() << "  accepted=" << r.at("samples_accepted").dump()
        << " rejected=" << r.at("premise_rejected").dump()
        << " near_threshold=" << r.at("near_threshold").dump()
        << " max_residual=" << r.at("max_conclusion_residual").dump() << "\n";
    for (const json& fc : r.at("failures")) {
      const json& tri = fc.at("triangle");
      out << "         witness: A=(" << tri.at("a")[0].dump() << ", " << tri.at("a")[1].dump()
          << ") B=(" << tri.at("b")[0].dump() << ", " << tri.at("b")[1].dump() << ") C=("
          << tri.at("c")[0].dump() << ", " << tri.at("c")[1].dump() << ") residuals={";
      bool first = true;
      for (const auto& [name, res] : fc.at("residuals").items()) {
        if (!first) out << ", ";
        first = false;
        out << name << "=" << res.dump();
      }
      out << "}\n";
    }
  }
  out << "overall: " << doc.at("overall").get<std::string>() << "  (duration "
      << m.at("duration_seconds").dump() << " s)\n";
  return out.str();
}

}  // namespace lc::report
