#include "cif/render.hpp"

#include <iomanip>
#include <sstream>

namespace cif {

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  throw Error("unknown format \"" + std::string(text) + "\" (expected text or json)");
}

Json to_json(const Witness& witness) {
  Json j;
  j["clause"] = witness.clause;
  j["profile"] = witness.profiles.empty() ? "" : format_profile(witness.profiles.front());
  if (witness.profiles.size() > 1) j["compared_with"] = format_profile(witness.profiles[1]);
  Json agents = Json::array();
  for (int a : witness.agents) agents.push_back(a + 1);
  j["agents"] = agents;
  j["detail"] = witness.detail;
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j;
  j["axiom"] = std::string(axiom_id(report.axiom));
  j["verdict"] = std::string(verdict_name(report.verdict));
  j["satisfied"] = report.satisfied;
  j["violations"] = report.violations;
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) witnesses.push_back(to_json(w));
  j["witnesses"] = witnesses;
  return j;
}

Json to_json(const SearchResult& result) {
  Json j;
  Json axioms = Json::array();
  for (Axiom a : result.axioms) axioms.push_back(std::string(axiom_id(a)));
  j["axioms"] = axioms;
  j["class"] = std::string(rule_class_name(result.rule_class));
  j["n"] = result.n;
  j["prefilter"] = result.prefilter;
  j["examined"] = result.examined;
  j["pruned"] = result.pruned;
  j["surviving"] = result.surviving;
  Json pruned_by = Json::array();
  for (const StageCount& s : result.pruned_by) {
    pruned_by.push_back({{"axiom", std::string(axiom_id(s.axiom))}, {"rejected", s.rejected}});
  }
  j["pruned_by"] = pruned_by;
  j["complete"] = result.complete;
  j["truncated"] = result.truncated;
  Json survivors = Json::array();
  for (const Survivor& s : result.survivors) {
    Json e;
    e["encoding"] = s.encoding;
    if (s.catalog_name) e["catalog_name"] = *s.catalog_name;
    survivors.push_back(e);
  }
  j["survivors"] = survivors;
  return j;
}

Json to_json(const ClaimResult& result, bool timings) {
  Json j;
  j["id"] = result.id;
  j["n"] = result.n;
  j["kind"] = result.kind == ClaimKind::Assertion ? "assertion" : "adjudicated";
  j["expected"] = result.expected;
  j["observed"] = result.observed;
  j["status"] = std::string(claim_status_name(result.status));
  j["scope"] = result.scope;
  j["procedure"] = result.procedure;
  Json verdicts = Json::array();
  Json witnesses = Json::array();
  for (const RuleVerdict& v : result.verdicts) {
    Json record;
    record["rule"] = v.rule;
    const Json report = to_json(v.report);
    for (const auto& [key, value] : report.items()) record[key] = value;
    verdicts.push_back(record);
    for (const Witness& w : v.report.witnesses) {
      Json flat;
      flat["rule"] = v.rule;
      flat["axiom"] = std::string(axiom_id(v.report.axiom));
      const Json witness = to_json(w);
      for (const auto& [key, value] : witness.items()) flat[key] = value;
      witnesses.push_back(flat);
    }
  }
  j["verdicts"] = verdicts;
  j["witnesses"] = witnesses;
  j["notes"] = result.notes;
  if (timings) j["seconds"] = result.seconds;
  return j;
}

std::string render_json(const Document& document) {
  Json j;
  j["command"] = document.command;
  j["parameters"] = document.parameters;
  j["results"] = document.results;
  j["summary"] = document.summary;
  return j.dump(2) + "\n";
}

std::string render_text(const Witness& witness) {
  std::string out = "[" + witness.clause + "] ";
  for (std::size_t i = 0; i < witness.profiles.size(); ++i) {
    if (i > 0) out += " vs ";
    out += format_profile(witness.profiles[i]);
  }
  if (!witness.detail.empty()) out += ": " + witness.detail;
  return out;
}

std::string render_text(const AxiomReport& report, std::string_view rule_name) {
  std::ostringstream out;
  if (!rule_name.empty()) out << rule_name << ' ';
  out << axiom_id(report.axiom) << ' ' << verdict_name(report.verdict);
  if (report.verdict == Verdict::Vacuous) out << (report.satisfied ? " (satisfied)" : " (not satisfied)");
  if (report.violations > 0) {
    out << " (" << report.violations << (report.violations == 1 ? " violation)" : " violations)");
  }
  out << '\n';
  for (const Witness& w : report.witnesses) out << "  " << render_text(w) << '\n';
  return out.str();
}

std::string render_text(const SearchResult& result) {
  std::ostringstream out;
  out << "search " << rule_class_name(result.rule_class) << " n=" << result.n << " axioms=";
  for (std::size_t i = 0; i < result.axioms.size(); ++i) {
    out << (i > 0 ? "," : "") << axiom_id(result.axioms[i]);
  }
  out << " prefilter=" << result.prefilter << '\n';
  out << "examined " << result.examined << ", pruned " << result.pruned << ", surviving "
      << result.surviving << '\n';
  out << "pruned by:";
  for (const StageCount& s : result.pruned_by) out << ' ' << axiom_id(s.axiom) << '=' << s.rejected;
  out << '\n';
  if (!result.complete) out << "incomplete: chunk limit reached\n";
  out << "survivors";
  if (result.truncated) out << " (first " << result.survivors.size() << " shown)";
  out << ":\n";
  for (const Survivor& s : result.survivors) {
    out << "  " << s.encoding;
    if (s.catalog_name) out << "  " << *s.catalog_name;
    out << '\n';
  }
  return out.str();
}

std::string render_text(const ClaimResult& result, bool timings) {
  std::ostringstream out;
  out << std::left << std::setw(7) << result.id << "n=" << result.n << "  "
      << claim_status_name(result.status);
  if (result.kind == ClaimKind::Adjudicated) out << " [adjudicated]";
  if (timings) out << "  " << std::fixed << std::setprecision(3) << result.seconds << "s";
  out << '\n';
  const std::string pad(7, ' ');
  out << pad << "expected: " << result.expected << '\n';
  out << pad << "observed: " << result.observed << '\n';
  if (!result.scope.empty()) out << pad << "scope: " << result.scope << '\n';
  for (const std::string& note : result.notes) out << pad << "note: " << note << '\n';
  if (result.status == ClaimStatus::Refuted) {
    for (const RuleVerdict& v : result.verdicts) {
      for (const Witness& w : v.report.witnesses) {
        out << pad << "witness: " << v.rule << ' ' << axiom_id(v.report.axiom) << ' '
            << render_text(w) << '\n';
      }
    }
  }
  return out.str();
}

std::string render_text(const VerifyReport& report, bool strict, bool timings) {
  std::ostringstream out;
  for (const ClaimResult& r : report.results) out << render_text(r, timings);
  const VerifySummary& s = report.summary;
  out << "summary: " << s.confirmed << " confirmed, " << s.scoped << " confirmed (scoped), "
      << s.refuted << " refuted (" << s.refuted_assertions << " assertions); "
      << (report.passed(strict) ? "pass" : "fail") << (strict ? " (strict)" : "") << '\n';
  return out.str();
}

}  // namespace cif
