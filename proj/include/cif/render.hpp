#pragma once

// Text and JSON rendering of reports. JSON keys come out in a fixed order
// and carry no timing data unless asked, so equal runs give equal bytes.

#include <string>
#include <string_view>

#include "json.hpp"

#include "cif/axioms.hpp"
#include "cif/harness.hpp"
#include "cif/search.hpp"

namespace cif {

enum class Format { Text, Json };
/// "text" or "json".
Format parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

Json to_json(const Witness& witness);
Json to_json(const AxiomReport& report);
Json to_json(const SearchResult& result);
Json to_json(const ClaimResult& result, bool timings = false);

/// Top-level envelope: {command, parameters, results, summary}.
struct Document {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::array();
  Json summary = Json::object();
};
std::string render_json(const Document& document);

std::string render_text(const Witness& witness);
std::string render_text(const AxiomReport& report, std::string_view rule_name = {});
std::string render_text(const SearchResult& result);
std::string render_text(const ClaimResult& result, bool timings = false);
std::string render_text(const VerifyReport& report, bool strict, bool timings = false);

}  // namespace cif
