#include "doctest.h"

#include "cif/harness.hpp"
#include "cif/render.hpp"

using namespace cif;

namespace {
std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [key, value] : j.items()) out.push_back(key);
  return out;
}
}  // namespace

TEST_SUITE("render") {
  TEST_CASE("formats") {
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("json") == Format::Json);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
  }

  TEST_CASE("axiom report json") {
    const AxiomReport r = check(parse_rule("sigma:1,3,2", Society(3)), Axiom::Symmetry);
    const Json j = to_json(r);
    CHECK(keys(j) == std::vector<std::string>{"axiom", "verdict", "satisfied", "violations",
                                              "witnesses"});
    CHECK(j["axiom"] == "SYM");
    CHECK(j["verdict"] == "fails");
    const Json& w = j["witnesses"][0];
    CHECK(keys(w) == std::vector<std::string>{"clause", "profile", "agents", "detail"});
    for (const auto& a : w["agents"]) CHECK(a.get<int>() >= 1);
  }

  TEST_CASE("witness text") {
    const Witness w{"add", {parse_profile("{1};{}"), parse_profile("{1};{1}")}, {1, 0}, "why"};
    CHECK(render_text(w) == "[add] {1};{} vs {1};{1}: why");
    const Json j = to_json(w);
    CHECK(j["compared_with"] == "{1};{1}");
    CHECK(j["agents"] == Json::array({2, 1}));
  }

  TEST_CASE("search result json") {
    const std::vector<Axiom> axioms{Axiom::Symmetry, Axiom::Decisiveness};
    const SearchResult r =
        search_decomposed(Society(3), axioms, prefilter_by_name("none", 3));
    const Json j = to_json(r);
    CHECK(keys(j) == std::vector<std::string>{"axioms", "class", "n", "prefilter", "examined",
                                              "pruned", "surviving", "pruned_by", "complete",
                                              "truncated", "survivors"});
    CHECK(j["survivors"][0]["catalog_name"] == "strong-liberal");
    CHECK(j["pruned_by"][0]["axiom"] == "D");
    CHECK(render_text(r).find("strong-liberal") != std::string::npos);
  }

  TEST_CASE("claim json omits timings unless asked") {
    const ClaimResult c = verify_claim("EX2", 2);
    CHECK_FALSE(to_json(c).contains("seconds"));
    CHECK(to_json(c, true).contains("seconds"));
    CHECK(render_text(c).rfind("EX2", 0) == 0);
  }

  TEST_CASE("document layout") {
    Document d;
    d.command = "eval";
    const std::string text = render_json(d);
    const Json j = Json::parse(text);
    CHECK(keys(j) == std::vector<std::string>{"command", "parameters", "results", "summary"});
    CHECK(text.back() == '\n');
  }
}
