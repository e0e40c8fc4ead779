// cif: evaluate, check, search and verify collective identity functions.
//
// Exit status: 0 success, 1 an axiom fails or a claim is refuted, 2 usage.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cif/axioms.hpp"
#include "cif/core.hpp"
#include "cif/harness.hpp"
#include "cif/render.hpp"
#include "cif/rules.hpp"
#include "cif/search.hpp"

namespace {

constexpr int kUsage = 2;

struct Common {
  std::string format = "text";
};

struct EvalArgs {
  std::string rule;
  std::string profile;
};

struct CheckArgs {
  std::string rule;
  std::string axioms;
  int n = 3;
  std::size_t max_witnesses = 5;
  bool allow_large = false;
};

struct SearchArgs {
  std::string axioms;
  std::optional<int> n;
  std::string rule_class = "decomposed";
  std::string prefilter = "none";
  unsigned threads = 1;
  std::string checkpoint;
  std::size_t max_survivors = 10000;
  std::optional<std::uint32_t> chunk_limit;
};

struct VerifyArgs {
  int n_max = 3;
  std::string claim;
  std::optional<int> n;
  bool strict = false;
  unsigned threads = 1;
  bool timings = false;
};

void emit(cif::Format format, const cif::Document& doc, const std::string& text) {
  std::cout << (format == cif::Format::Json ? cif::render_json(doc) : text);
}

int run_eval(const EvalArgs& args, cif::Format format) {
  const cif::Profile profile = cif::parse_profile(args.profile);
  const cif::Rule rule = cif::parse_rule(args.rule, profile.society());
  const cif::AgentSet out = cif::evaluate(rule, profile);
  const std::string bits = cif::format_bits(out, profile.society());
  cif::Document doc;
  doc.command = "eval";
  doc.parameters = {{"rule", rule.name()}, {"profile", cif::format_profile(profile)}};
  doc.results.push_back({{"rule", rule.name()},
                         {"profile", cif::format_profile(profile)},
                         {"output", cif::format_set(out)},
                         {"bits", bits}});
  doc.summary = {{"n", profile.society().size()}};
  emit(format, doc, cif::format_set(out) + " " + bits + "\n");
  return 0;
}

int run_check(const CheckArgs& args, cif::Format format) {
  const std::vector<cif::Axiom> axioms = cif::parse_axiom_list(args.axioms);
  const cif::Society society(args.n);
  society.require_exhaustive(args.allow_large);
  const cif::Rule rule = cif::parse_rule(args.rule, society);
  const cif::RuleTable table(rule, args.allow_large);
  cif::CheckOptions opts;
  opts.max_witnesses = args.max_witnesses;
  opts.allow_large = args.allow_large;

  cif::Document doc;
  doc.command = "check";
  cif::Json ids = cif::Json::array();
  for (cif::Axiom a : axioms) ids.push_back(std::string(cif::axiom_id(a)));
  doc.parameters = {{"rule", rule.name()},
                    {"n", args.n},
                    {"axioms", ids},
                    {"max_witnesses", args.max_witnesses}};
  std::string text = "rule " + rule.name() + ", n=" + std::to_string(args.n) + "\n";
  bool all = true;
  for (cif::Axiom a : axioms) {
    const cif::AxiomReport report = cif::check(table, a, opts);
    all = all && report.satisfied;
    doc.results.push_back(cif::to_json(report));
    text += cif::render_text(report);
  }
  doc.summary = {{"all_hold", all}};
  text += all ? "all hold\n" : "some axioms fail\n";
  emit(format, doc, text);
  return all ? 0 : 1;
}

int run_search(const SearchArgs& args, cif::Format format) {
  const std::vector<cif::Axiom> axioms = cif::parse_axiom_list(args.axioms);
  cif::SearchOptions opts;
  opts.threads = args.threads;
  opts.max_survivors = args.max_survivors;
  opts.checkpoint = args.checkpoint;
  opts.chunk_limit = args.chunk_limit;

  cif::SearchResult result;
  int n = 0;
  if (args.rule_class == "full") {
    n = args.n.value_or(2);
    if (n != 2) throw cif::Error("the full class exists only at n = 2");
    if (args.prefilter != "none") throw cif::Error("the full class takes no prefilter");
    result = cif::full_space_scan_n2(axioms, opts);
  } else if (args.rule_class == "decomposed") {
    n = args.n.value_or(3);
    if (!args.checkpoint.empty() || args.chunk_limit) {
      throw cif::Error("checkpoints apply to the full class only");
    }
    const cif::Society society(n);
    result = cif::search_decomposed(society, axioms, cif::prefilter_by_name(args.prefilter, n),
                                    opts);
  } else {
    throw cif::Error("unknown class \"" + args.rule_class + "\" (expected decomposed or full)");
  }

  cif::Document doc;
  doc.command = "search";
  cif::Json ids = cif::Json::array();
  for (cif::Axiom a : result.axioms) ids.push_back(std::string(cif::axiom_id(a)));
  doc.parameters = {{"axioms", ids},
                    {"n", n},
                    {"class", args.rule_class},
                    {"prefilter", args.prefilter},
                    {"max_survivors", args.max_survivors}};
  doc.results.push_back(cif::to_json(result));
  doc.summary = {{"surviving", result.surviving}, {"complete", result.complete}};
  emit(format, doc, cif::render_text(result));
  return 0;
}

int run_verify(const VerifyArgs& args, cif::Format format) {
  cif::HarnessOptions opts;
  opts.threads = args.threads;
  cif::Harness harness(opts);
  cif::VerifyReport report;
  if (args.claim.empty()) {
    report = harness.verify_all(args.n_max);
  } else {
    const auto& inventory = cif::claim_inventory();
    const auto claim = std::find_if(inventory.begin(), inventory.end(),
                                    [&](const cif::Claim& c) { return c.id == args.claim; });
    if (claim == inventory.end()) throw cif::Error("unknown claim " + args.claim);
    report.n_max = args.n.value_or(args.n_max);
    for (int n : claim->feasible_n) {
      if (args.n ? n != *args.n : n > args.n_max) continue;
      report.results.push_back(harness.verify(args.claim, n));
    }
    if (report.results.empty()) {
      throw cif::Error("claim " + args.claim + " has no feasible n in the requested range");
    }
    report.summary = cif::summarize(report.results);
  }
  const bool passed = report.passed(args.strict);

  cif::Document doc;
  doc.command = "verify-paper";
  doc.parameters = {{"n_max", report.n_max}, {"strict", args.strict}};
  if (!args.claim.empty()) doc.parameters["claim"] = args.claim;
  for (const cif::ClaimResult& r : report.results) doc.results.push_back(cif::to_json(r, args.timings));
  doc.summary = {{"confirmed", report.summary.confirmed},
                 {"confirmed_scoped", report.summary.scoped},
                 {"refuted", report.summary.refuted},
                 {"refuted_assertions", report.summary.refuted_assertions},
                 {"passed", passed}};
  emit(format, doc, cif::render_text(report, args.strict, args.timings));
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective identity functions: evaluation, axiom checks, rule search"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a rule on one profile");
  eval_cmd->add_option("--rule", eval.rule, "Rule spec, e.g. strong-liberal")->required();
  eval_cmd->add_option("--profile", eval.profile, "Profile, e.g. \"{1};{2}\"")->required();

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "Check axioms on a rule by exhaustive sweep");
  check_cmd->add_option("--rule", chk.rule, "Rule spec")->required();
  check_cmd->add_option("--axioms", chk.axioms, "Comma-separated axioms, e.g. mon,c,sym")
      ->required();
  check_cmd->add_option("--n", chk.n, "Number of agents")
      ->check(CLI::Range(1, cif::kExhaustiveMax))
      ->capture_default_str();
  check_cmd->add_option("--max-witnesses", chk.max_witnesses, "Witnesses kept per axiom")
      ->capture_default_str();
  check_cmd->add_flag("--allow-large", chk.allow_large, "Permit n = 5 sweeps");

  SearchArgs srch;
  auto* search_cmd = app.add_subcommand("search", "Enumerate rules satisfying axioms");
  search_cmd->add_option("--axioms", srch.axioms, "Comma-separated axioms")->required();
  search_cmd->add_option("--n", srch.n, "Number of agents (default 3; 2 for --class full)")
      ->check(CLI::Range(1, 4));
  search_cmd->add_option("--class", srch.rule_class, "decomposed or full")
      ->check(CLI::IsMember({"decomposed", "full"}))
      ->capture_default_str();
  search_cmd->add_option("--prefilter", srch.prefilter,
                         "none, monotone, monotone-boundary or projection")
      ->check(CLI::IsMember({"none", "monotone", "monotone-boundary", "projection"}))
      ->capture_default_str();
  search_cmd->add_option("--threads", srch.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  search_cmd->add_option("--checkpoint", srch.checkpoint, "Resumable progress file (full class)");
  search_cmd->add_option("--max-survivors", srch.max_survivors, "Survivors listed")
      ->capture_default_str();
  search_cmd->add_option("--chunk-limit", srch.chunk_limit,
                         "Stop after this many chunks (full class)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the claim inventory");
  verify_cmd->add_option("--n-max", ver.n_max, "Largest n checked")
      ->check(CLI::Range(1, cif::kExhaustiveDefault))
      ->capture_default_str();
  verify_cmd->add_option("--claim", ver.claim, "Run one claim only, e.g. T1");
  verify_cmd->add_option("--n", ver.n, "With --claim: this n only");
  verify_cmd->add_flag("--strict", ver.strict, "Adjudicated refutations also fail the run");
  verify_cmd->add_option("--threads", ver.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  verify_cmd->add_flag("--timings", ver.timings, "Include per-claim runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const cif::Format format = cif::parse_format(common.format);
  try {
    if (*eval_cmd) return run_eval(eval, format);
    if (*check_cmd) return run_check(chk, format);
    if (*search_cmd) return run_search(srch, format);
    return run_verify(ver, format);
  } catch (const cif::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
