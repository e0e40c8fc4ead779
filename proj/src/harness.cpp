#include "cif/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

namespace cif {

std::string_view claim_status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Confirmed:
      return "confirmed";
    case ClaimStatus::ConfirmedScoped:
      return "confirmed (scoped)";
    case ClaimStatus::Refuted:
      return "refuted (as implemented)";
  }
  return "?";
}

VerifySummary summarize(const std::vector<ClaimResult>& results) {
  VerifySummary s;
  for (const ClaimResult& r : results) {
    switch (r.status) {
      case ClaimStatus::Confirmed:
        ++s.confirmed;
        break;
      case ClaimStatus::ConfirmedScoped:
        ++s.scoped;
        break;
      case ClaimStatus::Refuted:
        ++s.refuted;
        if (r.kind == ClaimKind::Assertion) ++s.refuted_assertions;
        break;
    }
  }
  return s;
}

bool VerifyReport::passed(bool strict) const {
  for (const ClaimResult& r : results) {
    if (r.status != ClaimStatus::Refuted) continue;
    if (strict || r.kind == ClaimKind::Assertion) return false;
  }
  return true;
}

namespace {

using A = Axiom;

const std::string kIndependenceScope = "Independence class (decomposed rules) only";

std::vector<Claim> build_inventory() {
  const std::vector<int> searches{2, 3};
  const std::vector<int> direct{2, 3, 4};
  const auto assertion = ClaimKind::Assertion;
  const auto adjudicated = ClaimKind::Adjudicated;
  return {
      {"T1", "For |N| > 2 the only CIF satisfying SYM and D is the Strong Liberal CIF.",
       "D survivors are the n! permutation rules; SYM+D leaves only strong-liberal", assertion,
       {3, 4}},
      {"C1", "A CIF satisfying SYM and D also satisfies MON, C and I.",
       "every SYM+D survivor passes MON, C, I", assertion, searches},
      {"P1", "A CIF satisfying D also satisfies MON, C and I.",
       "every D survivor passes MON, C, I", assertion, searches},
      {"C2", "The only CIF satisfying SYM and MD is the Strong Liberal CIF.",
       "SYM+MD leaves only strong-liberal", assertion, {3}},
      {"P2",
       "The Strong Liberal CIF is not the only CIF satisfying MON, C, SYM, I and MSD.",
       "strong-liberal, unanimity, inclusive all pass MON, C, SYM, I, MSD and differ pairwise",
       assertion, direct},
      {"T2", "The Inclusive CIF is the only CIF satisfying MON, C, I and EL(i).",
       "unique survivor inclusive", assertion, searches},
      {"T3", "The Unanimity CIF is the only CIF satisfying MON, C, I and EL(ii).",
       "unique survivor unanimity", assertion, searches},
      {"C3", "A CIF satisfying MON, C, I and EL(i), or MON, C, I and EL(ii), satisfies SYM.",
       "every survivor of both searches passes SYM", assertion, searches},
      {"IMP-EL", "No CIF satisfies MON, C, I and both parts of EL.", "no survivors", assertion,
       searches},
      {"P3.1", "Threshold-half satisfies exactly C, I, EL(i) of MON, C, I, EL(i).",
       "fails exactly MON; differs from inclusive", adjudicated, direct},
      {"P3.2", "J = N satisfies exactly MON, I, EL(i) of MON, C, I, EL(i).",
       "fails exactly C; differs from inclusive", adjudicated, direct},
      {"P3.3",
       "Consensus expansion with inclusive fallback satisfies exactly MON, C, EL(i) of MON, C, "
       "I, EL(i).",
       "fails exactly I; differs from inclusive", adjudicated, direct},
      {"P3.4", "Strong Liberal satisfies exactly MON, C, I of MON, C, I, EL(i).",
       "fails exactly EL+; differs from inclusive", adjudicated, direct},
      {"P4.1", "First-voter satisfies exactly C, I, EL(ii) of MON, C, I, EL(ii).",
       "fails exactly MON; differs from unanimity", adjudicated, direct},
      {"P4.2",
       "Consensus expansion with unanimity collapse satisfies exactly MON, C, EL(ii) of MON, "
       "C, I, EL(ii).",
       "fails exactly I; differs from unanimity", adjudicated, direct},
      {"P4.3",
       "The C and EL(ii) examples are analogous to those for EL(i): J = {} and Strong Liberal.",
       "constant:{} fails exactly C; strong-liberal fails exactly EL-; both differ from "
       "unanimity",
       adjudicated, direct},
      {"EX1", "A constant CIF with S not in {{}, N} satisfies L and not D.",
       "every such constant passes L and fails D", assertion, direct},
      {"EX2", "For N = {1,2}, mutual decisiveness satisfies D and not L.",
       "cross-decisive passes D, fails L; J({1},{2}) = {}", assertion, {2}},
      {"EX3", "The swap CIF satisfies SYM but not MON, C, I or D.",
       "SYM holds; MON, C, I, D fail", adjudicated, direct},
      {"FN2", "For |N| = 2 a CIF other than Strong Liberal satisfies SYM and D.",
       "SYM+D survivors include strong-liberal and cross-decisive", assertion, {2}},
      {"FN4", "Unanimity is consent(n,1) and Inclusive is consent(1,n).",
       "both identities hold on every profile", assertion, direct},
  };
}

std::string join(const std::vector<std::string>& parts, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string axiom_list(std::span<const Axiom> axioms) {
  std::vector<std::string> ids;
  for (Axiom a : axioms) ids.emplace_back(axiom_id(a));
  return join(ids, ",");
}

std::string label(const Survivor& s) { return s.catalog_name.value_or(s.encoding); }

std::string describe(const SearchResult& r) {
  std::string out = std::to_string(r.surviving) + (r.surviving == 1 ? " survivor" : " survivors");
  if (r.survivors.empty()) return out;
  std::vector<std::string> names;
  for (const Survivor& s : r.survivors) names.push_back(label(s));
  return out + ": " + join(names);
}

std::string search_key(RuleClass rule_class, int n, std::span<const Axiom> axioms,
                       const std::string& prefilter) {
  return std::string(rule_class_name(rule_class)) + "|" + std::to_string(n) + "|" +
         axiom_list(stage_order(axioms)) + "|" + prefilter;
}

std::string trace_text(const Profile& profile) {
  const ConsensusTrace trace = consensus_iterate(profile);
  std::vector<std::string> stages;
  for (std::size_t t = 0; t < trace.stages.size(); ++t) {
    stages.push_back("J(C," + std::to_string(t) + ")=" + format_set(trace.stages[t]));
  }
  return join(stages);
}

// First profile in canonical order at which two rules disagree.
std::optional<std::uint64_t> first_difference(const Rule& a, const Rule& b) {
  const auto ta = tabulate(a);
  const auto tb = tabulate(b);
  for (std::uint64_t i = 0; i < ta.size(); ++i) {
    if (ta[i] != tb[i]) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Accumulates one ClaimResult.
class Run {
 public:
  Run(Harness& harness, const HarnessOptions& options, const Claim& claim, int n)
      : harness_(harness), options_(options), society_(n) {
    result.id = claim.id;
    result.n = n;
    result.kind = claim.kind;
    result.expected = claim.expected;
  }

  Society society() const { return society_; }
  Rule rule(const std::string& name) const { return parse_rule(name, society_); }

  const SearchResult& decomposed(const std::vector<Axiom>& axioms, const std::string& prefilter) {
    result.procedure.push_back("search_decomposed(n=" + std::to_string(society_.size()) +
                               ", axioms=[" + axiom_list(axioms) + "], prefilter=" + prefilter +
                               ")");
    return harness_.decomposed(society_.size(), axioms, prefilter);
  }

  const SearchResult& full(const std::vector<Axiom>& axioms) {
    result.procedure.push_back("full_space_scan_n2(axioms=[" + axiom_list(axioms) + "])");
    return harness_.full_scan(axioms);
  }

  const AxiomReport& check_rule(const Rule& rule, Axiom axiom) {
    result.procedure.push_back("check(rule=" + rule.name() + ", axiom=" +
                               std::string(axiom_id(axiom)) + ", n=" +
                               std::to_string(rule.society().size()) + ")");
    CheckOptions opts;
    opts.max_witnesses = options_.max_witnesses;
    result.verdicts.push_back({rule.name(), check(rule, axiom, opts)});
    return result.verdicts.back().report;
  }

  bool holds(const Rule& rule, Axiom axiom) { return check_rule(rule, axiom).satisfied; }

  AgentSet eval(const Rule& rule, std::string_view profile_text) {
    const Profile p = parse_profile(profile_text);
    const AgentSet out = evaluate(rule, p);
    result.procedure.push_back("evaluate(rule=" + rule.name() + ", profile=" +
                               format_profile(p) + ")");
    result.notes.push_back(rule.name() + "(" + format_profile(p) + ") = " + format_set(out));
    return out;
  }

  void note(std::string text) { result.notes.push_back(std::move(text)); }

  void finish(bool ok, std::string observed, std::string scope = {}) {
    result.observed = std::move(observed);
    result.scope = std::move(scope);
    if (!ok) {
      result.status = ClaimStatus::Refuted;
    } else {
      result.status = result.scope.empty() ? ClaimStatus::Confirmed : ClaimStatus::ConfirmedScoped;
    }
  }

  ClaimResult result;

 private:
  Harness& harness_;
  const HarnessOptions& options_;
  Society society_;
};

const SearchResult& search_for(Run& run, const std::vector<Axiom>& axioms, bool full,
                               const std::string& prefilter = "none") {
  return full ? run.full(axioms) : run.decomposed(axioms, prefilter);
}

bool only(const SearchResult& r, const std::string& name) {
  return r.surviving == 1 && r.survivors.size() == 1 && label(r.survivors.front()) == name;
}

// Every survivor passes each axiom; verdicts land in the run.
bool survivors_pass(Run& run, const SearchResult& r, const std::vector<Axiom>& axioms,
                    std::vector<std::string>& failures) {
  bool ok = !r.truncated;
  for (const Survivor& s : r.survivors) {
    const Rule rule = survivor_rule(r, s);
    for (Axiom a : axioms) {
      if (!run.holds(rule, a)) {
        ok = false;
        failures.push_back(label(s) + " fails " + std::string(axiom_id(a)));
      }
    }
  }
  return ok;
}

void claim_t1(Run& run) {
  const int n = run.society().size();
  const std::string prefilter = n >= 4 ? "projection" : "none";
  const SearchResult& d = run.decomposed({A::Decisiveness}, prefilter);
  const SearchResult& sd = run.decomposed({A::Symmetry, A::Decisiveness}, prefilter);

  std::set<std::vector<AgentSet>> sigmas;
  for (const auto& p : permutations(n)) {
    sigmas.insert(tabulate(Rule(rule::Sigma{p}, run.society())));
  }
  std::set<std::vector<AgentSet>> found;
  for (const Survivor& s : d.survivors) found.insert(tabulate(survivor_rule(d, s)));
  const bool permutations_ok = !d.truncated && d.surviving == sigmas.size() && found == sigmas;

  if (n == 3) {
    const Rule swap23 = run.rule("sigma:1,3,2");
    run.eval(swap23, "{3};{1,3};{1}");
    run.check_rule(swap23, A::Symmetry);
  }
  run.note("every D survivor is a permutation rule: " + std::string(permutations_ok ? "yes" : "no"));
  std::string scope = kIndependenceScope;
  if (n >= 4) scope += "; tables restricted to projections, which every D-rule uses";
  run.finish(permutations_ok && only(sd, "strong-liberal"),
             "D: " + std::to_string(d.surviving) + " survivors (" +
                 (permutations_ok ? "the permutation rules" : "not the permutation rules") +
                 "); SYM+D: " + describe(sd),
             scope);
}

void claim_implies_mon_c_i(Run& run, const std::vector<Axiom>& premise) {
  const bool full = run.society().size() == 2;
  const SearchResult& r = search_for(run, premise, full);
  std::vector<std::string> failures;
  const bool ok = survivors_pass(run, r, {A::Monotonicity, A::Consensus, A::Independence},
                                 failures) &&
                  r.surviving > 0;
  std::string observed = describe(r) + "; ";
  observed += failures.empty() ? "all pass MON, C, I" : join(failures);
  run.finish(ok, observed, full ? "" : kIndependenceScope);
}

void claim_c2(Run& run) {
  const SearchResult& r = run.decomposed({A::Symmetry, A::MinimalDecisiveness}, "none");
  run.finish(only(r, "strong-liberal"), "SYM+MD: " + describe(r), kIndependenceScope);
}

void claim_p2(Run& run) {
  const std::vector<std::string> names{"strong-liberal", "unanimity", "inclusive"};
  const std::vector<Axiom> axioms{A::Monotonicity, A::Consensus, A::Symmetry, A::Independence,
                                  A::MinimalSemiDecisiveness};
  std::vector<std::string> failures;
  for (const auto& name : names) {
    const Rule rule = run.rule(name);
    for (Axiom a : axioms) {
      if (!run.holds(rule, a)) failures.push_back(name + " fails " + std::string(axiom_id(a)));
    }
  }
  bool distinct = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const Rule a = run.rule(names[i]);
      const Rule b = run.rule(names[j]);
      const auto at = first_difference(a, b);
      if (!at) {
        distinct = false;
        continue;
      }
      const Profile p = profile_at(run.society(), *at);
      run.note(names[i] + " vs " + names[j] + " at " + format_profile(p) + ": " +
               format_set(evaluate(a, p)) + " vs " + format_set(evaluate(b, p)));
    }
  }
  std::string observed = failures.empty() ? "all pass MON, C, SYM, I, MSD" : join(failures);
  observed += distinct ? "; pairwise distinct" : "; not pairwise distinct";
  run.finish(failures.empty() && distinct, observed);
}

void claim_unique(Run& run, Axiom el, const std::string& expected_rule) {
  const std::vector<Axiom> axioms{A::Monotonicity, A::Consensus, el};
  const SearchResult& d = run.decomposed(axioms, "monotone-boundary");
  bool ok = only(d, expected_rule);
  std::string observed = "decomposed: " + describe(d);
  if (run.society().size() == 2) {
    const SearchResult& f = run.full({A::Monotonicity, A::Consensus, A::Independence, el});
    ok = ok && only(f, expected_rule);
    observed += "; full: " + describe(f);
  }
  run.finish(ok, observed);
}

void claim_c3(Run& run) {
  bool ok = true;
  std::vector<std::string> parts;
  for (Axiom el : {A::ExtremeLiberalPos, A::ExtremeLiberalNeg}) {
    const SearchResult& r =
        run.decomposed({A::Monotonicity, A::Consensus, el}, "monotone-boundary");
    std::vector<std::string> failures;
    ok = survivors_pass(run, r, {A::Symmetry}, failures) && r.surviving > 0 && ok;
    parts.push_back(std::string(axiom_id(el)) + ": " + describe(r) +
                    (failures.empty() ? ", SYM holds" : ", " + join(failures)));
  }
  run.finish(ok, join(parts, "; "));
}

void claim_impossibility(Run& run) {
  const SearchResult& d = run.decomposed(
      {A::Monotonicity, A::Consensus, A::ExtremeLiberalPos, A::ExtremeLiberalNeg},
      "monotone-boundary");
  bool ok = d.surviving == 0;
  std::string observed = "decomposed: " + describe(d);
  if (run.society().size() == 2) {
    const SearchResult& f = run.full({A::Monotonicity, A::Consensus, A::Independence,
                                      A::ExtremeLiberalPos, A::ExtremeLiberalNeg});
    ok = ok && f.surviving == 0;
    observed += "; full: " + describe(f);
  }
  run.finish(ok, observed);
}

// Checks the four axioms of a characterization on one example rule and
// returns the ids of the failing ones.
std::vector<std::string> failing_axioms(Run& run, const Rule& rule,
                                        const std::vector<Axiom>& axioms,
                                        std::vector<std::string>& holding) {
  std::vector<std::string> failing;
  for (Axiom a : axioms) {
    (run.holds(rule, a) ? holding : failing).emplace_back(axiom_id(a));
  }
  return failing;
}

// One "exactly three of four" example; returns whether it matches.
bool adjudicate(Run& run, const std::string& name, Axiom claimed_failure,
                const std::vector<Axiom>& axioms, const std::string& reference,
                std::string& observed) {
  const Rule rule = run.rule(name);
  std::vector<std::string> holding;
  const auto failing = failing_axioms(run, rule, axioms, holding);
  const bool distinct = first_difference(rule, run.rule(reference)).has_value();
  const bool ok = failing == std::vector<std::string>{std::string(axiom_id(claimed_failure))} &&
                  distinct;
  if (!observed.empty()) observed += "; ";
  observed += name + " fails {" + join(failing) + "}, holds {" + join(holding) + "}" +
              (distinct ? "" : ", equals " + reference);
  return ok;
}

const std::vector<Axiom> kInclusiveAxioms{A::Monotonicity, A::Consensus, A::Independence,
                                          A::ExtremeLiberalPos};
const std::vector<Axiom> kUnanimityAxioms{A::Monotonicity, A::Consensus, A::Independence,
                                          A::ExtremeLiberalNeg};

void claim_example(Run& run, const std::string& name, Axiom failure, bool inclusive_side) {
  std::string observed;
  const bool ok = adjudicate(run, name, failure, inclusive_side ? kInclusiveAxioms : kUnanimityAxioms,
                             inclusive_side ? "inclusive" : "unanimity", observed);
  run.finish(ok, observed);
}

void claim_p3_1(Run& run) { claim_example(run, "threshold-half", A::Monotonicity, true); }

void claim_p3_2(Run& run) {
  if (run.society().size() == 3) run.eval(run.rule("constant-all"), "{2};{2,3};{}");
  claim_example(run, "constant-all", A::Consensus, true);
}

void claim_p3_3(Run& run) {
  if (run.society().size() == 3) {
    const Rule rule = run.rule("consensus-fallback-inclusive");
    run.eval(rule, "{1};{2};{3}");
    run.eval(rule, "{1,2};{2};{2,3}");
    run.note("trace of {1,2};{2};{2,3}: " + trace_text(parse_profile("{1,2};{2};{2,3}")));
  }
  claim_example(run, "consensus-fallback-inclusive", A::Independence, true);
}

void claim_p3_4(Run& run) {
  if (run.society().size() == 2) run.eval(run.rule("strong-liberal"), "{2};{1}");
  claim_example(run, "strong-liberal", A::ExtremeLiberalPos, true);
}

void claim_p4_1(Run& run) {
  if (run.society().size() == 3) {
    const Rule rule = run.rule("first-voter");
    run.eval(rule, "{1};{2};{3}");
    run.eval(rule, "{1};{1,2};{3}");
  }
  claim_example(run, "first-voter", A::Monotonicity, false);
}

void claim_p4_2(Run& run) {
  if (run.society().size() == 3) {
    const Rule rule = run.rule("consensus-unanimity-collapse");
    for (const char* text : {"{1,2};{1,2};{1,3}", "{1,2};{1,2};{3}"}) {
      run.eval(rule, text);
      run.note(std::string("trace of ") + text + ": " + trace_text(parse_profile(text)));
    }
  }
  claim_example(run, "consensus-unanimity-collapse", A::Independence, false);
}

void claim_p4_3(Run& run) {
  std::string observed;
  bool ok = adjudicate(run, "constant:{}", A::Consensus, kUnanimityAxioms, "unanimity", observed);
  ok = adjudicate(run, "strong-liberal", A::ExtremeLiberalNeg, kUnanimityAxioms, "unanimity",
                  observed) &&
       ok;
  run.finish(ok, observed);
}

void claim_ex1(Run& run) {
  const Society society = run.society();
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t count = 0;
  for (std::uint32_t bits = 1; bits + 1 < (1u << society.size()); ++bits) {
    const Rule rule(rule::Constant{AgentSet(static_cast<std::uint16_t>(bits))}, society);
    ++count;
    if (!run.holds(rule, A::Liberal)) {
      ok = false;
      failures.push_back(rule.name() + " fails L");
    }
    if (run.holds(rule, A::Decisiveness)) {
      ok = false;
      failures.push_back(rule.name() + " passes D");
    }
  }
  if (society.size() <= 3) {
    // The example's own witness: S = {1,2} against "1 decisive over 2".
    // At n = 2 this S is N, outside the example's range, but the witness
    // still stands.
    const AgentSet out =
        run.eval(run.rule("constant:{1,2}"), society.size() == 2 ? "{1};{2}" : "{1};{2};{}");
    const bool refutes = out.contains(1);
    run.note(std::string("agent 1 decisive over agent 2 refuted by this profile: ") +
             (refutes ? "yes" : "no"));
    ok = ok && refutes;
  }
  run.finish(ok, std::to_string(count) + " constants; " +
                     (failures.empty() ? "all pass L and fail D" : join(failures)));
}

void claim_ex2(Run& run) {
  const Rule rule = run.rule("cross-decisive");
  const AgentSet out = run.eval(rule, "{1};{2}");
  const bool d = run.holds(rule, A::Decisiveness);
  const bool l = run.holds(rule, A::Liberal);
  run.finish(d && !l && out.empty(), std::string("D ") + (d ? "holds" : "fails") + ", L " +
                                         (l ? "holds" : "fails") + ", J({1},{2}) = " +
                                         format_set(out));
}

void claim_ex3(Run& run) {
  const Rule rule = run.rule("swap");
  std::vector<std::string> holding;
  const auto failing =
      failing_axioms(run, rule,
                     {A::Symmetry, A::Monotonicity, A::Consensus, A::Independence, A::Decisiveness},
                     holding);
  const bool ok = holding == std::vector<std::string>{"SYM"};
  run.finish(ok, "holds {" + join(holding) + "}, fails {" + join(failing) + "}");
}

void claim_fn2(Run& run) {
  const SearchResult& r = run.full({A::Symmetry, A::Decisiveness});
  auto has = [&](const std::string& name) {
    return std::any_of(r.survivors.begin(), r.survivors.end(),
                       [&](const Survivor& s) { return label(s) == name; });
  };
  const Rule cross = run.rule("cross-decisive");
  const bool direct = run.holds(cross, A::Symmetry) && run.holds(cross, A::Decisiveness);
  run.finish(has("strong-liberal") && has("cross-decisive") && direct, describe(r));
}

void claim_fn4(Run& run) {
  const int n = run.society().size();
  const std::string n_text = std::to_string(n);
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& [consent, target] :
       std::vector<std::pair<std::string, std::string>>{{"consent:" + n_text + ",1", "unanimity"},
                                                        {"consent:1," + n_text, "inclusive"}}) {
    run.result.procedure.push_back("compare(rule=" + consent + ", rule=" + target +
                                   ", n=" + n_text + ", all profiles)");
    const auto at = first_difference(run.rule(consent), run.rule(target));
    if (at) {
      ok = false;
      parts.push_back(consent + " differs from " + target + " at " +
                      format_profile(profile_at(run.society(), *at)));
    } else {
      parts.push_back(consent + " = " + target);
    }
  }
  run.finish(ok, join(parts, "; "));
}

using Procedure = std::function<void(Run&)>;

const std::map<std::string, Procedure>& procedures() {
  static const std::map<std::string, Procedure> table{
      {"T1", claim_t1},
      {"C1", [](Run& r) { claim_implies_mon_c_i(r, {A::Symmetry, A::Decisiveness}); }},
      {"P1", [](Run& r) { claim_implies_mon_c_i(r, {A::Decisiveness}); }},
      {"C2", claim_c2},
      {"P2", claim_p2},
      {"T2", [](Run& r) { claim_unique(r, A::ExtremeLiberalPos, "inclusive"); }},
      {"T3", [](Run& r) { claim_unique(r, A::ExtremeLiberalNeg, "unanimity"); }},
      {"C3", claim_c3},
      {"IMP-EL", claim_impossibility},
      {"P3.1", claim_p3_1},
      {"P3.2", claim_p3_2},
      {"P3.3", claim_p3_3},
      {"P3.4", claim_p3_4},
      {"P4.1", claim_p4_1},
      {"P4.2", claim_p4_2},
      {"P4.3", claim_p4_3},
      {"EX1", claim_ex1},
      {"EX2", claim_ex2},
      {"EX3", claim_ex3},
      {"FN2", claim_fn2},
      {"FN4", claim_fn4},
  };
  return table;
}

}  // namespace

const std::vector<Claim>& claim_inventory() {
  static const std::vector<Claim> inventory = build_inventory();
  return inventory;
}

Harness::Harness(HarnessOptions options) : options_(options) {}

const SearchResult& Harness::decomposed(int n, const std::vector<Axiom>& axioms,
                                        const std::string& prefilter) {
  const std::string key = search_key(RuleClass::Decomposed, n, axioms, prefilter);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    SearchOptions opts;
    opts.threads = options_.threads;
    it = cache_
             .emplace(key, search_decomposed(Society(n), axioms, prefilter_by_name(prefilter, n),
                                             opts))
             .first;
  }
  return it->second;
}

const SearchResult& Harness::full_scan(const std::vector<Axiom>& axioms) {
  const std::string key = search_key(RuleClass::FullN2, 2, axioms, "none");
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    SearchOptions opts;
    opts.threads = options_.threads;
    it = cache_.emplace(key, full_space_scan_n2(axioms, opts)).first;
  }
  return it->second;
}

ClaimResult Harness::verify(std::string_view id, int n) {
  const auto& inventory = claim_inventory();
  const auto claim = std::find_if(inventory.begin(), inventory.end(),
                                  [&](const Claim& c) { return c.id == id; });
  if (claim == inventory.end()) throw Error("unknown claim " + std::string(id));
  if (std::find(claim->feasible_n.begin(), claim->feasible_n.end(), n) == claim->feasible_n.end()) {
    throw Error("claim " + claim->id + " is not checked at n = " + std::to_string(n));
  }
  const auto start = std::chrono::steady_clock::now();
  Run run(*this, options_, *claim, n);
  procedures().at(claim->id)(run);
  run.result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return std::move(run.result);
}

VerifyReport Harness::verify_all(int n_max) {
  if (n_max < 1 || n_max > kExhaustiveDefault) {
    throw Error("n-max must lie in 1.." + std::to_string(kExhaustiveDefault));
  }
  VerifyReport report;
  report.n_max = n_max;
  for (const Claim& claim : claim_inventory()) {
    for (int n : claim.feasible_n) {
      if (n > n_max) continue;
      report.results.push_back(verify(claim.id, n));
    }
  }
  report.summary = summarize(report.results);
  return report;
}

ClaimResult verify_claim(std::string_view id, int n, const HarnessOptions& options) {
  return Harness(options).verify(id, n);
}

VerifyReport verify_all(int n_max, const HarnessOptions& options) {
  return Harness(options).verify_all(n_max);
}

}  // namespace cif
