// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cif/harness.hpp"
#include "cif/render.hpp"
#include "oracle.hpp"

using namespace cif;

namespace {
using A = Axiom;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Profile P(std::string_view text) { return parse_profile(text); }
Rule R(std::string_view name, int n) { return parse_rule(name, Society(n)); }
AgentSet S(std::initializer_list<int> labels) { return AgentSet::from_labels(labels); }

unsigned many_threads() { return std::max(2u, std::thread::hardware_concurrency()); }

SearchResult decomposed(int n, std::vector<A> axioms, const std::string& prefilter,
                        unsigned threads = 1) {
  SearchOptions options;
  options.threads = threads;
  return search_decomposed(Society(n), axioms, prefilter_by_name(prefilter, n), options);
}

SearchResult full(std::vector<A> axioms, unsigned threads = 1) {
  SearchOptions options;
  options.threads = threads;
  return full_space_scan_n2(axioms, options);
}

std::vector<std::string> names(const SearchResult& r) {
  std::vector<std::string> out;
  for (const Survivor& s : r.survivors) out.push_back(s.catalog_name.value_or(s.encoding));
  return out;
}

bool holds(const Rule& rule, A axiom) { return check(rule, axiom).verdict == Verdict::Holds; }

// The criteria.

void ac1() {
  for (int n = 2; n <= 4; ++n) {
    const RuleTable stl(R("strong-liberal", n));
    for (A a : {A::Monotonicity, A::Consensus, A::Symmetry, A::Independence, A::Liberal,
                A::Decisiveness, A::MinimalDecisiveness, A::MinimalSemiDecisiveness}) {
      expect(check(stl, a).verdict == Verdict::Holds,
             "strong-liberal " + std::string(axiom_id(a)) + " at n=" + std::to_string(n));
    }
  }
  const AxiomReport el = check(R("strong-liberal", 2), A::ExtremeLiberalPos);
  expect(el.verdict == Verdict::Fails, "strong-liberal EL_POS at n=2 should fail");
  bool found = false;
  for (const Witness& w : el.witnesses) {
    found = found || (format_profile(w.profiles.front()) == "{2};{1}" &&
                      confirms_violation(R("strong-liberal", 2), A::ExtremeLiberalPos, w));
  }
  expect(found, "EL_POS witness {2};{1} missing");
}

void ac2() {
  const SearchResult symd = full({A::Symmetry, A::Decisiveness});
  expect(symd.complete && symd.examined == (std::uint64_t{1} << 32), "scan incomplete");
  const std::vector<std::string> got = names(symd);
  for (const char* want : {"strong-liberal", "cross-decisive"}) {
    expect(std::find(got.begin(), got.end(), want) != got.end(), std::string(want) + " missing");
  }
  const SearchResult d = full({A::Decisiveness});
  expect(!d.survivors.empty() && !d.truncated, "D scan has no complete survivor list");
  for (const Survivor& s : d.survivors) {
    const Rule rule = survivor_rule(d, s);
    for (A a : {A::Monotonicity, A::Consensus, A::Independence}) {
      expect(holds(rule, a), s.encoding + " fails " + std::string(axiom_id(a)));
    }
  }

  const std::string path =
      (std::filesystem::temp_directory_path() / "cif_acceptance_checkpoint.json").string();
  std::filesystem::remove(path);
  SearchOptions part;
  part.checkpoint = path;
  part.chunk_limit = 20000;
  const SearchResult first = full_space_scan_n2(std::vector<A>{A::Symmetry, A::Decisiveness}, part);
  SearchOptions rest;
  rest.checkpoint = path;
  const SearchResult resumed =
      full_space_scan_n2(std::vector<A>{A::Symmetry, A::Decisiveness}, rest);
  std::filesystem::remove(path);
  expect(!first.complete && resumed.complete, "checkpointed scan did not stop and resume");
  expect(to_json(resumed).dump() == to_json(symd).dump(), "resumed scan differs from a direct scan");
}

void ac3() {
  const SearchResult d = decomposed(3, {A::Decisiveness}, "none");
  expect(d.surviving == 6, "expected 6 D survivors");
  std::set<std::vector<int>> perms;
  for (const Survivor& s : d.survivors) {
    const auto perm = decisive_structure_decomposed(decode_decomposed(s.encoding, 3), 3).permutation();
    expect(perm.has_value(), s.encoding + " is not a permutation rule");
    expect(tabulate(survivor_rule(d, s)) == tabulate(Rule(rule::Sigma{*perm}, Society(3))),
           s.encoding + " differs from its sigma rule");
    perms.insert(*perm);
  }
  expect(perms.size() == 6, "permutations are not distinct");
  const std::vector<std::string> stl{"strong-liberal"};
  expect(names(decomposed(3, {A::Symmetry, A::Decisiveness}, "none")) == stl, "SYM+D survivors");
  expect(names(decomposed(3, {A::Symmetry, A::MinimalDecisiveness}, "none")) == stl,
         "SYM+MD survivors");
}

void ac4() {
  const std::vector<std::size_t> total{6, 20}, bounded{4, 18};
  for (int n = 2; n <= 3; ++n) {
    std::size_t all = 0, boundary = 0;
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << (1 << n)); ++g) {
      if (!oracle::monotone_table(g, n)) continue;
      ++all;
      if ((g & 1u) == 0 && ((g >> ((1u << n) - 1)) & 1u)) ++boundary;
    }
    const auto i = static_cast<std::size_t>(n - 2);
    expect(all == total[i] && boundary == bounded[i], "brute-force monotone count");
    expect(monotone_tables(n, false).size() == all && monotone_tables(n, true).size() == boundary,
           "library monotone count at n=" + std::to_string(n));
    const std::string pf = "monotone-boundary";
    expect(names(decomposed(n, {A::Monotonicity, A::Consensus, A::ExtremeLiberalPos}, pf)) ==
               std::vector<std::string>{"inclusive"},
           "MON,C,EL+ at n=" + std::to_string(n));
    expect(names(decomposed(n, {A::Monotonicity, A::Consensus, A::ExtremeLiberalNeg}, pf)) ==
               std::vector<std::string>{"unanimity"},
           "MON,C,EL- at n=" + std::to_string(n));
    expect(decomposed(n, {A::Monotonicity, A::Consensus, A::ExtremeLiberalPos, A::ExtremeLiberalNeg},
                      pf)
                   .surviving == 0,
           "MON,C,EL+,EL- at n=" + std::to_string(n));
  }
}

void ac5() {
  for (int n = 2; n <= 3; ++n) {
    for (A el : {A::ExtremeLiberalPos, A::ExtremeLiberalNeg}) {
      const SearchResult r =
          decomposed(n, {A::Monotonicity, A::Consensus, el}, "monotone-boundary");
      expect(r.survivors.size() == 1, "expected a unique survivor");
      expect(holds(survivor_rule(r, r.survivors.front()), A::Symmetry),
             r.survivors.front().encoding + " fails SYM");
    }
  }
}

void ac6() {
  for (int n = 2; n <= 4; ++n) {
    const std::vector<std::string> rules{"unanimity", "inclusive", "strong-liberal"};
    std::vector<std::vector<AgentSet>> tables;
    for (const std::string& name : rules) {
      const RuleTable t(R(name, n));
      for (A a : {A::Monotonicity, A::Consensus, A::Symmetry, A::Independence,
                  A::MinimalSemiDecisiveness}) {
        expect(check(t, a).verdict == Verdict::Holds,
               name + " " + std::string(axiom_id(a)) + " at n=" + std::to_string(n));
      }
      tables.emplace_back(t.outputs().begin(), t.outputs().end());
    }
    const ClaimResult p2 = verify_claim("P2", n);
    expect(p2.status == ClaimStatus::Confirmed, "P2 harness claim at n=" + std::to_string(n));
    expect(p2.notes.size() >= 3, "P2 distinguishing profiles missing");
    for (const std::string& note : p2.notes) {
      // "<rule> vs <rule> at <profile>: ..." is re-evaluated here.
      const auto vs = note.find(" vs ");
      const auto at = note.find(" at ");
      const auto colon = note.find(':', at);
      expect(vs != std::string::npos && at != std::string::npos && colon != std::string::npos,
             "note format: " + note);
      const Profile c = P(note.substr(at + 4, colon - at - 4));
      const Rule x = R(note.substr(0, vs), n);
      const Rule y = R(note.substr(vs + 4, at - vs - 4), n);
      expect(x(c) != y(c), "note does not separate its rules: " + note);
    }
    for (std::size_t a = 0; a < tables.size(); ++a) {
      for (std::size_t b = a + 1; b < tables.size(); ++b) {
        expect(tables[a] != tables[b], rules[a] + " equals " + rules[b]);
      }
    }
  }
}

void ac7() {
  auto eval = [](std::string_view rule, std::string_view profile) {
    const Profile p = P(profile);
    return evaluate(parse_rule(rule, p.society()), p);
  };
  expect(P("{1};{2}").opinion(0) == S({1}) && P("{1};{2}").opinion(1) == S({2}), "profile parse");
  expect(column(P("{1};{2};{3}"), 1) == S({2}), "column");
  expect(eval("strong-liberal", "{2};{1}").empty(), "StL({2};{1})");
  expect(eval("sigma:1,3,2", "{3};{1,3};{1}") == S({3}), "sigma({3};{1,3};{1})");
  expect(eval("cross-decisive", "{1};{2}").empty(), "cross-decisive({1};{2})");
  expect(eval("consensus-fallback-inclusive", "{1};{2};{3}") == S({1, 2, 3}), "CFI(C)");
  expect(eval("consensus-fallback-inclusive", "{1,2};{2};{2,3}") == S({2}), "CFI(C')");
  expect(eval("first-voter", "{1};{2};{3}") == S({1}), "FV(C)");
  expect(eval("first-voter", "{1};{1,2};{3}").empty(), "FV(C')");
  for (const char* s : {"{1}", "{2}"}) {
    expect(eval(std::string("constant:") + s, "{1};{2}") == parse_set(s, Society(2)), "constant");
  }
  const ConsensusTrace a = consensus_iterate(P("{1,2};{1,2};{1,3}"));
  expect(a.stages == std::vector<AgentSet>{S({1}), S({1, 2}), S({1, 2})} &&
             a.fixed_point == S({1, 2}) && !a.reached_everyone_at,
         "trace {1,2};{1,2};{1,3}");
  const ConsensusTrace b = consensus_iterate(P("{1,2};{2};{2,3}"));
  expect(b.stages == std::vector<AgentSet>{S({2}), S({2})}, "trace {1,2};{2};{2,3}");

  auto pair_symmetric = [](const Profile& c, int j, int k) {
    for (auto [x, y] : symmetric_pairs(c)) {
      if (x == j && y == k) return true;
    }
    return false;
  };
  expect(pair_symmetric(P("{3};{1,3};{1}"), 0, 2), "agents 1 and 3 symmetric");
  auto confirm = [](std::string_view rule, int n, A axiom, std::string clause,
                    std::vector<Profile> profiles, std::vector<int> agents) {
    return confirms_violation(R(rule, n), axiom, Witness{std::move(clause), std::move(profiles),
                                                         std::move(agents), ""});
  };
  expect(confirm("sigma:1,3,2", 3, A::Symmetry, "split", {P("{3};{1,3};{1}")}, {0, 2}),
         "sigma SYM violation");
  expect(confirm("threshold-half", 3, A::Monotonicity, "add", {P("{1};{};{}"), P("{1};{1};{}")},
                 {1, 0}),
         "threshold-half MON violation");
  expect(confirm("first-voter", 3, A::Monotonicity, "add", {P("{1};{2};{3}"), P("{1};{1,2};{3}")},
                 {1, 0}),
         "first-voter MON violation");
  expect(confirm("constant-all", 2, A::Consensus, "rejected", {P("{};{2}")}, {0}),
         "constant-all C violation");
  expect(confirm("consensus-fallback-inclusive", 3, A::Independence, "column",
                 {P("{1};{2};{3}"), P("{1,2};{2};{2,3}")}, {0}),
         "CFI I violation");
  expect(confirm("cross-decisive", 2, A::Liberal, "pos", {P("{1};{2}")}, {0}),
         "cross-decisive L violation");
  expect(confirm("strong-liberal", 2, A::ExtremeLiberalPos, "pos", {P("{2};{1}")}, {0, 1}),
         "StL EL+ violation");
  expect(confirm("constant:{1,2}", 2, A::Decisiveness, "not-decisive", {P("{1};{2}")}, {0, 1}),
         "constant D violation");
  expect(holds(R("swap", 3), A::Symmetry), "swap SYM");
  expect(holds(R("cross-decisive", 2), A::Decisiveness), "cross-decisive D");
}

void ac8() {
  const std::vector<std::string> ids{"P3.1", "P3.2", "P3.3", "P3.4", "P4.1", "P4.2", "P4.3"};
  for (const std::string& id : ids) {
    const ClaimResult r = verify_claim(id, 3);
    const ClaimResult again = verify_claim(id, 3);
    expect(to_json(r).dump() == to_json(again).dump(), id + " is not deterministic");
    expect(!r.verdicts.empty(), id + " has no per-axiom verdicts");
    for (const RuleVerdict& v : r.verdicts) {
      const Rule rule = parse_rule(v.rule, Society(3));
      if (v.report.verdict == Verdict::Fails) {
        expect(!v.report.witnesses.empty(), id + " failure without witness");
      }
      for (const Witness& w : v.report.witnesses) {
        expect(confirms_violation(rule, v.report.axiom, w), id + " witness does not re-check");
      }
    }
    if (r.status == ClaimStatus::Refuted) {
      expect(claim_status_name(r.status) == "refuted (as implemented)", id + " status label");
      expect(render_text(r).find("witness:") != std::string::npos, id + " witness not printed");
    }
  }
}

void ac9() {
  for (int n = 2; n <= 4; ++n) {
    const std::string k = std::to_string(n);
    expect(tabulate(R("consent:" + k + ",1", n)) == tabulate(R("unanimity", n)),
           "consent(n,1) at n=" + k);
    expect(tabulate(R("consent:1," + k, n)) == tabulate(R("inclusive", n)),
           "consent(1,n) at n=" + k);
  }
  for (int n = 1; n <= 3; ++n) {
    const Society s(n);
    const Rule u = R("unanimity", n);
    const Rule in = R("inclusive", n);
    for (const Profile& c : enumerate_profiles(s)) {
      std::vector<AgentSet> star;
      for (AgentSet op : c.opinions()) star.push_back(s.everyone() - op);
      expect(in(c) == s.everyone() - u(make_profile(star, s)), "duality at " + format_profile(c));
    }
  }
}

void ac10() {
  const unsigned t = many_threads();
  auto same = [](const SearchResult& a, const SearchResult& b) {
    return to_json(a).dump(2) == to_json(b).dump(2);
  };
  for (const auto& axioms : std::vector<std::vector<A>>{{A::Symmetry, A::Decisiveness},
                                                        {A::Decisiveness}}) {
    expect(same(full(axioms), full(axioms, t)), "full scan JSON differs across threads");
  }
  for (const auto& axioms : std::vector<std::vector<A>>{
           {A::Decisiveness}, {A::Symmetry, A::Decisiveness}, {A::Symmetry, A::MinimalDecisiveness}}) {
    expect(same(decomposed(3, axioms, "none"), decomposed(3, axioms, "none", t)),
           "decomposed n=3 JSON differs across threads");
  }
  for (int n = 2; n <= 3; ++n) {
    for (const auto& axioms : std::vector<std::vector<A>>{
             {A::Monotonicity, A::Consensus, A::ExtremeLiberalPos},
             {A::Monotonicity, A::Consensus, A::ExtremeLiberalNeg},
             {A::Monotonicity, A::Consensus, A::ExtremeLiberalPos, A::ExtremeLiberalNeg}}) {
      expect(same(decomposed(n, axioms, "monotone-boundary"),
                  decomposed(n, axioms, "monotone-boundary", t)),
             "monotone search JSON differs across threads");
    }
  }
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 = no runtime bound
  std::function<void()> run;
};
}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "catalog fidelity of strong-liberal", 5, ac1},
      {"AC2", "full n=2 scan: SYM+D survivors, D implies MON, C, I", 600, ac2},
      {"AC3", "n=3 decisive rules are the sigma rules; SYM+D and SYM+MD give strong-liberal", 60,
       ac3},
      {"AC4", "EL characterizations and impossibility at n=2,3", 10, ac4},
      {"AC5", "characterized rules are symmetric", 0, ac5},
      {"AC6", "unanimity, inclusive, strong-liberal share MON, C, SYM, I, MSD", 0, ac6},
      {"AC7", "worked example values", 1, ac7},
      {"AC8", "adjudicated counterexample claims at n=3", 0, ac8},
      {"AC9", "consent identities and duality", 0, ac9},
      {"AC10", "search JSON is identical across thread counts", 0, ac10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      c.run();
    } catch (const Failure& f) {
      problem = f.what;
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      problem = "runtime " + std::to_string(seconds) + " s exceeds " +
                std::to_string(c.limit_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << c.id << ' ' << (problem.empty() ? "PASS" : "FAIL") << "  " << c.title << " ("
              << timing << (c.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : std::string()) << ")";
    if (!problem.empty()) std::cout << ": " << problem;
    std::cout << '\n';
    failed += problem.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
