#include <algorithm>
#include <set>

#include "doctest.h"

#include "cif/harness.hpp"
#include "cif/render.hpp"

using namespace cif;

namespace {
const VerifyReport& report3() {
  static const VerifyReport report = verify_all(3);
  return report;
}

const ClaimResult* find(const VerifyReport& report, const std::string& id, int n) {
  for (const ClaimResult& r : report.results) {
    if (r.id == id && r.n == n) return &r;
  }
  return nullptr;
}

bool has_procedure(const ClaimResult& r, std::string_view prefix) {
  return std::any_of(r.procedure.begin(), r.procedure.end(),
                     [&](const std::string& p) { return p.rfind(prefix, 0) == 0; });
}
}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("inventory") {
    const std::vector<std::string> expected{"T1",   "C1",   "P1",   "C2",   "P2",  "T2",
                                            "T3",   "C3",   "IMP-EL", "P3.1", "P3.2", "P3.3",
                                            "P3.4", "P4.1", "P4.2", "P4.3", "EX1", "EX2",
                                            "EX3",  "FN2",  "FN4"};
    std::vector<std::string> ids;
    for (const Claim& c : claim_inventory()) {
      ids.push_back(c.id);
      CHECK_FALSE(c.statement.empty());
      CHECK_FALSE(c.expected.empty());
      CHECK_FALSE(c.feasible_n.empty());
    }
    CHECK(ids == expected);
  }

  TEST_CASE("single claims") {
    const ClaimResult t2 = verify_claim("T2", 3);
    CHECK(t2.status != ClaimStatus::Refuted);
    CHECK(t2.kind == ClaimKind::Assertion);
    CHECK(has_procedure(t2, "search_decomposed(n=3"));

    const ClaimResult ex3 = verify_claim("EX3", 3);
    CHECK(ex3.status == ClaimStatus::Confirmed);

    for (const char* id : {"P3.1", "P4.1"}) {
      const ClaimResult r = verify_claim(id, 3);
      CHECK(r.status == ClaimStatus::Refuted);
      CHECK(r.kind == ClaimKind::Adjudicated);
      bool witnessed = false;
      for (const RuleVerdict& v : r.verdicts) witnessed = witnessed || !v.report.witnesses.empty();
      CHECK(witnessed);
    }

    CHECK_THROWS_AS(verify_claim("T9", 3), Error);
    CHECK_THROWS_AS(verify_claim("C2", 2), Error);
    CHECK_THROWS_AS(verify_claim("EX2", 3), Error);
    CHECK_THROWS_AS(verify_all(5), Error);
    CHECK_THROWS_AS(verify_all(0), Error);
  }

  TEST_CASE("verify all at n_max = 3") {
    const VerifyReport& r = report3();
    CHECK(r.n_max == 3);
    std::size_t expected_count = 0;
    for (const Claim& c : claim_inventory()) {
      for (int n : c.feasible_n) expected_count += n <= 3 ? 1 : 0;
    }
    CHECK(r.results.size() == expected_count);
    for (const ClaimResult& c : r.results) {
      INFO(c.id, " n=", c.n);
      CHECK(c.n <= 3);
      CHECK_FALSE(c.procedure.empty());
      CHECK_FALSE(c.observed.empty());
      if (c.kind == ClaimKind::Assertion) CHECK(c.status != ClaimStatus::Refuted);
    }
    CHECK(r.summary.refuted_assertions == 0);
    CHECK(r.summary.confirmed + r.summary.scoped + r.summary.refuted == r.results.size());
    CHECK(r.passed(false));
    CHECK_FALSE(r.passed(true));
  }

  TEST_CASE("adjudicated outcomes") {
    const VerifyReport& r = report3();
    auto status = [&](const char* id, int n) {
      const ClaimResult* c = find(r, id, n);
      REQUIRE(c != nullptr);
      return c->status;
    };
    CHECK(status("P3.1", 2) == ClaimStatus::Refuted);
    CHECK(status("P3.1", 3) == ClaimStatus::Refuted);
    CHECK(status("P4.1", 3) == ClaimStatus::Refuted);
    CHECK(status("P4.2", 2) == ClaimStatus::Refuted);
    CHECK(status("P4.2", 3) == ClaimStatus::Confirmed);
    CHECK(status("EX3", 2) == ClaimStatus::Refuted);
    CHECK(status("EX3", 3) == ClaimStatus::Confirmed);
    for (const char* id : {"P3.2", "P3.3", "P3.4", "P4.3"}) {
      CHECK(status(id, 2) == ClaimStatus::Confirmed);
      CHECK(status(id, 3) == ClaimStatus::Confirmed);
    }
  }

  TEST_CASE("scope of class-restricted claims") {
    const VerifyReport& r = report3();
    const ClaimResult* t1 = find(r, "T1", 3);
    REQUIRE(t1 != nullptr);
    CHECK(t1->status == ClaimStatus::ConfirmedScoped);
    CHECK_FALSE(t1->scope.empty());
    const ClaimResult* p1 = find(r, "P1", 2);
    REQUIRE(p1 != nullptr);
    CHECK(p1->status == ClaimStatus::Confirmed);
    CHECK(has_procedure(*p1, "full_space_scan_n2("));
    const ClaimResult* fn2 = find(r, "FN2", 2);
    REQUIRE(fn2 != nullptr);
    CHECK(has_procedure(*fn2, "full_space_scan_n2("));
  }

  TEST_CASE("reported witnesses reproduce through the named rule") {
    for (const ClaimResult& c : report3().results) {
      for (const RuleVerdict& v : c.verdicts) {
        if (v.report.witnesses.empty()) continue;
        const Rule rule = parse_rule(v.rule, Society(c.n));
        for (const Witness& w : v.report.witnesses) {
          INFO(c.id, " ", v.rule, " ", axiom_id(v.report.axiom));
          REQUIRE(confirms_violation(rule, v.report.axiom, w));
        }
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    HarnessOptions threaded;
    threaded.threads = 4;
    const VerifyReport again = verify_all(3, threaded);
    REQUIRE(again.results.size() == report3().results.size());
    for (std::size_t i = 0; i < again.results.size(); ++i) {
      REQUIRE(to_json(again.results[i]).dump() == to_json(report3().results[i]).dump());
    }
  }

  TEST_CASE("search cache") {
    Harness h;
    const SearchResult& a = h.decomposed(3, {Axiom::Symmetry, Axiom::Decisiveness}, "none");
    const SearchResult& b = h.decomposed(3, {Axiom::Decisiveness, Axiom::Symmetry}, "none");
    CHECK(&a == &b);
  }
}
