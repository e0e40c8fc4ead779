#pragma once

// Executable inventory of the group-identification results. Each claim maps
// to a deterministic procedure over the axioms and search modules.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cif/axioms.hpp"
#include "cif/search.hpp"

namespace cif {

enum class ClaimStatus {
  Confirmed,
  /// Confirmed inside a stated restriction (e.g. the Independence class).
  ConfirmedScoped,
  /// The stated verdict does not reproduce; witnesses are attached.
  Refuted,
};
std::string_view claim_status_name(ClaimStatus status);

enum class ClaimKind {
  /// A general statement that is expected to hold.
  Assertion,
  /// A "satisfies exactly these axioms" example whose verdict is adjudicated.
  Adjudicated,
};

struct Claim {
  std::string id;
  std::string statement;
  /// The verdict as stated, in the harness's own terms.
  std::string expected;
  ClaimKind kind;
  std::vector<int> feasible_n;
};

/// Verdict of one axiom on one rule, as used by a claim.
struct RuleVerdict {
  std::string rule;
  AxiomReport report;
};

struct ClaimResult {
  std::string id;
  int n = 0;
  ClaimKind kind = ClaimKind::Assertion;
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::Confirmed;
  std::string scope;
  /// The exact operations and parameters executed.
  std::vector<std::string> procedure;
  std::vector<RuleVerdict> verdicts;
  /// Extra evidence: distinguishing profiles, survivor lists and the like.
  std::vector<std::string> notes;
  double seconds = 0;
};

struct HarnessOptions {
  unsigned threads = 1;
  std::size_t max_witnesses = 5;
};

struct VerifySummary {
  std::size_t confirmed = 0;
  std::size_t scoped = 0;
  std::size_t refuted = 0;
  /// Refutations among assertion claims; these fail a normal run.
  std::size_t refuted_assertions = 0;
};

VerifySummary summarize(const std::vector<ClaimResult>& results);

struct VerifyReport {
  int n_max = 0;
  std::vector<ClaimResult> results;
  VerifySummary summary;

  /// Exit status policy: assertions must hold; adjudicated examples also
  /// must hold under `strict`.
  bool passed(bool strict) const;
};

/// The compiled-in claim inventory, in presentation order.
const std::vector<Claim>& claim_inventory();

/// Runs claims and memoizes the exhaustive searches they share.
class Harness {
 public:
  explicit Harness(HarnessOptions options = {});

  /// Errors on an unknown id or an n outside the claim's feasible set.
  ClaimResult verify(std::string_view id, int n);
  /// Every claim at every feasible n <= n_max (n_max <= 4).
  VerifyReport verify_all(int n_max);

  const SearchResult& decomposed(int n, const std::vector<Axiom>& axioms,
                                 const std::string& prefilter);
  const SearchResult& full_scan(const std::vector<Axiom>& axioms);

 private:
  HarnessOptions options_;
  std::map<std::string, SearchResult> cache_;
};

ClaimResult verify_claim(std::string_view id, int n, const HarnessOptions& options = {});
VerifyReport verify_all(int n_max, const HarnessOptions& options = {});

}  // namespace cif
