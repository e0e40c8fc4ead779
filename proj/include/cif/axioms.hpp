#pragma once

// Exhaustive axiom checkers with re-checkable witnesses.
//
// Every checker sweeps the whole profile space of the rule's society, so a
// verdict is a proof at that n. Witnesses are the first violations met in
// canonical profile order.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cif/core.hpp"
#include "cif/rules.hpp"

namespace cif {

enum class Axiom {
  Monotonicity,
  Consensus,
  Symmetry,
  Independence,
  Liberal,
  Decisiveness,
  MinimalDecisiveness,
  MinimalSemiDecisiveness,
  ExtremeLiberalPos,
  ExtremeLiberalNeg,
  ExtremeLiberal,
};

/// Report identifier: MON, C, SYM, I, L, D, MD, MSD, EL_POS, EL_NEG, EL.
std::string_view axiom_id(Axiom axiom);
/// CLI spelling: mon, c, sym, i, l, d, md, msd, el+, el-, el.
std::string_view axiom_cli_name(Axiom axiom);
Axiom parse_axiom(std::string_view cli_name);
/// Comma-separated CLI list, e.g. "mon,c,el+".
std::vector<Axiom> parse_axiom_list(std::string_view text);

enum class Verdict { Holds, Fails, Vacuous };
std::string_view verdict_name(Verdict verdict);

/// Which half of L or EL a check covers.
enum class Part { Pos, Neg, Both };

/// A concrete violation. The meaning of `agents` depends on the axiom:
///   MON        {voter, target}; profiles {C, C'} with C' the single flip
///   C          {target}
///   SYM        {j, k}, the symmetric pair split by the rule
///   I          {target}; profiles {C, C'} with equal target columns
///   L          {agent}, the self-(dis)approver; clause "pos" or "neg"
///   EL_*       {voter, target} of the (dis)approval pair
///   D, MD      {controller, target}; the profile refutes decisiveness
///   MSD        {controller, target}; profiles refute both directions
struct Witness {
  std::string clause;
  std::vector<Profile> profiles;
  std::vector<int> agents;
  std::string detail;
};

struct AxiomReport {
  Axiom axiom;
  Verdict verdict;
  /// Whether the axiom is true. Always equals verdict == Holds except for
  /// vacuous verdicts, where it records which way the empty case falls.
  bool satisfied;
  std::vector<Witness> witnesses;
  /// Number of violations found (not capped).
  std::uint64_t violations = 0;
};

struct CheckOptions {
  std::size_t max_witnesses = 5;
  /// Permit n = 5 sweeps.
  bool allow_large = false;
};

/// A rule together with its outputs on every profile. Checkers read the
/// table; witness re-checks go back to the rule.
class RuleTable {
 public:
  explicit RuleTable(Rule rule, bool allow_large = false);

  const Rule& rule() const noexcept { return rule_; }
  Society society() const noexcept { return rule_.society(); }
  int size() const noexcept { return rule_.society().size(); }
  std::uint64_t profile_count() const noexcept { return outputs_.size(); }
  AgentSet output(std::uint64_t index) const { return outputs_[index]; }
  std::span<const AgentSet> outputs() const noexcept { return outputs_; }

 private:
  Rule rule_;
  std::vector<AgentSet> outputs_;
};

AxiomReport check_mon(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_consensus(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_sym(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_ind(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_liberal(const RuleTable& table, const CheckOptions& options = {},
                          Part part = Part::Both);
AxiomReport check_el(const RuleTable& table, Part part, const CheckOptions& options = {});
AxiomReport check_d(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_md(const RuleTable& table, const CheckOptions& options = {});
AxiomReport check_msd(const RuleTable& table, const CheckOptions& options = {});

AxiomReport check(const RuleTable& table, Axiom axiom, const CheckOptions& options = {});
AxiomReport check(const Rule& rule, Axiom axiom, const CheckOptions& options = {});

/// Unordered pairs (j, k), j < k, symmetric in the profile.
std::vector<std::pair<int, int>> symmetric_pairs(const Profile& profile);

enum class Control {
  None,
  SemidecisivePositive,
  SemidecisiveNegative,
  /// Never produced: both directions together are exactly decisiveness.
  SemidecisiveBoth,
  Decisive,
};
std::string_view control_name(Control control);

class DecisivenessMatrix {
 public:
  struct Entry {
    bool positive = true;  // j in C_i implies j in J(C), for every C
    bool negative = true;  // j not in C_i implies j not in J(C), for every C
    std::optional<std::uint64_t> positive_counterexample;
    std::optional<std::uint64_t> negative_counterexample;

    Control label() const noexcept;
    bool decisive() const noexcept { return positive && negative; }
    bool semidecisive() const noexcept { return positive || negative; }
  };

  explicit DecisivenessMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}

  int size() const noexcept { return n_; }
  const Entry& at(int controller, int target) const {
    return entries_.at(static_cast<std::size_t>(controller * n_ + target));
  }
  Entry& at(int controller, int target) {
    return entries_.at(static_cast<std::size_t>(controller * n_ + target));
  }
  Control label(int controller, int target) const { return at(controller, target).label(); }

 private:
  int n_;
  std::vector<Entry> entries_;
};

/// Throws std::logic_error if two agents come out decisive over one target,
/// which no total rule permits.
DecisivenessMatrix decisiveness_matrix(const RuleTable& table);
DecisivenessMatrix decisiveness_matrix(const Rule& rule, bool allow_large = false);

/// Re-evaluates the witness through the rule itself and reports whether it
/// exhibits a violation of `axiom`.
bool confirms_violation(const Rule& rule, Axiom axiom, const Witness& witness);

}  // namespace cif
