#pragma once

// Catalog of collective identity functions and table-backed rules.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cif/core.hpp"

namespace cif {

/// Truth table of one target over its column: bit x is g(x), where bit k of
/// x says whether voter k approves the target.
using TruthTable = std::uint64_t;

/// Largest n for which a per-target truth table fits a TruthTable.
inline constexpr int kMaxDecomposedAgents = 6;

namespace rule {

struct StrongLiberal {};
struct Unanimity {};
struct Inclusive {};
/// Self-approval needs `s` approvers to stand; self-disapproval needs `t`
/// disapprovers to stand.
struct Consent {
  int s;
  int t;
};
/// J(C) = {sigma(i) : sigma(i) in C_i}; image[i] = sigma(i), 0-based.
struct Sigma {
  std::vector<int> image;
};
struct Constant {
  AgentSet set;
};
struct Dictator {
  int agent;
};
/// StL if StL is empty or everyone, otherwise its complement.
struct Swap {};
/// i is in when 0 < approvers < n/2, or when everybody approves.
struct ThresholdHalf {};
struct ConstantAll {};
/// Consensus closure when the unanimity set is nonempty, Inclusive otherwise.
struct ConsensusFallbackInclusive {};
/// Unanimity set if nonempty; otherwise what agent 1 alone supports, unless
/// C_1 is everyone, in which case nobody.
struct FirstVoter {};
/// Consensus closure, collapsing to Unanimity once a stage reaches everyone.
struct ConsensusUnanimityCollapse {};
/// n = 2 only: 1 decides over 2 and 2 decides over 1.
struct CrossDecisive {};
struct DecomposedTable {
  std::vector<TruthTable> tables;  // one per target
};
/// n = 2 only: bit 2p + i is "agent i in J(profile p)" (canonical order).
struct FullTable {
  std::uint32_t bits;
};

}  // namespace rule

using RuleSpec =
    std::variant<rule::StrongLiberal, rule::Unanimity, rule::Inclusive, rule::Consent, rule::Sigma,
                 rule::Constant, rule::Dictator, rule::Swap, rule::ThresholdHalf, rule::ConstantAll,
                 rule::ConsensusFallbackInclusive, rule::FirstVoter,
                 rule::ConsensusUnanimityCollapse, rule::CrossDecisive, rule::DecomposedTable,
                 rule::FullTable>;

/// A rule bound to a society. Construction validates the parameters.
class Rule {
 public:
  Rule(RuleSpec spec, Society society);

  const RuleSpec& spec() const noexcept { return spec_; }
  Society society() const noexcept { return society_; }

  /// The CLI spelling of this rule, e.g. "consent:2,1" or "sigma:1,3,2".
  std::string name() const;

  AgentSet operator()(const Profile& profile) const;

 private:
  RuleSpec spec_;
  Society society_;
};

/// Errors when the profile belongs to a different society than the rule.
AgentSet evaluate(const Rule& rule, const Profile& profile);

/// Parses a CLI rule spelling for the given society. "table:<hex>" is read as
/// a decomposed table, or at n = 2 as a full table when it has 8 digits.
Rule parse_rule(std::string_view text, Society society);

struct ConsensusTrace {
  /// J(C,0), J(C,1), ...; the last stage repeats the one before it.
  std::vector<AgentSet> stages;
  AgentSet fixed_point;
  /// First t > 0 with J(C,t) = N.
  std::optional<std::size_t> reached_everyone_at;
};

/// Stage 0 is the unanimity set; each later stage adds everyone approved by
/// all members of the previous stage. An empty committee adds nobody.
ConsensusTrace consensus_iterate(const Profile& profile);

/// Outputs on every profile, in canonical profile order.
std::vector<AgentSet> tabulate(const Rule& rule, bool allow_large = false);

/// Named catalog rules for the society, in the order used for naming matches.
std::vector<Rule> catalog(Society society);

/// Name of the first catalog rule whose tabulation equals `outputs`.
std::optional<std::string> catalog_name(std::span<const AgentSet> outputs, Society society);

/// Lowercase hex of the decomposed table bits: bit i * 2^n + x is g_i(x).
std::string encode_decomposed(std::span<const TruthTable> tables, int n);
std::vector<TruthTable> decode_decomposed(std::string_view hex, int n);

std::string encode_full(std::uint32_t bits);
std::uint32_t decode_full(std::string_view hex);

/// Full n = 2 table of any n = 2 rule.
std::uint32_t full_table_bits(const Rule& rule);

}  // namespace cif
