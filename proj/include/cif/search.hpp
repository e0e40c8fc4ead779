#pragma once

// Exhaustive rule-space enumeration.
//
// Two classes are searched. The decomposed class holds the rules that
// satisfy Independence: one truth table per target over that target's
// column. The full n = 2 class is every function from the 16 profiles to
// the 4 subsets, 2^32 rules in all.
//
// Survivors of either search are re-checked through the profile-sweep
// checkers of the axioms module before they are reported.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cif/axioms.hpp"
#include "cif/rules.hpp"

namespace cif {

/// All monotone boolean functions of n inputs, ascending. With
/// require_boundary, only those with g(0...0) = 0 and g(1...1) = 1.
std::vector<TruthTable> monotone_tables(int n, bool require_boundary);

/// g(x) = x_i for i = 0..n-1.
std::vector<TruthTable> projection_tables(int n);

/// Decisive targets per agent: i decides j iff g_j is the projection on i.
struct DecisiveStructure {
  std::vector<std::vector<int>> targets;  // indexed by controller

  /// Every agent decides some target.
  bool total() const;
  /// When total, the controller -> target bijection.
  std::optional<std::vector<int>> permutation() const;
};
DecisiveStructure decisive_structure_decomposed(std::span<const TruthTable> tables, int n);

/// Per-table restriction applied before the tuple enumeration.
struct Prefilter {
  std::string name;
  std::function<bool(int target, TruthTable table)> keep;
};
/// "none", "monotone", "monotone-boundary" or "projection".
Prefilter prefilter_by_name(const std::string& name, int n);

enum class RuleClass { Decomposed, FullN2 };
std::string_view rule_class_name(RuleClass rule_class);

struct StageCount {
  Axiom axiom;
  std::uint64_t rejected = 0;
};

struct Survivor {
  std::string encoding;
  std::optional<std::string> catalog_name;
};

struct SearchResult {
  std::vector<Axiom> axioms;
  RuleClass rule_class = RuleClass::Decomposed;
  int n = 0;
  std::string prefilter = "none";
  /// Candidates visited by the tuple loop (after the prefilter).
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t surviving = 0;
  /// Rejections by the first failing stage, in fixed stage order.
  std::vector<StageCount> pruned_by;
  /// The first survivors in canonical encoding order.
  std::vector<Survivor> survivors;
  bool truncated = false;
  /// False when a chunk limit stopped the scan early.
  bool complete = true;
};

struct SearchOptions {
  unsigned threads = 1;
  std::size_t max_survivors = 10000;
  /// Re-check stored survivors through the axioms module.
  bool verify = true;
  /// Full scan only: progress file to resume from and update.
  std::string checkpoint;
  /// Full scan only: stop after this many chunks (for resumable runs).
  std::optional<std::uint32_t> chunk_limit;
};

/// Stage order used for pruning statistics regardless of query order.
std::vector<Axiom> stage_order(std::span<const Axiom> axioms);

/// Errors when n > 4 or the prefiltered tuple space exceeds 2^32.
SearchResult search_decomposed(Society society, std::span<const Axiom> axioms,
                               const Prefilter& prefilter, const SearchOptions& options = {});

inline constexpr std::uint32_t kFullScanChunks = 1u << 16;

/// Scans every n = 2 rule in 2^16 chunks of 2^16 encodings.
SearchResult full_space_scan_n2(std::span<const Axiom> axioms, const SearchOptions& options = {});

/// The rule named by a survivor encoding.
Rule survivor_rule(const SearchResult& result, const Survivor& survivor);

}  // namespace cif
