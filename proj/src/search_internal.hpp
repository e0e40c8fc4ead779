#pragma once

// Chunked execution shared by the decomposed search and the full scan.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cif/search.hpp"

namespace cif::detail {

struct ChunkResult {
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> rejected;  // per stage
  std::uint64_t surviving = 0;
  std::vector<std::string> survivors;   // encodings, canonical order
};

/// Runs work(first) .. work(first + count - 1) on up to `threads` workers and
/// returns the results in chunk order.
std::vector<ChunkResult> run_chunks(std::uint64_t first, std::uint64_t count, unsigned threads,
                                    const std::function<ChunkResult(std::uint64_t)>& work);

void merge_chunk(SearchResult& into, const ChunkResult& chunk, std::size_t max_survivors);
SearchResult empty_result(std::span<const Axiom> axioms, RuleClass rule_class, int n);
void finalize(SearchResult& result, const SearchOptions& options);

}  // namespace cif::detail
