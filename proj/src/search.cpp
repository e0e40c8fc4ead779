#include "cif/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "search_internal.hpp"

namespace cif {

namespace {

constexpr std::array<Axiom, 11> kStageOrder{
    Axiom::Decisiveness,      Axiom::MinimalDecisiveness, Axiom::MinimalSemiDecisiveness,
    Axiom::Consensus,         Axiom::Monotonicity,        Axiom::Symmetry,
    Axiom::Independence,      Axiom::ExtremeLiberalPos,   Axiom::ExtremeLiberalNeg,
    Axiom::ExtremeLiberal,    Axiom::Liberal,
};

bool table_monotone(TruthTable g, int n) {
  const int entries = 1 << n;
  for (int x = 0; x < entries; ++x) {
    if (!((g >> x) & 1u)) continue;
    for (int b = 0; b < n; ++b) {
      if (!((g >> (x | (1 << b))) & 1u)) return false;
    }
  }
  return true;
}

TruthTable swap_inputs(TruthTable g, int n, int a, int b) {
  TruthTable out = 0;
  const int entries = 1 << n;
  for (int x = 0; x < entries; ++x) {
    if (!((g >> x) & 1u)) continue;
    int y = x & ~((1 << a) | (1 << b));
    if (x & (1 << a)) y |= 1 << b;
    if (x & (1 << b)) y |= 1 << a;
    out |= TruthTable{1} << y;
  }
  return out;
}

// Per-(target, table) facts that the tuple loop combines.
struct TableInfo {
  TruthTable table = 0;
  bool monotone = false;
  bool boundary = false;
  int projection = -1;
  std::uint32_t semi = 0;
  bool has_zero = false;
  bool zero_self = false;
  bool zero_nonzero = false;
  bool has_one = false;
  bool one_not_self = false;
  bool one_not_all = false;
};

TableInfo describe(int target, TruthTable g, int n) {
  TableInfo info;
  info.table = g;
  const int entries = 1 << n;
  const int all = entries - 1;
  info.monotone = table_monotone(g, n);
  info.boundary = !(g & 1u) && ((g >> all) & 1u);
  for (int i = 0; i < n; ++i) {
    bool projection = true;
    bool above = true;  // x_i = 1 implies g = 1
    bool below = true;  // x_i = 0 implies g = 0
    for (int x = 0; x < entries; ++x) {
      const bool bit = (x >> i) & 1;
      const bool value = (g >> x) & 1u;
      if (bit != value) projection = false;
      if (bit && !value) above = false;
      if (!bit && value) below = false;
    }
    if (projection) info.projection = i;
    if (above || below) info.semi |= 1u << i;
  }
  for (int x = 0; x < entries; ++x) {
    const bool value = (g >> x) & 1u;
    const bool self = (x >> target) & 1;
    if (!value) {
      info.has_zero = true;
      info.zero_self = info.zero_self || self;
      info.zero_nonzero = info.zero_nonzero || x != 0;
    } else {
      info.has_one = true;
      info.one_not_self = info.one_not_self || !self;
      info.one_not_all = info.one_not_all || x != all;
    }
  }
  return info;
}

// Two distinct controllers semidecisive over two distinct targets.
bool two_by_two(std::span<const std::uint32_t> controllers_of) {
  const std::size_t n = controllers_of.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!controllers_of[k]) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k || !controllers_of[l]) continue;
      const std::uint32_t a = controllers_of[k];
      const std::uint32_t b = controllers_of[l];
      if (std::popcount(a | b) >= 2) return true;
    }
  }
  return false;
}

struct DecomposedSpace {
  int n;
  std::vector<std::vector<TableInfo>> lists;  // per target
  // swapped[j][k][idx] = g_j at idx with inputs j, k exchanged (k > j).
  std::vector<std::vector<std::vector<TruthTable>>> swapped;
  std::vector<Axiom> stages;
};

// Index of the first failing stage, or -1.
int first_failure(const DecomposedSpace& space, std::span<const std::uint32_t> idx) {
  const std::size_t n = static_cast<std::size_t>(space.n);
  std::array<const TableInfo*, 4> g{};
  for (std::size_t i = 0; i < n; ++i) g[i] = &space.lists[i][idx[i]];
  auto all_of = [&](auto pred) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!pred(*g[i])) return false;
    }
    return true;
  };
  auto any_of = [&](auto pred) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(*g[i])) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < space.stages.size(); ++s) {
    bool ok = true;
    switch (space.stages[s]) {
      case Axiom::Decisiveness: {
        std::uint32_t covered = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (g[i]->projection >= 0) covered |= 1u << g[i]->projection;
        }
        ok = covered == (1u << n) - 1u;
        break;
      }
      case Axiom::MinimalDecisiveness: {
        std::array<std::uint32_t, 4> controllers{};
        for (std::size_t i = 0; i < n; ++i) {
          controllers[i] = g[i]->projection >= 0 ? 1u << g[i]->projection : 0u;
        }
        ok = two_by_two(std::span(controllers.data(), n));
        break;
      }
      case Axiom::MinimalSemiDecisiveness: {
        std::array<std::uint32_t, 4> controllers{};
        for (std::size_t i = 0; i < n; ++i) controllers[i] = g[i]->semi;
        ok = two_by_two(std::span(controllers.data(), n));
        break;
      }
      case Axiom::Consensus:
        ok = all_of([](const TableInfo& t) { return t.boundary; });
        break;
      case Axiom::Monotonicity:
        ok = all_of([](const TableInfo& t) { return t.monotone; });
        break;
      case Axiom::Symmetry:
        // A symmetric pair (j, k) always has col_k = col_j with bits j, k
        // exchanged, and every col_j occurs in some symmetric profile.
        for (std::size_t j = 0; j < n && ok; ++j) {
          for (std::size_t k = j + 1; k < n && ok; ++k) {
            ok = space.swapped[j][k][idx[j]] == g[k]->table;
          }
        }
        break;
      case Axiom::Independence:
        break;
      case Axiom::ExtremeLiberalPos:
      case Axiom::ExtremeLiberalNeg:
      case Axiom::ExtremeLiberal: {
        // Columns are independent, so J can be emptied by a profile with an
        // approval iff every g_i has a zero and one of them has a nonzero one.
        const Axiom a = space.stages[s];
        if (a != Axiom::ExtremeLiberalNeg) {
          ok = !(all_of([](const TableInfo& t) { return t.has_zero; }) &&
                 any_of([](const TableInfo& t) { return t.zero_nonzero; }));
        }
        if (ok && a != Axiom::ExtremeLiberalPos) {
          ok = !(all_of([](const TableInfo& t) { return t.has_one; }) &&
                 any_of([](const TableInfo& t) { return t.one_not_all; }));
        }
        break;
      }
      case Axiom::Liberal:
        ok = !(all_of([](const TableInfo& t) { return t.has_zero; }) &&
               any_of([](const TableInfo& t) { return t.zero_self; })) &&
             !(all_of([](const TableInfo& t) { return t.has_one; }) &&
               any_of([](const TableInfo& t) { return t.one_not_self; }));
        break;
    }
    if (!ok) return static_cast<int>(s);
  }
  return -1;
}

void recheck_survivors(const SearchResult& result) {
  for (const Survivor& s : result.survivors) {
    const Rule rule = survivor_rule(result, s);
    RuleTable table(rule);
    for (Axiom a : result.axioms) {
      const AxiomReport report = check(table, a, CheckOptions{1, false});
      if (!report.satisfied) {
        throw std::logic_error("search survivor " + s.encoding + " fails " +
                               std::string(axiom_id(a)) + " on re-check");
      }
    }
  }
}

void name_survivors(SearchResult& result, Society society) {
  if (result.survivors.empty()) return;
  std::map<std::vector<AgentSet>, std::string> names;
  for (const Rule& r : catalog(society)) names.emplace(tabulate(r), r.name());
  for (Survivor& s : result.survivors) {
    auto it = names.find(tabulate(survivor_rule(result, s)));
    if (it != names.end()) s.catalog_name = it->second;
  }
}

}  // namespace

std::vector<TruthTable> monotone_tables(int n, bool require_boundary) {
  if (n < 1 || n > 4) throw Error("monotone_tables supports 1 <= n <= 4");
  // A function is monotone iff its two cofactors on the top input are
  // monotone and ordered.
  std::vector<TruthTable> level{0, 1};
  for (int vars = 1; vars <= n; ++vars) {
    const int half = 1 << (vars - 1);
    std::vector<TruthTable> next;
    for (TruthTable low : level) {
      for (TruthTable high : level) {
        if ((low & ~high) == 0) next.push_back(low | (high << half));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  if (require_boundary) {
    const int all = (1 << n) - 1;
    std::erase_if(level, [all](TruthTable g) { return (g & 1u) || !((g >> all) & 1u); });
  }
  return level;
}

std::vector<TruthTable> projection_tables(int n) {
  if (n < 1 || n > kMaxDecomposedAgents) throw Error("projection_tables supports 1 <= n <= 6");
  std::vector<TruthTable> out;
  for (int i = 0; i < n; ++i) {
    TruthTable g = 0;
    for (int x = 0; x < (1 << n); ++x) {
      if ((x >> i) & 1) g |= TruthTable{1} << x;
    }
    out.push_back(g);
  }
  return out;
}

bool DecisiveStructure::total() const {
  return std::all_of(targets.begin(), targets.end(), [](const auto& t) { return !t.empty(); });
}

std::optional<std::vector<int>> DecisiveStructure::permutation() const {
  if (!total()) return std::nullopt;
  std::vector<int> out;
  for (const auto& t : targets) {
    if (t.size() != 1) return std::nullopt;
    out.push_back(t.front());
  }
  return out;
}

DecisiveStructure decisive_structure_decomposed(std::span<const TruthTable> tables, int n) {
  if (tables.size() != static_cast<std::size_t>(n)) throw Error("need one table per agent");
  const auto projections = projection_tables(n);
  DecisiveStructure out;
  out.targets.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (tables[static_cast<std::size_t>(j)] == projections[static_cast<std::size_t>(i)]) {
        out.targets[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }
  return out;
}

Prefilter prefilter_by_name(const std::string& name, int n) {
  if (name == "none") return {name, [](int, TruthTable) { return true; }};
  if (name == "monotone") {
    return {name, [n](int, TruthTable g) { return table_monotone(g, n); }};
  }
  if (name == "monotone-boundary") {
    const int all = (1 << n) - 1;
    return {name, [n, all](int, TruthTable g) {
              return table_monotone(g, n) && !(g & 1u) && ((g >> all) & 1u);
            }};
  }
  if (name == "projection") {
    auto projections = projection_tables(n);
    return {name, [projections](int, TruthTable g) {
              return std::find(projections.begin(), projections.end(), g) != projections.end();
            }};
  }
  throw Error("unknown prefilter '" + name + "'");
}

std::string_view rule_class_name(RuleClass rule_class) {
  return rule_class == RuleClass::Decomposed ? "decomposed" : "full";
}

std::vector<Axiom> stage_order(std::span<const Axiom> axioms) {
  std::vector<Axiom> out;
  for (Axiom a : kStageOrder) {
    if (std::find(axioms.begin(), axioms.end(), a) != axioms.end()) out.push_back(a);
  }
  return out;
}

Rule survivor_rule(const SearchResult& result, const Survivor& survivor) {
  Society society(result.n);
  if (result.rule_class == RuleClass::FullN2) {
    return Rule(rule::FullTable{decode_full(survivor.encoding)}, society);
  }
  return Rule(rule::DecomposedTable{decode_decomposed(survivor.encoding, result.n)}, society);
}

namespace detail {

void merge_chunk(SearchResult& into, const ChunkResult& chunk, std::size_t max_survivors) {
  into.examined += chunk.examined;
  for (std::size_t s = 0; s < chunk.rejected.size(); ++s) {
    into.pruned_by[s].rejected += chunk.rejected[s];
    into.pruned += chunk.rejected[s];
  }
  into.surviving += chunk.surviving;
  for (const auto& e : chunk.survivors) {
    if (into.survivors.size() < max_survivors) {
      into.survivors.push_back({e, std::nullopt});
    } else {
      into.truncated = true;
    }
  }
  if (chunk.surviving > chunk.survivors.size()) into.truncated = true;
}

std::vector<ChunkResult> run_chunks(std::uint64_t first, std::uint64_t count, unsigned threads,
                                    const std::function<ChunkResult(std::uint64_t)>& work) {
  std::vector<ChunkResult> results(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = work(first + i);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

void finalize(SearchResult& result, const SearchOptions& options) {
  if (options.verify) recheck_survivors(result);
  if (result.n <= kExhaustiveDefault) name_survivors(result, Society(result.n));
}

SearchResult empty_result(std::span<const Axiom> axioms, RuleClass rule_class, int n) {
  if (axioms.empty()) throw Error("search needs at least one axiom");
  SearchResult result;
  for (Axiom a : axioms) {
    if (std::find(result.axioms.begin(), result.axioms.end(), a) == result.axioms.end()) {
      result.axioms.push_back(a);
    }
  }
  result.rule_class = rule_class;
  result.n = n;
  for (Axiom a : stage_order(result.axioms)) result.pruned_by.push_back({a, 0});
  return result;
}

}  // namespace detail

SearchResult search_decomposed(Society society, std::span<const Axiom> axioms,
                               const Prefilter& prefilter, const SearchOptions& options) {
  const int n = society.size();
  if (n > 4) throw Error("decomposed search supports n <= 4");
  SearchResult result = detail::empty_result(axioms, RuleClass::Decomposed, n);
  result.prefilter = prefilter.name;

  DecomposedSpace space;
  space.n = n;
  space.stages = stage_order(result.axioms);
  const std::uint64_t tables = std::uint64_t{1} << (1 << n);
  long double product = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<TableInfo> list;
    for (std::uint64_t g = 0; g < tables; ++g) {
      if (prefilter.keep(i, g)) list.push_back(describe(i, g, n));
    }
    product *= static_cast<long double>(list.size());
    space.lists.push_back(std::move(list));
  }
  if (product > static_cast<long double>(std::uint64_t{1} << 32)) {
    throw Error("decomposed space of " + std::to_string(static_cast<double>(product)) +
                " tuples is too large; use a prefilter");
  }
  space.swapped.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    space.swapped[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
    for (int k = j + 1; k < n; ++k) {
      auto& sw = space.swapped[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      for (const auto& info : space.lists[static_cast<std::size_t>(j)]) {
        sw.push_back(swap_inputs(info.table, n, j, k));
      }
    }
  }

  const auto total = static_cast<std::uint64_t>(product);
  constexpr std::uint64_t kChunk = 1u << 16;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  const std::size_t stage_count = space.stages.size();
  const std::size_t cap = options.max_survivors;

  auto work = [&](std::uint64_t chunk) {
    detail::ChunkResult out;
    out.rejected.assign(stage_count, 0);
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    // Mixed radix, target 0 least significant, so flat order is encoding order.
    std::array<std::uint32_t, 4> idx{};
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < space.lists.size(); ++i) {
      const auto radix = space.lists[i].size();
      idx[i] = static_cast<std::uint32_t>(rest % radix);
      rest /= radix;
    }
    for (std::uint64_t f = begin; f < end; ++f) {
      ++out.examined;
      const int failed = first_failure(space, std::span(idx.data(), static_cast<std::size_t>(n)));
      if (failed >= 0) {
        ++out.rejected[static_cast<std::size_t>(failed)];
      } else {
        ++out.surviving;
        if (out.survivors.size() < cap) {
          std::vector<TruthTable> g(static_cast<std::size_t>(n));
          for (std::size_t i = 0; i < g.size(); ++i) g[i] = space.lists[i][idx[i]].table;
          out.survivors.push_back(encode_decomposed(g, n));
        }
      }
      for (std::size_t i = 0; i < space.lists.size(); ++i) {
        if (++idx[i] < space.lists[i].size()) break;
        idx[i] = 0;
      }
    }
    return out;
  };

  for (const auto& chunk : detail::run_chunks(0, chunks, options.threads, work)) {
    detail::merge_chunk(result, chunk, cap);
  }
  detail::finalize(result, options);
  return result;
}

}  // namespace cif
