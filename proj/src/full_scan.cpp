// Exhaustive scan of all 2^32 rules at n = 2.
//
// A rule is held as two 16-bit masks over the 16 profiles, m[i] bit p set
// when agent i is in J(profile p). Every axiom is then a handful of mask
// operations; the per-target axioms (C, MON, I) are looked up in
// precomputed 2^16-entry bitsets.

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "cif/search.hpp"
#include "search_internal.hpp"

namespace cif {

namespace {

constexpr int kProfiles = 16;

class MaskSet {
 public:
  MaskSet() : words_(1u << 10) {}
  void set(std::uint32_t m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63u); }
  bool test(std::uint32_t m) const { return ((words_[m >> 6] >> (m & 63u)) & 1u) != 0; }

 private:
  std::vector<std::uint64_t> words_;
};

bool in_opinion(int p, int voter, int target) {
  return ((p >> profile_bit(2, voter, target)) & 1) != 0;
}

int column_at(int p, int target) {
  return (in_opinion(p, 0, target) ? 1 : 0) | (in_opinion(p, 1, target) ? 2 : 0);
}

struct N2Context {
  // says[k][j]: profiles where j is in C_k.
  std::array<std::array<std::uint16_t, 2>, 2> says{};
  std::uint16_t symmetric = 0;
  std::uint16_t self_approver = 0;
  std::uint16_t self_disapprover = 0;
  std::uint16_t any_approval = 0;
  std::uint16_t any_disapproval = 0;
  std::array<MaskSet, 2> consensus;
  std::array<MaskSet, 2> monotone;
  std::array<MaskSet, 2> independent;
  // Low 16 encoding bits -> (agent 0 byte) | (agent 1 byte) << 8.
  std::vector<std::uint16_t> split;
};

N2Context build_context() {
  N2Context ctx;
  const Society society(2);
  for (int p = 0; p < kProfiles; ++p) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << p);
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (in_opinion(p, static_cast<int>(k), static_cast<int>(j))) ctx.says[k][j] |= bit;
      }
    }
    const Profile c = profile_at(society, static_cast<std::uint64_t>(p));
    if (!symmetric_pairs(c).empty()) ctx.symmetric |= bit;
    if (c.opinion(0).contains(0) || c.opinion(1).contains(1)) ctx.self_approver |= bit;
    if (!c.opinion(0).contains(0) || !c.opinion(1).contains(1)) ctx.self_disapprover |= bit;
    if (!c.opinion(0).empty() || !c.opinion(1).empty()) ctx.any_approval |= bit;
    if (c.opinion(0) != society.everyone() || c.opinion(1) != society.everyone()) {
      ctx.any_disapproval |= bit;
    }
  }
  for (std::size_t t = 0; t < 2; ++t) {
    const int target = static_cast<int>(t);
    auto& c_ok = ctx.consensus[t];
    auto& mon_ok = ctx.monotone[t];
    auto& ind_ok = ctx.independent[t];
    for (std::uint32_t m = 0; m < (1u << kProfiles); ++m) {
      auto in = [m](int p) { return ((m >> p) & 1u) != 0; };
      bool consensus = true;
      bool monotone = true;
      bool independent = true;
      std::array<int, 4> seen{-1, -1, -1, -1};
      for (int p = 0; p < kProfiles; ++p) {
        const int col = column_at(p, target);
        if (col == 3 && !in(p)) consensus = false;
        if (col == 0 && in(p)) consensus = false;
        for (int k = 0; k < 2; ++k) {
          if (in_opinion(p, k, target)) continue;
          const int q = p | (1 << profile_bit(2, k, target));
          if (in(p) && !in(q)) monotone = false;
        }
        auto& first = seen[static_cast<std::size_t>(col)];
        if (first < 0) {
          first = in(p) ? 1 : 0;
        } else if (first != (in(p) ? 1 : 0)) {
          independent = false;
        }
      }
      if (consensus) c_ok.set(m);
      if (monotone) mon_ok.set(m);
      if (independent) ind_ok.set(m);
    }
  }
  ctx.split.resize(1u << 16);
  for (std::uint32_t v = 0; v < (1u << 16); ++v) {
    std::uint16_t a = 0;
    std::uint16_t b = 0;
    for (int p = 0; p < 8; ++p) {
      if ((v >> (2 * p)) & 1u) a |= static_cast<std::uint16_t>(1u << p);
      if ((v >> (2 * p + 1)) & 1u) b |= static_cast<std::uint16_t>(1u << p);
    }
    ctx.split[v] = static_cast<std::uint16_t>(a | (b << 8));
  }
  return ctx;
}

const N2Context& context() {
  static const N2Context ctx = build_context();
  return ctx;
}

std::uint32_t interleave(std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  for (int p = 0; p < 8; ++p) {
    out |= ((a >> p) & 1u) << (2 * p);
    out |= ((b >> p) & 1u) << (2 * p + 1);
  }
  return out;
}

// Decisiveness features of one target's mask: bit k is "agent k decides
// it", bit 2 + k is "agent k semi-decides it".
std::uint32_t control_features(const N2Context& ctx, std::size_t target, std::uint16_t m) {
  std::uint32_t f = 0;
  for (std::size_t k = 0; k < 2; ++k) {
    const std::uint16_t said = ctx.says[k][target];
    if (m == said) f |= 1u << k;
    if ((said & ~m) == 0 || (m & ~said) == 0) f |= 1u << (2 + k);
  }
  return f;
}

bool control_passes(Axiom axiom, std::uint32_t f0, std::uint32_t f1) {
  auto dec = [](std::uint32_t f, int k) { return ((f >> k) & 1u) != 0; };
  auto semi = [](std::uint32_t f, int k) { return ((f >> (2 + k)) & 1u) != 0; };
  switch (axiom) {
    case Axiom::Decisiveness:
      return (dec(f0, 0) || dec(f1, 0)) && (dec(f0, 1) || dec(f1, 1));
    case Axiom::MinimalDecisiveness:
      return (dec(f0, 0) && dec(f1, 1)) || (dec(f1, 0) && dec(f0, 1));
    case Axiom::MinimalSemiDecisiveness:
      return (semi(f0, 0) && semi(f1, 1)) || (semi(f1, 0) && semi(f0, 1));
    default:
      return true;
  }
}

bool per_target(Axiom axiom, const N2Context& ctx, std::size_t target, std::uint16_t m) {
  switch (axiom) {
    case Axiom::Consensus:
      return ctx.consensus[target].test(m);
    case Axiom::Monotonicity:
      return ctx.monotone[target].test(m);
    case Axiom::Independence:
      return ctx.independent[target].test(m);
    default:
      return true;
  }
}

// Mask conditions split into a part on the fixed high bytes and a part on
// the free low bytes.
struct MaskTest {
  std::uint8_t sym, approval, disapproval, self_approver, self_disapprover;
  bool sym_high, pos_high, neg_high, lib_high;
};

MaskTest mask_test(const N2Context& ctx, std::uint16_t h0, std::uint16_t h1) {
  auto lo = [](std::uint16_t v) { return static_cast<std::uint8_t>(v & 0xffu); };
  const std::uint16_t hi = 0xff00u;
  const std::uint16_t some = h0 | h1;
  const std::uint16_t both = h0 & h1;
  return {lo(ctx.symmetric),
          lo(ctx.any_approval),
          lo(ctx.any_disapproval),
          lo(ctx.self_approver),
          lo(ctx.self_disapprover),
          ((h0 ^ h1) & ctx.symmetric & hi) == 0,
          (some & ctx.any_approval & hi) == (ctx.any_approval & hi),
          (both & ctx.any_disapproval & hi) == 0,
          (some & ctx.self_approver & hi) == (ctx.self_approver & hi) &&
              (both & ctx.self_disapprover & hi) == 0};
}

// The chunk fixes the outputs on profiles 8..15 (the high byte of each
// target mask); the loop runs over the low bytes a (target 1) and b
// (target 2). Each candidate gets one bit per stage, assembled from byte
// tables, and is charged to its lowest failing stage.
detail::ChunkResult scan_chunk(const N2Context& ctx, std::span<const Axiom> stages,
                               std::uint32_t chunk, std::size_t cap) {
  const std::size_t count = stages.size();
  detail::ChunkResult out;
  out.rejected.assign(count, 0);
  const std::uint16_t high = ctx.split[chunk];
  const auto h0 = static_cast<std::uint16_t>((high & 0xffu) << 8);
  const auto h1 = static_cast<std::uint16_t>(high & 0xff00u);

  // Stage positions of the mask conditions; 31 marks an absent stage.
  unsigned pos_sym = 31, pos_pos = 31, pos_neg = 31, pos_el = 31, pos_lib = 31;
  for (std::size_t s = 0; s < count; ++s) {
    const auto bit = static_cast<unsigned>(s);
    switch (stages[s]) {
      case Axiom::Symmetry: pos_sym = bit; break;
      case Axiom::ExtremeLiberalPos: pos_pos = bit; break;
      case Axiom::ExtremeLiberalNeg: pos_neg = bit; break;
      case Axiom::ExtremeLiberal: pos_el = bit; break;
      case Axiom::Liberal: pos_lib = bit; break;
      default: break;
    }
  }

  std::array<std::uint32_t, 256> a_pass{}, b_pass{}, a_feat{}, b_feat{};
  for (std::uint32_t v = 0; v < 256; ++v) {
    const auto m0 = static_cast<std::uint16_t>(h0 | v);
    const auto m1 = static_cast<std::uint16_t>(h1 | v);
    for (std::size_t s = 0; s < count; ++s) {
      if (per_target(stages[s], ctx, 0, m0)) a_pass[v] |= 1u << s;
      if (per_target(stages[s], ctx, 1, m1)) b_pass[v] |= 1u << s;
    }
    a_feat[v] = control_features(ctx, 0, m0);
    b_feat[v] = control_features(ctx, 1, m1) << 4;
  }
  std::array<std::uint32_t, 256> control{};
  for (std::uint32_t f = 0; f < 256; ++f) {
    for (std::size_t s = 0; s < count; ++s) {
      if (control_passes(stages[s], f & 0xfu, f >> 4)) control[f] |= 1u << s;
    }
  }
  const MaskTest t = mask_test(ctx, h0, h1);
  const std::uint32_t none_failed = 1u << count;

  std::vector<std::uint32_t> found;
  std::uint64_t visited = 0;
  auto visit = [&](std::uint32_t a, std::uint32_t b) {
    ++visited;
    const std::uint32_t some = a | b;
    const std::uint32_t both = a & b;
    const bool sym = t.sym_high && ((a ^ b) & t.sym) == 0;
    const bool pos = t.pos_high && (some & t.approval) == t.approval;
    const bool neg = t.neg_high && (both & t.disapproval) == 0;
    const bool lib = t.lib_high && (some & t.self_approver) == t.self_approver &&
                     (both & t.self_disapprover) == 0;
    std::uint32_t fail = static_cast<std::uint32_t>(!sym) << pos_sym |
                         static_cast<std::uint32_t>(!pos) << pos_pos |
                         static_cast<std::uint32_t>(!neg) << pos_neg |
                         static_cast<std::uint32_t>(!(pos && neg)) << pos_el |
                         static_cast<std::uint32_t>(!lib) << pos_lib;
    fail |= ~(a_pass[a] & b_pass[b] & control[a_feat[a] | b_feat[b]]);
    const auto first =
        static_cast<std::size_t>(std::countr_zero((fail & (none_failed - 1)) | none_failed));
    if (first < count) {
      ++out.rejected[first];
    } else {
      ++out.surviving;
      found.push_back((chunk << 16) | interleave(a, b));
    }
  };

  // Candidates outside the visited set fail stage 0 for a reason visible on
  // one byte alone: a per-target stage failing on that byte, or D / MD with
  // no decisive agent on either byte.
  const Axiom gate = stages.front();
  if (gate == Axiom::Decisiveness || gate == Axiom::MinimalDecisiveness) {
    std::vector<std::uint32_t> rows, cols;
    for (std::uint32_t v = 0; v < 256; ++v) {
      if ((a_feat[v] & 0x3u) != 0) rows.push_back(v);
      if ((b_feat[v] & 0x30u) != 0) cols.push_back(v);
    }
    for (std::uint32_t a : rows) {
      for (std::uint32_t b = 0; b < 256; ++b) visit(a, b);
    }
    for (std::uint32_t a = 0; a < 256; ++a) {
      if ((a_feat[a] & 0x3u) != 0) continue;
      for (std::uint32_t b : cols) visit(a, b);
    }
  } else {
    const bool gated = gate == Axiom::Consensus || gate == Axiom::Monotonicity ||
                       gate == Axiom::Independence;
    std::vector<std::uint32_t> rows, cols;
    for (std::uint32_t v = 0; v < 256; ++v) {
      if (!gated || (a_pass[v] & 1u) != 0) rows.push_back(v);
      if (!gated || (b_pass[v] & 1u) != 0) cols.push_back(v);
    }
    for (std::uint32_t a : rows) {
      for (std::uint32_t b : cols) visit(a, b);
    }
  }
  if (count > 0) out.rejected[0] += (1u << 16) - visited;
  std::sort(found.begin(), found.end());
  if (found.size() > cap) found.resize(cap);
  for (std::uint32_t e : found) out.survivors.push_back(encode_full(e));
  out.examined = 1u << 16;
  return out;
}

nlohmann::ordered_json checkpoint_json(const SearchResult& r, std::uint32_t next_chunk) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  nlohmann::ordered_json axioms = nlohmann::ordered_json::array();
  for (Axiom a : r.axioms) axioms.push_back(std::string(axiom_cli_name(a)));
  j["axioms"] = axioms;
  j["next_chunk"] = next_chunk;
  j["examined"] = r.examined;
  j["surviving"] = r.surviving;
  j["truncated"] = r.truncated;
  nlohmann::ordered_json pruned = nlohmann::ordered_json::array();
  for (const auto& s : r.pruned_by) pruned.push_back(s.rejected);
  j["pruned_by"] = pruned;
  nlohmann::ordered_json survivors = nlohmann::ordered_json::array();
  for (const auto& s : r.survivors) survivors.push_back(s.encoding);
  j["survivors"] = survivors;
  return j;
}

void save_checkpoint(const std::string& path, const SearchResult& r, std::uint32_t next_chunk) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write checkpoint " + tmp);
    out << checkpoint_json(r, next_chunk).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

// Restores progress into `r`; returns the first chunk still to scan.
std::uint32_t load_checkpoint(const std::string& path, SearchResult& r) {
  std::ifstream in(path);
  if (!in) return 0;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("unreadable checkpoint " + path + ": " + e.what());
  }
  std::vector<std::string> axioms;
  for (Axiom a : r.axioms) axioms.emplace_back(axiom_cli_name(a));
  if (j.value("version", 0) != 1 || j.at("axioms").get<std::vector<std::string>>() != axioms) {
    throw Error("checkpoint " + path + " belongs to a different scan");
  }
  r.examined = j.at("examined").get<std::uint64_t>();
  r.surviving = j.at("surviving").get<std::uint64_t>();
  r.truncated = j.at("truncated").get<bool>();
  const auto pruned = j.at("pruned_by").get<std::vector<std::uint64_t>>();
  if (pruned.size() != r.pruned_by.size()) throw Error("checkpoint stage count mismatch");
  r.pruned = 0;
  for (std::size_t s = 0; s < pruned.size(); ++s) {
    r.pruned_by[s].rejected = pruned[s];
    r.pruned += pruned[s];
  }
  r.survivors.clear();
  for (const auto& e : j.at("survivors")) r.survivors.push_back({e.get<std::string>(), std::nullopt});
  return j.at("next_chunk").get<std::uint32_t>();
}

}  // namespace

SearchResult full_space_scan_n2(std::span<const Axiom> axioms, const SearchOptions& options) {
  SearchResult result = detail::empty_result(axioms, RuleClass::FullN2, 2);
  const std::vector<Axiom> stages = stage_order(result.axioms);
  const N2Context& ctx = context();

  std::uint32_t next = 0;
  if (!options.checkpoint.empty()) next = load_checkpoint(options.checkpoint, result);

  std::uint32_t budget = options.chunk_limit.value_or(kFullScanChunks);
  constexpr std::uint32_t kBatch = 1024;
  while (next < kFullScanChunks && budget > 0) {
    const std::uint32_t count = std::min({kBatch, kFullScanChunks - next, budget});
    auto chunks = detail::run_chunks(next, count, options.threads, [&](std::uint64_t chunk) {
      return scan_chunk(ctx, stages, static_cast<std::uint32_t>(chunk), options.max_survivors);
    });
    for (const auto& c : chunks) detail::merge_chunk(result, c, options.max_survivors);
    next += count;
    budget -= count;
    if (!options.checkpoint.empty()) save_checkpoint(options.checkpoint, result, next);
  }
  result.complete = next == kFullScanChunks;
  if (result.complete) detail::finalize(result, options);
  return result;
}

}  // namespace cif
