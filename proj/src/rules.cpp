#include "cif/rules.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace cif {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

AgentSet self_approvers(const Profile& c) {
  AgentSet out;
  for (int i = 0; i < c.size(); ++i) {
    if (c.opinion(i).contains(i)) out = out.with(i);
  }
  return out;
}

AgentSet unanimity(const Profile& c) {
  AgentSet out = c.society().everyone();
  for (AgentSet opinion : c.opinions()) out = out & opinion;
  return out;
}

AgentSet inclusive(const Profile& c) {
  AgentSet out;
  for (AgentSet opinion : c.opinions()) out = out | opinion;
  return out;
}

std::uint32_t column_bits(const Profile& c, int target) { return column(c, target).bits(); }

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw Error(std::string("invalid hex digit '") + c + "'");
}

std::string bits_to_hex(const std::vector<bool>& bits) {
  const std::size_t digits = (bits.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int value = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t bit = 4 * d + b;
      if (bit < bits.size() && bits[bit]) value |= 1 << b;
    }
    out[digits - 1 - d] = "0123456789abcdef"[value];
  }
  return out;
}

std::vector<bool> hex_to_bits(std::string_view hex, std::size_t bit_count) {
  const std::size_t digits = (bit_count + 3) / 4;
  if (hex.size() != digits) {
    throw Error("table encoding needs " + std::to_string(digits) + " hex digits, got " +
                std::to_string(hex.size()));
  }
  std::vector<bool> bits(digits * 4);
  for (std::size_t d = 0; d < digits; ++d) {
    int value = hex_digit(hex[digits - 1 - d]);
    for (std::size_t b = 0; b < 4; ++b) bits[4 * d + b] = ((value >> b) & 1) != 0;
  }
  for (std::size_t bit = bit_count; bit < bits.size(); ++bit) {
    if (bits[bit]) throw Error("table encoding has bits beyond the table");
  }
  bits.resize(bit_count);
  return bits;
}

void validate(const RuleSpec& spec, Society society) {
  const int n = society.size();
  std::visit(overloaded{
                 [&](const rule::Consent& r) {
                   if (r.s < 1 || r.s > n || r.t < 1 || r.t > n) {
                     throw Error("consent thresholds must lie in 1..n");
                   }
                 },
                 [&](const rule::Sigma& r) {
                   if (r.image.size() != static_cast<std::size_t>(n)) {
                     throw Error("permutation must have n entries");
                   }
                   std::vector<bool> seen(static_cast<std::size_t>(n));
                   for (int v : r.image) {
                     if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
                       throw Error("sigma is not a permutation of the agents");
                     }
                     seen[static_cast<std::size_t>(v)] = true;
                   }
                 },
                 [&](const rule::Constant& r) {
                   if (!society.is_subset(r.set)) throw Error("constant set outside the society");
                 },
                 [&](const rule::Dictator& r) {
                   if (!society.is_agent(r.agent)) throw Error("dictator outside the society");
                 },
                 [&](const rule::CrossDecisive&) {
                   if (n != 2) throw Error("cross-decisive is defined for n=2 only");
                 },
                 [&](const rule::FullTable&) {
                   if (n != 2) throw Error("full tables are defined for n=2 only");
                 },
                 [&](const rule::DecomposedTable& r) {
                   if (n > kMaxDecomposedAgents) {
                     throw Error("decomposed tables support n <= " +
                                 std::to_string(kMaxDecomposedAgents));
                   }
                   if (r.tables.size() != static_cast<std::size_t>(n)) {
                     throw Error("decomposed rule needs one table per agent");
                   }
                   const int entries = 1 << n;
                   if (entries < 64) {
                     for (TruthTable t : r.tables) {
                       if (t >> entries) throw Error("truth table has more than 2^n entries");
                     }
                   }
                 },
                 [](const auto&) {},
             },
             spec);
}

}  // namespace

Rule::Rule(RuleSpec spec, Society society) : spec_(std::move(spec)), society_(society) {
  validate(spec_, society_);
}

std::string Rule::name() const {
  const int n = society_.size();
  return std::visit(
      overloaded{
          [](const rule::StrongLiberal&) -> std::string { return "strong-liberal"; },
          [](const rule::Unanimity&) -> std::string { return "unanimity"; },
          [](const rule::Inclusive&) -> std::string { return "inclusive"; },
          [](const rule::Consent& r) -> std::string {
            return "consent:" + std::to_string(r.s) + "," + std::to_string(r.t);
          },
          [](const rule::Sigma& r) -> std::string {
            std::string out = "sigma:";
            for (std::size_t i = 0; i < r.image.size(); ++i) {
              if (i > 0) out += ',';
              out += std::to_string(r.image[i] + 1);
            }
            return out;
          },
          [](const rule::Constant& r) -> std::string { return "constant:" + format_set(r.set); },
          [](const rule::Dictator& r) -> std::string {
            return "dictator:" + std::to_string(r.agent + 1);
          },
          [](const rule::Swap&) -> std::string { return "swap"; },
          [](const rule::ThresholdHalf&) -> std::string { return "threshold-half"; },
          [](const rule::ConstantAll&) -> std::string { return "constant-all"; },
          [](const rule::ConsensusFallbackInclusive&) -> std::string {
            return "consensus-fallback-inclusive";
          },
          [](const rule::FirstVoter&) -> std::string { return "first-voter"; },
          [](const rule::ConsensusUnanimityCollapse&) -> std::string {
            return "consensus-unanimity-collapse";
          },
          [](const rule::CrossDecisive&) -> std::string { return "cross-decisive"; },
          [n](const rule::DecomposedTable& r) -> std::string {
            return "table:" + encode_decomposed(r.tables, n);
          },
          [](const rule::FullTable& r) -> std::string { return "table:" + encode_full(r.bits); },
      },
      spec_);
}

AgentSet Rule::operator()(const Profile& c) const {
  if (c.size() != society_.size()) {
    throw Error("profile has n=" + std::to_string(c.size()) + " but rule " + name() +
                " is bound to n=" + std::to_string(society_.size()));
  }
  const int n = society_.size();
  const AgentSet everyone = society_.everyone();
  return std::visit(
      overloaded{
          [&](const rule::StrongLiberal&) { return self_approvers(c); },
          [&](const rule::Unanimity&) { return unanimity(c); },
          [&](const rule::Inclusive&) { return inclusive(c); },
          [&](const rule::Consent& r) {
            AgentSet out;
            for (int i = 0; i < n; ++i) {
              const int approvals = column(c, i).size();
              const bool in = c.opinion(i).contains(i) ? approvals >= r.s : n - approvals < r.t;
              if (in) out = out.with(i);
            }
            return out;
          },
          [&](const rule::Sigma& r) {
            AgentSet out;
            for (int i = 0; i < n; ++i) {
              const int target = r.image[static_cast<std::size_t>(i)];
              if (c.opinion(i).contains(target)) out = out.with(target);
            }
            return out;
          },
          [&](const rule::Constant& r) { return r.set; },
          [&](const rule::Dictator& r) { return c.opinion(r.agent); },
          [&](const rule::Swap&) {
            AgentSet stl = self_approvers(c);
            if (stl.empty() || stl == everyone) return stl;
            return everyone - stl;
          },
          [&](const rule::ThresholdHalf&) {
            AgentSet out;
            for (int i = 0; i < n; ++i) {
              const int approvals = column(c, i).size();
              if ((approvals > 0 && 2 * approvals < n) || approvals == n) out = out.with(i);
            }
            return out;
          },
          [&](const rule::ConstantAll&) { return everyone; },
          [&](const rule::ConsensusFallbackInclusive&) {
            ConsensusTrace trace = consensus_iterate(c);
            return trace.stages.front().empty() ? inclusive(c) : trace.fixed_point;
          },
          [&](const rule::FirstVoter&) {
            AgentSet decided = unanimity(c);
            if (!decided.empty()) return decided;
            if (c.opinion(0) == everyone) return AgentSet{};
            AgentSet others;
            for (int k = 1; k < n; ++k) others = others | c.opinion(k);
            return c.opinion(0) - others;
          },
          [&](const rule::ConsensusUnanimityCollapse&) {
            ConsensusTrace trace = consensus_iterate(c);
            return trace.reached_everyone_at ? unanimity(c) : trace.fixed_point;
          },
          [&](const rule::CrossDecisive&) {
            AgentSet out;
            if (c.opinion(0).contains(1)) out = out.with(1);
            if (c.opinion(1).contains(0)) out = out.with(0);
            return out;
          },
          [&](const rule::DecomposedTable& r) {
            AgentSet out;
            for (int i = 0; i < n; ++i) {
              if ((r.tables[static_cast<std::size_t>(i)] >> column_bits(c, i)) & 1u) out = out.with(i);
            }
            return out;
          },
          [&](const rule::FullTable& r) {
            const auto p = static_cast<std::uint32_t>(profile_index(c));
            return AgentSet(static_cast<std::uint16_t>((r.bits >> (2 * p)) & 3u));
          },
      },
      spec_);
}

AgentSet evaluate(const Rule& rule, const Profile& profile) { return rule(profile); }

Rule parse_rule(std::string_view text, Society society) {
  const int n = society.size();
  const std::size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  auto no_arg = [&](RuleSpec spec) {
    if (has_arg) throw Error("rule '" + std::string(head) + "' takes no parameters");
    return Rule(std::move(spec), society);
  };

  if (head == "strong-liberal") return no_arg(rule::StrongLiberal{});
  if (head == "unanimity") return no_arg(rule::Unanimity{});
  if (head == "inclusive") return no_arg(rule::Inclusive{});
  if (head == "swap") return no_arg(rule::Swap{});
  if (head == "threshold-half") return no_arg(rule::ThresholdHalf{});
  if (head == "constant-all") return no_arg(rule::ConstantAll{});
  if (head == "consensus-fallback-inclusive") return no_arg(rule::ConsensusFallbackInclusive{});
  if (head == "first-voter") return no_arg(rule::FirstVoter{});
  if (head == "consensus-unanimity-collapse") return no_arg(rule::ConsensusUnanimityCollapse{});
  if (head == "cross-decisive") return no_arg(rule::CrossDecisive{});

  if (!has_arg || arg.empty()) throw Error("unknown rule '" + std::string(text) + "'");
  if (head == "consent") {
    auto values = parse_int_list(arg, "consent threshold");
    if (values.size() != 2) throw Error("consent takes two thresholds: consent:s,t");
    return Rule(rule::Consent{values[0], values[1]}, society);
  }
  if (head == "sigma") {
    auto values = parse_int_list(arg, "permutation entry");
    for (int& v : values) --v;
    return Rule(rule::Sigma{values}, society);
  }
  if (head == "constant") return Rule(rule::Constant{parse_set(arg, society)}, society);
  if (head == "dictator") return Rule(rule::Dictator{parse_int(arg, "dictator") - 1}, society);
  if (head == "table") {
    if (n == 2 && arg.size() == 8) return Rule(rule::FullTable{decode_full(arg)}, society);
    return Rule(rule::DecomposedTable{decode_decomposed(arg, n)}, society);
  }
  throw Error("unknown rule '" + std::string(text) + "'");
}

ConsensusTrace consensus_iterate(const Profile& c) {
  ConsensusTrace trace;
  const AgentSet everyone = c.society().everyone();
  AgentSet stage = unanimity(c);
  trace.stages.push_back(stage);
  while (true) {
    AgentSet agreed;
    if (!stage.empty()) {
      agreed = everyone;
      for (int k : stage.members()) agreed = agreed & c.opinion(k);
    }
    AgentSet next = stage | agreed;
    trace.stages.push_back(next);
    if (next == everyone && !trace.reached_everyone_at) {
      trace.reached_everyone_at = trace.stages.size() - 1;
    }
    if (next == stage) break;
    stage = next;
  }
  trace.fixed_point = stage;
  return trace;
}

std::vector<AgentSet> tabulate(const Rule& rule, bool allow_large) {
  std::vector<AgentSet> out;
  auto range = enumerate_profiles(rule.society(), allow_large);
  out.reserve(range.size());
  for (const Profile& p : range) out.push_back(rule(p));
  return out;
}

std::vector<Rule> catalog(Society society) {
  const int n = society.size();
  std::vector<Rule> out;
  out.emplace_back(rule::StrongLiberal{}, society);
  out.emplace_back(rule::Unanimity{}, society);
  out.emplace_back(rule::Inclusive{}, society);
  if (n == 2) out.emplace_back(rule::CrossDecisive{}, society);
  out.emplace_back(rule::Swap{}, society);
  out.emplace_back(rule::ThresholdHalf{}, society);
  out.emplace_back(rule::ConstantAll{}, society);
  out.emplace_back(rule::ConsensusFallbackInclusive{}, society);
  out.emplace_back(rule::FirstVoter{}, society);
  out.emplace_back(rule::ConsensusUnanimityCollapse{}, society);
  for (int d = 0; d < n; ++d) out.emplace_back(rule::Dictator{d}, society);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.emplace_back(rule::Sigma{perm}, society);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; t <= n; ++t) out.emplace_back(rule::Consent{s, t}, society);
  }
  for (std::uint32_t bits = 0; bits <= society.everyone().bits(); ++bits) {
    out.emplace_back(rule::Constant{AgentSet(static_cast<std::uint16_t>(bits))}, society);
  }
  return out;
}

std::optional<std::string> catalog_name(std::span<const AgentSet> outputs, Society society) {
  if (outputs.size() != society.profile_count()) return std::nullopt;
  for (const Rule& r : catalog(society)) {
    bool same = true;
    std::uint64_t p = 0;
    for (const Profile& profile : ProfileRange(society)) {
      if (r(profile) != outputs[p++]) {
        same = false;
        break;
      }
    }
    if (same) return r.name();
  }
  return std::nullopt;
}

std::string encode_decomposed(std::span<const TruthTable> tables, int n) {
  const std::size_t entries = std::size_t{1} << n;
  std::vector<bool> bits(tables.size() * entries);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t x = 0; x < entries; ++x) bits[i * entries + x] = ((tables[i] >> x) & 1u) != 0;
  }
  return bits_to_hex(bits);
}

std::vector<TruthTable> decode_decomposed(std::string_view hex, int n) {
  if (n < 1 || n > kMaxDecomposedAgents) throw Error("decomposed tables need 1 <= n <= 6");
  const std::size_t entries = std::size_t{1} << n;
  auto bits = hex_to_bits(hex, static_cast<std::size_t>(n) * entries);
  std::vector<TruthTable> tables(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t x = 0; x < entries; ++x) {
      if (bits[i * entries + x]) tables[i] |= TruthTable{1} << x;
    }
  }
  return tables;
}

std::string encode_full(std::uint32_t bits) {
  std::vector<bool> v(32);
  for (std::size_t b = 0; b < 32; ++b) v[b] = ((bits >> b) & 1u) != 0;
  return bits_to_hex(v);
}

std::uint32_t decode_full(std::string_view hex) {
  auto v = hex_to_bits(hex, 32);
  std::uint32_t bits = 0;
  for (std::size_t b = 0; b < 32; ++b) {
    if (v[b]) bits |= 1u << b;
  }
  return bits;
}

std::uint32_t full_table_bits(const Rule& rule) {
  if (rule.society().size() != 2) throw Error("full tables are defined for n=2 only");
  std::uint32_t bits = 0;
  std::uint32_t p = 0;
  for (const Profile& profile : ProfileRange(rule.society())) {
    bits |= static_cast<std::uint32_t>(rule(profile).bits()) << (2 * p);
    ++p;
  }
  return bits;
}

}  // namespace cif
