#include "cif/axioms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cif {

namespace {

struct AxiomName {
  Axiom axiom;
  std::string_view id;
  std::string_view cli;
};

constexpr std::array<AxiomName, 11> kAxiomNames{{
    {Axiom::Monotonicity, "MON", "mon"},
    {Axiom::Consensus, "C", "c"},
    {Axiom::Symmetry, "SYM", "sym"},
    {Axiom::Independence, "I", "i"},
    {Axiom::Liberal, "L", "l"},
    {Axiom::Decisiveness, "D", "d"},
    {Axiom::MinimalDecisiveness, "MD", "md"},
    {Axiom::MinimalSemiDecisiveness, "MSD", "msd"},
    {Axiom::ExtremeLiberalPos, "EL_POS", "el+"},
    {Axiom::ExtremeLiberalNeg, "EL_NEG", "el-"},
    {Axiom::ExtremeLiberal, "EL", "el"},
}};

// Bit of "target in C_voter" in a profile index.
inline bool approves(std::uint64_t p, int n, int voter, int target) {
  return ((p >> profile_bit(n, voter, target)) & 1u) != 0;
}

inline std::uint32_t column_of(std::uint64_t p, int n, int target) {
  std::uint32_t col = 0;
  for (int k = 0; k < n; ++k) {
    if (approves(p, n, k, target)) col |= 1u << k;
  }
  return col;
}

inline AgentSet opinion_of(std::uint64_t p, int n, int voter) {
  return AgentSet(static_cast<std::uint16_t>((p >> (n * (n - 1 - voter))) & ((1u << n) - 1u)));
}

std::string label(int agent) { return std::to_string(agent + 1); }

class Collector {
 public:
  Collector(Axiom axiom, const CheckOptions& options) : axiom_(axiom), cap_(options.max_witnesses) {}

  template <class MakeWitness>
  void add(MakeWitness&& make) {
    ++violations_;
    if (witnesses_.size() < cap_) witnesses_.push_back(make());
  }

  AxiomReport finish() && {
    const bool holds = violations_ == 0;
    return {axiom_, holds ? Verdict::Holds : Verdict::Fails, holds, std::move(witnesses_),
            violations_};
  }

 private:
  Axiom axiom_;
  std::size_t cap_;
  std::uint64_t violations_ = 0;
  std::vector<Witness> witnesses_;
};

Witness single(const RuleTable& t, std::string clause, std::uint64_t p, std::vector<int> agents,
               std::string detail) {
  return {std::move(clause), {profile_at(t.society(), p)}, std::move(agents), std::move(detail)};
}

bool is_pair_symmetric(const Profile& c, int j, int k) {
  const int n = c.size();
  const AgentSet pair = AgentSet().with(j).with(k);
  if ((c.opinion(j) - pair) != (c.opinion(k) - pair)) return false;
  for (int i = 0; i < n; ++i) {
    if (i == j || i == k) continue;
    if (c.opinion(i).contains(j) != c.opinion(i).contains(k)) return false;
  }
  if (c.opinion(j).contains(j) != c.opinion(k).contains(k)) return false;
  return c.opinion(k).contains(j) == c.opinion(j).contains(k);
}

AxiomReport minimal_control(const RuleTable& t, const CheckOptions& options, Axiom axiom,
                            bool semi) {
  const int n = t.size();
  if (n < 2) return {axiom, Verdict::Vacuous, false, {}, 0};
  DecisivenessMatrix m = decisiveness_matrix(t);
  auto holds = [&](int i, int k) {
    return semi ? m.at(i, k).semidecisive() : m.at(i, k).decisive();
  };
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!holds(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int l = 0; l < n; ++l) {
          if (l != k && holds(j, l)) return {axiom, Verdict::Holds, true, {}, 0};
        }
      }
    }
  }
  Collector out(axiom, options);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (holds(i, k)) continue;
      const auto& e = m.at(i, k);
      out.add([&] {
        Witness w;
        w.agents = {i, k};
        if (semi) {
          w.clause = "not-semidecisive";
          w.profiles = {profile_at(t.society(), *e.positive_counterexample),
                        profile_at(t.society(), *e.negative_counterexample)};
          w.detail = "agent " + label(i) + " is not semidecisive over " + label(k);
        } else {
          w.clause = "not-decisive";
          const auto p = e.positive_counterexample && e.negative_counterexample
                             ? std::min(*e.positive_counterexample, *e.negative_counterexample)
                             : e.positive_counterexample.value_or(
                                   e.negative_counterexample.value_or(0));
          w.profiles = {profile_at(t.society(), p)};
          w.detail = "agent " + label(i) + " is not decisive over " + label(k);
        }
        return w;
      });
    }
  }
  return std::move(out).finish();
}

}  // namespace

std::string_view axiom_id(Axiom axiom) {
  for (const auto& a : kAxiomNames) {
    if (a.axiom == axiom) return a.id;
  }
  return "?";
}

std::string_view axiom_cli_name(Axiom axiom) {
  for (const auto& a : kAxiomNames) {
    if (a.axiom == axiom) return a.cli;
  }
  return "?";
}

Axiom parse_axiom(std::string_view cli_name) {
  for (const auto& a : kAxiomNames) {
    if (a.cli == cli_name) return a.axiom;
  }
  throw Error("unknown axiom '" + std::string(cli_name) + "'");
}

std::vector<Axiom> parse_axiom_list(std::string_view text) {
  std::vector<Axiom> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(parse_axiom(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "?";
}

RuleTable::RuleTable(Rule rule, bool allow_large)
    : rule_(std::move(rule)), outputs_(tabulate(rule_, allow_large)) {}

AxiomReport check_mon(const RuleTable& t, const CheckOptions& options) {
  const int n = t.size();
  Collector out(Axiom::Monotonicity, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet here = t.output(p);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const std::uint64_t q = p ^ (std::uint64_t{1} << profile_bit(n, k, i));
        const AgentSet there = t.output(q);
        const bool adding = !approves(p, n, k, i);
        // Adding a vote must keep a member in; removing one must keep a
        // non-member out.
        const bool broken = adding ? (here.contains(i) && !there.contains(i))
                                   : (!here.contains(i) && there.contains(i));
        if (!broken) continue;
        out.add([&] {
          Witness w;
          w.clause = adding ? "add" : "remove";
          w.profiles = {profile_at(t.society(), p), profile_at(t.society(), q)};
          w.agents = {k, i};
          w.detail = adding ? "agent " + label(i) + " is in J(C) but leaves after voter " +
                                  label(k) + " adds them"
                            : "agent " + label(i) + " is out of J(C) but enters after voter " +
                                  label(k) + " drops them";
          return w;
        });
      }
    }
  }
  return std::move(out).finish();
}

AxiomReport check_consensus(const RuleTable& t, const CheckOptions& options) {
  const int n = t.size();
  const std::uint32_t all = (1u << n) - 1u;
  Collector out(Axiom::Consensus, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet j_out = t.output(p);
    for (int j = 0; j < n; ++j) {
      const std::uint32_t col = column_of(p, n, j);
      if (col == all && !j_out.contains(j)) {
        out.add([&] {
          return single(t, "approved", p, {j},
                        "everyone approves " + label(j) + " but " + label(j) + " is not in J");
        });
      } else if (col == 0 && j_out.contains(j)) {
        out.add([&] {
          return single(t, "rejected", p, {j},
                        "nobody approves " + label(j) + " but " + label(j) + " is in J");
        });
      }
    }
  }
  return std::move(out).finish();
}

std::vector<std::pair<int, int>> symmetric_pairs(const Profile& c) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < c.size(); ++j) {
    for (int k = j + 1; k < c.size(); ++k) {
      if (is_pair_symmetric(c, j, k)) out.emplace_back(j, k);
    }
  }
  return out;
}

AxiomReport check_sym(const RuleTable& t, const CheckOptions& options) {
  if (t.size() < 2) return {Axiom::Symmetry, Verdict::Vacuous, true, {}, 0};
  Collector out(Axiom::Symmetry, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const Profile c = profile_at(t.society(), p);
    const AgentSet j_out = t.output(p);
    for (auto [j, k] : symmetric_pairs(c)) {
      if (j_out.contains(j) == j_out.contains(k)) continue;
      out.add([&] {
        return single(t, "split", p, {j, k},
                      "agents " + label(j) + " and " + label(k) +
                          " are symmetric but classified differently");
      });
    }
  }
  return std::move(out).finish();
}

AxiomReport check_ind(const RuleTable& t, const CheckOptions& options) {
  const int n = t.size();
  const std::size_t columns = std::size_t{1} << n;
  constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
  // first[target][column] = first profile showing that column for target.
  std::vector<std::uint64_t> first(static_cast<std::size_t>(n) * columns, kUnseen);
  Collector out(Axiom::Independence, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet j_out = t.output(p);
    for (int i = 0; i < n; ++i) {
      auto& seen = first[static_cast<std::size_t>(i) * columns + column_of(p, n, i)];
      if (seen == kUnseen) {
        seen = p;
        continue;
      }
      if (t.output(seen).contains(i) == j_out.contains(i)) continue;
      const std::uint64_t earlier = seen;
      out.add([&] {
        Witness w;
        w.clause = "column";
        w.profiles = {profile_at(t.society(), earlier), profile_at(t.society(), p)};
        w.agents = {i};
        w.detail = "agent " + label(i) + " has the same approvers in both profiles but " +
                   "different membership";
        return w;
      });
    }
  }
  return std::move(out).finish();
}

AxiomReport check_liberal(const RuleTable& t, const CheckOptions& options, Part part) {
  const int n = t.size();
  const AgentSet everyone = t.society().everyone();
  Collector out(Axiom::Liberal, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet j_out = t.output(p);
    std::optional<int> self_in;
    std::optional<int> self_out;
    for (int i = 0; i < n; ++i) {
      if (approves(p, n, i, i)) {
        if (!self_in) self_in = i;
      } else if (!self_out) {
        self_out = i;
      }
    }
    if (part != Part::Neg && self_in && j_out.empty()) {
      out.add([&] {
        return single(t, "pos", p, {*self_in},
                      "agent " + label(*self_in) + " approves themself but J is empty");
      });
    }
    if (part != Part::Pos && self_out && j_out == everyone) {
      out.add([&] {
        return single(t, "neg", p, {*self_out},
                      "agent " + label(*self_out) + " disapproves themself but J is everyone");
      });
    }
  }
  return std::move(out).finish();
}

AxiomReport check_el(const RuleTable& t, Part part, const CheckOptions& options) {
  const int n = t.size();
  const AgentSet everyone = t.society().everyone();
  const Axiom axiom = part == Part::Pos   ? Axiom::ExtremeLiberalPos
                      : part == Part::Neg ? Axiom::ExtremeLiberalNeg
                                          : Axiom::ExtremeLiberal;
  Collector out(axiom, options);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet j_out = t.output(p);
    std::optional<std::pair<int, int>> approval;
    std::optional<std::pair<int, int>> disapproval;
    for (int k = 0; k < n; ++k) {
      const AgentSet opinion = opinion_of(p, n, k);
      if (!approval && !opinion.empty()) approval = {{k, opinion.members().front()}};
      if (!disapproval && opinion != everyone) {
        disapproval = {{k, (everyone - opinion).members().front()}};
      }
    }
    if (part != Part::Neg && approval && j_out.empty()) {
      out.add([&] {
        return single(t, "pos", p, {approval->first, approval->second},
                      "voter " + label(approval->first) + " approves " + label(approval->second) +
                          " but J is empty");
      });
    }
    if (part != Part::Pos && disapproval && j_out == everyone) {
      out.add([&] {
        return single(t, "neg", p, {disapproval->first, disapproval->second},
                      "voter " + label(disapproval->first) + " rejects " +
                          label(disapproval->second) + " but J is everyone");
      });
    }
  }
  return std::move(out).finish();
}

Control DecisivenessMatrix::Entry::label() const noexcept {
  if (positive && negative) return Control::Decisive;
  if (positive) return Control::SemidecisivePositive;
  if (negative) return Control::SemidecisiveNegative;
  return Control::None;
}

std::string_view control_name(Control control) {
  switch (control) {
    case Control::None:
      return "none";
    case Control::SemidecisivePositive:
      return "semidecisive-positive";
    case Control::SemidecisiveNegative:
      return "semidecisive-negative";
    case Control::SemidecisiveBoth:
      return "semidecisive-both";
    case Control::Decisive:
      return "decisive";
  }
  return "?";
}

DecisivenessMatrix decisiveness_matrix(const RuleTable& t) {
  const int n = t.size();
  DecisivenessMatrix m(n);
  for (std::uint64_t p = 0; p < t.profile_count(); ++p) {
    const AgentSet j_out = t.output(p);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto& e = m.at(i, j);
        const bool said = approves(p, n, i, j);
        const bool in = j_out.contains(j);
        if (said && !in && !e.positive_counterexample) {
          e.positive = false;
          e.positive_counterexample = p;
        } else if (!said && in && !e.negative_counterexample) {
          e.negative = false;
          e.negative_counterexample = p;
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    int controllers = 0;
    for (int i = 0; i < n; ++i) controllers += m.at(i, j).decisive() ? 1 : 0;
    if (controllers > 1) {
      throw std::logic_error("two agents decisive over agent " + label(j) + " in rule " +
                             t.rule().name());
    }
  }
  return m;
}

DecisivenessMatrix decisiveness_matrix(const Rule& rule, bool allow_large) {
  return decisiveness_matrix(RuleTable(rule, allow_large));
}

AxiomReport check_d(const RuleTable& t, const CheckOptions& options) {
  const int n = t.size();
  DecisivenessMatrix m = decisiveness_matrix(t);
  Collector out(Axiom::Decisiveness, options);
  for (int i = 0; i < n; ++i) {
    bool has_target = false;
    for (int j = 0; j < n; ++j) has_target = has_target || m.at(i, j).decisive();
    if (has_target) continue;
    for (int j = 0; j < n; ++j) {
      const auto& e = m.at(i, j);
      const std::uint64_t p =
          e.positive_counterexample && e.negative_counterexample
              ? std::min(*e.positive_counterexample, *e.negative_counterexample)
              : e.positive_counterexample.value_or(e.negative_counterexample.value_or(0));
      out.add([&] {
        return single(t, "not-decisive", p, {i, j},
                      "agent " + label(i) + " is not decisive over " + label(j));
      });
    }
  }
  return std::move(out).finish();
}

AxiomReport check_md(const RuleTable& t, const CheckOptions& options) {
  return minimal_control(t, options, Axiom::MinimalDecisiveness, false);
}

AxiomReport check_msd(const RuleTable& t, const CheckOptions& options) {
  return minimal_control(t, options, Axiom::MinimalSemiDecisiveness, true);
}

AxiomReport check(const RuleTable& t, Axiom axiom, const CheckOptions& options) {
  switch (axiom) {
    case Axiom::Monotonicity:
      return check_mon(t, options);
    case Axiom::Consensus:
      return check_consensus(t, options);
    case Axiom::Symmetry:
      return check_sym(t, options);
    case Axiom::Independence:
      return check_ind(t, options);
    case Axiom::Liberal:
      return check_liberal(t, options);
    case Axiom::Decisiveness:
      return check_d(t, options);
    case Axiom::MinimalDecisiveness:
      return check_md(t, options);
    case Axiom::MinimalSemiDecisiveness:
      return check_msd(t, options);
    case Axiom::ExtremeLiberalPos:
      return check_el(t, Part::Pos, options);
    case Axiom::ExtremeLiberalNeg:
      return check_el(t, Part::Neg, options);
    case Axiom::ExtremeLiberal:
      return check_el(t, Part::Both, options);
  }
  throw Error("unknown axiom");
}

AxiomReport check(const Rule& rule, Axiom axiom, const CheckOptions& options) {
  return check(RuleTable(rule, options.allow_large), axiom, options);
}

bool confirms_violation(const Rule& rule, Axiom axiom, const Witness& w) {
  if (w.profiles.empty()) return false;
  const Profile& c = w.profiles[0];
  const AgentSet everyone = rule.society().everyone();
  const AgentSet j_c = evaluate(rule, c);
  auto agent = [&](std::size_t k) { return w.agents.at(k); };
  switch (axiom) {
    case Axiom::Monotonicity: {
      const int k = agent(0);
      const int i = agent(1);
      if (w.profiles.size() != 2 || !(w.profiles[1] == flip_opinion(c, k, i))) return false;
      const AgentSet j_flip = evaluate(rule, w.profiles[1]);
      if (!c.opinion(k).contains(i)) return j_c.contains(i) && !j_flip.contains(i);
      return !j_c.contains(i) && j_flip.contains(i);
    }
    case Axiom::Consensus: {
      const AgentSet approvers = column(c, agent(0));
      if (approvers == everyone) return !j_c.contains(agent(0));
      if (approvers.empty()) return j_c.contains(agent(0));
      return false;
    }
    case Axiom::Symmetry:
      return is_pair_symmetric(c, agent(0), agent(1)) &&
             j_c.contains(agent(0)) != j_c.contains(agent(1));
    case Axiom::Independence: {
      if (w.profiles.size() != 2) return false;
      const int i = agent(0);
      return column(c, i) == column(w.profiles[1], i) &&
             j_c.contains(i) != evaluate(rule, w.profiles[1]).contains(i);
    }
    case Axiom::Liberal: {
      const int i = agent(0);
      if (w.clause == "pos") return c.opinion(i).contains(i) && j_c.empty();
      if (w.clause == "neg") return !c.opinion(i).contains(i) && j_c == everyone;
      return false;
    }
    case Axiom::ExtremeLiberalPos:
    case Axiom::ExtremeLiberalNeg:
    case Axiom::ExtremeLiberal: {
      const bool said = c.opinion(agent(0)).contains(agent(1));
      if (w.clause == "pos" && axiom != Axiom::ExtremeLiberalNeg) return said && j_c.empty();
      if (w.clause == "neg" && axiom != Axiom::ExtremeLiberalPos) {
        return !said && j_c == everyone;
      }
      return false;
    }
    case Axiom::Decisiveness:
    case Axiom::MinimalDecisiveness:
      return c.opinion(agent(0)).contains(agent(1)) != j_c.contains(agent(1));
    case Axiom::MinimalSemiDecisiveness: {
      if (w.profiles.size() != 2) return false;
      const int i = agent(0);
      const int j = agent(1);
      const Profile& d = w.profiles[1];
      const bool positive_broken = c.opinion(i).contains(j) && !j_c.contains(j);
      const bool negative_broken = !d.opinion(i).contains(j) && evaluate(rule, d).contains(j);
      return positive_broken && negative_broken;
    }
  }
  return false;
}

}  // namespace cif
