#pragma once

// Brute-force reference implementations written straight from the axiom
// definitions. They share nothing with the library's checkers beyond the
// Profile type and are only meant for small n.

#include <cstdint>
#include <functional>
#include <vector>

#include "cif/core.hpp"
#include "cif/rules.hpp"

namespace oracle {

using cif::AgentSet;
using cif::Profile;
using cif::Society;
using Fn = std::function<AgentSet(const Profile&)>;

inline bool in(AgentSet s, int agent) { return ((s.bits() >> agent) & 1u) != 0; }

// Every profile, built by nested counting rather than profile_at.
inline std::vector<Profile> all_profiles(int n) {
  std::vector<Profile> out;
  std::vector<AgentSet> ops(static_cast<std::size_t>(n));
  const std::uint32_t sets = 1u << n;
  std::uint64_t total = 1;
  for (int k = 0; k < n; ++k) total *= sets;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int k = n - 1; k >= 0; --k) {
      ops[static_cast<std::size_t>(k)] = AgentSet(static_cast<std::uint16_t>(c % sets));
      c /= sets;
    }
    out.push_back(cif::make_profile(ops, Society(n)));
  }
  return out;
}

inline Profile with_opinion(const Profile& p, int voter, AgentSet opinion) {
  std::vector<AgentSet> ops(p.opinions().begin(), p.opinions().end());
  ops[static_cast<std::size_t>(voter)] = opinion;
  return cif::make_profile(ops, p.society());
}

inline bool mon(const Fn& f, int n) {
  for (const Profile& c : all_profiles(n)) {
    const AgentSet j = f(c);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const AgentSet op = c.opinion(k);
        if (!in(op, i) && in(j, i) && !in(f(with_opinion(c, k, op.with(i))), i)) return false;
        if (in(op, i) && !in(j, i) && in(f(with_opinion(c, k, op.without(i))), i)) return false;
      }
    }
  }
  return true;
}

inline bool consensus(const Fn& f, int n) {
  for (const Profile& c : all_profiles(n)) {
    const AgentSet j = f(c);
    for (int t = 0; t < n; ++t) {
      bool all = true, none = true;
      for (int k = 0; k < n; ++k) (in(c.opinion(k), t) ? none : all) = false;
      if (all && !in(j, t)) return false;
      if (none && in(j, t)) return false;
    }
  }
  return true;
}

inline bool symmetric(const Profile& c, int j, int k) {
  const int n = c.size();
  const AgentSet jk = AgentSet().with(j).with(k);
  if ((c.opinion(j) - jk) != (c.opinion(k) - jk)) return false;
  for (int i = 0; i < n; ++i) {
    if (i == j || i == k) continue;
    if (in(c.opinion(i), j) != in(c.opinion(i), k)) return false;
  }
  if (in(c.opinion(j), j) != in(c.opinion(k), k)) return false;
  return in(c.opinion(k), j) == in(c.opinion(j), k);
}

inline bool sym(const Fn& f, int n) {
  for (const Profile& c : all_profiles(n)) {
    const AgentSet out = f(c);
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (symmetric(c, j, k) && in(out, j) != in(out, k)) return false;
      }
    }
  }
  return true;
}

// Pairwise over all profile pairs, as the definition reads.
inline bool ind(const Fn& f, int n) {
  const auto profiles = all_profiles(n);
  std::vector<AgentSet> outs;
  for (const Profile& p : profiles) outs.push_back(f(p));
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < profiles.size(); ++a) {
      for (std::size_t b = a + 1; b < profiles.size(); ++b) {
        bool same = true;
        for (int k = 0; k < n && same; ++k) {
          same = in(profiles[a].opinion(k), i) == in(profiles[b].opinion(k), i);
        }
        if (same && in(outs[a], i) != in(outs[b], i)) return false;
      }
    }
  }
  return true;
}

inline bool liberal_pos(const Fn& f, int n) {
  for (const Profile& c : all_profiles(n)) {
    bool self = false;
    for (int i = 0; i < n; ++i) self = self || in(c.opinion(i), i);
    if (self && f(c).empty()) return false;
  }
  return true;
}

inline bool liberal_neg(const Fn& f, int n) {
  const AgentSet everyone = Society(n).everyone();
  for (const Profile& c : all_profiles(n)) {
    bool doubt = false;
    for (int i = 0; i < n; ++i) doubt = doubt || !in(c.opinion(i), i);
    if (doubt && f(c) == everyone) return false;
  }
  return true;
}

inline bool el_pos(const Fn& f, int n) {
  for (const Profile& c : all_profiles(n)) {
    bool any = false;
    for (int i = 0; i < n; ++i) any = any || !c.opinion(i).empty();
    if (any && f(c).empty()) return false;
  }
  return true;
}

inline bool el_neg(const Fn& f, int n) {
  const AgentSet everyone = Society(n).everyone();
  for (const Profile& c : all_profiles(n)) {
    bool any = false;
    for (int i = 0; i < n; ++i) any = any || c.opinion(i) != everyone;
    if (any && f(c) == everyone) return false;
  }
  return true;
}

inline bool decisive(const Fn& f, int n, int i, int j) {
  for (const Profile& c : all_profiles(n)) {
    if (in(c.opinion(i), j) != in(f(c), j)) return false;
  }
  return true;
}

inline bool semidecisive(const Fn& f, int n, int i, int j) {
  bool pos = true, neg = true;
  for (const Profile& c : all_profiles(n)) {
    const bool says = in(c.opinion(i), j);
    const bool out = in(f(c), j);
    if (says && !out) pos = false;
    if (!says && out) neg = false;
  }
  return pos || neg;
}

inline bool d(const Fn& f, int n) {
  for (int i = 0; i < n; ++i) {
    bool some = false;
    for (int j = 0; j < n && !some; ++j) some = decisive(f, n, i, j);
    if (!some) return false;
  }
  return true;
}

inline bool pair_property(const Fn& f, int n, bool (*rel)(const Fn&, int, int, int)) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (k != l && rel(f, n, i, k) && rel(f, n, j, l)) return true;
        }
      }
    }
  }
  return false;
}

inline bool md(const Fn& f, int n) { return pair_property(f, n, decisive); }
inline bool msd(const Fn& f, int n) { return pair_property(f, n, semidecisive); }

// Monotone truth tables of n inputs, by checking every pair x subset of y.
inline bool monotone_table(std::uint64_t g, int n) {
  const std::uint32_t size = 1u << n;
  for (std::uint32_t x = 0; x < size; ++x) {
    for (std::uint32_t y = 0; y < size; ++y) {
      if ((x & ~y) == 0 && ((g >> x) & 1u) && !((g >> y) & 1u)) return false;
    }
  }
  return true;
}

}  // namespace oracle
