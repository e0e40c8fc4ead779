#pragma once

// Societies, opinions, profiles and the profile wire format.
//
// Agents are 0-based internally. Everything that crosses the library
// boundary as text (wire format, reports) is 1-based.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cif {

inline constexpr int kMaxAgents = 16;
/// Largest n swept exhaustively without an explicit opt-in.
inline constexpr int kExhaustiveDefault = 4;
/// Hard ceiling for exhaustive sweeps; (2^5)^5 = 2^25 profiles.
inline constexpr int kExhaustiveMax = 5;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A subset of {0, ..., n-1}.
class AgentSet {
 public:
  constexpr AgentSet() = default;
  constexpr explicit AgentSet(std::uint16_t bits) : bits_(bits) {}

  /// Builds a set from 1-based agent labels, as written in examples.
  static AgentSet from_labels(std::initializer_list<int> labels);

  constexpr std::uint16_t bits() const noexcept { return bits_; }
  constexpr bool contains(int agent) const noexcept {
    return ((bits_ >> agent) & 1u) != 0;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;

  constexpr AgentSet with(int agent) const noexcept {
    return AgentSet(static_cast<std::uint16_t>(bits_ | (1u << agent)));
  }
  constexpr AgentSet without(int agent) const noexcept {
    return AgentSet(static_cast<std::uint16_t>(bits_ & ~(1u << agent)));
  }
  constexpr AgentSet toggled(int agent) const noexcept {
    return AgentSet(static_cast<std::uint16_t>(bits_ ^ (1u << agent)));
  }

  /// Members in ascending order (0-based).
  std::vector<int> members() const;

  friend constexpr AgentSet operator|(AgentSet a, AgentSet b) noexcept {
    return AgentSet(static_cast<std::uint16_t>(a.bits_ | b.bits_));
  }
  friend constexpr AgentSet operator&(AgentSet a, AgentSet b) noexcept {
    return AgentSet(static_cast<std::uint16_t>(a.bits_ & b.bits_));
  }
  friend constexpr AgentSet operator^(AgentSet a, AgentSet b) noexcept {
    return AgentSet(static_cast<std::uint16_t>(a.bits_ ^ b.bits_));
  }
  friend constexpr AgentSet operator-(AgentSet a, AgentSet b) noexcept {
    return AgentSet(static_cast<std::uint16_t>(a.bits_ & ~b.bits_));
  }
  friend constexpr bool operator==(AgentSet, AgentSet) = default;
  friend constexpr auto operator<=>(AgentSet a, AgentSet b) noexcept {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint16_t bits_ = 0;
};

class Society {
 public:
  /// Throws Error unless 1 <= n <= kMaxAgents.
  explicit Society(int n);

  int size() const noexcept { return n_; }
  AgentSet everyone() const noexcept {
    return AgentSet(static_cast<std::uint16_t>((1u << n_) - 1u));
  }
  bool is_subset(AgentSet set) const noexcept {
    return (set - everyone()).empty();
  }
  bool is_agent(int agent) const noexcept { return agent >= 0 && agent < n_; }

  /// (2^n)^n. Only defined for societies that fit a 64-bit profile index.
  std::uint64_t profile_count() const;

  /// Throws unless n is within the exhaustive bound. With allow_large, n = 5
  /// is accepted and a warning is written to std::clog.
  void require_exhaustive(bool allow_large = false) const;

  friend bool operator==(Society, Society) = default;

 private:
  int n_;
};

/// Opinions (C_1, ..., C_n); entry k is agent k's opinion.
class Profile {
 public:
  Profile(Society society, std::span<const AgentSet> opinions);

  Society society() const noexcept { return Society(n_); }
  int size() const noexcept { return n_; }
  AgentSet opinion(int voter) const { return opinions_.at(static_cast<std::size_t>(voter)); }
  std::span<const AgentSet> opinions() const noexcept {
    return {opinions_.data(), static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const Profile& a, const Profile& b) noexcept {
    return a.n_ == b.n_ && a.opinions_ == b.opinions_;
  }

 private:
  friend Profile flip_opinion(const Profile&, int, int);
  friend Profile profile_at(Society, std::uint64_t);
  Profile() = default;

  int n_ = 0;
  std::array<AgentSet, kMaxAgents> opinions_{};
};

/// Validates and builds a profile. Errors on length mismatch or an opinion
/// naming an agent outside the society.
Profile make_profile(std::span<const AgentSet> opinions, Society society);
Profile make_profile(std::initializer_list<AgentSet> opinions, Society society);

/// The approvers of `target`: {k : target in C_k}.
AgentSet column(const Profile& profile, int target);

/// Toggles membership of `target` in the opinion of `voter`.
Profile flip_opinion(const Profile& profile, int voter, int target);

/// Position in canonical order: lexicographic on (C_1, ..., C_n) read as
/// integers, C_1 most significant. Requires n <= 7.
std::uint64_t profile_index(const Profile& profile);
Profile profile_at(Society society, std::uint64_t index);

/// Bit offset of "target in C_voter" inside a profile index.
constexpr int profile_bit(int n, int voter, int target) noexcept {
  return n * (n - 1 - voter) + target;
}

/// Every profile of the society, once each, in canonical order.
class ProfileRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Profile;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Profile;

    iterator() = default;
    iterator(Society society, std::uint64_t index) : n_(society.size()), index_(index) {}
    Profile operator*() const { return profile_at(Society(n_), index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.index_ == b.index_;
    }

   private:
    int n_ = 1;
    std::uint64_t index_ = 0;
  };

  explicit ProfileRange(Society society) : society_(society), count_(society.profile_count()) {}
  iterator begin() const { return {society_, 0}; }
  iterator end() const { return {society_, count_}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  Society society_;
  std::uint64_t count_;
};

/// Canonical enumeration of the profile space; enforces the exhaustive bound.
ProfileRange enumerate_profiles(Society society, bool allow_large = false);

/// "{1,3}" style rendering of a set (1-based).
std::string format_set(AgentSet set);
/// Parses "{1,3}"; errors on duplicates or members outside the society.
AgentSet parse_set(std::string_view text, Society society);

/// Wire format: "{1,3};{};{2}". n is the number of groups.
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);

/// Agent i+1 at character i: '1' when a member.
std::string format_bits(AgentSet set, Society society);

}  // namespace cif
