#include "cif/core.hpp"

#include <bit>
#include <cctype>
#include <iostream>
#include <sstream>

namespace cif {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at position " + std::to_string(position) + ")"), position_(position) {}

AgentSet AgentSet::from_labels(std::initializer_list<int> labels) {
  AgentSet set;
  for (int label : labels) {
    if (label < 1 || label > kMaxAgents) {
      throw Error("agent label " + std::to_string(label) + " out of range");
    }
    set = set.with(label - 1);
  }
  return set;
}

int AgentSet::size() const noexcept { return std::popcount(bits_); }

std::vector<int> AgentSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxAgents; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Society::Society(int n) : n_(n) {
  if (n < 1 || n > kMaxAgents) {
    throw Error("society size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxAgents));
  }
}

std::uint64_t Society::profile_count() const {
  if (n_ > 7) throw Error("profile space too large to index for n=" + std::to_string(n_));
  return std::uint64_t{1} << (n_ * n_);
}

void Society::require_exhaustive(bool allow_large) const {
  if (n_ <= kExhaustiveDefault) return;
  if (allow_large && n_ <= kExhaustiveMax) {
    std::clog << "warning: exhaustive sweep at n=" << n_ << " visits " << profile_count()
              << " profiles\n";
    return;
  }
  throw Error("n=" + std::to_string(n_) + " exceeds the exhaustive bound (" +
              std::to_string(kExhaustiveDefault) + ", or " + std::to_string(kExhaustiveMax) +
              " with the large-n flag)");
}

Profile::Profile(Society society, std::span<const AgentSet> opinions) : n_(society.size()) {
  if (opinions.size() != static_cast<std::size_t>(n_)) {
    throw Error("profile has " + std::to_string(opinions.size()) + " opinions, society has " +
                std::to_string(n_) + " agents");
  }
  for (std::size_t k = 0; k < opinions.size(); ++k) {
    AgentSet extra = opinions[k] - society.everyone();
    if (!extra.empty()) {
      throw Error("opinion of agent " + std::to_string(k + 1) + " names agent " +
                  std::to_string(extra.members().front() + 1) + " outside the society");
    }
    opinions_[k] = opinions[k];
  }
}

Profile make_profile(std::span<const AgentSet> opinions, Society society) {
  return Profile(society, opinions);
}

Profile make_profile(std::initializer_list<AgentSet> opinions, Society society) {
  return Profile(society, std::span<const AgentSet>(opinions.begin(), opinions.size()));
}

AgentSet column(const Profile& profile, int target) {
  if (target < 0 || target >= profile.size()) {
    throw Error("target " + std::to_string(target + 1) + " out of range");
  }
  AgentSet approvers;
  for (int k = 0; k < profile.size(); ++k) {
    if (profile.opinion(k).contains(target)) approvers = approvers.with(k);
  }
  return approvers;
}

Profile flip_opinion(const Profile& profile, int voter, int target) {
  if (voter < 0 || voter >= profile.size() || target < 0 || target >= profile.size()) {
    throw Error("flip indices out of range");
  }
  Profile out = profile;
  out.opinions_[static_cast<std::size_t>(voter)] = profile.opinion(voter).toggled(target);
  return out;
}

std::uint64_t profile_index(const Profile& profile) {
  const int n = profile.size();
  if (n > 7) throw Error("profile index needs n <= 7");
  std::uint64_t index = 0;
  for (int k = 0; k < n; ++k) {
    index = (index << n) | profile.opinion(k).bits();
  }
  return index;
}

Profile profile_at(Society society, std::uint64_t index) {
  const int n = society.size();
  Profile out;
  out.n_ = n;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int k = n - 1; k >= 0; --k) {
    out.opinions_[static_cast<std::size_t>(k)] = AgentSet(static_cast<std::uint16_t>(index & mask));
    index >>= n;
  }
  return out;
}

ProfileRange enumerate_profiles(Society society, bool allow_large) {
  society.require_exhaustive(allow_large);
  return ProfileRange(society);
}

std::string format_set(AgentSet set) {
  std::string out = "{";
  bool first = true;
  for (int agent : set.members()) {
    if (!first) out += ',';
    out += std::to_string(agent + 1);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

struct RawGroup {
  std::vector<std::pair<long, std::size_t>> labels;  // label, position
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  std::pair<long, std::size_t> number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("agent label too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an agent label", start);
    return {value, start};
  }

  RawGroup group() {
    RawGroup g;
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return g;
    }
    while (true) {
      g.labels.push_back(number());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return g;
    }
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

AgentSet to_set(const RawGroup& group, int n) {
  AgentSet set;
  for (auto [label, pos] : group.labels) {
    if (label < 1 || label > n) {
      throw ParseError("agent " + std::to_string(label) + " out of range for n=" + std::to_string(n),
                       pos);
    }
    if (set.contains(static_cast<int>(label - 1))) {
      throw ParseError("duplicate agent " + std::to_string(label), pos);
    }
    set = set.with(static_cast<int>(label - 1));
  }
  return set;
}

}  // namespace

AgentSet parse_set(std::string_view text, Society society) {
  Lexer lexer(text);
  RawGroup g = lexer.group();
  if (!lexer.at_end()) throw ParseError("trailing characters after set", lexer.position());
  return to_set(g, society.size());
}

Profile parse_profile(std::string_view text) {
  Lexer lexer(text);
  std::vector<RawGroup> groups;
  if (lexer.at_end()) throw ParseError("empty profile", 0);
  while (true) {
    groups.push_back(lexer.group());
    if (lexer.at_end()) break;
    lexer.expect(';');
  }
  if (groups.size() > static_cast<std::size_t>(kMaxAgents)) {
    throw ParseError("too many opinions", 0);
  }
  Society society(static_cast<int>(groups.size()));
  std::vector<AgentSet> opinions;
  opinions.reserve(groups.size());
  for (const auto& g : groups) opinions.push_back(to_set(g, society.size()));
  return make_profile(opinions, society);
}

std::string format_profile(const Profile& profile) {
  std::string out;
  for (int k = 0; k < profile.size(); ++k) {
    if (k > 0) out += ';';
    out += format_set(profile.opinion(k));
  }
  return out;
}

std::string format_bits(AgentSet set, Society society) {
  std::string out;
  for (int i = 0; i < society.size(); ++i) out += set.contains(i) ? '1' : '0';
  return out;
}

}  // namespace cif
