#ifndef IFG_TEAMSET_HPP
#define IFG_TEAMSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ifg/model.hpp"

namespace ifg {

inline constexpr std::uint32_t kMaxEnumeratedValuations = 20;

// A set of teams over a space with M valuations, as a bitset over the 2^M
// team indices. Sets of at most 64 teams live in a single inline word.
class TeamSet {
 public:
  TeamSet() = default;
  explicit TeamSet(std::uint32_t valuations);

  static TeamSet powerset_of(std::uint32_t valuations, Team V);
  static TeamSet only_empty(std::uint32_t valuations);
  static TeamSet all(std::uint32_t valuations) { return powerset_of(valuations, full_team(valuations)); }

  std::uint32_t valuations() const { return m_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << m_; }

  bool contains(Team V) const { return (word(V >> 6) >> (V & 63)) & 1u; }
  void insert(Team V) { mut_word(V >> 6) |= std::uint64_t{1} << (V & 63); }
  void erase(Team V) { mut_word(V >> 6) &= ~(std::uint64_t{1} << (V & 63)); }

  std::size_t nwords() const { return big_.empty() ? 1 : big_.size(); }
  std::uint64_t word(std::size_t i) const { return big_.empty() ? small_ : big_[i]; }
  std::uint64_t& mut_word(std::size_t i) { return big_.empty() ? small_ : big_[i]; }

  std::size_t count() const;
  bool none() const;
  bool subset_of(const TeamSet& o) const;
  // The union of all members.
  Team support() const;
  bool downward_closed() const;
  std::vector<Team> members() const;
  std::uint64_t hash() const;

  TeamSet operator|(const TeamSet& o) const;
  TeamSet operator&(const TeamSet& o) const;
  TeamSet operator-(const TeamSet& o) const;
  bool operator==(const TeamSet& o) const;

  template <typename Visit>
  void for_each(Visit&& visit) const {
    for (std::size_t w = 0; w < nwords(); ++w)
      for (std::uint64_t bits = word(w); bits; bits &= bits - 1)
        visit(static_cast<Team>((w << 6) | static_cast<std::size_t>(std::countr_zero(bits))));
  }

  static Team full_team(std::uint32_t valuations) {
    return valuations >= 64 ? ~Team{0} : (Team{1} << valuations) - 1;
  }

 private:
  std::uint32_t m_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> big_;
};

// Teams in ascending index order: "{},{00},{11},{00,11}".
std::string render_teamset(const Space& sp, const TeamSet& s);

}  // namespace ifg

#endif
