#ifndef IFG_GAMES_HPP
#define IFG_GAMES_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ifg/model.hpp"
#include "ifg/syntax.hpp"

namespace ifg {

// <psi, b, epsilon> with psi given by its position string.
struct Position {
  std::string position;
  Valuation valuation = 0;
  int verifier = 1;
  auto operator<=>(const Position&) const = default;
};

// A choice node together with the ~_J class of the current valuation. The
// class is named by its representative (digits in J zeroed).
struct InfoSet {
  std::string position;
  Valuation class_rep = 0;
  auto operator<=>(const InfoSet&) const = default;
};

// Or nodes: 0 = left, 1 = right. Exists nodes: the chosen element.
struct Strategy {
  int owner = 1;
  std::map<InfoSet, int> moves;
  bool operator==(const Strategy&) const = default;
};

struct SearchResult {
  bool wins = false;
  std::optional<Strategy> witness;
};

inline constexpr int kStrategyGuardLog2 = 24;

// log2 of the number of uniform strategies for the player.
double strategy_space_log2(const Space& sp, const Formula& f, int player);

// Depth-first search for a uniform strategy winning every play from every
// a in V. Throws GuardError when the strategy space exceeds 2^guard_log2.
SearchResult has_winning_strategy(const Structure& S, const Formula& f, Team V, int player,
                                  int guard_log2 = kStrategyGuardLog2);

// The strategy for ~f obtained by relocating every information set under the
// new root and flipping the owner.
Strategy dualize(const Strategy& s, const Formula& f);

struct Play {
  std::vector<Position> positions;
  int winner = 1;
};

// strategies[p] may be null when player p never has to choose.
Play play_out(const Structure& S, const Formula& f, const std::array<const Strategy*, 2>& strategies,
              Valuation start);

// True iff every play from V consistent with the strategy is won by its owner.
bool wins_all_plays(const Structure& S, const Formula& f, Team V, const Strategy& s);

std::set<Position> reachable_positions(const Structure& S, const Formula& f, Team V);

// Lines "pos=<s> class=<repr> -> <move>"; the root position prints as "e".
std::string render_strategy(const Space& sp, const Formula& f, const Strategy& s);
std::string render_position(const Space& sp, const Position& p);

}  // namespace ifg

#endif
