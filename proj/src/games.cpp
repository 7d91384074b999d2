#include "ifg/games.hpp"

#include <algorithm>
#include <cmath>

#include "ifg/error.hpp"

namespace ifg {

namespace {

struct Pending {
  int node;
  Valuation b;
  int eps;
};

std::vector<Team> atom_teams(const Structure& S, const Formula& f, const Space& sp) {
  std::vector<Team> t(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Node& n = f.node(static_cast<int>(i));
    if (n.kind == NodeKind::Atomic) t[i] = atom_truth(S, n.atom, sp);
  }
  return t;
}

bool is_choice(const Node& n) { return n.kind == NodeKind::Or || n.kind == NodeKind::Exists; }

int count_moves(const Space& sp, const Node& n) { return n.kind == NodeKind::Or ? 2 : sp.base(); }

class Solver {
 public:
  Solver(const Structure& S, const Formula& f, int player)
      : f_(f), sp_(S.size(), f.nvars()), truth_(atom_teams(S, f, sp_)), player_(player),
        assign_(f.size() * sp_.size(), -1) {}

  const Space& space() const { return sp_; }

  bool solve(std::vector<Pending> stack) {
    while (!stack.empty()) {
      Pending p = stack.back();
      stack.pop_back();
      const Node& n = f_.node(p.node);
      switch (n.kind) {
        case NodeKind::Atomic: {
          bool holds = contains(truth_[static_cast<std::size_t>(p.node)], p.b);
          int winner = holds ? p.eps : 1 - p.eps;
          if (winner != player_) return false;
          break;
        }
        case NodeKind::Not:
          stack.push_back({n.left, p.b, 1 - p.eps});
          break;
        case NodeKind::Or:
        case NodeKind::Exists: {
          if (p.eps != player_) {
            if (n.kind == NodeKind::Or) {
              stack.push_back({n.right, p.b, p.eps});
              stack.push_back({n.left, p.b, p.eps});
            } else {
              for (int c = sp_.base() - 1; c >= 0; --c) stack.push_back({n.left, sp_.with_digit(p.b, n.var, c), p.eps});
            }
            break;
          }
          std::size_t key = static_cast<std::size_t>(p.node) * sp_.size() + sp_.class_rep(p.b, n.slash);
          if (assign_[key] >= 0) {
            stack.push_back(child(n, p, assign_[key]));
            break;
          }
          for (int m = 0; m < count_moves(sp_, n); ++m) {
            assign_[key] = m;
            std::vector<Pending> next = stack;
            next.push_back(child(n, p, m));
            if (solve(std::move(next))) return true;
          }
          assign_[key] = -1;
          return false;
        }
      }
    }
    return true;
  }

  Strategy strategy() const {
    Strategy s;
    s.owner = player_;
    for (std::size_t key = 0; key < assign_.size(); ++key) {
      if (assign_[key] < 0) continue;
      int node = static_cast<int>(key / sp_.size());
      auto rep = static_cast<Valuation>(key % sp_.size());
      s.moves[{f_.node(node).position, rep}] = assign_[key];
    }
    return s;
  }

 private:
  const Formula& f_;
  Space sp_;
  std::vector<Team> truth_;
  int player_;
  std::vector<int> assign_;

  Pending child(const Node& n, const Pending& p, int move) const {
    if (n.kind == NodeKind::Or) return {move == 0 ? n.left : n.right, p.b, p.eps};
    return {n.left, sp_.with_digit(p.b, n.var, move), p.eps};
  }
};

int popcount_below(IndexSet J, int nvars) {
  int c = 0;
  for (int i = 0; i < nvars; ++i) c += (J >> i) & 1u;
  return c;
}

}  // namespace

double strategy_space_log2(const Space& sp, const Formula& f, int player) {
  double total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Node& n = f.node(static_cast<int>(i));
    if (!is_choice(n)) continue;
    int owner = positive_position(n.position) ? 1 : 0;
    if (owner != player) continue;
    int moves = count_moves(sp, n);
    if (moves <= 1 || sp.size() == 0) continue;
    double cls = std::pow(static_cast<double>(sp.base()), sp.nvars() - popcount_below(n.slash, sp.nvars()));
    total += cls * std::log2(static_cast<double>(moves));
  }
  return total;
}

SearchResult has_winning_strategy(const Structure& S, const Formula& f, Team V, int player, int guard_log2) {
  if (player != 0 && player != 1) throw InputError("player must be 0 or 1");
  Solver solver(S, f, player);
  if (V & ~solver.space().full()) throw InputError("team has members outside ^N A");
  if (V == 0) return {true, Strategy{player, {}}};
  double size = strategy_space_log2(solver.space(), f, player);
  if (size > guard_log2)
    throw GuardError("strategy space 2^" + std::to_string(size) + " exceeds 2^" + std::to_string(guard_log2));
  std::vector<Pending> start;
  for (Team t = V; t; t &= t - 1) start.push_back({0, static_cast<Valuation>(std::countr_zero(t)), 1});
  // Pending positions are popped from the back; keep ascending start order.
  std::reverse(start.begin(), start.end());
  if (!solver.solve(std::move(start))) return {false, std::nullopt};
  return {true, solver.strategy()};
}

Strategy dualize(const Strategy& s, const Formula&) {
  Strategy d;
  d.owner = 1 - s.owner;
  for (const auto& [info, move] : s.moves) d.moves[{"0" + info.position, info.class_rep}] = move;
  return d;
}

Play play_out(const Structure& S, const Formula& f, const std::array<const Strategy*, 2>& strategies, Valuation start) {
  Space sp(S.size(), f.nvars());
  if (start >= sp.size()) throw InputError("start valuation outside ^N A");
  auto truth = atom_teams(S, f, sp);
  Play play;
  int node = 0, eps = 1;
  Valuation b = start;
  while (true) {
    const Node& n = f.node(node);
    play.positions.push_back({n.position, b, eps});
    if (n.kind == NodeKind::Atomic) {
      play.winner = contains(truth[static_cast<std::size_t>(node)], b) ? eps : 1 - eps;
      return play;
    }
    if (n.kind == NodeKind::Not) {
      node = n.left;
      eps = 1 - eps;
      continue;
    }
    const Strategy* s = strategies[static_cast<std::size_t>(eps)];
    InfoSet info{n.position, sp.class_rep(b, n.slash)};
    if (!s || s->owner != eps || !s->moves.count(info))
      throw InputError("strategy of player " + std::to_string(eps) + " undefined at pos=" +
                       (n.position.empty() ? std::string("e") : n.position));
    int move = s->moves.at(info);
    if (n.kind == NodeKind::Or) {
      node = move == 0 ? n.left : n.right;
    } else {
      if (move < 0 || move >= sp.base()) throw InputError("strategy chooses an element outside the universe");
      b = sp.with_digit(b, n.var, move);
      node = n.left;
    }
  }
}

bool wins_all_plays(const Structure& S, const Formula& f, Team V, const Strategy& s) {
  Space sp(S.size(), f.nvars());
  auto truth = atom_teams(S, f, sp);
  std::vector<Pending> stack;
  for (Team t = V; t; t &= t - 1) stack.push_back({0, static_cast<Valuation>(std::countr_zero(t)), 1});
  while (!stack.empty()) {
    Pending p = stack.back();
    stack.pop_back();
    const Node& n = f.node(p.node);
    if (n.kind == NodeKind::Atomic) {
      bool holds = contains(truth[static_cast<std::size_t>(p.node)], p.b);
      if ((holds ? p.eps : 1 - p.eps) != s.owner) return false;
    } else if (n.kind == NodeKind::Not) {
      stack.push_back({n.left, p.b, 1 - p.eps});
    } else if (p.eps != s.owner) {
      if (n.kind == NodeKind::Or) {
        stack.push_back({n.left, p.b, p.eps});
        stack.push_back({n.right, p.b, p.eps});
      } else {
        for (int c = 0; c < sp.base(); ++c) stack.push_back({n.left, sp.with_digit(p.b, n.var, c), p.eps});
      }
    } else {
      auto it = s.moves.find({n.position, sp.class_rep(p.b, n.slash)});
      if (it == s.moves.end()) return false;
      if (n.kind == NodeKind::Or) stack.push_back({it->second == 0 ? n.left : n.right, p.b, p.eps});
      else stack.push_back({n.left, sp.with_digit(p.b, n.var, it->second), p.eps});
    }
  }
  return true;
}

std::set<Position> reachable_positions(const Structure& S, const Formula& f, Team V) {
  Space sp(S.size(), f.nvars());
  std::set<Position> seen;
  std::vector<Pending> stack;
  for (Team t = V; t; t &= t - 1) stack.push_back({0, static_cast<Valuation>(std::countr_zero(t)), 1});
  while (!stack.empty()) {
    Pending p = stack.back();
    stack.pop_back();
    const Node& n = f.node(p.node);
    if (!seen.insert({n.position, p.b, p.eps}).second) continue;
    switch (n.kind) {
      case NodeKind::Atomic:
        break;
      case NodeKind::Not:
        stack.push_back({n.left, p.b, 1 - p.eps});
        break;
      case NodeKind::Or:
        stack.push_back({n.left, p.b, p.eps});
        stack.push_back({n.right, p.b, p.eps});
        break;
      case NodeKind::Exists:
        for (int c = 0; c < sp.base(); ++c) stack.push_back({n.left, sp.with_digit(p.b, n.var, c), p.eps});
        break;
    }
  }
  return seen;
}

std::string render_position(const Space& sp, const Position& p) {
  return "<" + (p.position.empty() ? std::string("e") : p.position) + "," + sp.to_string(p.valuation) + "," +
         std::to_string(p.verifier) + ">";
}

std::string render_strategy(const Space& sp, const Formula& f, const Strategy& s) {
  std::string out;
  for (const auto& [info, move] : s.moves) {
    int node = f.find(info.position);
    if (node < 0) throw InputError("strategy mentions a position outside the formula");
    const Node& n = f.node(node);
    std::string cls;
    if (sp.nvars() == 0) cls = "()";
    for (int i = 0; i < sp.nvars(); ++i)
      cls += (n.slash >> i & 1u) ? '*' : static_cast<char>('0' + sp.digit(info.class_rep, i));
    std::string mv = n.kind == NodeKind::Or ? (move == 0 ? "left" : "right")
                                            : "v" + std::to_string(n.var) + "=" + std::to_string(move);
    out += "pos=" + (info.position.empty() ? std::string("e") : info.position) + " class=" + cls + " -> " + mv + "\n";
  }
  return out;
}

}  // namespace ifg
