#ifndef IFG_TRUMP_HPP
#define IFG_TRUMP_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "ifg/model.hpp"
#include "ifg/syntax.hpp"
#include "ifg/teamset.hpp"

namespace ifg {

enum class Sign { Plus, Minus };
enum class TruthValue { True, False, Undetermined };

std::string to_string(TruthValue t);

// <trumps, cotrumps>
struct Meaning {
  TeamSet plus;
  TeamSet minus;
  bool operator==(const Meaning&) const = default;
};

// Compositional satisfaction with a memo keyed on (node, sign, team).
// Not thread-safe; use one evaluator per thread.
class Evaluator {
 public:
  Evaluator(const Structure& S, const Formula& f);

  const Space& space() const { return sp_; }
  const Formula& formula() const { return f_; }

  bool satisfies(Team V, Sign s) { return sat(0, V, s == Sign::Plus); }
  bool satisfies_at(int node, Team V, Sign s) { return sat(node, V, s == Sign::Plus); }
  // Truth team of the atom at an atomic node.
  Team atom_team(int node) const { return truth_[static_cast<std::size_t>(node)]; }

 private:
  Formula f_;
  Space sp_;
  std::vector<Team> truth_;
  std::vector<std::vector<Team>> class_masks_;  // indexed by J
  std::vector<std::unordered_map<Team, bool>> memo_;  // 2 * node + (plus ? 0 : 1)

  bool sat(int node, Team V, bool plus);
  bool compute(int node, Team V, bool plus);
  bool exists_plus(int child, int n, const std::vector<Team>& cls, std::size_t k, Team acc);
  const std::vector<Team>& masks(IndexSet J);
};

bool satisfies(const Structure& S, const Formula& f, Team V, Sign s);

// All trumps and cotrumps; requires |A|^N <= 20. Teams are distributed over
// OpenMP threads, each with its own evaluator.
Meaning meaning(const Structure& S, const Formula& f);
// Single-threaded reference for meaning().
Meaning meaning_serial(const Structure& S, const Formula& f);

// Requires is_sentence(f).
TruthValue truth_value(const Structure& S, const Formula& f);

// "plus: {} {00} ...\nminus: ...\n"
std::string render_meaning(const Space& sp, const Meaning& m);

}  // namespace ifg

#endif
