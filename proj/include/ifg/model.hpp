#ifndef IFG_MODEL_HPP
#define IFG_MODEL_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ifg/syntax.hpp"

namespace ifg {

// Valuations are mixed-radix indices: a |-> sum a_i * |A|^i, v0 least significant.
using Valuation = std::uint32_t;
// A team is a bitset over valuation indices.
using Team = std::uint64_t;

inline constexpr std::uint32_t kMaxValuations = 64;

inline int team_size(Team V) { return std::popcount(V); }
inline bool contains(Team V, Valuation a) { return (V >> a) & 1u; }
inline Team singleton(Valuation a) { return Team{1} << a; }

// The valuation space ^N A for a universe of size |A|.
class Space {
 public:
  Space(int base, int nvars);

  int base() const { return base_; }
  int nvars() const { return nvars_; }
  std::uint32_t size() const { return size_; }
  Team full() const { return size_ == 64 ? ~Team{0} : (Team{1} << size_) - 1; }
  IndexSet all_indices() const { return nvars_ >= 32 ? ~IndexSet{0} : (IndexSet{1} << nvars_) - 1; }

  int digit(Valuation a, int i) const { return digits_[a * static_cast<std::uint32_t>(nvars_) + static_cast<std::uint32_t>(i)]; }
  Valuation with_digit(Valuation a, int i, int b) const {
    return a + static_cast<Valuation>((b - digit(a, i)) * static_cast<int>(pow_[i]));
  }
  // Canonical representative of the ~_J class: digits in J set to 0.
  Valuation class_rep(Valuation a, IndexSet J) const;
  Valuation encode(const std::vector<int>& digits) const;
  std::vector<int> decode(Valuation a) const;

  std::string to_string(Valuation a) const;
  Valuation parse_valuation(std::string_view s) const;
  // "{00,11}", members as digit strings in lexicographic order.
  std::string team_to_string(Team V) const;
  // Comma separated digit strings, optionally in braces; the empty string
  // and "{}" are the empty team.
  Team parse_team(std::string_view csv) const;

 private:
  int base_;
  int nvars_;
  std::uint32_t size_;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint8_t> digits_;
};

bool agree_outside(const Space& sp, Valuation a, Valuation b, IndexSet J);

Team variant_const(const Space& sp, Team V, int n, int b);
Team variant_all(const Space& sp, Team V, int n);

// A function from the members of a team to the universe.
struct TeamFunction {
  Team domain = 0;
  std::vector<int> value;  // indexed by valuation; meaningful on the domain only

  int operator()(Valuation a) const { return value[a]; }
  bool operator==(const TeamFunction&) const = default;
};

Team variant(const Space& sp, Team V, int n, const TeamFunction& f);
bool independent_of(const Space& sp, const TeamFunction& f, IndexSet J);

// ~_J classes of V, ordered by their least member.
std::vector<Team> classes(const Space& sp, Team V, IndexSet J);

// Calls visit(f) for each f: V ->_J A in ascending odometer order (first class
// varies fastest); stops early when visit returns false. Returns false iff stopped.
template <typename Visit>
bool for_each_independent_function(const Space& sp, Team V, IndexSet J, Visit&& visit) {
  auto cls = classes(sp, V, J);
  TeamFunction f{V, std::vector<int>(sp.size(), 0)};
  if (cls.empty()) return visit(static_cast<const TeamFunction&>(f));
  if (sp.base() == 0) return true;
  std::vector<int> choice(cls.size(), 0);
  while (true) {
    if (!visit(static_cast<const TeamFunction&>(f))) return false;
    std::size_t k = 0;
    while (k < cls.size() && choice[k] == sp.base() - 1) {
      choice[k] = 0;
      for (Team c = cls[k]; c; c &= c - 1) f.value[static_cast<Valuation>(std::countr_zero(c))] = 0;
      ++k;
    }
    if (k == cls.size()) return true;
    ++choice[k];
    for (Team c = cls[k]; c; c &= c - 1) f.value[static_cast<Valuation>(std::countr_zero(c))] = choice[k];
  }
}

std::vector<TeamFunction> enumerate_independent_functions(const Space& sp, Team V, IndexSet J);

// Calls visit(V1, V2) for each J-saturated disjoint split V = V1 u_J V2, in
// ascending order of the class-to-left bitmask.
template <typename Visit>
bool for_each_saturated_split(const Space& sp, Team V, IndexSet J, Visit&& visit) {
  auto cls = classes(sp, V, J);
  if (cls.size() >= 63) return true;
  std::uint64_t count = std::uint64_t{1} << cls.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    Team left = 0;
    for (std::size_t k = 0; k < cls.size(); ++k)
      if (m >> k & 1u) left |= cls[k];
    if (!visit(left, V & ~left)) return false;
  }
  return true;
}

std::vector<std::pair<Team, Team>> enumerate_saturated_splits(const Space& sp, Team V, IndexSet J);

bool is_saturated(const Space& sp, Team U, IndexSet J);

// Finite first-order structure with universe {0..size-1}.
class Structure {
 public:
  struct Function {
    int arity = 0;
    std::vector<int> table;  // mixed radix over arguments, first argument least significant; -1 undefined
  };
  struct Relation {
    int arity = 0;
    std::vector<bool> holds;
  };

  explicit Structure(int universe = 0);

  int size() const { return size_; }

  void add_constant(const std::string& name, int value);
  void add_function(const std::string& name, int arity);
  void set_function(const std::string& name, const std::vector<int>& args, int value);
  void add_relation(const std::string& name, int arity);
  void add_tuple(const std::string& name, const std::vector<int>& args);

  const std::map<std::string, int>& constants() const { return constants_; }
  const std::map<std::string, Function>& functions() const { return functions_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }

  int constant(const std::string& name) const;
  int apply(const std::string& name, const std::vector<int>& args) const;
  bool holds(const std::string& name, const std::vector<int>& args) const;

  // Throws InputError when some function table is not total.
  void validate() const;
  Signature signature() const;

  static Structure parse(std::string_view text);
  static Structure load(const std::string& path);
  std::string to_text() const;

  // Pure equality structure of the given size.
  static Structure equality(int size);
  // Universe of the given size with one constant per element, named by its digit.
  static Structure with_constants(int size);

 private:
  int size_;
  std::map<std::string, int> constants_;
  std::map<std::string, Function> functions_;
  std::map<std::string, Relation> relations_;

  std::size_t tuple_index(int arity, const std::vector<int>& args) const;
};

int eval_term(const Structure& S, const Term& t, const Space& sp, Valuation a);
bool eval_atomic(const Structure& S, const Atom& atom, const Space& sp, Valuation a);
// The team of all valuations satisfying the atom.
Team atom_truth(const Structure& S, const Atom& atom, const Space& sp);

// Terms over the signature with variables below N and nesting depth <= depth.
std::vector<Term> enumerate_terms(const Structure& S, int nvars, int depth);
std::vector<Atom> enumerate_atoms(const Structure& S, int nvars, int depth);

}  // namespace ifg

#endif
