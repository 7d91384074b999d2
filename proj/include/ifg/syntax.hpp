#ifndef IFG_SYNTAX_HPP
#define IFG_SYNTAX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ifg {

// Subset of {0..N-1}, bit i set iff index i is a member.
using IndexSet = std::uint32_t;

std::string index_set_to_string(IndexSet J);

struct Term {
  enum class Kind { Var, Const, Func };
  Kind kind = Kind::Var;
  int var = -1;
  std::string name;
  std::vector<Term> args;

  static Term variable(int i) { return Term{Kind::Var, i, {}, {}}; }
  static Term constant(std::string n) { return Term{Kind::Const, -1, std::move(n), {}}; }
  static Term apply(std::string n, std::vector<Term> a) { return Term{Kind::Func, -1, std::move(n), std::move(a)}; }

  bool operator==(const Term&) const = default;
  int depth() const;
};

struct Atom {
  enum class Kind { Eq, Rel };
  Kind kind = Kind::Eq;
  std::string name;  // relation name, empty for equality
  std::vector<Term> args;

  static Atom eq(Term a, Term b) { return Atom{Kind::Eq, {}, {std::move(a), std::move(b)}}; }
  static Atom rel(std::string n, std::vector<Term> a) { return Atom{Kind::Rel, std::move(n), std::move(a)}; }

  bool operator==(const Atom&) const = default;
  IndexSet variables() const;
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);

enum class NodeKind { Atomic, Not, Or, Exists };

struct Node {
  NodeKind kind = NodeKind::Atomic;
  Atom atom;            // Atomic only
  IndexSet slash = 0;   // Or, Exists
  int var = -1;         // Exists
  int left = -1;        // child of Not/Exists, left disjunct of Or
  int right = -1;       // right disjunct of Or
  std::string position; // digits over {0,1,2,3}; empty at the root

  bool operator==(const Node&) const = default;
};

// An IFG_N formula stored as a pre-order node array, root at index 0.
class Formula {
 public:
  static Formula atomic(Atom a, int nvars);
  static Formula negation(const Formula& f);
  static Formula disjunction(IndexSet J, const Formula& l, const Formula& r);
  static Formula conjunction(IndexSet J, const Formula& l, const Formula& r);
  static Formula exists(int n, IndexSet J, const Formula& f);
  static Formula forall(int n, IndexSet J, const Formula& f);

  int nvars() const { return nvars_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const Node& root() const { return nodes_.front(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  int depth() const;
  // Node index of a position string, or -1.
  int find(std::string_view position) const;
  // The subtree at node i, re-rooted (positions lose their prefix).
  Formula subformula(int i) const;
  // Same formula with a larger variable count.
  Formula with_nvars(int n) const;
  bool slash_free() const;

  bool operator==(const Formula&) const = default;

 private:
  std::vector<Node> nodes_;
  int nvars_ = 0;

  void append_subtree(const Formula& f, const std::string& prefix);
};

struct SubformulaEntry {
  std::string position;
  int node;
  bool positive;
};

std::vector<SubformulaEntry> subformulas(const Formula& f);
bool positive_position(std::string_view position);

// J_psi for each node (indexed like Formula::nodes()).
std::vector<IndexSet> unbound_by_node(const Formula& f);
std::map<std::string, IndexSet> unbound_sets(const Formula& f);

// True when N=0 or every variable of every atom is quantified above it.
bool is_sentence(const Formula& f);

// Symbol table used for optional checking while parsing.
struct Signature {
  enum class Kind { Const, Func, Rel };
  std::map<std::string, std::pair<Kind, int>> symbols;  // name -> (kind, arity)
};

inline constexpr int kDefaultDepthLimit = 16;

Formula parse(std::string_view text, int nvars, const Signature* sig = nullptr,
              int depth_limit = kDefaultDepthLimit);
std::string print(const Formula& f);

// Document form: a header line "nvars N" followed by the formula.
std::string print_document(const Formula& f);
Formula parse_document(std::string_view text, const Signature* sig = nullptr);

}  // namespace ifg

#endif
