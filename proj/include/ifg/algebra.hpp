#ifndef IFG_ALGEBRA_HPP
#define IFG_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ifg/model.hpp"
#include "ifg/teamset.hpp"
#include "ifg/trump.hpp"

namespace ifg {

// <X+, X->, a member of the IFG cylindric power set algebra.
struct Element {
  TeamSet plus;
  TeamSet minus;

  bool operator==(const Element&) const = default;
  std::uint64_t hash() const { return plus.hash() * 1000003u ^ minus.hash(); }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return static_cast<std::size_t>(e.hash()); }
};

inline Element from_meaning(const Meaning& m) { return {m.plus, m.minus}; }

struct Flags {
  bool rooted = false;
  bool suit_pair = false;
  bool double_suit = false;
  bool fixed_point = false;
  bool flat = false;
};

std::string to_string(const Flags& f);

// Base |A| and dimension N with |A|^N <= 20.
class AlgebraContext {
 public:
  AlgebraContext(int base, int nvars);

  const Space& space() const { return sp_; }
  int base() const { return sp_.base(); }
  int nvars() const { return sp_.nvars(); }
  std::uint32_t valuations() const { return sp_.size(); }
  IndexSet all_indices() const { return sp_.all_indices(); }
  // The ~_J classes of ^N A.
  const std::vector<Team>& class_masks(IndexSet J) const { return masks_[J]; }

  Element zero() const;
  Element one() const;
  Element omega() const;
  Element mho() const;
  Element diag(int i, int j) const;

  Element neg(const Element& X) const;
  Element sum(IndexSet J, const Element& X, const Element& Y) const;
  Element prod(IndexSet J, const Element& X, const Element& Y) const;
  Element cyl(int n, IndexSet J, const Element& X) const;
  Element dual_cyl(int n, IndexSet J, const Element& X) const;

  // Reference implementations written straight from the definitions using
  // the model enumerators; single-threaded.
  Element sum_serial(IndexSet J, const Element& X, const Element& Y) const;
  Element prod_serial(IndexSet J, const Element& X, const Element& Y) const;
  Element cyl_serial(int n, IndexSet J, const Element& X) const;

  // Meaning of an atom with the given truth team.
  Element atomic(Team truth) const;

  Element make(const TeamSet& plus, const TeamSet& minus) const;
  void check(const Element& X) const;

 private:
  // For each team V, the candidate teams listed in items[start[V]..start[V+1]).
  struct TeamTable {
    std::vector<std::uint32_t> start;
    std::vector<Team> items;
  };

  Space sp_;
  std::vector<std::vector<Team>> masks_;
  // Saturated left parts per J, and reachable variants per (n, J); only
  // built for small spaces.
  std::vector<TeamTable> splits_;
  std::vector<TeamTable> variants_;

  std::size_t variant_slot(int n, IndexSet J) const { return static_cast<std::size_t>(n) * masks_.size() + J; }
  void build_tables();

  // { V : some J-saturated split V = V1 u V2 has V1 in A, V2 in B }
  TeamSet split_union(IndexSet J, const TeamSet& A, const TeamSet& B) const;
  bool some_variant_in(int n, const Team* cls, std::size_t k, std::size_t count, Team acc,
                       const TeamSet& target) const;
};

Flags classify(const Element& X);
bool leq_plus(const Element& X, const Element& Y);
bool leq_minus(const Element& X, const Element& Y);
bool leq(const Element& X, const Element& Y);

// Deterministic closure of generators and the constants 0, 1, D_ij under
// neg, sum_J, prod_J and cyl(n, J). Throws GuardError beyond cap elements.
std::vector<Element> generate_subalgebra(const AlgebraContext& ctx, const std::vector<Element>& generators,
                                         std::size_t cap = 20000);

// Atom meanings over terms of depth <= term_depth, then the closure.
std::vector<Element> atom_meanings(const AlgebraContext& ctx, const Structure& S, int term_depth = 1);
std::vector<Element> cyls_of(const Structure& S, int nvars, int term_depth = 1, std::size_t cap = 20000);

std::string render_element(const Space& sp, const Element& X);
std::string dump_algebra(const AlgebraContext& ctx, const std::vector<Element>& elements);

TeamSet powerset(const AlgebraContext& ctx, Team V);

// Carriers of the power set algebras Root_N(A), Suit_N(A) and DSuit_N(A).
// Exhaustive listings need at most 3 valuations for rooted elements and at
// most 4 for suits.
std::vector<TeamSet> all_suits(const AlgebraContext& ctx);
std::vector<Element> all_rooted(const AlgebraContext& ctx);
std::vector<Element> all_double_suits(const AlgebraContext& ctx);
std::vector<Element> random_rooted(const AlgebraContext& ctx, std::size_t count, std::uint64_t seed);

}  // namespace ifg

#endif
