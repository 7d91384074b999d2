#ifndef IFG_FINLAT_HPP
#define IFG_FINLAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ifg/algebra.hpp"

namespace ifg {

// A finite bounded lattice on 0..n-1 given by operation tables, optionally
// with a negation and a quantifier.
struct FinAlgebra {
  int n = 0;
  int bottom = 0;
  int top = 0;
  std::vector<int> join;  // row-major n x n
  std::vector<int> meet;
  std::vector<int> neg;    // empty when absent
  std::vector<int> nabla;  // empty when absent
  std::vector<std::string> labels;

  int size() const { return n; }
  int vee(int x, int y) const { return join[static_cast<std::size_t>(x) * n + y]; }
  int wedge(int x, int y) const { return meet[static_cast<std::size_t>(x) * n + y]; }
  bool leq(int x, int y) const { return vee(x, y) == y; }
  bool has_neg() const { return !neg.empty(); }
  bool has_nabla() const { return !nabla.empty(); }
  std::string label(int x) const;
  // Index of the element with this label, or -1.
  int find(const std::string& label) const;
};

// Builds the tables from an order relation; leq is row-major n x n.
FinAlgebra from_order(const std::vector<std::string>& labels, const std::vector<bool>& leq);

FinAlgebra parse_fin_algebra(const std::string& text);
FinAlgebra load_fin_algebra(const std::string& path);
std::string render_fin_algebra(const FinAlgebra& A);

struct AxiomCheck {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct AxiomReport {
  bool lattice = false;
  bool distributive = false;
  bool de_morgan = false;
  bool kleene = false;
  bool boolean = false;
  std::vector<AxiomCheck> checks;
};

AxiomReport check_axioms(const FinAlgebra& A);
// Throws InputError unless the tables are total, form a bounded distributive
// lattice with the stated bounds, and any negation is a De Morgan negation.
void validate(const FinAlgebra& A);

std::vector<int> fixed_points(const FinAlgebra& A);

// Consequences that must hold in any De Morgan algebra: the dual De Morgan
// law, uniqueness of the center of a Kleene algebra, and the zero-meet
// characterisations behind the type 1 and type 2 quantifiers.
std::vector<AxiomCheck> structural_facts(const FinAlgebra& A);

FinAlgebra product(const FinAlgebra& A, const FinAlgebra& B);
// Restriction to a subset closed under all operations; throws InputError
// otherwise. Elements keep the order given.
FinAlgebra subalgebra(const FinAlgebra& A, const std::vector<int>& elements);

FinAlgebra with_type0(FinAlgebra A);
FinAlgebra with_type1(FinAlgebra A, int c);
FinAlgebra with_type2(FinAlgebra A, int a, int b);

const std::vector<std::string>& named_algebra_ids();
FinAlgebra named_algebra(const std::string& id);

struct QuantifierReport {
  std::vector<AxiomCheck> checks;  // Q1..Q5, idempotent, range_subalgebra
  bool quantifier() const;
  bool holds(const std::string& name) const;
};

QuantifierReport check_quantifier(const FinAlgebra& A);

enum class QuantifierType { Type0, Type1, Type2, Other };
std::string to_string(QuantifierType t);
// Other unless nabla satisfies Q1-Q5.
QuantifierType classify_quantifier_type(const FinAlgebra& A);

struct VarietyMarkers {
  bool kleene_range = true;
  bool boolean_range = true;
  bool fix_marker = true;
  std::string witness;
};

VarietyMarkers check_variety_markers(const FinAlgebra& A);

struct Irreducibility {
  bool join_irreducible = true;
  bool meet_irreducible = true;
};

Irreducibility check_join_meet_irreducible(const FinAlgebra& A, int x);

// Block id per element, numbered by first occurrence.
using Congruence = std::vector<int>;

inline constexpr int kMaxCongruenceCarrier = 12;

bool is_compatible(const FinAlgebra& A, const Congruence& theta);
Congruence principal_congruence(const FinAlgebra& A, int a, int b);
// Sorted, identity first. Throws GuardError above kMaxCongruenceCarrier.
std::vector<Congruence> congruences(const FinAlgebra& A);
bool is_simple(const FinAlgebra& A);
bool is_subdirectly_irreducible(const FinAlgebra& A);
std::string render_congruence(const FinAlgebra& A, const Congruence& theta);

struct Embedding {
  int base = 0;                            // number of prime filters of [c,1]
  std::vector<std::vector<int>> filters;   // each as ascending element list
  int top_filter = -1;                     // index of the filter {1}
  std::vector<Element> image;              // h(x) for each carrier element
  std::vector<Flags> image_flags;
};

// Throws InputError naming the failed precondition, and std::logic_error if
// the constructed map is not an embedding.
Embedding embed_monadic_kleene(const FinAlgebra& A);

struct SearchOptions {
  int max_size = 6;
  std::uint64_t seed = 1;
  std::uint64_t max_candidates = 0;  // zero means no bound
};

struct MonadicSearchResult {
  std::vector<FinAlgebra> found;  // pairwise non-isomorphic, sorted by size
  std::uint64_t candidates = 0;
  bool exhausted = true;
};

// Monadic Kleene algebras with a type 1 quantifier, 0 meet irreducible and
// 1 join irreducible, up to isomorphism.
MonadicSearchResult search_monadic_kleene(const SearchOptions& opts = {});

// Reducts of a set of IFG elements closed under the relevant operations.
// The De Morgan reduct uses +_N and ._N; the monadic reduct adds C_{0,{0}}
// and needs N = 1.
FinAlgebra de_morgan_reduct(const AlgebraContext& ctx, const std::vector<Element>& elements);
FinAlgebra monadic_reduct(const AlgebraContext& ctx, const std::vector<Element>& elements);

}  // namespace ifg

#endif
