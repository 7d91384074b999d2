#ifndef IFG_TESTS_ORACLE_HPP
#define IFG_TESTS_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ifg/model.hpp"
#include "ifg/syntax.hpp"
#include "ifg/teamset.hpp"

namespace ifg::test {

// All formulas of depth exactly d, for d = 1..max_depth, built from the atoms
// with every negation, slashed disjunction and slashed quantifier.
std::vector<std::vector<Formula>> formulas_by_depth(const std::vector<Atom>& atoms, int nvars, int max_depth);

Formula random_formula(std::mt19937_64& rng, const std::vector<Atom>& atoms, int nvars, int depth, bool slash_free);

Structure random_structure(std::mt19937_64& rng, int size);

// Tarski semantics, slashes ignored.
bool classical(const Structure& S, const Formula& f, const Space& sp, Valuation a);

// Satisfaction read straight off the definitions, using only the model
// enumerators; exponential and uncached.
bool definitional(const Structure& S, const Formula& f, Team V, bool plus);

// Element-wise operations on team sets computed from the definitions.
TeamSet split_union_oracle(const Space& sp, IndexSet J, const TeamSet& A, const TeamSet& B);
TeamSet exists_oracle(const Space& sp, int n, IndexSet J, const TeamSet& X);
TeamSet all_variant_oracle(const Space& sp, int n, const TeamSet& X);

}  // namespace ifg::test

#endif
