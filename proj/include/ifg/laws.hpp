#ifndef IFG_LAWS_HPP
#define IFG_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ifg/algebra.hpp"

namespace ifg {

enum class Expectation { Holds, Fails };

// Which elements may fill an argument slot of a law.
enum class Need { Any, Rooted, SuitPair, DoubleSuit, Flat };

struct LawInfo {
  std::string id;
  std::string description;
  Expectation expect = Expectation::Holds;
  std::vector<Need> slots;
};

const std::vector<LawInfo>& law_catalog();
const LawInfo& find_law(const std::string& id);

struct LawOptions {
  // Check at most this many argument tuples, drawn with the seed below when
  // the full product is larger. Zero means exhaustive.
  std::uint64_t max_tuples = 0;
  std::uint64_t seed = 1;
};

struct LawResult {
  std::string law;
  bool holds = true;
  std::uint64_t instances = 0;
  std::vector<std::size_t> tuple;  // indices into the element list
  std::string counterexample;
};

// Quantifies the law over every admissible tuple of elements and every
// index parameter. The first counterexample in canonical tuple order is
// reported, independent of thread scheduling.
LawResult check_law(const AlgebraContext& ctx, const std::vector<Element>& elements, const std::string& id,
                    const LawOptions& opts = {});
LawResult check_law_serial(const AlgebraContext& ctx, const std::vector<Element>& elements, const std::string& id,
                           const LawOptions& opts = {});

bool meets(const Element& X, Need need);
bool expectation_met(const LawInfo& law, const LawResult& r);

// C_{0,J0} ... C_{N-1,J(N-1)}(X); the innermost cylindrification is C_{N-1}.
Element cyl_chain(const AlgebraContext& ctx, const std::vector<IndexSet>& Js, const Element& X);

// True when the set has at most two elements, is not double-suited, or
// contains Omega.
bool three_implies_omega(const AlgebraContext& ctx, const std::vector<Element>& algebra);

}  // namespace ifg

#endif
