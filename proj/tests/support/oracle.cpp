#include "support/oracle.hpp"

#include <bit>

namespace ifg::test {

std::vector<std::vector<Formula>> formulas_by_depth(const std::vector<Atom>& atoms, int nvars, int max_depth) {
  std::vector<std::vector<Formula>> by(static_cast<std::size_t>(max_depth) + 1);
  for (const auto& a : atoms) by[1].push_back(Formula::atomic(a, nvars));
  const IndexSet subsets = IndexSet{1} << nvars;
  for (int d = 2; d <= max_depth; ++d) {
    auto& out = by[static_cast<std::size_t>(d)];
    const auto& prev = by[static_cast<std::size_t>(d - 1)];
    for (const auto& f : prev) out.push_back(Formula::negation(f));
    for (const auto& f : prev)
      for (int n = 0; n < nvars; ++n)
        for (IndexSet J = 0; J < subsets; ++J) out.push_back(Formula::exists(n, J, f));
    std::vector<const Formula*> lower;
    for (int e = 1; e < d; ++e)
      for (const auto& f : by[static_cast<std::size_t>(e)]) lower.push_back(&f);
    for (const auto* l : lower)
      for (const auto* r : lower)
        if (l->depth() == d - 1 || r->depth() == d - 1)
          for (IndexSet J = 0; J < subsets; ++J) out.push_back(Formula::disjunction(J, *l, *r));
  }
  return by;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<Atom>& atoms, int nvars, int depth, bool slash_free) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto slash = [&]() -> IndexSet {
    if (slash_free) return 0;
    return static_cast<IndexSet>(rng() % (std::uint64_t{1} << nvars));
  };
  if (depth <= 1 || pick(4) == 0) return Formula::atomic(atoms[pick(atoms.size())], nvars);
  switch (pick(6)) {
    case 0:
      return Formula::negation(random_formula(rng, atoms, nvars, depth - 1, slash_free));
    case 1:
      return Formula::disjunction(slash(), random_formula(rng, atoms, nvars, depth - 1, slash_free),
                                  random_formula(rng, atoms, nvars, depth - 1, slash_free));
    case 2:
      return Formula::conjunction(slash(), random_formula(rng, atoms, nvars, depth - 1, slash_free),
                                  random_formula(rng, atoms, nvars, depth - 1, slash_free));
    case 3:
      return Formula::exists(static_cast<int>(pick(static_cast<std::size_t>(nvars))), slash(),
                             random_formula(rng, atoms, nvars, depth - 1, slash_free));
    case 4:
      return Formula::forall(static_cast<int>(pick(static_cast<std::size_t>(nvars))), slash(),
                             random_formula(rng, atoms, nvars, depth - 1, slash_free));
    default:
      return Formula::atomic(atoms[pick(atoms.size())], nvars);
  }
}

Structure random_structure(std::mt19937_64& rng, int size) {
  Structure S(size);
  S.add_constant("c", static_cast<int>(rng() % static_cast<std::uint64_t>(size)));
  S.add_function("f", 1);
  for (int a = 0; a < size; ++a) S.set_function("f", {a}, static_cast<int>(rng() % static_cast<std::uint64_t>(size)));
  S.add_relation("P", 1);
  S.add_relation("R", 2);
  for (int a = 0; a < size; ++a) {
    if (rng() & 1u) S.add_tuple("P", {a});
    for (int b = 0; b < size; ++b)
      if (rng() % 3 == 0) S.add_tuple("R", {a, b});
  }
  return S;
}

namespace {

bool classical_at(const Structure& S, const Formula& f, int node, const Space& sp, Valuation a) {
  const Node& n = f.node(node);
  switch (n.kind) {
    case NodeKind::Atomic:
      return eval_atomic(S, n.atom, sp, a);
    case NodeKind::Not:
      return !classical_at(S, f, n.left, sp, a);
    case NodeKind::Or:
      return classical_at(S, f, n.left, sp, a) || classical_at(S, f, n.right, sp, a);
    case NodeKind::Exists:
      for (int b = 0; b < sp.base(); ++b)
        if (classical_at(S, f, n.left, sp, sp.with_digit(a, n.var, b))) return true;
      return false;
  }
  return false;
}

bool definitional_at(const Structure& S, const Formula& f, const Space& sp, int node, Team V, bool plus) {
  const Node& n = f.node(node);
  switch (n.kind) {
    case NodeKind::Atomic: {
      for (Team r = V; r; r &= r - 1)
        if (eval_atomic(S, n.atom, sp, static_cast<Valuation>(std::countr_zero(r))) != plus) return false;
      return true;
    }
    case NodeKind::Not:
      return definitional_at(S, f, sp, n.left, V, !plus);
    case NodeKind::Or:
      if (!plus) return definitional_at(S, f, sp, n.left, V, false) && definitional_at(S, f, sp, n.right, V, false);
      for (const auto& [l, r] : enumerate_saturated_splits(sp, V, n.slash))
        if (definitional_at(S, f, sp, n.left, l, true) && definitional_at(S, f, sp, n.right, r, true)) return true;
      return false;
    case NodeKind::Exists:
      if (!plus) return definitional_at(S, f, sp, n.left, variant_all(sp, V, n.var), false);
      for (const auto& g : enumerate_independent_functions(sp, V, n.slash))
        if (definitional_at(S, f, sp, n.left, variant(sp, V, n.var, g), true)) return true;
      return false;
  }
  return false;
}

}  // namespace

bool classical(const Structure& S, const Formula& f, const Space& sp, Valuation a) { return classical_at(S, f, 0, sp, a); }

bool definitional(const Structure& S, const Formula& f, Team V, bool plus) {
  Space sp(S.size(), f.nvars());
  return definitional_at(S, f, sp, 0, V, plus);
}

TeamSet split_union_oracle(const Space& sp, IndexSet J, const TeamSet& A, const TeamSet& B) {
  TeamSet out(sp.size());
  for (Team V = 0; V <= sp.full(); ++V)
    for (const auto& [l, r] : enumerate_saturated_splits(sp, V, J))
      if (A.contains(l) && B.contains(r)) {
        out.insert(V);
        break;
      }
  return out;
}

TeamSet exists_oracle(const Space& sp, int n, IndexSet J, const TeamSet& X) {
  TeamSet out(sp.size());
  for (Team V = 0; V <= sp.full(); ++V)
    for (const auto& g : enumerate_independent_functions(sp, V, J))
      if (X.contains(variant(sp, V, n, g))) {
        out.insert(V);
        break;
      }
  return out;
}

TeamSet all_variant_oracle(const Space& sp, int n, const TeamSet& X) {
  TeamSet out(sp.size());
  for (Team V = 0; V <= sp.full(); ++V)
    if (X.contains(variant_all(sp, V, n))) out.insert(V);
  return out;
}

}  // namespace ifg::test
