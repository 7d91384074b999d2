#include "ifg/laws.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <random>

#include "ifg/error.hpp"
#include "ifg/syntax.hpp"

namespace ifg {

namespace {

struct Item {
  const Element* x;
  const std::vector<Element>* derived;
};

using Args = const Item*;
using Fail = std::optional<std::string>;
using CheckFn = Fail (*)(const AlgebraContext&, Args);
using DeriveFn = std::vector<Element> (*)(const AlgebraContext&, const Element&);

struct LawDef {
  LawInfo info;
  CheckFn check;
  DeriveFn derive = nullptr;
};

std::string S(IndexSet J) { return index_set_to_string(J); }
bool subset(IndexSet J, IndexSet K) { return (J & ~K) == 0; }
bool has(IndexSet J, int n) { return (J >> n) & 1u; }
bool rooted(const Element& X) { return X.plus.contains(0) && X.minus.contains(0); }
bool suit(const TeamSet& s) { return !s.none() && s.downward_closed(); }
bool flat(const TeamSet& s) { return !s.none() && s == TeamSet::powerset_of(s.valuations(), s.support()); }
bool is_double_suit(const Element& X) { return classify(X).double_suit; }

template <typename F>
Fail for_subsets(const AlgebraContext& ctx, F&& f) {
  for (IndexSet J = 0; J <= ctx.all_indices(); ++J)
    if (auto r = f(J)) return r;
  return std::nullopt;
}

template <typename F>
Fail for_pairs(const AlgebraContext& ctx, F&& f) {
  return for_subsets(ctx, [&](IndexSet J) { return for_subsets(ctx, [&](IndexSet K) { return f(J, K); }); });
}

template <typename F>
Fail for_triples(const AlgebraContext& ctx, F&& f) {
  return for_subsets(ctx, [&](IndexSet J) { return for_pairs(ctx, [&](IndexSet K, IndexSet L) { return f(J, K, L); }); });
}

// Every tuple (J_0, ..., J_{N-1}) of index sets.
template <typename F>
Fail for_tuples(const AlgebraContext& ctx, F&& f) {
  int N = ctx.nvars();
  std::vector<IndexSet> Js(N, 0);
  while (true) {
    if (auto r = f(Js)) return r;
    int k = 0;
    while (k < N && Js[k] == ctx.all_indices()) Js[k++] = 0;
    if (k == N) return std::nullopt;
    ++Js[k];
  }
}

std::string tuple_str(const std::vector<IndexSet>& Js) {
  std::string s = "(";
  for (std::size_t i = 0; i < Js.size(); ++i) s += (i ? "," : "") + S(Js[i]);
  return s + ")";
}

Fail involution(const AlgebraContext& ctx, Args a) {
  if (ctx.neg(ctx.neg(*a[0].x)) != *a[0].x) return "~~X != X";
  return std::nullopt;
}

Fail duality(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (ctx.prod(J, X, Y) != ctx.neg(ctx.sum(J, ctx.neg(X), ctx.neg(Y))))
      return "J=" + S(J) + ": X *J Y != ~(~X +J ~Y)";
    for (int n = 0; n < ctx.nvars(); ++n)
      if (ctx.dual_cyl(n, J, X) != ctx.neg(ctx.cyl(n, J, ctx.neg(X))))
        return "n=" + std::to_string(n) + " J=" + S(J) + ": dual cylindrification";
    return std::nullopt;
  });
}

Fail commutativity(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (ctx.sum(J, X, Y) != ctx.sum(J, Y, X)) return "J=" + S(J) + ": X +J Y != Y +J X";
    if (ctx.prod(J, X, Y) != ctx.prod(J, Y, X)) return "J=" + S(J) + ": X *J Y != Y *J X";
    return std::nullopt;
  });
}

Fail associativity_jj(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (ctx.sum(J, ctx.sum(J, X, Y), Z) != ctx.sum(J, X, ctx.sum(J, Y, Z))) return "J=" + S(J) + ": sum";
    if (ctx.prod(J, ctx.prod(J, X, Y), Z) != ctx.prod(J, X, ctx.prod(J, Y, Z))) return "J=" + S(J) + ": product";
    return std::nullopt;
  });
}

Fail associativity_jk(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (!subset(J, K)) return std::nullopt;
    std::string at = "J=" + S(J) + " K=" + S(K) + ": ";
    Element l = ctx.sum(K, ctx.sum(J, X, Y), Z), r = ctx.sum(J, X, ctx.sum(K, Y, Z));
    if (!l.plus.subset_of(r.plus)) return at + "(X +J Y) +K Z <=+ X +J (Y +K Z)";
    if (l.minus != r.minus) return at + "(X +J Y) +K Z =- X +J (Y +K Z)";
    l = ctx.prod(K, ctx.prod(J, X, Y), Z);
    r = ctx.prod(J, X, ctx.prod(K, Y, Z));
    if (l.plus != r.plus) return at + "(X *J Y) *K Z =+ X *J (Y *K Z)";
    if (!l.minus.subset_of(r.minus)) return at + "(X *J Y) *K Z <=- X *J (Y *K Z)";
    return std::nullopt;
  });
}

Fail assoc_mixed(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (ctx.sum(K, ctx.sum(J, X, Y), Z) != ctx.sum(J, X, ctx.sum(K, Y, Z)))
      return "J=" + S(J) + " K=" + S(K) + ": (X +J Y) +K Z != X +J (Y +K Z)";
    return std::nullopt;
  });
}

Fail constants(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  Element zero = ctx.zero(), one = ctx.one(), omega = ctx.omega(), mho = ctx.mho();
  if (ctx.neg(omega) != omega) return "~Omega != Omega";
  if (ctx.neg(mho) != mho) return "~Mho != Mho";
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    std::string at = "J=" + S(J) + ": ";
    if (ctx.sum(J, X, zero) != X) return at + "X +J 0 != X";
    if (ctx.prod(J, X, one) != X) return at + "X *J 1 != X";
    bool absorbs = ctx.prod(J, X, zero) == zero && ctx.sum(J, X, one) == one;
    if (absorbs != rooted(X)) return at + "X *J 0 = 0 and X +J 1 = 1 iff X rooted";
    if (ctx.sum(J, omega, omega) != omega || ctx.prod(J, omega, omega) != omega) return at + "Omega idempotent";
    if (ctx.sum(J, mho, mho) != mho || ctx.prod(J, mho, mho) != mho) return at + "Mho idempotent";
    return std::nullopt;
  });
}

Fail omega_bounds(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  Element omega = ctx.omega();
  if (!leq(X, omega) || !leq(omega, Y)) return std::nullopt;
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (ctx.prod(J, X, Y) != X) return "J=" + S(J) + ": X *J Y != X";
    if (ctx.sum(J, X, Y) != Y) return "J=" + S(J) + ": X +J Y != Y";
    return std::nullopt;
  });
}

Fail rooted_sum(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  if (rooted(X)) {
    if (ctx.sum(N, X, Y).plus != (X.plus | Y.plus)) return "(X +N Y)+ != X+ u Y+";
    if (ctx.prod(N, X, Y).minus != (X.minus | Y.minus)) return "(X *N Y)- != X- u Y-";
  }
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (!X.plus.subset_of(ctx.sum(J, X, Y).plus)) return "J=" + S(J) + ": X+ not in (X +J Y)+";
    if (!X.minus.subset_of(ctx.prod(J, X, Y).minus)) return "J=" + S(J) + ": X- not in (X *J Y)-";
    return std::nullopt;
  });
}

Fail absorption_jk(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    std::string at = "J=" + S(J) + " K=" + S(K) + ": ";
    Element s = ctx.sum(J, X, ctx.prod(K, X, Y));
    if (!X.plus.subset_of(s.plus) || X.minus != s.minus) return at + "X <=+ X +J (X *K Y) and =-";
    Element p = ctx.prod(J, X, ctx.sum(K, X, Y));
    if (X.plus != p.plus || !X.minus.subset_of(p.minus)) return at + "X =+ X *J (X +K Y) and <=-";
    return std::nullopt;
  });
}

Fail absorption_full(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (ctx.sum(J, X, ctx.prod(K, X, Y)) != X) return "J=" + S(J) + " K=" + S(K) + ": X +J (X *K Y) != X";
    if (ctx.prod(J, X, ctx.sum(K, X, Y)) != X) return "J=" + S(J) + " K=" + S(K) + ": X *J (X +K Y) != X";
    return std::nullopt;
  });
}

Fail flat_absorption(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    std::string at = "J=" + S(J) + " K=" + S(K) + ": ";
    if (flat(X.plus) && ctx.sum(J, X, ctx.prod(K, X, Y)) != X) return at + "X flat but X +J (X *K Y) != X";
    if (flat(X.minus) && ctx.prod(J, X, ctx.sum(K, X, Y)) != X) return at + "~X flat but X *J (X +K Y) != X";
    return std::nullopt;
  });
}

Fail absorption_nj(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    if (ctx.sum(N, X, ctx.prod(J, X, Y)) != X) return "J=" + S(J) + ": X +N (X *J Y) != X";
    if (ctx.prod(N, X, ctx.sum(J, X, Y)) != X) return "J=" + S(J) + ": X *N (X +J Y) != X";
    return std::nullopt;
  });
}

Fail less_than(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  bool le = leq(X, Y);
  if (le != (ctx.sum(N, X, Y) == Y)) return "X <= Y iff X +N Y = Y";
  if (le != (ctx.prod(N, X, Y) == X)) return "X <= Y iff X *N Y = X";
  return std::nullopt;
}

Fail bounds(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  if (!leq(ctx.zero(), X) || !leq(X, ctx.one())) return "0 <= X <= 1";
  return std::nullopt;
}

Fail sum_antitone(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (!subset(J, K)) return std::nullopt;
    if (!leq(ctx.sum(K, X, Y), ctx.sum(J, X, Y))) return "J=" + S(J) + " K=" + S(K) + ": X +K Y <= X +J Y";
    if (!leq(ctx.prod(J, X, Y), ctx.prod(K, X, Y))) return "J=" + S(J) + " K=" + S(K) + ": X *J Y <= X *K Y";
    return std::nullopt;
  });
}

Fail monotone(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Xp = *a[1].x, &Z = *a[2].x;
  if (!leq(X, Xp)) return std::nullopt;
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    std::string at = "J=" + S(J) + ": ";
    if (!leq(ctx.sum(J, X, Z), ctx.sum(J, Xp, Z)) || !leq(ctx.sum(J, Z, X), ctx.sum(J, Z, Xp))) return at + "sum";
    if (!leq(ctx.prod(J, X, Z), ctx.prod(J, Xp, Z)) || !leq(ctx.prod(J, Z, X), ctx.prod(J, Z, Xp)))
      return at + "product";
    return std::nullopt;
  });
}

bool pm_subset(const Element& l, const Element& r) { return l.plus.subset_of(r.plus) && l.minus.subset_of(r.minus); }

Fail distributivity_jk(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    std::string at = "J=" + S(J) + " K=" + S(K) + ": ";
    if (!pm_subset(ctx.prod(J, X, ctx.sum(K, Y, Z)), ctx.sum(K, ctx.prod(J, X, Y), ctx.prod(J, X, Z))))
      return at + "X *J (Y +K Z) in (X *J Y) +K (X *J Z)";
    if (!pm_subset(ctx.sum(J, X, ctx.prod(K, Y, Z)), ctx.prod(K, ctx.sum(J, X, Y), ctx.sum(J, X, Z))))
      return at + "X +J (Y *K Z) in (X +J Y) *K (X +J Z)";
    return std::nullopt;
  });
}

Fail distributivity_full(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (ctx.prod(J, X, ctx.sum(K, Y, Z)) != ctx.sum(K, ctx.prod(J, X, Y), ctx.prod(J, X, Z)))
      return "J=" + S(J) + " K=" + S(K) + ": X *J (Y +K Z) != (X *J Y) +K (X *J Z)";
    return std::nullopt;
  });
}

Fail distributivity_jn(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  IndexSet N = ctx.all_indices();
  return for_subsets(ctx, [&](IndexSet J) -> Fail {
    std::string at = "J=" + S(J) + ": ";
    if (ctx.prod(J, X, ctx.sum(N, Y, Z)).plus != ctx.sum(N, ctx.prod(J, X, Y), ctx.prod(J, X, Z)).plus)
      return at + "X *J (Y +N Z) =+ (X *J Y) +N (X *J Z)";
    if (ctx.prod(N, X, ctx.sum(J, Y, Z)).minus != ctx.sum(J, ctx.prod(N, X, Y), ctx.prod(N, X, Z)).minus)
      return at + "X *N (Y +J Z) =- (X *N Y) +J (X *N Z)";
    if (ctx.sum(N, X, ctx.prod(J, Y, Z)).plus != ctx.prod(J, ctx.sum(N, X, Y), ctx.sum(N, X, Z)).plus)
      return at + "X +N (Y *J Z) =+ (X +N Y) *J (X +N Z)";
    if (ctx.sum(J, X, ctx.prod(N, Y, Z)).minus != ctx.prod(N, ctx.sum(J, X, Y), ctx.sum(J, X, Z)).minus)
      return at + "X +J (Y *N Z) =- (X +J Y) *N (X +J Z)";
    return std::nullopt;
  });
}

Fail de_morgan(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  auto s = [&](const Element& p, const Element& q) { return ctx.sum(N, p, q); };
  auto p = [&](const Element& u, const Element& v) { return ctx.prod(N, u, v); };
  if (s(X, Y) != s(Y, X) || p(X, Y) != p(Y, X)) return "commutativity";
  if (s(X, p(X, Y)) != X || p(X, s(X, Y)) != X) return "absorption";
  if (s(ctx.zero(), X) != X || p(ctx.one(), X) != X) return "bounds";
  if (ctx.neg(ctx.neg(X)) != X) return "involution";
  if (ctx.neg(s(X, Y)) != p(ctx.neg(X), ctx.neg(Y))) return "~(X + Y) != ~X * ~Y";
  return std::nullopt;
}

Fail de_morgan_ternary(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x, &Z = *a[2].x;
  IndexSet N = ctx.all_indices();
  auto s = [&](const Element& p, const Element& q) { return ctx.sum(N, p, q); };
  auto p = [&](const Element& u, const Element& v) { return ctx.prod(N, u, v); };
  if (s(s(X, Y), Z) != s(X, s(Y, Z)) || p(p(X, Y), Z) != p(X, p(Y, Z))) return "associativity";
  if (s(X, p(Y, Z)) != p(s(X, Y), s(X, Z))) return "X + (Y * Z) != (X + Y) * (X + Z)";
  if (p(X, s(Y, Z)) != s(p(X, Y), p(X, Z))) return "X * (Y + Z) != (X * Y) + (X * Z)";
  return std::nullopt;
}

// For each J in order: X *J ~X, then X +J ~X.
std::vector<Element> excluded_middle_terms(const AlgebraContext& ctx, const Element& X) {
  std::vector<Element> out;
  Element nx = ctx.neg(X);
  for (IndexSet J = 0; J <= ctx.all_indices(); ++J) {
    out.push_back(ctx.prod(J, X, nx));
    out.push_back(ctx.sum(J, X, nx));
  }
  return out;
}

Fail kleene(const AlgebraContext& ctx, Args a) {
  std::size_t n = 2 * ctx.all_indices();
  if (!leq((*a[0].derived)[n], (*a[1].derived)[n + 1])) return "X *N ~X <= Y +N ~Y";
  return std::nullopt;
}

Fail excluded_middle_bound(const AlgebraContext& ctx, Args a) {
  const auto &dx = *a[0].derived, &dy = *a[1].derived;
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    if (!leq(dx[2 * J], dy[2 * K + 1])) return "J=" + S(J) + " K=" + S(K) + ": X *J ~X <= Y +K ~Y";
    return std::nullopt;
  });
}

Fail complementation(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  IndexSet N = ctx.all_indices();
  std::uint32_t M = ctx.valuations();
  bool cond = (X.plus | X.minus) == TeamSet::all(M) && (X.plus & X.minus) == TeamSet::only_empty(M);
  if ((ctx.sum(N, X, ctx.neg(X)) == ctx.one()) != cond) return "X +N ~X = 1 iff X+ u X- = P and X+ n X- = {0}";
  if ((ctx.prod(N, X, ctx.neg(X)) == ctx.zero()) != cond) return "X *N ~X = 0 iff X+ u X- = P and X+ n X- = {0}";
  return std::nullopt;
}

Fail suited_complementation(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  bool comp = ctx.sum(ctx.all_indices(), X, ctx.neg(X)) == ctx.one();
  if (comp != (X == ctx.zero() || X == ctx.one())) return "X +N ~X = 1 iff X in {0,1}";
  return std::nullopt;
}

Fail complementation_full(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  if (ctx.sum(ctx.all_indices(), X, ctx.neg(X)) != ctx.one()) return "X +N ~X != 1";
  return std::nullopt;
}

Fail not_complemented(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  std::uint32_t M = ctx.valuations();
  if (ctx.sum(N, X, Y) != ctx.one() || ctx.prod(N, X, Y) != ctx.zero()) return std::nullopt;
  TeamSet all = TeamSet::all(M), root = TeamSet::only_empty(M);
  if ((X.plus | Y.plus) != all || (X.minus | Y.minus) != all) return "complements must cover P";
  if ((X.plus & Y.plus) != root || (X.minus & Y.minus) != root) return "complements must meet in {0}";
  return std::nullopt;
}

Fail suited_not_complemented(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  Element zero = ctx.zero(), one = ctx.one();
  bool comp = ctx.sum(N, X, Y) == one && ctx.prod(N, X, Y) == zero;
  bool bounds = (X == one && Y == zero) || (X == zero && Y == one);
  if (comp != bounds) return "complements iff {X,Y} = {0,1}";
  return std::nullopt;
}

Fail omega_mho_complements(const AlgebraContext& ctx, Args) {
  IndexSet N = ctx.all_indices();
  if (ctx.sum(N, ctx.omega(), ctx.mho()) != ctx.one()) return "Omega +N Mho != 1";
  if (ctx.prod(N, ctx.omega(), ctx.mho()) != ctx.zero()) return "Omega *N Mho != 0";
  return std::nullopt;
}

template <typename F>
Fail for_cyl(const AlgebraContext& ctx, F&& f) {
  for (int n = 0; n < ctx.nvars(); ++n)
    for (IndexSet J = 0; J <= ctx.all_indices(); ++J)
      if (auto r = f(n, J)) return r;
  return std::nullopt;
}

std::string at_nj(int n, IndexSet J) { return "n=" + std::to_string(n) + " J=" + S(J) + ": "; }

Fail c1(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  Element zero = ctx.zero(), one = ctx.one(), omega = ctx.omega(), mho = ctx.mho();
  bool ds = is_double_suit(X);
  return for_cyl(ctx, [&](int n, IndexSet J) -> Fail {
    std::string at = at_nj(n, J);
    if (ctx.cyl(n, J, zero) != zero || ctx.dual_cyl(n, J, one) != one) return at + "C(0) = 0 and Cd(1) = 1";
    if (ctx.cyl(n, J, one) != one || ctx.dual_cyl(n, J, zero) != zero) return at + "C(1) = 1 and Cd(0) = 0";
    if (ctx.cyl(n, J, omega) != omega || ctx.dual_cyl(n, J, omega) != omega) return at + "C(Omega) = Omega";
    if (ctx.cyl(n, J, mho) != mho || ctx.dual_cyl(n, J, mho) != mho) return at + "C(Mho) = Mho";
    if (ds && (ctx.cyl(n, J, X) == zero) != (X == zero)) return at + "C(X) = 0 iff X = 0";
    return std::nullopt;
  });
}

Fail c2(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  IndexSet N = ctx.all_indices();
  bool ds = is_double_suit(X);
  return for_cyl(ctx, [&](int n, IndexSet J) -> Fail {
    std::string at = at_nj(n, J);
    Element c = ctx.cyl(n, J, X);
    if (!has(J, n)) {
      if (auto r = for_subsets(ctx, [&](IndexSet K) -> Fail {
            if (ctx.prod(K, X, c).plus != X.plus) return at + "K=" + S(K) + " X *K C(X) =+ X";
            return std::nullopt;
          }))
        return r;
    }
    if (suit(X.minus) && ctx.prod(N, X, c).minus != X.minus) return at + "X *N C(X) =- X";
    if (ds && ctx.prod(N, X, ctx.cyl(n, 0, X)) != X) return at + "X *N C_{n,{}}(X) = X";
    return std::nullopt;
  });
}

Fail c2_full(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  return for_cyl(ctx, [&](int n, IndexSet J) -> Fail {
    return for_subsets(ctx, [&](IndexSet K) -> Fail {
      if (ctx.prod(K, X, ctx.cyl(n, J, X)) != X) return at_nj(n, J) + "K=" + S(K) + " X *K C(X) != X";
      return std::nullopt;
    });
  });
}

Fail c_antitone(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  return for_cyl(ctx, [&](int n, IndexSet J) -> Fail {
    return for_subsets(ctx, [&](IndexSet K) -> Fail {
      if (!subset(J, K)) return std::nullopt;
      if (!leq(ctx.cyl(n, K, X), ctx.cyl(n, J, X))) return at_nj(n, J) + "K=" + S(K) + " C_K(X) <= C_J(X)";
      if (!leq(ctx.dual_cyl(n, J, X), ctx.dual_cyl(n, K, X))) return at_nj(n, J) + "K=" + S(K) + " Cd_J <= Cd_K";
      return std::nullopt;
    });
  });
}

Fail c_monotone(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  if (!leq(X, Y)) return std::nullopt;
  return for_cyl(ctx, [&](int n, IndexSet J) -> Fail {
    if (!leq(ctx.cyl(n, J, X), ctx.cyl(n, J, Y))) return at_nj(n, J) + "C(X) <= C(Y)";
    if (!leq(ctx.dual_cyl(n, J, X), ctx.dual_cyl(n, J, Y))) return at_nj(n, J) + "Cd(X) <= Cd(Y)";
    return std::nullopt;
  });
}

Fail c3(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  IndexSet N = ctx.all_indices();
  bool ds = is_double_suit(X) && is_double_suit(Y);
  for (int n = 0; n < ctx.nvars(); ++n) {
    if (auto r = for_triples(ctx, [&](IndexSet J, IndexSet K, IndexSet L) -> Fail {
          std::string at = "n=" + std::to_string(n) + " J=" + S(J) + " K=" + S(K) + " L=" + S(L) + ": ";
          Element cjx = ctx.cyl(n, J, X), cky = ctx.cyl(n, K, Y);
          Element lhs = ctx.cyl(n, J, ctx.prod(L, X, cky));
          Element rhs = ctx.prod(L, cjx, cky);
          if (subset(J, K) && !lhs.plus.subset_of(ctx.prod(L, cjx, ctx.cyl(n, J, Y)).plus)) return at + "(a)";
          if (has(K, n) && lhs.plus != rhs.plus) return at + "(b)";
          if (has(L, n)) {
            if (!rhs.minus.subset_of(lhs.minus)) return at + "(c) first inclusion";
            if (!lhs.minus.subset_of(ctx.cyl(n, N, rhs).minus)) return at + "(c) second inclusion";
            if (suit(rhs.minus) && lhs.minus != rhs.minus) return at + "(d)";
          }
          if (ds && has(K, n) && has(L, n) && lhs != rhs) return at + "double suits";
          return std::nullopt;
        }))
      return r;
  }
  return std::nullopt;
}

Fail c3_full(const AlgebraContext& ctx, Args a) {
  const Element &X = *a[0].x, &Y = *a[1].x;
  for (int n = 0; n < ctx.nvars(); ++n) {
    if (auto r = for_triples(ctx, [&](IndexSet J, IndexSet K, IndexSet L) -> Fail {
          if (ctx.cyl(n, J, ctx.prod(L, X, ctx.cyl(n, K, Y))) != ctx.prod(L, ctx.cyl(n, J, X), ctx.cyl(n, K, Y)))
            return "n=" + std::to_string(n) + " J=" + S(J) + " K=" + S(K) + " L=" + S(L) + ": C(X * C(Y)) != C(X) * C(Y)";
          return std::nullopt;
        }))
      return r;
  }
  return std::nullopt;
}

Fail c4(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  int Nv = ctx.nvars();
  return for_pairs(ctx, [&](IndexSet J, IndexSet K) -> Fail {
    for (int n = 0; n < Nv; ++n) {
      std::string at = "n=" + std::to_string(n) + " J=" + S(J) + " K=" + S(K) + ": ";
      Element ck = ctx.cyl(n, K, X);
      Element both = ctx.cyl(n, J, ck);
      if (!leq(both, ctx.cyl(n, J & K, X))) return at + "C_J C_K(X) <= C_{J n K}(X)";
      if (has(K, n) && both != ck) return at + "C_J C_K(X) = C_K(X)";
      for (int m = 0; m < Nv; ++m) {
        if (m == n || !has(K, m) || !has(J, n)) continue;
        if (ctx.cyl(m, J, ck) != ctx.cyl(n, K, ctx.cyl(m, J, X)))
          return at + "m=" + std::to_string(m) + " C_{m,J} C_{n,K} = C_{n,K} C_{m,J}";
      }
    }
    return std::nullopt;
  });
}

Fail c5(const AlgebraContext& ctx, Args) {
  for (int i = 0; i < ctx.nvars(); ++i)
    for (int j = 0; j < ctx.nvars(); ++j)
      for (IndexSet J = 0; J <= ctx.all_indices(); ++J)
        if (!has(J, j) && ctx.cyl(i, J, ctx.diag(i, j)) != ctx.one())
          return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " J=" + S(J) + ": C_{i,J}(D_ij) != 1";
  return std::nullopt;
}

Fail c5_full(const AlgebraContext& ctx, Args) {
  for (int i = 0; i < ctx.nvars(); ++i)
    for (int j = 0; j < ctx.nvars(); ++j)
      for (IndexSet J = 0; J <= ctx.all_indices(); ++J)
        if (ctx.cyl(i, J, ctx.diag(i, j)) != ctx.one())
          return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " J=" + S(J) + ": C_{i,J}(D_ij) != 1";
  return std::nullopt;
}

Fail c6(const AlgebraContext& ctx, Args) {
  int Nv = ctx.nvars();
  for (int i = 0; i < Nv; ++i)
    for (int j = 0; j < Nv; ++j)
      for (int k = 0; k < Nv; ++k) {
        if (k == i || k == j) continue;
        for (IndexSet J = 0; J <= ctx.all_indices(); ++J) {
          if (has(J, i) && has(J, j)) continue;
          if (ctx.cyl(k, J, ctx.prod(0, ctx.diag(i, k), ctx.diag(k, j))) != ctx.diag(i, j))
            return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k) + " J=" + S(J) +
                   ": C_{k,J}(D_ik *{} D_kj) != D_ij";
        }
      }
  return std::nullopt;
}

template <typename F>
Fail for_c7(const AlgebraContext& ctx, const Element& X, F&& f) {
  Element nx = ctx.neg(X);
  for (int i = 0; i < ctx.nvars(); ++i)
    for (int j = 0; j < ctx.nvars(); ++j) {
      if (i == j) continue;
      Element d = ctx.diag(i, j);
      if (auto r = for_triples(ctx, [&](IndexSet J, IndexSet K, IndexSet L) -> Fail {
            Element v = ctx.prod(L, ctx.cyl(i, K, ctx.prod(J, d, X)), ctx.cyl(i, K, ctx.prod(J, d, nx)));
            if (f(v)) return std::nullopt;
            return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " J=" + S(J) + " K=" + S(K) + " L=" + S(L);
          }))
        return r;
    }
  return std::nullopt;
}

Fail c7_bound(const AlgebraContext& ctx, Args a) {
  Element omega = ctx.omega();
  if (auto r = for_c7(ctx, *a[0].x, [&](const Element& v) { return leq(v, omega); })) return *r + ": <= Omega";
  return std::nullopt;
}

Fail c7_full(const AlgebraContext& ctx, Args a) {
  Element zero = ctx.zero();
  if (auto r = for_c7(ctx, *a[0].x, [&](const Element& v) { return v == zero; })) return *r + ": != 0";
  return std::nullopt;
}

Fail rooted_chain(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  int Nv = ctx.nvars();
  std::uint32_t M = ctx.valuations();
  TeamSet root = TeamSet::only_empty(M), all = TeamSet::all(M);
  Team full = TeamSet::full_team(M);
  if ((cyl_chain(ctx, std::vector<IndexSet>(Nv, 0), X).plus == root) != (X.plus == root)) return "(a)";
  bool singleton = false;
  for (Valuation v = 0; v < M; ++v) singleton |= X.plus.contains(Team{1} << v);
  TeamSet top = cyl_chain(ctx, std::vector<IndexSet>(Nv, ctx.all_indices()), X).plus;
  if (top != (singleton ? all : root)) return "(b)";
  return for_tuples(ctx, [&](const std::vector<IndexSet>& Js) -> Fail {
    TeamSet minus = cyl_chain(ctx, Js, X).minus;
    if ((minus == all) != X.minus.contains(full)) return "J=" + tuple_str(Js) + ": (c)";
    if (M > 0 && (minus == root) != !X.minus.contains(full)) return "J=" + tuple_str(Js) + ": (d)";
    return std::nullopt;
  });
}

Fail suit_pair_chain(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  Element zero = ctx.zero(), omega = ctx.omega(), mho = ctx.mho();
  Element expect = X == zero ? zero : leq(X, omega) ? omega : leq(X, mho) ? mho : ctx.one();
  if (cyl_chain(ctx, std::vector<IndexSet>(ctx.nvars(), ctx.all_indices()), X) != expect)
    return "C_{0,N} ... C_{N-1,N}(X) has the wrong value";
  return std::nullopt;
}

Fail double_suit_chain(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  Element zero = ctx.zero(), omega = ctx.omega();
  Element expect = X == zero ? zero : leq(X, omega) ? omega : ctx.one();
  return for_tuples(ctx, [&](const std::vector<IndexSet>& Js) -> Fail {
    if (cyl_chain(ctx, Js, X) != expect) return "J=" + tuple_str(Js) + ": chain value not in the expected case";
    return std::nullopt;
  });
}

Fail omega_witness(const AlgebraContext& ctx, Args a) {
  const Element& X = *a[0].x;
  if (X == ctx.zero() || X == ctx.one()) return std::nullopt;
  IndexSet N = ctx.all_indices();
  Element w = cyl_chain(ctx, std::vector<IndexSet>(ctx.nvars(), N), ctx.prod(N, X, ctx.neg(X)));
  if (w != ctx.omega()) return "C_{0,N} ... C_{N-1,N}(X *N ~X) != Omega";
  return std::nullopt;
}

using enum Need;
using enum Expectation;

const std::vector<LawDef>& definitions() {
  static const std::vector<LawDef> defs = {
      {{"involution", "~~X = X", Holds, {Any}}, involution},
      {{"duality", "X *J Y = ~(~X +J ~Y) and Cd = ~C~", Holds, {Any, Any}}, duality},
      {{"commutativity", "X +J Y = Y +J X and X *J Y = Y *J X", Holds, {Any, Any}}, commutativity},
      {{"associativity_JJ", "(X +J Y) +J Z = X +J (Y +J Z) and dually", Holds, {Any, Any, Any}}, associativity_jj},
      {{"associativity_JK", "J in K: (X +J Y) +K Z <=+ X +J (Y +K Z), =-, and dually", Holds, {Any, Any, Any}},
       associativity_jk},
      {{"constants", "X +J 0 = X = X *J 1; X *J 0 = 0 and X +J 1 = 1 iff X rooted; Omega, Mho idempotent", Holds,
        {Any}},
       constants},
      {{"omega_bounds", "double suits X <= Omega <= Y: X *J Y = X and X +J Y = Y", Holds, {DoubleSuit, DoubleSuit}},
       omega_bounds},
      {{"rooted_sum", "Y rooted: X+ in (X +J Y)+ and X- in (X *J Y)-; both rooted: +N is union", Holds, {Any, Rooted}},
       rooted_sum},
      {{"absorption_JK", "rooted: X *J (X +K Y) <= X <= X +J (X *K Y) coordinatewise", Holds, {Rooted, Rooted}},
       absorption_jk},
      {{"flat_absorption", "X flat: X +J (X *K Y) = X; ~X flat: X *J (X +K Y) = X", Holds, {Flat, Rooted}},
       flat_absorption},
      {{"absorption_NJ", "rooted: X +N (X *J Y) = X = X *N (X +J Y)", Holds, {Rooted, Rooted}}, absorption_nj},
      {{"less_than", "rooted: X <= Y iff X +N Y = Y iff X *N Y = X", Holds, {Rooted, Rooted}}, less_than},
      {{"bounds", "rooted: 0 <= X <= 1", Holds, {Rooted}}, bounds},
      {{"sum_antitone", "J in K: X +K Y <= X +J Y and X *J Y <= X *K Y", Holds, {Any, Any}}, sum_antitone},
      {{"monotone", "X <= X': sums and products are monotone in each argument", Holds, {Any, Any, Any}}, monotone},
      {{"distributivity_JK", "X double suit: X *J (Y +K Z) in (X *J Y) +K (X *J Z), and dually", Holds,
        {DoubleSuit, Any, Any}},
       distributivity_jk},
      {{"distributivity_JN", "rooted: the four half-distributive laws with an N-indexed operation", Holds,
        {Rooted, Rooted, Rooted}},
       distributivity_jn},
      {{"de_morgan", "rooted: binary De Morgan algebra axioms for 0, 1, ~, +N, *N", Holds, {Rooted, Rooted}},
       de_morgan},
      {{"de_morgan_ternary", "rooted: associativity and distributivity of +N, *N", Holds, {Rooted, Rooted, Rooted}},
       de_morgan_ternary},
      {{"kleene", "double suits: X *N ~X <= Y +N ~Y", Holds, {DoubleSuit, DoubleSuit}}, kleene, excluded_middle_terms},
      {{"excluded_middle_bound", "double suits: X *J ~X <= Y +K ~Y", Holds, {DoubleSuit, DoubleSuit}},
       excluded_middle_bound, excluded_middle_terms},
      {{"complementation", "X +N ~X = 1 iff X *N ~X = 0 iff X+ u X- = P and X+ n X- = {0}", Holds, {Any}},
       complementation},
      {{"suited_complementation", "double suit: X +N ~X = 1 iff X in {0,1}", Holds, {DoubleSuit}},
       suited_complementation},
      {{"not_complemented", "complements cover P and meet in {0} on both coordinates", Holds, {Any, Any}},
       not_complemented},
      {{"suited_not_complemented", "double suits: complements iff {X,Y} = {0,1}", Holds, {DoubleSuit, DoubleSuit}},
       suited_not_complemented},
      {{"omega_mho_complements", "Omega +N Mho = 1 and Omega *N Mho = 0", Holds, {}}, omega_mho_complements},
      {{"c1", "C(0) = 0, C(1) = 1, C(Omega) = Omega, C(Mho) = Mho; double suit: C(X) = 0 iff X = 0", Holds, {Any}},
       c1},
      {{"c2", "n not in J: X *K C(X) =+ X; X- suit: X *N C(X) =- X; double suit: X *N C_{n,{}}(X) = X", Holds, {Any}},
       c2},
      {{"c_antitone", "J in K: C_K <= C_J and Cd_J <= Cd_K", Holds, {Any}}, c_antitone},
      {{"c_monotone", "X <= Y: C(X) <= C(Y) and Cd(X) <= Cd(Y)", Holds, {Any, Any}}, c_monotone},
      {{"c3", "C_{n,J}(X *L C_{n,K}(Y)) against C_{n,J}(X) *L C_{n,K}(Y), parts (a)-(d)", Holds, {Any, Any}}, c3},
      {{"c4", "C_{n,J} C_{n,K} <= C_{n,J n K}; n in K: = C_{n,K}; commuting cylindrifications", Holds, {Any}}, c4},
      {{"c5", "j not in J: C_{i,J}(D_ij) = 1", Holds, {}}, c5},
      {{"c6", "i or j not in J, k != i,j: C_{k,J}(D_ik *{} D_kj) = D_ij", Holds, {}}, c6},
      {{"c7_bound", "double suit, i != j: C_{i,K}(D_ij *J X) *L C_{i,K}(D_ij *J ~X) <= Omega", Holds, {DoubleSuit}},
       c7_bound},
      {{"rooted_chain", "rooted: values of C_0 ... C_{N-1}(X) on each coordinate", Holds, {Rooted}}, rooted_chain},
      {{"suit_pair_chain", "pair of suits: C_{0,N} ... C_{N-1,N}(X) in {0, Omega, Mho, 1} by case", Holds,
        {SuitPair}},
       suit_pair_chain},
      {{"double_suit_chain", "double suit: C_{0,J0} ... C_{N-1,J(N-1)}(X) in {0, Omega, 1} by case", Holds,
        {DoubleSuit}},
       double_suit_chain},
      {{"three_implies_omega", "double suit X not in {0,1}: C_{0,N} ... C_{N-1,N}(X *N ~X) = Omega", Holds,
        {DoubleSuit}},
       omega_witness},
      {{"assoc_mixed", "(X +J Y) +K Z = X +J (Y +K Z) for all J, K", Fails, {Any, Any, Any}}, assoc_mixed},
      {{"absorption_full", "rooted: X +J (X *K Y) = X = X *J (X +K Y) for all J, K", Fails, {Rooted, Rooted}},
       absorption_full},
      {{"distributivity_full", "double suits: X *J (Y +K Z) = (X *J Y) +K (X *J Z)", Fails,
        {DoubleSuit, DoubleSuit, DoubleSuit}},
       distributivity_full},
      {{"c2_full", "double suit: X *K C_{n,J}(X) = X for all n, J, K", Fails, {DoubleSuit}}, c2_full},
      {{"c3_full", "double suits: C_{n,J}(X *L C_{n,K}(Y)) = C_{n,J}(X) *L C_{n,K}(Y) for all", Fails,
        {DoubleSuit, DoubleSuit}},
       c3_full},
      {{"c5_full", "C_{i,J}(D_ij) = 1 for all J", Fails, {}}, c5_full},
      {{"c7_full", "double suit, i != j: C_{i,K}(D_ij *J X) *L C_{i,K}(D_ij *J ~X) = 0", Fails, {DoubleSuit}},
       c7_full},
      {{"complementation_full", "double suit: X +N ~X = 1", Fails, {DoubleSuit}}, complementation_full},
  };
  return defs;
}

const LawDef& find_def(const std::string& id) {
  for (const auto& d : definitions())
    if (d.info.id == id) return d;
  throw InputError("unknown law: " + id);
}

LawResult run(const AlgebraContext& ctx, const std::vector<Element>& elements, const std::string& id,
              const LawOptions& opts, bool parallel) {
  const LawDef& def = find_def(id);
  if (ctx.nvars() > 4) throw GuardError("law checking supports dimension at most 4");
  for (const auto& e : elements) ctx.check(e);

  std::size_t arity = def.info.slots.size();
  std::vector<std::vector<std::size_t>> pools(arity);
  for (std::size_t s = 0; s < arity; ++s)
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (meets(elements[i], def.info.slots[s])) pools[s].push_back(i);

  std::vector<std::vector<Element>> derived;
  if (def.derive) {
    derived.resize(elements.size());
    long long n = static_cast<long long>(elements.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < n; ++i) derived[i] = def.derive(ctx, elements[i]);
  }

  // Tuples are numbered in mixed radix with the first slot most significant.
  long double product = 1;
  for (const auto& p : pools) product *= static_cast<long double>(p.size());
  std::vector<std::uint64_t> sample;
  std::uint64_t count;
  if (opts.max_tuples && product > static_cast<long double>(opts.max_tuples)) {
    if (product > 1.8e19L) throw GuardError("law tuple space too large to sample");
    std::uint64_t total = static_cast<std::uint64_t>(product);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    sample.resize(opts.max_tuples);
    for (auto& t : sample) t = pick(rng);
    std::sort(sample.begin(), sample.end());
    count = sample.size();
  } else {
    count = static_cast<std::uint64_t>(product);
  }

  auto decode = [&](std::uint64_t k, std::vector<std::size_t>& idx) {
    std::uint64_t t = sample.empty() ? k : sample[k];
    for (std::size_t s = arity; s-- > 0;) {
      idx[s] = pools[s][t % pools[s].size()];
      t /= pools[s].size();
    }
  };
  auto evaluate = [&](std::uint64_t k, std::vector<std::size_t>& idx) {
    decode(k, idx);
    Item items[4];
    for (std::size_t s = 0; s < arity; ++s)
      items[s] = {&elements[idx[s]], derived.empty() ? nullptr : &derived[idx[s]]};
    return def.check(ctx, items);
  };

  LawResult r;
  r.law = id;
  std::atomic<std::uint64_t> best{count};
  std::string message;
  long long total = static_cast<long long>(count);
  if (parallel) {
#pragma omp parallel
    {
      std::vector<std::size_t> idx(arity);
#pragma omp for schedule(dynamic, 16)
      for (long long k = 0; k < total; ++k) {
        if (static_cast<std::uint64_t>(k) >= best.load(std::memory_order_relaxed)) continue;
        if (auto f = evaluate(static_cast<std::uint64_t>(k), idx)) {
#pragma omp critical(ifg_law_first_failure)
          if (static_cast<std::uint64_t>(k) < best.load()) {
            best.store(static_cast<std::uint64_t>(k));
            message = *f;
          }
        }
      }
    }
  } else {
    std::vector<std::size_t> idx(arity);
    for (std::uint64_t k = 0; k < count; ++k)
      if (auto f = evaluate(k, idx)) {
        best = k;
        message = *f;
        break;
      }
  }

  std::uint64_t first = best.load();
  if (first < count) {
    r.holds = false;
    r.instances = first + 1;
    r.tuple.resize(arity);
    decode(first, r.tuple);
    static const char* names[] = {"X", "Y", "Z", "W"};
    std::string where;
    for (std::size_t s = 0; s < arity; ++s) where += std::string(names[s]) + "=#" + std::to_string(r.tuple[s]) + " ";
    r.counterexample = where + message;
  } else {
    r.instances = count;
  }
  return r;
}

}  // namespace

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> catalog = [] {
    std::vector<LawInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return catalog;
}

const LawInfo& find_law(const std::string& id) { return find_def(id).info; }

bool meets(const Element& X, Need need) {
  switch (need) {
    case Need::Any: return true;
    case Need::Rooted: return rooted(X);
    case Need::SuitPair: return classify(X).suit_pair;
    case Need::DoubleSuit: return is_double_suit(X);
    case Need::Flat: return rooted(X) && (flat(X.plus) || flat(X.minus));
  }
  return false;
}

bool expectation_met(const LawInfo& law, const LawResult& r) {
  return law.expect == Expectation::Holds ? r.holds : !r.holds;
}

LawResult check_law(const AlgebraContext& ctx, const std::vector<Element>& elements, const std::string& id,
                    const LawOptions& opts) {
  return run(ctx, elements, id, opts, true);
}

LawResult check_law_serial(const AlgebraContext& ctx, const std::vector<Element>& elements, const std::string& id,
                           const LawOptions& opts) {
  return run(ctx, elements, id, opts, false);
}

Element cyl_chain(const AlgebraContext& ctx, const std::vector<IndexSet>& Js, const Element& X) {
  if (static_cast<int>(Js.size()) != ctx.nvars()) throw InputError("cylindrification chain needs one set per variable");
  Element out = X;
  for (int n = ctx.nvars(); n-- > 0;) out = ctx.cyl(n, Js[n], out);
  return out;
}

bool three_implies_omega(const AlgebraContext& ctx, const std::vector<Element>& algebra) {
  if (algebra.size() <= 2) return true;
  for (const auto& e : algebra)
    if (!is_double_suit(e)) return true;
  return std::find(algebra.begin(), algebra.end(), ctx.omega()) != algebra.end();
}

}  // namespace ifg
