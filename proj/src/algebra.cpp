#include "ifg/algebra.hpp"

#include <algorithm>
#include <random>

#include "ifg/error.hpp"

namespace ifg {

std::string to_string(const Flags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(f.rooted, "rooted");
  add(f.suit_pair, "suit_pair");
  add(f.double_suit, "double_suit");
  add(f.fixed_point, "fixed_point");
  add(f.flat, "flat");
  return out.empty() ? "none" : out;
}

AlgebraContext::AlgebraContext(int base, int nvars) : sp_(base, nvars) {
  if (sp_.size() > kMaxEnumeratedValuations)
    throw GuardError("algebra needs |A|^N <= " + std::to_string(kMaxEnumeratedValuations));
  masks_.resize(std::size_t{1} << nvars);
  for (IndexSet J = 0; J < masks_.size(); ++J) masks_[J] = classes(sp_, sp_.full(), J);
  build_tables();
}

void AlgebraContext::build_tables() {
  constexpr std::uint32_t kMaxTabulated = 6;
  constexpr std::size_t kMaxIndexSets = 64;
  if (sp_.size() > kMaxTabulated || masks_.size() > kMaxIndexSets) return;
  std::uint64_t nteams = std::uint64_t{1} << sp_.size();
  splits_.resize(masks_.size());
  variants_.resize(masks_.size() * static_cast<std::size_t>(sp_.nvars()));
  for (IndexSet J = 0; J < masks_.size(); ++J) {
    TeamTable& split = splits_[J];
    std::vector<TeamTable*> vars;
    for (int n = 0; n < sp_.nvars(); ++n) vars.push_back(&variants_[variant_slot(n, J)]);
    for (std::uint64_t V = 0; V < nteams; ++V) {
      split.start.push_back(static_cast<std::uint32_t>(split.items.size()));
      for (auto* t : vars) t->start.push_back(static_cast<std::uint32_t>(t->items.size()));
      for_each_saturated_split(sp_, V, J, [&](Team a, Team) {
        split.items.push_back(a);
        return true;
      });
      for (int n = 0; n < sp_.nvars(); ++n) {
        auto& items = vars[static_cast<std::size_t>(n)]->items;
        std::size_t first = items.size();
        for_each_independent_function(sp_, V, J, [&](const TeamFunction& f) {
          items.push_back(variant(sp_, V, n, f));
          return true;
        });
        std::sort(items.begin() + static_cast<std::ptrdiff_t>(first), items.end());
        items.erase(std::unique(items.begin() + static_cast<std::ptrdiff_t>(first), items.end()), items.end());
      }
    }
    split.start.push_back(static_cast<std::uint32_t>(split.items.size()));
    for (auto* t : vars) t->start.push_back(static_cast<std::uint32_t>(t->items.size()));
  }
}

Element AlgebraContext::make(const TeamSet& plus, const TeamSet& minus) const {
  Element X{plus, minus};
  check(X);
  return X;
}

void AlgebraContext::check(const Element& X) const {
  if (X.plus.valuations() != sp_.size() || X.minus.valuations() != sp_.size())
    throw InputError("element does not belong to this algebra (dimension mismatch)");
}

TeamSet powerset(const AlgebraContext& ctx, Team V) { return TeamSet::powerset_of(ctx.valuations(), V); }

Element AlgebraContext::zero() const {
  return {TeamSet::only_empty(sp_.size()), TeamSet::all(sp_.size())};
}
Element AlgebraContext::one() const {
  return {TeamSet::all(sp_.size()), TeamSet::only_empty(sp_.size())};
}
Element AlgebraContext::omega() const {
  return {TeamSet::only_empty(sp_.size()), TeamSet::only_empty(sp_.size())};
}
Element AlgebraContext::mho() const {
  return {TeamSet::all(sp_.size()), TeamSet::all(sp_.size())};
}

Element AlgebraContext::atomic(Team truth) const {
  return {TeamSet::powerset_of(sp_.size(), truth & sp_.full()), TeamSet::powerset_of(sp_.size(), sp_.full() & ~truth)};
}

Element AlgebraContext::diag(int i, int j) const {
  if (i < 0 || j < 0 || i >= sp_.nvars() || j >= sp_.nvars()) throw InputError("diagonal index out of range");
  Team T = 0;
  for (Valuation a = 0; a < sp_.size(); ++a)
    if (sp_.digit(a, i) == sp_.digit(a, j)) T |= singleton(a);
  return atomic(T);
}

Element AlgebraContext::neg(const Element& X) const {
  check(X);
  return {X.minus, X.plus};
}

namespace {

constexpr std::int64_t kParallelTeams = 4096;

// Evaluates member(V) for every team V, in parallel for large spaces.
template <typename Member>
void fill_teams(std::uint32_t valuations, TeamSet& out, Member&& member) {
  auto nteams = static_cast<std::int64_t>(std::uint64_t{1} << valuations);
  if (nteams <= kParallelTeams) {
    for (std::int64_t v = 0; v < nteams; ++v)
      if (member(static_cast<Team>(v))) out.insert(static_cast<Team>(v));
    return;
  }
  std::vector<unsigned char> hit(static_cast<std::size_t>(nteams), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t v = 0; v < nteams; ++v) hit[static_cast<std::size_t>(v)] = member(static_cast<Team>(v)) ? 1 : 0;
  for (std::int64_t v = 0; v < nteams; ++v)
    if (hit[static_cast<std::size_t>(v)]) out.insert(static_cast<Team>(v));
}

}  // namespace

TeamSet AlgebraContext::split_union(IndexSet J, const TeamSet& A, const TeamSet& B) const {
  const auto& masks = masks_[J];
  TeamSet out(sp_.size());
  if (!splits_.empty()) {
    const TeamTable& t = splits_[J];
    for (Team V = 0; V + 1 < t.start.size(); ++V)
      for (std::uint32_t i = t.start[V]; i < t.start[V + 1]; ++i)
        if (A.contains(t.items[i]) && B.contains(V & ~t.items[i])) {
          out.insert(V);
          break;
        }
    return out;
  }
  fill_teams(sp_.size(), out, [&](Team V) {
    Team cls[kMaxEnumeratedValuations];
    std::size_t k = 0;
    for (Team m : masks)
      if (V & m) cls[k++] = V & m;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
      Team left = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (pick >> c & 1u) left |= cls[c];
      if (A.contains(left) && B.contains(V & ~left)) return true;
    }
    return false;
  });
  return out;
}

Element AlgebraContext::sum(IndexSet J, const Element& X, const Element& Y) const {
  check(X);
  check(Y);
  return {split_union(J & all_indices(), X.plus, Y.plus), X.minus & Y.minus};
}

Element AlgebraContext::prod(IndexSet J, const Element& X, const Element& Y) const {
  check(X);
  check(Y);
  return {X.plus & Y.plus, split_union(J & all_indices(), X.minus, Y.minus)};
}

bool AlgebraContext::some_variant_in(int n, const Team* cls, std::size_t k, std::size_t count, Team acc,
                                     const TeamSet& target) const {
  if (k == count) return target.contains(acc);
  for (int b = 0; b < sp_.base(); ++b)
    if (some_variant_in(n, cls, k + 1, count, acc | variant_const(sp_, cls[k], n, b), target)) return true;
  return false;
}

Element AlgebraContext::cyl(int n, IndexSet J, const Element& X) const {
  check(X);
  if (n < 0 || n >= sp_.nvars()) throw InputError("cylindrification index out of range");
  const auto& masks = masks_[J & all_indices()];
  Element out{TeamSet(sp_.size()), TeamSet(sp_.size())};
  if (!variants_.empty()) {
    const TeamTable& t = variants_[variant_slot(n, J & all_indices())];
    for (Team V = 0; V + 1 < t.start.size(); ++V) {
      for (std::uint32_t i = t.start[V]; i < t.start[V + 1]; ++i)
        if (X.plus.contains(t.items[i])) {
          out.plus.insert(V);
          break;
        }
      if (X.minus.contains(variant_all(sp_, V, n))) out.minus.insert(V);
    }
    return out;
  }
  fill_teams(sp_.size(), out.plus, [&](Team V) {
    Team cls[kMaxEnumeratedValuations];
    std::size_t k = 0;
    for (Team m : masks)
      if (V & m) cls[k++] = V & m;
    return some_variant_in(n, cls, 0, k, 0, X.plus);
  });
  fill_teams(sp_.size(), out.minus, [&](Team V) { return X.minus.contains(variant_all(sp_, V, n)); });
  return out;
}

Element AlgebraContext::dual_cyl(int n, IndexSet J, const Element& X) const { return neg(cyl(n, J, neg(X))); }

Element AlgebraContext::sum_serial(IndexSet J, const Element& X, const Element& Y) const {
  check(X);
  check(Y);
  Element out{TeamSet(sp_.size()), X.minus & Y.minus};
  for (std::uint64_t V = 0; V < (std::uint64_t{1} << sp_.size()); ++V) {
    bool found = !for_each_saturated_split(sp_, V, J, [&](Team a, Team b) {
      return !(X.plus.contains(a) && Y.plus.contains(b));
    });
    if (found) out.plus.insert(V);
  }
  return out;
}

Element AlgebraContext::prod_serial(IndexSet J, const Element& X, const Element& Y) const {
  check(X);
  check(Y);
  Element out{X.plus & Y.plus, TeamSet(sp_.size())};
  for (std::uint64_t V = 0; V < (std::uint64_t{1} << sp_.size()); ++V) {
    bool found = !for_each_saturated_split(sp_, V, J, [&](Team a, Team b) {
      return !(X.minus.contains(a) && Y.minus.contains(b));
    });
    if (found) out.minus.insert(V);
  }
  return out;
}

Element AlgebraContext::cyl_serial(int n, IndexSet J, const Element& X) const {
  check(X);
  if (n < 0 || n >= sp_.nvars()) throw InputError("cylindrification index out of range");
  Element out{TeamSet(sp_.size()), TeamSet(sp_.size())};
  for (std::uint64_t V = 0; V < (std::uint64_t{1} << sp_.size()); ++V) {
    bool found = !for_each_independent_function(sp_, V, J, [&](const TeamFunction& f) {
      return !X.plus.contains(variant(sp_, V, n, f));
    });
    if (found) out.plus.insert(V);
    if (X.minus.contains(variant_all(sp_, V, n))) out.minus.insert(V);
  }
  return out;
}

Flags classify(const Element& X) {
  Flags f;
  f.rooted = X.plus.contains(0) && X.minus.contains(0);
  f.suit_pair = !X.plus.none() && !X.minus.none() && X.plus.downward_closed() && X.minus.downward_closed();
  f.double_suit = f.suit_pair && (X.plus & X.minus) == TeamSet::only_empty(X.plus.valuations());
  f.fixed_point = X.plus == X.minus;
  f.flat = !X.plus.none() && X.plus == TeamSet::powerset_of(X.plus.valuations(), X.plus.support());
  return f;
}

bool leq_plus(const Element& X, const Element& Y) { return X.plus.subset_of(Y.plus); }
bool leq_minus(const Element& X, const Element& Y) { return X.minus.subset_of(Y.minus); }
bool leq(const Element& X, const Element& Y) { return leq_plus(X, Y) && leq_minus(Y, X); }

std::vector<Element> generate_subalgebra(const AlgebraContext& ctx, const std::vector<Element>& generators,
                                         std::size_t cap) {
  std::vector<Element> elems;
  std::unordered_map<Element, std::size_t, ElementHash> index;
  auto add = [&](Element e) {
    if (index.count(e)) return;
    if (elems.size() >= cap)
      throw GuardError("subalgebra exceeds the cap of " + std::to_string(cap) + " elements");
    index.emplace(e, elems.size());
    elems.push_back(std::move(e));
  };
  add(ctx.zero());
  add(ctx.one());
  for (int i = 0; i < ctx.nvars(); ++i)
    for (int j = i + 1; j < ctx.nvars(); ++j) add(ctx.diag(i, j));
  for (const auto& g : generators) {
    ctx.check(g);
    add(g);
  }
  IndexSet nJ = IndexSet{1} << ctx.nvars();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(ctx.neg(elems[i]));
    for (int n = 0; n < ctx.nvars(); ++n)
      for (IndexSet J = 0; J < nJ; ++J) add(ctx.cyl(n, J, elems[i]));
    for (std::size_t j = 0; j <= i; ++j)
      for (IndexSet J = 0; J < nJ; ++J) {
        add(ctx.sum(J, elems[i], elems[j]));
        add(ctx.prod(J, elems[i], elems[j]));
        if (j != i) {
          add(ctx.sum(J, elems[j], elems[i]));
          add(ctx.prod(J, elems[j], elems[i]));
        }
      }
  }
  return elems;
}

std::vector<Element> atom_meanings(const AlgebraContext& ctx, const Structure& S, int term_depth) {
  std::vector<Element> out;
  std::unordered_map<Element, std::size_t, ElementHash> seen;
  for (const auto& atom : enumerate_atoms(S, ctx.nvars(), term_depth)) {
    Element e = ctx.atomic(atom_truth(S, atom, ctx.space()));
    if (seen.emplace(e, out.size()).second) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Element> cyls_of(const Structure& S, int nvars, int term_depth, std::size_t cap) {
  AlgebraContext ctx(S.size(), nvars);
  return generate_subalgebra(ctx, atom_meanings(ctx, S, term_depth), cap);
}

std::string render_element(const Space& sp, const Element& X) {
  return "plus=[" + render_teamset(sp, X.plus) + "] minus=[" + render_teamset(sp, X.minus) + "]";
}

std::string dump_algebra(const AlgebraContext& ctx, const std::vector<Element>& elements) {
  std::string out = "base=" + std::to_string(ctx.base()) + " dim=" + std::to_string(ctx.nvars()) +
                    " count=" + std::to_string(elements.size()) + "\n";
  for (const auto& e : elements) out += render_element(ctx.space(), e) + "\n";
  return out;
}

std::vector<TeamSet> all_suits(const AlgebraContext& ctx) {
  std::uint32_t M = ctx.valuations();
  if (M > 4) throw GuardError("suit enumeration supports at most 4 valuations");
  std::uint64_t teams = std::uint64_t{1} << M;
  std::vector<TeamSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << teams); bits += 2) {
    TeamSet s(M);
    s.mut_word(0) = bits;
    if (s.downward_closed()) out.push_back(s);
  }
  return out;
}

std::vector<Element> all_rooted(const AlgebraContext& ctx) {
  std::uint32_t M = ctx.valuations();
  if (M > 3) throw GuardError("rooted enumeration supports at most 3 valuations");
  std::uint64_t teams = std::uint64_t{1} << M;
  std::vector<TeamSet> sets;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << teams); bits += 2) {
    TeamSet s(M);
    s.mut_word(0) = bits;
    sets.push_back(s);
  }
  std::vector<Element> out;
  for (const auto& p : sets)
    for (const auto& m : sets) out.push_back({p, m});
  return out;
}

std::vector<Element> all_double_suits(const AlgebraContext& ctx) {
  auto suits = all_suits(ctx);
  TeamSet root = TeamSet::only_empty(ctx.valuations());
  std::vector<Element> out;
  for (const auto& p : suits)
    for (const auto& m : suits)
      if ((p & m) == root) out.push_back({p, m});
  return out;
}

std::vector<Element> random_rooted(const AlgebraContext& ctx, std::size_t count, std::uint64_t seed) {
  std::uint32_t M = ctx.valuations();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Element e{TeamSet::only_empty(M), TeamSet::only_empty(M)};
    for (Team V = 1; V < (std::uint64_t{1} << M); ++V) {
      if (coin(rng)) e.plus.insert(V);
      if (coin(rng)) e.minus.insert(V);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ifg
