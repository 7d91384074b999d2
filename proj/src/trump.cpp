#include "ifg/trump.hpp"

#include "ifg/error.hpp"

namespace ifg {

std::string to_string(TruthValue t) {
  switch (t) {
    case TruthValue::True:
      return "true";
    case TruthValue::False:
      return "false";
    case TruthValue::Undetermined:
      return "undetermined";
  }
  return {};
}

Evaluator::Evaluator(const Structure& S, const Formula& f)
    : f_(f), sp_(S.size(), f.nvars()), truth_(f.size(), 0), memo_(2 * f.size()) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Node& n = f.node(static_cast<int>(i));
    if (n.kind == NodeKind::Atomic) truth_[i] = atom_truth(S, n.atom, sp_);
  }
  class_masks_.resize(std::size_t{1} << f.nvars());
}

const std::vector<Team>& Evaluator::masks(IndexSet J) {
  auto& m = class_masks_[J];
  if (m.empty() && sp_.size() > 0) m = classes(sp_, sp_.full(), J);
  return m;
}

bool Evaluator::sat(int node, Team V, bool plus) {
  auto& memo = memo_[2 * static_cast<std::size_t>(node) + (plus ? 0 : 1)];
  auto it = memo.find(V);
  if (it != memo.end()) return it->second;
  bool r = compute(node, V, plus);
  memo.emplace(V, r);
  return r;
}

bool Evaluator::exists_plus(int child, int n, const std::vector<Team>& cls, std::size_t k, Team acc) {
  if (k == cls.size()) return sat(child, acc, true);
  for (int b = 0; b < sp_.base(); ++b)
    if (exists_plus(child, n, cls, k + 1, acc | variant_const(sp_, cls[k], n, b))) return true;
  return false;
}

bool Evaluator::compute(int node, Team V, bool plus) {
  const Node& n = f_.node(node);
  switch (n.kind) {
    case NodeKind::Atomic: {
      Team T = truth_[static_cast<std::size_t>(node)];
      return plus ? (V & ~T) == 0 : (V & T) == 0;
    }
    case NodeKind::Not:
      return sat(n.left, V, !plus);
    case NodeKind::Or: {
      if (!plus) return sat(n.left, V, false) && sat(n.right, V, false);
      std::vector<Team> cls;
      for (Team m : masks(n.slash))
        if (V & m) cls.push_back(V & m);
      if (cls.size() >= 63) throw GuardError("too many classes to split");
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cls.size()); ++pick) {
        Team left = 0;
        for (std::size_t k = 0; k < cls.size(); ++k)
          if (pick >> k & 1u) left |= cls[k];
        if (sat(n.left, left, true) && sat(n.right, V & ~left, true)) return true;
      }
      return false;
    }
    case NodeKind::Exists: {
      if (!plus) return sat(n.left, variant_all(sp_, V, n.var), false);
      std::vector<Team> cls;
      for (Team m : masks(n.slash))
        if (V & m) cls.push_back(V & m);
      return exists_plus(n.left, n.var, cls, 0, 0);
    }
  }
  return false;
}

bool satisfies(const Structure& S, const Formula& f, Team V, Sign s) {
  Evaluator ev(S, f);
  if (V & ~ev.space().full()) throw InputError("team has members outside ^N A");
  return ev.satisfies(V, s);
}

namespace {

void check_meaning_guard(const Structure& S, const Formula& f) {
  Space sp(S.size(), f.nvars());
  if (sp.size() > kMaxEnumeratedValuations)
    throw GuardError("meaning needs |A|^N <= " + std::to_string(kMaxEnumeratedValuations));
}

}  // namespace

Meaning meaning_serial(const Structure& S, const Formula& f) {
  check_meaning_guard(S, f);
  Evaluator ev(S, f);
  std::uint32_t M = ev.space().size();
  Meaning m{TeamSet(M), TeamSet(M)};
  std::uint64_t nteams = std::uint64_t{1} << M;
  for (std::uint64_t V = 0; V < nteams; ++V) {
    if (ev.satisfies(V, Sign::Plus)) m.plus.insert(V);
    if (ev.satisfies(V, Sign::Minus)) m.minus.insert(V);
  }
  return m;
}

Meaning meaning(const Structure& S, const Formula& f) {
  check_meaning_guard(S, f);
  std::uint32_t M = Space(S.size(), f.nvars()).size();
  auto nteams = static_cast<std::int64_t>(std::uint64_t{1} << M);
  std::vector<unsigned char> flags(static_cast<std::size_t>(nteams), 0);
#pragma omp parallel
  {
    Evaluator ev(S, f);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t V = 0; V < nteams; ++V) {
      unsigned char r = 0;
      if (ev.satisfies(static_cast<Team>(V), Sign::Plus)) r |= 1;
      if (ev.satisfies(static_cast<Team>(V), Sign::Minus)) r |= 2;
      flags[static_cast<std::size_t>(V)] = r;
    }
  }
  Meaning m{TeamSet(M), TeamSet(M)};
  for (std::int64_t V = 0; V < nteams; ++V) {
    if (flags[static_cast<std::size_t>(V)] & 1) m.plus.insert(static_cast<Team>(V));
    if (flags[static_cast<std::size_t>(V)] & 2) m.minus.insert(static_cast<Team>(V));
  }
  return m;
}

TruthValue truth_value(const Structure& S, const Formula& f) {
  if (!is_sentence(f)) throw InputError("not a sentence: some variable is used outside the scope of its quantifier");
  Evaluator ev(S, f);
  Team full = ev.space().full();
  if (ev.satisfies(full, Sign::Plus)) return TruthValue::True;
  if (ev.satisfies(full, Sign::Minus)) return TruthValue::False;
  return TruthValue::Undetermined;
}

std::string render_meaning(const Space& sp, const Meaning& m) {
  auto section = [&](const char* name, const TeamSet& s) {
    std::string out = name;
    s.for_each([&](Team V) { out += " " + sp.team_to_string(V); });
    return out + "\n";
  };
  return section("plus:", m.plus) + section("minus:", m.minus);
}

}  // namespace ifg
