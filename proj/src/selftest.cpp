#include "ifg/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <initializer_list>

#include "ifg/algebra.hpp"
#include "ifg/finlat.hpp"
#include "ifg/games.hpp"
#include "ifg/laws.hpp"
#include "ifg/syntax.hpp"
#include "ifg/trump.hpp"

namespace ifg {

namespace {

TeamSet teams(const Space& sp, std::initializer_list<const char*> csvs) {
  TeamSet s(sp.size());
  for (const char* c : csvs) s.insert(sp.parse_team(c));
  return s;
}

Element meaning_of(const Structure& S, const char* text, int nvars) {
  auto sig = S.signature();
  return from_meaning(meaning(S, parse(text, nvars, &sig)));
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Fixtures {
  Structure eq2 = Structure::equality(2);
  Structure const2 = Structure::with_constants(2);
  Structure const3 = Structure::with_constants(3);
  AlgebraContext c22{2, 2};
  AlgebraContext c31{3, 1};
  IndexSet N2 = 3;

  Element D01() const { return c22.diag(0, 1); }
  // ||v0=0|| +_N ||v0=1|| over the two constants
  Element split_const() const {
    return c22.sum(N2, meaning_of(const2, "v0=0", 2), meaning_of(const2, "v0=1", 2));
  }
};

using Check = std::function<std::string()>;  // empty string means pass

std::vector<std::pair<std::string, Check>> checks() {
  static const Fixtures F;
  std::vector<std::pair<std::string, Check>> out;
  auto add = [&](const std::string& id, Check c) { out.emplace_back(id, std::move(c)); };

  add("syntax.parse_slashed_exists", [] {
    auto f = parse("E v1/{0} (v0=v1)", 2);
    const Node& r = f.root();
    bool ok = r.kind == NodeKind::Exists && r.var == 1 && r.slash == 1 && f.node(r.left).kind == NodeKind::Atomic &&
              to_string(f.node(r.left).atom) == "v0=v1";
    return ok ? "" : "got " + print(f);
  });
  add("syntax.parse_signaling_disjunction", [] {
    auto f = parse("(v0=v1 \\/{0,1} ~(v0=v1))", 2);
    const Node& r = f.root();
    bool ok = r.kind == NodeKind::Or && r.slash == 3 && f.node(r.left).kind == NodeKind::Atomic &&
              f.node(r.right).kind == NodeKind::Not;
    return ok ? "" : "got " + print(f);
  });
  add("syntax.unbound_root_empty", [] {
    auto f = parse("A v0/{} E v1/{0} (v0=v1)", 2);
    return unbound_by_node(f)[0] == 0 ? "" : "root set not empty";
  });
  add("syntax.unbound_exists_child", [] {
    auto f = parse("E v1/{0} (v0=v1)", 2);
    return unbound_by_node(f)[1] == 2 ? "" : "child set is " + index_set_to_string(unbound_by_node(f)[1]);
  });
  add("model.full_J_total_relation", [] {
    Space sp(2, 2);
    for (Valuation a = 0; a < sp.size(); ++a)
      for (Valuation b = 0; b < sp.size(); ++b)
        if (!agree_outside(sp, a, b, sp.all_indices())) return std::string("not total");
    return std::string();
  });
  add("model.empty_team_one_function", [] {
    Space sp(2, 2);
    for (IndexSet J = 0; J < 4; ++J)
      if (enumerate_independent_functions(sp, 0, J).size() != 1) return std::string("J=") + index_set_to_string(J);
    return std::string();
  });
  add("model.full_J_constant_functions", [] {
    Space sp(3, 2);
    for (Team V = 1; V <= sp.full(); V += 37) {
      auto fs = enumerate_independent_functions(sp, V, sp.all_indices());
      if (fs.size() != 3) return "V=" + sp.team_to_string(V);
      for (const auto& f : fs) {
        int first = f(static_cast<Valuation>(std::countr_zero(V)));
        for (Team c = V; c; c &= c - 1)
          if (f(static_cast<Valuation>(std::countr_zero(c))) != first) return "non-constant at V=" + sp.team_to_string(V);
      }
    }
    return std::string();
  });
  add("model.full_J_saturated_covers", [] {
    Space sp(2, 2);
    for (Team V = 1; V <= sp.full(); ++V) {
      auto s = enumerate_saturated_splits(sp, V, sp.all_indices());
      std::sort(s.begin(), s.end());
      std::vector<std::pair<Team, Team>> want{{0, V}, {V, 0}};
      if (s != want) return "V=" + sp.team_to_string(V);
    }
    return std::string();
  });
  add("trump.satisfaction_by_emptyset", [] {
    for (const char* t : {"v0=v1", "~(v0=v1)", "A v0/{} E v1/{0} (v0=v1)", "(v0=v1 \\/{0,1} ~(v0=v1))"}) {
      auto f = parse(t, 2);
      if (!satisfies(F.eq2, f, 0, Sign::Plus) || !satisfies(F.eq2, f, 0, Sign::Minus)) return std::string(t);
    }
    return std::string();
  });
  add("trump.matching_pennies_neither", [] {
    auto f = parse("A v0/{} E v1/{0} (v0=v1)", 2);
    Team full = Space(2, 2).full();
    bool ok = !satisfies(F.eq2, f, full, Sign::Plus) && !satisfies(F.eq2, f, full, Sign::Minus);
    return ok ? "" : "a player wins";
  });
  add("trump.meaning_D01", [] {
    Space sp(2, 2);
    Element want{TeamSet::powerset_of(4, sp.parse_team("00,11")), TeamSet::powerset_of(4, sp.parse_team("01,10"))};
    Element got = meaning_of(F.eq2, "v0=v1", 2);
    return got == want ? "" : render_element(sp, got);
  });
  add("trump.meaning_v0_is_0", [] {
    Space sp(3, 1);
    Element want{teams(sp, {"", "0"}), teams(sp, {"", "1", "2", "1,2"})};
    Element got = meaning_of(F.const3, "v0=0", 1);
    return got == want ? "" : render_element(sp, got);
  });
  add("trump.matching_pennies_undetermined", [] {
    auto t = truth_value(F.eq2, parse("A v0/{} E v1/{0} (v0=v1)", 2));
    return t == TruthValue::Undetermined ? "" : to_string(t);
  });
  add("games.empty_team_both_win", [] {
    auto f = parse("A v0/{} E v1/{0} (v0=v1)", 2);
    for (int p = 0; p < 2; ++p) {
      auto r = has_winning_strategy(F.eq2, f, 0, p);
      if (!r.wins || !r.witness || !r.witness->moves.empty()) return "player " + std::to_string(p);
    }
    return std::string();
  });
  add("games.matching_pennies_no_winner", [] {
    auto f = parse("A v0/{} E v1/{0} (v0=v1)", 2);
    Team full = Space(2, 2).full();
    for (int p = 0; p < 2; ++p)
      if (has_winning_strategy(F.eq2, f, full, p).wins) return "player " + std::to_string(p) + " wins";
    return std::string();
  });
  add("games.negation_flips_verifier", [] {
    auto f = parse("~(v0=v0)", 1);
    auto play = play_out(Structure::equality(2), f, {nullptr, nullptr}, 0);
    bool ok = play.positions.size() == 2 && play.positions[0].verifier == 1 && play.positions[1].verifier == 0;
    return ok ? "" : "unexpected play";
  });
  add("algebra.diag_D01", [] {
    const auto& sp = F.c22.space();
    Element want{TeamSet::powerset_of(4, sp.parse_team("00,11")), TeamSet::powerset_of(4, sp.parse_team("01,10"))};
    return F.D01() == want ? "" : render_element(sp, F.D01());
  });
  add("algebra.omega_fixed", [] {
    const auto& c = F.c22;
    Element W = c.omega();
    if (c.neg(W) != W) return std::string("neg");
    for (IndexSet J = 0; J < 4; ++J)
      if (c.sum(J, W, W) != W || c.prod(J, W, W) != W) return "J=" + index_set_to_string(J);
    return std::string();
  });
  add("algebra.mixed_sum_left", [] {
    const auto& c = F.c31;
    Element X = meaning_of(F.const3, "v0=0", 1), Y = meaning_of(F.const3, "v0=1", 1);
    TeamSet want = teams(c.space(), {"", "0", "1", "0,1"});
    Element got = c.sum(0, X, Y);
    return got.plus == want ? "" : render_teamset(c.space(), got.plus);
  });
  add("algebra.mixed_sum_right", [] {
    const auto& c = F.c31;
    Element X = meaning_of(F.const3, "v0=0", 1), Y = meaning_of(F.const3, "v0=1", 1), Z = meaning_of(F.const3, "v0=2", 1);
    TeamSet want = teams(c.space(), {"", "0", "1", "2", "0,1", "0,2"});
    Element got = c.sum(0, X, c.sum(1, Y, Z));
    return got.plus == want ? "" : render_teamset(c.space(), got.plus);
  });
  add("algebra.cyl_D01", [] {
    const auto& c = F.c22;
    const auto& sp = c.space();
    TeamSet plus = TeamSet::powerset_of(4, sp.parse_team("00,10")) | TeamSet::powerset_of(4, sp.parse_team("01,11"));
    Element want{plus, TeamSet::only_empty(4)};
    Element got = c.cyl(0, F.N2, F.D01());
    return got == want ? "" : render_element(sp, got);
  });
  add("algebra.constants_double_suits", [] {
    for (int base : {2, 3}) {
      AlgebraContext c(base, 2);
      for (const Element& X : {c.zero(), c.one(), c.diag(0, 1), c.diag(1, 0), c.diag(0, 0)})
        if (!classify(X).double_suit) return "base " + std::to_string(base) + ": " + render_element(c.space(), X);
    }
    return std::string();
  });
  add("algebra.rooted_between_bounds", [] {
    AlgebraContext c(2, 1);
    for (const auto& X : all_rooted(c))
      if (!leq(c.zero(), X) || !leq(X, c.one())) return render_element(c.space(), X);
    return std::string();
  });
  add("algebra.order_duality", [] {
    AlgebraContext c(2, 1);
    auto xs = all_rooted(c);
    for (const auto& X : xs)
      for (const auto& Y : xs)
        if (leq(X, Y) != leq(c.neg(Y), c.neg(X))) return render_element(c.space(), X);
    return std::string();
  });
  add("algebra.empty_base_trivial", [] {
    AlgebraContext c(0, 1);
    auto els = generate_subalgebra(c, {});
    return els.size() == 1 && els[0] == c.omega() ? "" : std::to_string(els.size()) + " elements";
  });
  add("algebra.dimension_zero_constants", [] {
    for (int base : {1, 2, 3}) {
      AlgebraContext c(base, 0);
      for (const auto& X : generate_subalgebra(c, {}))
        if (X != c.zero() && X != c.one() && X != c.omega() && X != c.mho()) return render_element(c.space(), X);
    }
    return std::string();
  });
  add("algebra.double_suited_closure", [] {
    auto els = cyls_of(F.eq2, 2);
    for (const auto& X : els)
      if (!classify(X).double_suit) return render_element(F.c22.space(), X);
    return std::string();
  });
  add("algebra.one_element_universe", [] {
    for (int n : {1, 2}) {
      auto els = cyls_of(Structure::with_constants(1), n);
      AlgebraContext c(1, n);
      if (els.size() != 2 || std::find(els.begin(), els.end(), c.zero()) == els.end() ||
          std::find(els.begin(), els.end(), c.one()) == els.end())
        return "N=" + std::to_string(n) + ": " + std::to_string(els.size()) + " elements";
    }
    return std::string();
  });
  add("algebra.omega_in_dimension_two", [] {
    auto els = cyls_of(F.eq2, 2);
    return std::find(els.begin(), els.end(), F.c22.omega()) != els.end() ? "" : "Omega missing";
  });
  add("laws.rooted_de_morgan", [] {
    AlgebraContext c(2, 1);
    auto xs = all_rooted(c);
    for (const char* id : {"de_morgan", "de_morgan_ternary"}) {
      auto r = check_law(c, xs, id);
      if (!r.holds) return std::string(id) + ": " + r.counterexample;
    }
    return std::string();
  });
  add("laws.mixed_associativity_counterexample", [] {
    const auto& c = F.c31;
    Element X = meaning_of(F.const3, "v0=0", 1), Y = meaning_of(F.const3, "v0=1", 1), Z = meaning_of(F.const3, "v0=2", 1);
    Element left = c.sum(1, c.sum(0, X, Y), Z);
    TeamSet want = teams(c.space(), {"", "0", "1", "0,1", "2"});
    if (left.plus != want) return "left plus " + render_teamset(c.space(), left.plus);
    auto r = check_law(c, {X, Y, Z}, "assoc_mixed");
    return r.holds ? std::string("law did not fail") : std::string();
  });
  add("laws.c7_bound_not_false", [] {
    const auto& c = F.c22;
    Element X = F.split_const();
    Element D = F.D01();
    Element lhs = c.prod(0, c.cyl(0, 0, c.prod(0, D, X)), c.cyl(0, 0, c.prod(0, D, c.neg(X))));
    if (!leq(lhs, c.omega())) return std::string("not below Omega");
    if (lhs.minus == c.zero().minus) return std::string("minus part equals 0-");
    return std::string();
  });
  add("finlat.K_shape", [] {
    auto K = named_algebra("K");
    bool ok = K.n == 3 && K.leq(0, 1) && K.leq(1, 2) && K.neg[1] == 1;
    return ok ? "" : render_fin_algebra(K);
  });
  add("finlat.SixKxM_shape", [] {
    auto A = named_algebra("SixKxM");
    std::vector<std::string> want = {"(0,0)", "(a,0)", "(a,b)", "(a,c)", "(a,1)", "(1,1)"};
    std::vector<std::string> range;
    for (int x = 0; x < A.n; ++x)
      if (std::find(A.nabla.begin(), A.nabla.end(), x) != A.nabla.end()) range.push_back(A.label(x));
    bool ok = A.labels == want && range == std::vector<std::string>{"(0,0)", "(a,b)", "(1,1)"};
    return ok ? "" : render_fin_algebra(A);
  });
  add("finlat.NineMxM_shape", [] {
    auto A = named_algebra("NineMxM");
    std::vector<std::string> range;
    for (int x = 0; x < A.n; ++x)
      if (std::find(A.nabla.begin(), A.nabla.end(), x) != A.nabla.end()) range.push_back(A.label(x));
    bool ok = A.n == 9 && range == std::vector<std::string>{"(0,0)", "(a,a)", "(b,b)", "(1,1)"};
    return ok ? "" : render_fin_algebra(A);
  });
  for (const char* id : {"K_nabla0", "K_nabla1"})
    add(std::string("finlat.quantifier_") + id, [id] {
      auto q = check_quantifier(named_algebra(id));
      return q.quantifier() ? "" : "Q1-Q5 fail";
    });
  for (auto [id, want] : {std::pair{"K_nabla0", QuantifierType::Type0}, std::pair{"K_nabla1", QuantifierType::Type1},
                          std::pair{"M_nabla0", QuantifierType::Type0}, std::pair{"M_nabla2", QuantifierType::Type2}})
    add(std::string("finlat.type_") + id, [id, want] {
      auto t = classify_quantifier_type(named_algebra(id));
      return t == want ? "" : to_string(t);
    });
  add("finlat.kalman_BKM_irreducible", [] {
    for (const char* id : {"B", "K", "M"})
      if (!is_subdirectly_irreducible(named_algebra(id))) return std::string(id);
    return std::string();
  });
  add("finlat.SixKxM_simple", [] { return is_simple(named_algebra("SixKxM")) ? "" : "not simple"; });
  add("finlat.NineMxM_simple", [] { return is_simple(named_algebra("NineMxM")) ? "" : "not simple"; });
  add("finlat.fix_marker_K_nabla1", [] {
    auto v = check_variety_markers(named_algebra("K_nabla1"));
    return v.fix_marker ? "" : v.witness;
  });
  add("finlat.fix_marker_K_nabla0_fails_at_a", [] {
    auto v = check_variety_markers(named_algebra("K_nabla0"));
    return !v.fix_marker && v.witness.find("fix_marker fails at x=a") != std::string::npos ? "" : "marker " + v.witness;
  });
  add("finlat.embedding_quantifier_cases", [] {
    auto A = named_algebra("K_nabla1");
    auto E = embed_monadic_kleene(A);
    AlgebraContext c(E.base, 1);
    const auto& h = E.image;
    if (h[static_cast<std::size_t>(A.nabla[A.bottom])] != c.zero()) return std::string("h(nabla 0) != 0");
    if (c.cyl(0, 1, h[static_cast<std::size_t>(A.bottom)]) != c.zero()) return std::string("C(h(0)) != 0");
    int a = A.find("a");
    if (h[static_cast<std::size_t>(A.nabla[a])] != c.omega()) return std::string("h(nabla a) != Omega");
    return std::string();
  });
  add("finlat.M_top_join_reducible", [] {
    return check_join_meet_irreducible(named_algebra("M"), 3).join_irreducible ? "1 is join irreducible" : "";
  });
  add("finlat.double_diamond_zero_meet_reducible", [] {
    auto D = named_algebra("DoubleDiamond");
    return check_join_meet_irreducible(D, D.bottom).meet_irreducible ? "0 is meet irreducible" : "";
  });
  return out;
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
  auto cs = checks();
  std::vector<SelfCheck> out(cs.size());
  const long long n = static_cast<long long>(cs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    auto& [id, fn] = cs[static_cast<std::size_t>(i)];
    SelfCheck r{id, false, ""};
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out[static_cast<std::size_t>(i)] = r;
  }
  std::sort(out.begin(), out.end(), [](const SelfCheck& a, const SelfCheck& b) { return a.id < b.id; });
  return out;
}

std::string worked_examples() {
  Fixtures F;
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  const auto& c2 = F.c22;
  const auto& sp2 = c2.space();
  const IndexSet N = F.N2;

  Element D = F.D01();
  line("[equality structure, A={0,1}, N=2]");
  line("D01: " + render_element(sp2, D));
  Element CD = c2.cyl(0, N, D);
  line("C_0,{0,1}(D01): " + render_element(sp2, CD));
  line("(D01 ._{} C_0,{0,1}(D01))+: " + render_teamset(sp2, c2.prod(0, D, CD).plus));

  Element X = c2.sum(N, D, c2.neg(D));
  line("absorption X = D01 +_{0,1} ~D01: " + render_element(sp2, X));
  line("absorption |X+|: " + std::to_string(X.plus.count()));
  Element XX = c2.sum(0, X, c2.sum(N, X, X));
  Team full = sp2.full();
  line("absorption {00,01,10,11} in (X +_{} (X +_{0,1} X))+: " + yes(XX.plus.contains(full)));
  line("absorption X+ proper subset of (X +_{} (X +_{0,1} X))+: " + yes(X.plus.subset_of(XX.plus) && !(X.plus == XX.plus)));

  Element C1 = c2.cyl(1, 1, D);
  Element rhs = c2.prod(0, c2.cyl(1, N, c2.one()), C1);
  Element lhs = c2.cyl(1, N, c2.prod(0, c2.one(), C1));
  Team diag = sp2.parse_team("00,11");
  line("C3 D01 <= C_1,{0}(D01): " + yes(leq(D, C1)));
  line("C3 C_1,{0,1}(1) ._{} C_1,{0}(D01) = C_1,{0}(D01): " + yes(rhs == C1));
  line("C3 {00,11} in (C_1,{0,1}(1) ._{} C_1,{0}(D01))+: " + yes(rhs.plus.contains(diag)));
  line("C3 {00,11} in C_1,{0,1}(1 ._{} C_1,{0}(D01))+: " + yes(lhs.plus.contains(diag)));

  line("[constants structure, A={0,1}, N=2]");
  Element Y = F.split_const();
  line("Y = ||v0=0|| +_{0,1} ||v0=1||: " + render_element(sp2, Y));
  Team V = full, V1 = sp2.parse_team("00,01"), V2 = sp2.parse_team("10,11");
  line("distributivity V1 in Y+: " + yes(Y.plus.contains(V1)));
  line("distributivity V2 in Y+: " + yes(Y.plus.contains(V2)));
  line("distributivity V1, V2 saturated for {1}: " + yes(is_saturated(sp2, V1, 2) && is_saturated(sp2, V2, 2)));
  line("distributivity V in Y+: " + yes(Y.plus.contains(V)));
  line("distributivity V in (Y +_{1} Y)+: " + yes(c2.sum(2, Y, Y).plus.contains(V)));
  line("distributivity V in (Y ._{} (1 +_{1} 1))+: " + yes(c2.prod(0, Y, c2.sum(2, c2.one(), c2.one())).plus.contains(V)));
  Element C7 = c2.prod(0, c2.cyl(0, 0, c2.prod(0, D, Y)), c2.cyl(0, 0, c2.prod(0, D, c2.neg(Y))));
  line("C7 C_0,{}(D01 ._{} Y) ._{} C_0,{}(D01 ._{} ~Y): " + render_element(sp2, C7));
  line("C7 below Omega: " + yes(leq(C7, c2.omega())));
  line("C7 minus part differs from 0-: " + yes(!(C7.minus == c2.zero().minus)));

  line("[constants structure, A={0,1,2}, N=1]");
  const auto& c1 = F.c31;
  const auto& sp1 = c1.space();
  Element A0 = meaning_of(F.const3, "v0=0", 1), A1 = meaning_of(F.const3, "v0=1", 1), A2 = meaning_of(F.const3, "v0=2", 1);
  line("X = ||v0=0||: " + render_element(sp1, A0));
  line("Y = ||v0=1||: " + render_element(sp1, A1));
  line("Z = ||v0=2||: " + render_element(sp1, A2));
  Element XY = c1.sum(0, A0, A1);
  line("(X +_{} Y)+: " + render_teamset(sp1, XY.plus));
  line("((X +_{} Y) +_{0} Z)+: " + render_teamset(sp1, c1.sum(1, XY, A2).plus));
  Element YZ = c1.sum(1, A1, A2);
  line("(Y +_{0} Z)+: " + render_teamset(sp1, YZ.plus));
  line("(X +_{} (Y +_{0} Z))+: " + render_teamset(sp1, c1.sum(0, A0, YZ).plus));
  line("minus parts agree: " + yes(c1.sum(1, XY, A2).minus == c1.sum(0, A0, YZ).minus));
  return out;
}

}  // namespace ifg
