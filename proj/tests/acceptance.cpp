#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ifg/algebra.hpp"
#include "ifg/finlat.hpp"
#include "ifg/games.hpp"
#include "ifg/laws.hpp"
#include "ifg/selftest.hpp"
#include "ifg/trump.hpp"
#include "support/oracle.hpp"

using namespace ifg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

Structure eq_with_unary(int mask) {
  Structure S = Structure::equality(2);
  S.add_relation("P", 1);
  for (int a = 0; a < 2; ++a)
    if (mask >> a & 1) S.add_tuple("P", {a});
  return S;
}

// 1. Game semantics against trump semantics.
Outcome game_vs_trump() {
  Outcome o;
  std::uint64_t compared = 0;
  for (int mask = 0; mask < 4; ++mask) {
    Structure S = eq_with_unary(mask);
    auto by = test::formulas_by_depth(enumerate_atoms(S, 2, 0), 2, 3);
    std::vector<const Formula*> all;
    for (const auto& level : by)
      for (const auto& f : level) all.push_back(&f);
    long long mismatches = 0;
    const long long n = static_cast<long long>(all.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : mismatches)
    for (long long i = 0; i < n; ++i) {
      const Formula& f = *all[static_cast<std::size_t>(i)];
      Evaluator ev(S, f);
      for (Team V = 0; V < 16; ++V)
        for (int p = 0; p < 2; ++p)
          if (ev.satisfies(V, p == 1 ? Sign::Plus : Sign::Minus) != has_winning_strategy(S, f, V, p).wins) ++mismatches;
    }
    compared += static_cast<std::uint64_t>(n) * 32;
    if (mismatches != 0) fail(o, std::to_string(mismatches) + " mismatches with P mask " + std::to_string(mask));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(compared) + " comparisons";
  return o;
}

// 2. Worked set computations.
Outcome worked(const std::string& golden) {
  Outcome o;
  std::ifstream in(golden);
  if (!in) {
    fail(o, "cannot read " + golden);
    return o;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  if (worked_examples() != ss.str()) fail(o, "worked examples differ from " + golden);
  return o;
}

// 3. Law suites.
Outcome law_suites() {
  Outcome o;
  auto expect_holds = [&](const AlgebraContext& c, const std::vector<Element>& els, const char* id, LawOptions opts,
                          const std::string& where) {
    auto r = check_law(c, els, id, opts);
    if (!r.holds) fail(o, std::string(id) + " on " + where + ": " + r.counterexample);
  };
  AlgebraContext c21(2, 1), c22(2, 2);
  auto rooted1 = all_rooted(c21);
  expect_holds(c21, rooted1, "de_morgan", {}, "Root_1({0,1})");
  expect_holds(c21, rooted1, "de_morgan_ternary", {}, "Root_1({0,1})");
  auto random2 = random_rooted(c22, 500, 2024);
  expect_holds(c22, random2, "de_morgan", {}, "500 random rooted");
  expect_holds(c22, random2, "de_morgan_ternary", {200000, 2024}, "500 random rooted");
  for (auto* c : {&c21, &c22}) expect_holds(*c, all_double_suits(*c), "kleene", {}, "all double suits");

  const std::vector<std::pair<Structure, int>> gens = {
      {Structure::equality(2), 2}, {Structure::with_constants(2), 2}, {eq_with_unary(1), 2},
      {Structure::with_constants(2), 1}, {Structure::with_constants(3), 1}, {eq_with_unary(1), 1}};
  std::size_t algebras = 0;
  for (const auto& [S, n] : gens) {
    AlgebraContext c(S.size(), n);
    auto els = cyls_of(S, n);
    std::string where = "structure of size " + std::to_string(S.size()) + ", N=" + std::to_string(n);
    for (const char* id : {"c1", "c2", "c_antitone", "c_monotone", "c3", "c4", "c5", "c6", "c7_bound"})
      expect_holds(c, els, id, {50000, 5}, where);
    ++algebras;
    if (els.size() > 2 && !three_implies_omega(c, els)) fail(o, "three_implies_omega on " + where);
    for (const auto& X : els)
      if (!classify(X).double_suit) fail(o, "generated element is not a double suit on " + where);
  }
  // Subalgebras generated by a single double suit.
  for (const auto& X : all_double_suits(c21)) {
    auto els = generate_subalgebra(c21, {X});
    ++algebras;
    if (els.size() > 2 && !three_implies_omega(c21, els)) fail(o, "three_implies_omega on <" + render_element(c21.space(), X) + ">");
  }
  if (o.pass) o.detail = std::to_string(algebras) + " generated algebras";
  return o;
}

// 4. Sentences take one of three values.
Outcome three_values() {
  Outcome o;
  std::size_t sentences = 0;
  for (int mask = 0; mask < 4; ++mask) {
    Structure S = eq_with_unary(mask);
    AlgebraContext c(2, 2);
    auto by = test::formulas_by_depth(enumerate_atoms(S, 2, 0), 2, 3);
    for (const auto& level : by)
      for (const auto& f : level) {
        if (!is_sentence(f)) continue;
        ++sentences;
        Element m = from_meaning(meaning(S, f));
        if (m != c.zero() && m != c.one() && m != c.omega()) fail(o, print(f) + " has meaning " + render_element(c.space(), m));
      }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(sentences) + " sentences";
  return o;
}

// 5. Slash-free formulas agree with first-order semantics.
Outcome conservative() {
  Outcome o;
  std::mt19937_64 rng(20240);
  for (int k = 0; k < 200; ++k) {
    int size = 1 + static_cast<int>(rng() % 3);
    int nvars = 1 + static_cast<int>(rng() % 2);
    Structure S = test::random_structure(rng, size);
    auto atoms = enumerate_atoms(S, nvars, 1);
    Formula f = test::random_formula(rng, atoms, nvars, 5, true);
    Space sp(size, nvars);
    Team sat = 0;
    for (Valuation a = 0; a < sp.size(); ++a)
      if (test::classical(S, f, sp, a)) sat |= singleton(a);
    Evaluator ev(S, f);
    for (Team V = 0; V <= sp.full(); ++V) {
      bool plus = (V & ~sat) == 0, minus = (V & sat) == 0;
      if (ev.satisfies(V, Sign::Plus) != plus || ev.satisfies(V, Sign::Minus) != minus) {
        fail(o, print(f) + " on team " + sp.team_to_string(V));
        break;
      }
    }
  }
  if (o.pass) o.detail = "200 formulas";
  return o;
}

// The three conditions for Omega, decided from term values. Terms up to
// depth 2 cover every term function of the battery below.
bool omega_predicted(const Structure& S, int nvars) {
  if (S.size() < 2) return false;
  if (nvars >= 2) return true;
  if (nvars == 0) return false;
  Space sp(S.size(), 1);
  for (const auto& atom : enumerate_atoms(S, 1, 2)) {
    bool some_true = false, some_false = false;
    for (Valuation x = 0; x < sp.size(); ++x) {
      bool v = eval_atomic(S, atom, sp, x);
      (v ? some_true : some_false) = true;
    }
    if (some_true && some_false) return true;
  }
  return false;
}

// 6. Omega membership.
Outcome omega_battery() {
  Outcome o;
  Structure swap(2);
  swap.add_function("s", 1);
  swap.set_function("s", {0}, 1);
  swap.set_function("s", {1}, 0);
  Structure collapse(2);
  collapse.add_function("k", 1);
  collapse.set_function("k", {0}, 0);
  collapse.set_function("k", {1}, 0);
  Structure shifted(3);
  shifted.add_function("s", 1);
  for (int a = 0; a < 3; ++a) shifted.set_function("s", {a}, (a + 1) % 3);
  Structure binary(2);
  binary.add_relation("R", 2);
  binary.add_tuple("R", {0, 0});
  binary.add_tuple("R", {1, 1});
  const std::vector<std::pair<Structure, int>> battery = {
      {Structure::equality(2), 2},     {Structure::with_constants(2), 2}, {Structure::equality(2), 1},
      {Structure::with_constants(2), 1}, {Structure::with_constants(3), 1}, {Structure::equality(3), 1},
      {eq_with_unary(1), 1},           {eq_with_unary(3), 1},            {eq_with_unary(0), 2},
      {swap, 1},                       {collapse, 1},                    {shifted, 1},
      {binary, 1},                     {Structure::with_constants(1), 2}, {Structure::with_constants(2), 0}};
  int yes = 0, no = 0;
  for (const auto& [S, n] : battery) {
    bool want = omega_predicted(S, n);
    auto els = cyls_of(S, n, 2);
    AlgebraContext c(S.size(), n);
    bool got = std::find(els.begin(), els.end(), c.omega()) != els.end();
    (want ? yes : no) += 1;
    if (got != want) fail(o, "size " + std::to_string(S.size()) + " N=" + std::to_string(n) + ": predicted " +
                                 (want ? "yes" : "no") + ", found " + (got ? "yes" : "no"));
  }
  if (o.pass) o.detail = std::to_string(battery.size()) + " structures, " + std::to_string(yes) + " with Omega";
  return o;
}

// 7. Monadic lab.
Outcome monadic_lab() {
  Outcome o;
  for (const char* id : {"B", "K", "M"})
    if (!is_subdirectly_irreducible(named_algebra(id))) fail(o, std::string(id) + " not subdirectly irreducible");
  for (const char* id : {"SixKxM", "NineMxM"})
    if (!is_simple(named_algebra(id))) fail(o, std::string(id) + " not simple");
  const std::vector<std::pair<const char*, QuantifierType>> types = {{"K_nabla0", QuantifierType::Type0},
                                                                     {"K_nabla1", QuantifierType::Type1},
                                                                     {"M_nabla0", QuantifierType::Type0},
                                                                     {"M_nabla2", QuantifierType::Type2}};
  for (const auto& [id, t] : types) {
    auto got = classify_quantifier_type(named_algebra(id));
    if (got != t) fail(o, std::string(id) + " classified " + to_string(got));
  }
  if (!check_variety_markers(named_algebra("K_nabla1")).fix_marker) fail(o, "fix_marker false on K_nabla1");
  if (check_variety_markers(named_algebra("K_nabla0")).fix_marker) fail(o, "fix_marker true on K_nabla0");
  return o;
}

// 8. Embedding theorem.
Outcome embedding() {
  Outcome o;
  std::vector<FinAlgebra> targets{named_algebra("K_nabla1")};
  auto found = search_monadic_kleene({6, 1, 0});
  if (!found.exhausted) fail(o, "search not exhausted");
  targets.insert(targets.end(), found.found.begin(), found.found.end());
  for (const auto& A : targets) {
    try {
      auto E = embed_monadic_kleene(A);
      (void)E;
    } catch (const std::exception& e) {
      fail(o, "size " + std::to_string(A.n) + ": " + e.what());
    }
  }
  if (o.pass)
    o.detail = std::to_string(targets.size()) + " algebras, " + std::to_string(found.candidates) + " candidate orders";
  return o;
}

// 9. Monadic reducts of double-suited IFG_1 algebras.
Outcome reduct_bridge() {
  Outcome o;
  std::size_t checked = 0;
  auto check = [&](const AlgebraContext& c, const std::vector<Element>& els, const std::string& where) {
    if (std::find(els.begin(), els.end(), c.omega()) == els.end()) return;
    for (const auto& X : els)
      if (!classify(X).double_suit) return;
    auto M = monadic_reduct(c, els);
    auto q = check_quantifier(M);
    ++checked;
    for (const auto& ch : q.checks)
      if (!ch.holds) fail(o, ch.name + " fails on " + where + " at " + ch.witness);
    auto t = classify_quantifier_type(M);
    if (t != QuantifierType::Type1) fail(o, where + " classified " + to_string(t));
  };
  for (int base : {2, 3}) {
    AlgebraContext c(base, 1);
    check(c, cyls_of(Structure::with_constants(base), 1), "constants of size " + std::to_string(base));
    Structure partial(base);
    partial.add_constant("0", 0);
    check(c, cyls_of(partial, 1), "one constant over size " + std::to_string(base));
  }
  AlgebraContext c21(2, 1);
  for (const auto& X : all_double_suits(c21))
    check(c21, generate_subalgebra(c21, {X}), "<" + render_element(c21.space(), X) + ">");
  if (checked == 0) fail(o, "no algebra contained Omega");
  if (o.pass) o.detail = std::to_string(checked) + " algebras";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden = argc > 1 ? argv[1] : "tests/golden/worked_examples.txt";
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 game/trump equivalence", game_vs_trump},
      {"2 worked set computations", [&] { return worked(golden); }},
      {"3 law suites", law_suites},
      {"4 three-valued sentences", three_values},
      {"5 conservative extension", conservative},
      {"6 Omega membership criterion", omega_battery},
      {"7 monadic lab", monadic_lab},
      {"8 embedding theorem", embedding},
      {"9 reduct bridge", reduct_bridge},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << o.detail << (o.detail.empty() ? "" : ", ") << ms
              << " ms)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
