#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ifg/error.hpp"
#include "ifg/model.hpp"

using namespace ifg;

namespace {

std::vector<Valuation> members(Team V) {
  std::vector<Valuation> out;
  for (Team r = V; r; r &= r - 1) out.push_back(static_cast<Valuation>(std::countr_zero(r)));
  return out;
}

// Every function V -> A, by brute force over |A|^|V| assignments.
std::vector<TeamFunction> all_functions(const Space& sp, Team V) {
  auto ms = members(V);
  std::vector<TeamFunction> out;
  std::vector<int> digits(ms.size(), 0);
  while (true) {
    TeamFunction f{V, std::vector<int>(sp.size(), 0)};
    for (std::size_t k = 0; k < ms.size(); ++k) f.value[ms[k]] = digits[k];
    out.push_back(f);
    std::size_t k = 0;
    while (k < ms.size() && digits[k] == sp.base() - 1) digits[k++] = 0;
    if (k == ms.size()) break;
    ++digits[k];
  }
  return out;
}

bool brute_independent(const Space& sp, const TeamFunction& f, IndexSet J) {
  for (Valuation a : members(f.domain))
    for (Valuation b : members(f.domain))
      if (agree_outside(sp, a, b, J) && f(a) != f(b)) return false;
  return true;
}

// U is a union of ~_J classes of V.
bool closed_within(const Space& sp, Team U, Team V, IndexSet J) {
  for (Valuation a : members(U))
    for (Valuation b : members(V))
      if (agree_outside(sp, a, b, J) && !contains(U, b)) return false;
  return true;
}

bool brute_agree(const Space& sp, Valuation a, Valuation b, IndexSet J) {
  auto x = sp.decode(a), y = sp.decode(b);
  for (int i = 0; i < sp.nvars(); ++i)
    if (!(J >> i & 1u) && x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

TEST_CASE("valuations are little-endian mixed radix") {
  Space sp(3, 2);
  CHECK(sp.size() == 9);
  CHECK(sp.encode({1, 2}) == 7);
  CHECK(sp.decode(7) == std::vector<int>{1, 2});
  CHECK(sp.to_string(7) == "12");
  CHECK(sp.parse_valuation("12") == 7);
  CHECK(sp.with_digit(7, 0, 0) == 6);
  CHECK(sp.class_rep(7, 2) == 1);
  CHECK(sp.team_to_string(sp.parse_team("00,11")) == "{00,11}");
  CHECK(sp.parse_team("") == 0);
  CHECK(sp.parse_team("{}") == 0);
  CHECK(sp.parse_team("{00,11}") == sp.parse_team("00,11"));
  CHECK_THROWS_AS(sp.parse_team("3"), InputError);
}

TEST_CASE("agree_outside matches a digit-wise oracle and is an equivalence") {
  for (int base : {1, 2, 3})
    for (int n : {1, 2, 3}) {
      Space sp(base, n);
      for (IndexSet J = 0; J < (IndexSet{1} << n); ++J)
        for (Valuation a = 0; a < sp.size(); ++a) {
          CHECK(agree_outside(sp, a, a, J));
          for (Valuation b = 0; b < sp.size(); ++b) {
            bool ab = agree_outside(sp, a, b, J);
            REQUIRE(ab == brute_agree(sp, a, b, J));
            CHECK(ab == agree_outside(sp, b, a, J));
            for (IndexSet K = J; K < (IndexSet{1} << n); K = (K + 1) | J)
              if (ab) CHECK(agree_outside(sp, a, b, K));
          }
        }
    }
  Space sp(2, 2);
  CHECK(agree_outside(sp, sp.parse_valuation("00"), sp.parse_valuation("01"), 2));
  CHECK_FALSE(agree_outside(sp, sp.parse_valuation("00"), sp.parse_valuation("10"), 2));
}

TEST_CASE("variants") {
  Space sp(2, 2);
  Team V = sp.parse_team("00,11");
  TeamFunction zero{V, std::vector<int>(sp.size(), 0)};
  CHECK(variant(sp, 0, 1, TeamFunction{0, std::vector<int>(sp.size(), 0)}) == 0);
  CHECK(variant(sp, V, 1, zero) == sp.parse_team("00,10"));
  CHECK(variant_all(sp, V, 0) == sp.full());
  CHECK(variant_const(sp, V, 0, 1) == sp.parse_team("10,11"));
}

TEST_CASE("classes") {
  Space sp(2, 2);
  Team V = sp.parse_team("00,01,10");
  auto c = classes(sp, V, 2);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == sp.parse_team("00,01"));
  CHECK(c[1] == sp.parse_team("10"));
  CHECK(classes(sp, V, 0).size() == 3);
  CHECK(classes(sp, V, 3) == std::vector<Team>{V});
}

TEST_CASE("independent functions match brute force") {
  for (int base : {1, 2, 3}) {
    Space sp(base, 2);
    for (Team V = 0; V <= sp.full(); V += (base == 3 ? 7 : 1))
      for (IndexSet J = 0; J < 4; ++J) {
        std::vector<TeamFunction> want;
        for (auto& f : all_functions(sp, V))
          if (brute_independent(sp, f, J)) want.push_back(f);
        auto got = enumerate_independent_functions(sp, V, J);
        REQUIRE(got.size() == want.size());
        for (const auto& f : got) {
          CHECK(brute_independent(sp, f, J));
          CHECK(independent_of(sp, f, J));
        }
        std::set<std::vector<int>> distinct;
        for (const auto& f : got) {
          std::vector<int> restricted;
          for (Valuation a : members(V)) restricted.push_back(f(a));
          distinct.insert(restricted);
        }
        CHECK(distinct.size() == got.size());
      }
  }
  Space sp(2, 2);
  CHECK(enumerate_independent_functions(sp, sp.parse_team("00,01"), 2).size() == 2);
  CHECK(enumerate_independent_functions(Space(0, 1), 0, 0).size() == 1);
}

TEST_CASE("saturated splits match brute force") {
  Space sp(2, 2);
  for (Team V = 0; V <= sp.full(); ++V)
    for (IndexSet J = 0; J < 4; ++J) {
      std::set<std::pair<Team, Team>> want;
      for (Team L = 0; L <= sp.full(); ++L)
        if ((L & ~V) == 0 && closed_within(sp, L, V, J) && closed_within(sp, V & ~L, V, J)) want.insert({L, V & ~L});
      auto got = enumerate_saturated_splits(sp, V, J);
      CHECK(std::set<std::pair<Team, Team>>(got.begin(), got.end()) == want);
      CHECK(got.size() == (std::size_t{1} << classes(sp, V, J).size()));
    }
  CHECK(enumerate_saturated_splits(sp, 0, 0).size() == 1);
  CHECK(enumerate_saturated_splits(sp, sp.parse_team("00,11"), 0).size() == 4);
}

TEST_CASE("split refinement and restriction") {
  Space sp(2, 2);
  for (Team V = 0; V <= sp.full(); ++V)
    for (IndexSet K = 0; K < 4; ++K)
      for (const auto& [l, r] : enumerate_saturated_splits(sp, V, K)) {
        for (IndexSet J = 0; J < 4; ++J)
          if ((J & ~K) == 0) CHECK((closed_within(sp, l, V, J) && closed_within(sp, r, V, J)));
        for (Team W = V;; W = (W - 1) & V) {
          CHECK(closed_within(sp, l & W, W, K));
          CHECK(closed_within(sp, r & W, W, K));
          if (W == 0) break;
        }
      }
}

TEST_CASE("gluing and variation over splits") {
  Space sp(2, 2);
  for (Team V = 0; V <= sp.full(); ++V)
    for (IndexSet J = 0; J < 4; ++J)
      for (const auto& [l, r] : enumerate_saturated_splits(sp, V, J))
        for (const auto& f : enumerate_independent_functions(sp, l, J))
          for (const auto& g : enumerate_independent_functions(sp, r, J)) {
            TeamFunction h{V, f.value};
            for (Valuation a : members(r)) h.value[a] = g(a);
            CHECK(independent_of(sp, h, J));
          }
  for (Team V = 0; V <= sp.full(); ++V)
    for (IndexSet J = 0; J < 4; ++J)
      for (IndexSet K = 0; K < 4; ++K)
        for (int n = 0; n < 2; ++n) {
          if (!(K >> n & 1u)) continue;
          for (const auto& f : enumerate_independent_functions(sp, V, J))
            for (const auto& [l, r] : enumerate_saturated_splits(sp, V, K)) {
              Team vl = variant(sp, l, n, TeamFunction{l, f.value});
              Team vr = variant(sp, r, n, TeamFunction{r, f.value});
              Team whole = variant(sp, V, n, f);
              CHECK((vl | vr) == whole);
              CHECK((vl & vr) == 0);
              CHECK(closed_within(sp, vl, whole, K));
              CHECK(closed_within(sp, vr, whole, K));
            }
        }
}

TEST_CASE("composition of variations") {
  // V(n:f)(n:g) = V(n:h) for some h independent of K whenever f and g are.
  Space sp(2, 2);
  for (Team V = 1; V <= sp.full(); ++V)
    for (IndexSet K = 0; K < 4; ++K)
      for (int n = 0; n < 2; ++n) {
        IndexSet Kn = K | (IndexSet{1} << n);
        for (const auto& f : enumerate_independent_functions(sp, V, K)) {
          Team W = variant(sp, V, n, f);
          for (const auto& g : enumerate_independent_functions(sp, W, Kn)) {
            Team target = variant(sp, W, n, g);
            bool found = false;
            for (const auto& h : enumerate_independent_functions(sp, V, K))
              if (variant(sp, V, n, h) == target) found = true;
            CHECK(found);
          }
        }
      }
}

TEST_CASE("variations in distinct coordinates commute") {
  // f: V ->_J A, g: V(m:f) ->_K A with m in K, n in J give G: V ->_K A and
  // F: V(n:G) ->_J A with V(m:f)(n:g) = V(n:G)(m:F).
  Space sp(2, 2);
  const int m = 0, n = 1;
  for (Team V = 1; V <= sp.full(); ++V)
    for (IndexSet J = 2; J < 4; J += 1) {
      if (!(J >> n & 1u)) continue;
      for (IndexSet K = 1; K < 4; K += 2)
        for (const auto& f : enumerate_independent_functions(sp, V, J)) {
          Team W = variant(sp, V, m, f);
          for (const auto& g : enumerate_independent_functions(sp, W, K)) {
            Team target = variant(sp, W, n, g);
            bool found = false;
            for (const auto& G : enumerate_independent_functions(sp, V, K)) {
              Team U = variant(sp, V, n, G);
              for (const auto& F : enumerate_independent_functions(sp, U, J))
                if (variant(sp, U, m, F) == target) found = true;
            }
            CHECK(found);
          }
        }
    }
}

TEST_CASE("V(n:A) is a disjoint union of constant variants") {
  Space sp(2, 2);
  for (Team V = 0; V <= sp.full(); ++V)
    for (int n = 0; n < 2; ++n) {
      Team all = variant_all(sp, V, n);
      Team u = 0;
      for (int b = 0; b < 2; ++b) {
        Team vb = variant_const(sp, V, n, b);
        CHECK((u & vb) == 0);
        u |= vb;
      }
      CHECK(u == all);
    }
}

TEST_CASE("structures") {
  auto S = Structure::parse("universe 3\nconstant c = 2\nrelation R/2: 0,1 1,2\nfunction f/1: 0 -> 1\nfunction f/1: 1 -> 2\nfunction f/1: 2 -> 0\n");
  CHECK(S.size() == 3);
  CHECK(S.constant("c") == 2);
  CHECK(S.holds("R", {0, 1}));
  CHECK_FALSE(S.holds("R", {1, 0}));
  CHECK(S.apply("f", {2}) == 0);
  CHECK(Structure::parse(S.to_text()).to_text() == S.to_text());
  CHECK_THROWS_AS(Structure::parse("universe 2\nfunction f/1: 0 -> 1\n"), InputError);
  CHECK_THROWS_AS(Structure::parse("universe 2\nconstant c = 5\n"), InputError);

  Space sp(3, 2);
  Atom r = Atom::rel("R", {Term::variable(0), Term::variable(1)});
  CHECK(eval_atomic(S, r, sp, sp.parse_valuation("01")));
  CHECK_FALSE(eval_atomic(S, r, sp, sp.parse_valuation("10")));
  Atom e = Atom::eq(Term::apply("f", {Term::variable(0)}), Term::constant("c"));
  CHECK(atom_truth(S, e, sp) == sp.parse_team("10,11,12"));

  auto E = Structure::equality(2);
  Space s2(2, 2);
  Atom eq = Atom::eq(Term::variable(0), Term::variable(1));
  CHECK(eval_atomic(E, eq, s2, s2.parse_valuation("00")));
  CHECK_FALSE(eval_atomic(E, eq, s2, s2.parse_valuation("01")));
}

TEST_CASE("atom enumeration") {
  auto S = Structure::equality(2);
  S.add_relation("P", 1);
  CHECK(enumerate_atoms(S, 2, 0).size() == 5);
  CHECK(enumerate_terms(Structure::with_constants(2), 1, 0).size() == 3);
}
