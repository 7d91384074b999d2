#include <doctest.h>

#include <algorithm>
#include <random>

#include "ifg/algebra.hpp"
#include "ifg/error.hpp"
#include "support/oracle.hpp"

using namespace ifg;

namespace {

TeamSet random_teamset(std::mt19937_64& rng, std::uint32_t m, bool closed) {
  TeamSet s(m);
  s.insert(0);
  std::uint64_t n = std::uint64_t{1} << m;
  for (std::uint64_t t = 1; t < n; ++t)
    if (rng() % 4 == 0) s.insert(t);
  if (!closed) return s;
  TeamSet d(m);
  s.for_each([&](Team V) {
    for (Team W = V;; W = (W - 1) & V) {
      d.insert(W);
      if (W == 0) break;
    }
  });
  return d;
}

Element random_element(std::mt19937_64& rng, const AlgebraContext& c, bool closed) {
  return {random_teamset(rng, c.valuations(), closed), random_teamset(rng, c.valuations(), closed)};
}

void check_ops_against_oracles(const AlgebraContext& c, std::uint64_t seed, int rounds) {
  std::mt19937_64 rng(seed);
  const auto& sp = c.space();
  for (int k = 0; k < rounds; ++k) {
    Element X = random_element(rng, c, k % 2 == 0), Y = random_element(rng, c, k % 2 == 0);
    CHECK(c.neg(c.neg(X)) == X);
    for (IndexSet J = 0; J <= c.all_indices(); ++J) {
      Element s = c.sum(J, X, Y);
      CHECK(s.plus == test::split_union_oracle(sp, J, X.plus, Y.plus));
      CHECK(s.minus == (X.minus & Y.minus));
      CHECK(s == c.sum_serial(J, X, Y));
      Element p = c.prod(J, X, Y);
      CHECK(p == c.prod_serial(J, X, Y));
      CHECK(p == c.neg(c.sum(J, c.neg(X), c.neg(Y))));
      for (int n = 0; n < c.nvars(); ++n) {
        Element cy = c.cyl(n, J, X);
        CHECK(cy.plus == test::exists_oracle(sp, n, J, X.plus));
        CHECK(cy.minus == test::all_variant_oracle(sp, n, X.minus));
        CHECK(cy == c.cyl_serial(n, J, X));
        CHECK(c.dual_cyl(n, J, X) == c.neg(c.cyl(n, J, c.neg(X))));
      }
    }
  }
}

}  // namespace

TEST_CASE("operations match the set-level definitions on the table path") {
  check_ops_against_oracles(AlgebraContext(2, 2), 1, 12);
  check_ops_against_oracles(AlgebraContext(3, 1), 2, 12);
  check_ops_against_oracles(AlgebraContext(2, 1), 3, 12);
}

TEST_CASE("operations match the set-level definitions on the general path") {
  check_ops_against_oracles(AlgebraContext(2, 3), 4, 2);
  check_ops_against_oracles(AlgebraContext(3, 2), 5, 1);
}

TEST_CASE("constants") {
  AlgebraContext c(2, 1);
  const auto& sp = c.space();
  CHECK(render_element(sp, c.zero()) == "plus=[{}] minus=[{},{0},{1},{0,1}]");
  CHECK(render_element(sp, c.one()) == "plus=[{},{0},{1},{0,1}] minus=[{}]");
  CHECK(c.omega() == c.neg(c.omega()));
  CHECK(leq_plus(c.omega(), c.mho()));
  CHECK_FALSE(leq(c.omega(), c.mho()));
  CHECK_FALSE(leq(c.mho(), c.omega()));
  AlgebraContext d(2, 2);
  CHECK(render_element(d.space(), d.diag(0, 1)) == "plus=[{},{00},{11},{00,11}] minus=[{},{10},{01},{01,10}]");
  CHECK(d.diag(0, 0) == d.one());
  CHECK_THROWS_AS(d.diag(0, 2), InputError);
}

TEST_CASE("classification flags") {
  AlgebraContext c(2, 2);
  auto w = classify(c.omega());
  CHECK((w.rooted && w.suit_pair && w.double_suit && w.fixed_point));
  auto m = classify(c.mho());
  CHECK((m.rooted && m.suit_pair && m.fixed_point));
  CHECK_FALSE(m.double_suit);
  CHECK(classify(c.diag(0, 1)).double_suit);
  CHECK(classify(c.one()).flat);
  CHECK_FALSE(classify(c.sum(3, c.diag(0, 1), c.neg(c.diag(0, 1)))).flat);
  CHECK(to_string(w) == "rooted,suit_pair,double_suit,fixed_point,flat");
}

TEST_CASE("order") {
  AlgebraContext c(2, 1);
  auto xs = all_rooted(c);
  CHECK(xs.size() == 64);
  for (const auto& X : xs) {
    CHECK(leq(c.zero(), X));
    CHECK(leq(X, c.one()));
    for (const auto& Y : xs) CHECK(leq(X, Y) == leq(c.neg(Y), c.neg(X)));
  }
  // Suits over two valuations by brute force.
  std::size_t suits = 0, doubles = 0;
  std::vector<TeamSet> fams;
  for (unsigned bits = 0; bits < 16; ++bits) {
    TeamSet s(2);
    for (Team t = 0; t < 4; ++t)
      if (bits >> t & 1u) s.insert(t);
    bool closed = true;
    s.for_each([&](Team V) {
      for (Team W = 0; W < 4; ++W)
        if ((W & ~V) == 0 && !s.contains(W)) closed = false;
    });
    if (closed && s.contains(0)) fams.push_back(s);
  }
  suits = fams.size();
  for (const auto& a : fams)
    for (const auto& b : fams)
      if ((a & b).count() == 1) ++doubles;
  CHECK(all_suits(c).size() == suits);
  CHECK(all_double_suits(c).size() == doubles);
  CHECK(doubles == 11);
}

TEST_CASE("random rooted elements are reproducible") {
  AlgebraContext c(2, 2);
  auto a = random_rooted(c, 50, 42), b = random_rooted(c, 50, 42);
  CHECK(a == b);
  for (const auto& X : a) CHECK(classify(X).rooted);
}

TEST_CASE("meaning is a homomorphism on small formulas") {
  for (int nvars : {1, 2}) {
    Structure S = Structure::equality(2);
    S.add_relation("P", 1);
    S.add_tuple("P", {0});
    AlgebraContext c(2, nvars);
    auto by = test::formulas_by_depth(enumerate_atoms(S, nvars, 0), nvars, 2);
    for (const auto& level : by)
      for (const auto& f : level) {
        Element m = from_meaning(meaning(S, f));
        const Node& r = f.root();
        CAPTURE(print(f));
        switch (r.kind) {
          case NodeKind::Atomic:
            CHECK(m == c.atomic(atom_truth(S, r.atom, c.space())));
            break;
          case NodeKind::Not:
            CHECK(m == c.neg(from_meaning(meaning(S, f.subformula(r.left)))));
            break;
          case NodeKind::Or:
            CHECK(m == c.sum(r.slash, from_meaning(meaning(S, f.subformula(r.left))),
                             from_meaning(meaning(S, f.subformula(r.right)))));
            break;
          case NodeKind::Exists:
            CHECK(m == c.cyl(r.var, r.slash, from_meaning(meaning(S, f.subformula(r.left)))));
            break;
        }
      }
  }
}

TEST_CASE("absorption failure") {
  AlgebraContext c(2, 2);
  const auto& sp = c.space();
  Element D = c.diag(0, 1);
  Element X = c.sum(3, D, c.neg(D));
  CHECK(render_teamset(sp, X.plus) == "{},{00},{10},{01},{01,10},{11},{00,11}");
  CHECK(X.minus == TeamSet::only_empty(4));
  CHECK(c.sum(0, X, c.sum(3, X, X)).plus.contains(sp.full()));
  CHECK_FALSE(X == c.one());
}

TEST_CASE("order string for rooted elements") {
  AlgebraContext c(2, 2);
  for (const auto& X : random_rooted(c, 40, 3)) {
    for (IndexSet J = 0; J < 4; ++J) {
      CHECK(leq(c.prod(0, X, X), c.prod(J, X, X)));
      CHECK(leq(c.prod(J, X, X), c.prod(3, X, X)));
      CHECK(leq(c.sum(3, X, X), c.sum(J, X, X)));
      CHECK(leq(c.sum(J, X, X), c.sum(0, X, X)));
    }
    CHECK(c.prod(3, X, X) == X);
    CHECK(c.sum(3, X, X) == X);
  }
}

TEST_CASE("generated algebras") {
  AlgebraContext empty(0, 1);
  auto t = generate_subalgebra(empty, {});
  REQUIRE(t.size() == 1);
  CHECK(t[0] == empty.omega());

  for (int base : {1, 2, 3}) {
    AlgebraContext z(base, 0);
    for (const auto& X : generate_subalgebra(z, {}))
      CHECK((X == z.zero() || X == z.one() || X == z.omega() || X == z.mho()));
  }

  auto one = cyls_of(Structure::with_constants(1), 2);
  CHECK(one.size() == 2);

  AlgebraContext c(2, 2);
  auto els = cyls_of(Structure::equality(2), 2);
  CHECK(std::find(els.begin(), els.end(), c.omega()) != els.end());
  for (const auto& X : els) CHECK(classify(X).double_suit);

  AlgebraContext c1(2, 1);
  auto e1 = cyls_of(Structure::equality(2), 1);
  CHECK(std::find(e1.begin(), e1.end(), c1.omega()) == e1.end());
  CHECK(e1.size() == 2);

  CHECK_THROWS_AS(cyls_of(Structure::with_constants(3), 2, 1, 10), GuardError);
}

TEST_CASE("dump format") {
  AlgebraContext c(1, 1);
  auto els = cyls_of(Structure::with_constants(1), 1);
  CHECK(dump_algebra(c, els) == "base=1 dim=1 count=2\nplus=[{}] minus=[{},{0}]\nplus=[{},{0}] minus=[{}]\n");
}
