#include <doctest.h>

#include <algorithm>

#include "ifg/error.hpp"
#include "ifg/laws.hpp"

using namespace ifg;

namespace {

struct Fixture {
  AlgebraContext c22{2, 2};
  std::vector<Element> eq2 = cyls_of(Structure::equality(2), 2);
  std::vector<Element> const2 = cyls_of(Structure::with_constants(2), 2);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_CASE("catalog") {
  CHECK(law_catalog().size() >= 40);
  CHECK(find_law("assoc_mixed").expect == Expectation::Fails);
  CHECK(find_law("de_morgan").expect == Expectation::Holds);
  CHECK_THROWS_AS(find_law("no_such_law"), InputError);
  for (const auto& l : law_catalog()) CHECK_FALSE(l.description.empty());
}

TEST_CASE("expected laws hold and expected failures fail on the dimension-two algebras") {
  const auto& f = fx();
  LawOptions opts{4000, 7};
  for (const auto* els : {&f.eq2, &f.const2})
    for (const auto& law : law_catalog()) {
      CAPTURE(law.id);
      auto r = check_law(f.c22, *els, law.id, opts);
      if (law.expect == Expectation::Holds) CHECK(r.holds);
      CHECK(expectation_met(law, r) == (r.holds == (law.expect == Expectation::Holds)));
    }
  for (const char* id : {"assoc_mixed", "absorption_full", "c2_full", "c5_full", "c7_full", "complementation_full"})
    CHECK_FALSE(check_law(f.c22, f.const2, id).holds);
}

TEST_CASE("parallel and serial checkers report the same first counterexample") {
  const auto& f = fx();
  LawOptions opts{3000, 11};
  for (const char* id : {"assoc_mixed", "absorption_full", "distributivity_full", "c3_full", "de_morgan", "kleene"}) {
    CAPTURE(id);
    auto a = check_law(f.c22, f.const2, id, opts);
    auto b = check_law_serial(f.c22, f.const2, id, opts);
    CHECK(a.holds == b.holds);
    CHECK(a.instances == b.instances);
    CHECK(a.tuple == b.tuple);
    CHECK(a.counterexample == b.counterexample);
  }
}

TEST_CASE("the reported counterexample really violates the law") {
  AlgebraContext c(3, 1);
  auto els = cyls_of(Structure::with_constants(3), 1);
  auto r = check_law(c, els, "assoc_mixed");
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.tuple.size() == 3);
  const auto &X = els[r.tuple[0]], &Y = els[r.tuple[1]], &Z = els[r.tuple[2]];
  bool violated = false;
  for (IndexSet J = 0; J < 2; ++J)
    for (IndexSet K = 0; K < 2; ++K)
      if (c.sum(K, c.sum(J, X, Y), Z) != c.sum(J, X, c.sum(K, Y, Z))) violated = true;
  CHECK(violated);
}

TEST_CASE("rooted De Morgan suite over Root_1 of a two element set") {
  AlgebraContext c(2, 1);
  auto xs = all_rooted(c);
  CHECK(check_law(c, xs, "de_morgan").holds);
  CHECK(check_law(c, xs, "de_morgan_ternary").holds);
}

TEST_CASE("Kleene law over all double suits") {
  for (int n : {1, 2}) {
    AlgebraContext c(2, n);
    auto ds = all_double_suits(c);
    CHECK(check_law(c, ds, "kleene").holds);
  }
}

TEST_CASE("cylindrification chains") {
  const auto& f = fx();
  const auto& c = f.c22;
  CHECK(cyl_chain(c, {3, 3}, c.zero()) == c.zero());
  CHECK(cyl_chain(c, {3, 3}, c.one()) == c.one());
  CHECK(cyl_chain(c, {3, 3}, c.omega()) == c.omega());
  Element D = c.diag(0, 1);
  CHECK(cyl_chain(c, {0, 0}, D) == c.cyl(0, 0, c.cyl(1, 0, D)));
  CHECK(cyl_chain(c, {3, 3}, c.prod(3, D, c.neg(D))) == c.omega());
  for (const auto& X : f.eq2) {
    Element v = cyl_chain(c, {3, 3}, X);
    CHECK((v == c.zero() || v == c.one() || v == c.omega()));
  }
}

TEST_CASE("three elements imply Omega") {
  const auto& f = fx();
  CHECK(three_implies_omega(f.c22, f.eq2));
  CHECK(three_implies_omega(f.c22, f.const2));
  AlgebraContext c(2, 1);
  CHECK(three_implies_omega(c, {c.zero(), c.one()}));
  CHECK_FALSE(three_implies_omega(c, {c.zero(), c.one(), c.atomic(c.space().parse_team("0"))}));
}
