#include <doctest.h>

#include <random>
#include <set>

#include "ifg/error.hpp"
#include "ifg/model.hpp"
#include "ifg/syntax.hpp"
#include "support/oracle.hpp"

using namespace ifg;

TEST_CASE("parse builds the expected trees") {
  auto f = parse("E v1/{0} (v0=v1)", 2);
  REQUIRE(f.size() == 2);
  CHECK(f.root().kind == NodeKind::Exists);
  CHECK(f.root().var == 1);
  CHECK(f.root().slash == 1u);
  CHECK(f.node(1).atom == Atom::eq(Term::variable(0), Term::variable(1)));

  auto g = parse("~(v0=v0)", 1);
  CHECK(g.root().kind == NodeKind::Not);
  CHECK(g.node(g.root().left).kind == NodeKind::Atomic);

  auto h = parse("(v0=v1 \\/{0,1} ~(v0=v1))", 2);
  CHECK(h.root().kind == NodeKind::Or);
  CHECK(h.root().slash == 3u);
  CHECK(h.node(h.root().right).kind == NodeKind::Not);
}

TEST_CASE("conjunction and universal quantifier are desugared") {
  auto a = Formula::atomic(Atom::eq(Term::variable(0), Term::variable(1)), 2);
  auto b = Formula::negation(a);
  CHECK(parse("(v0=v1 /\\{1} ~(v0=v1))", 2) ==
        Formula::negation(Formula::disjunction(2, Formula::negation(a), Formula::negation(b))));
  CHECK(parse("A v0/{1} (v0=v1)", 2) == Formula::negation(Formula::exists(0, 2, Formula::negation(a))));
}

TEST_CASE("depth counts atoms as one") {
  CHECK(parse("v0=v0", 1).depth() == 1);
  CHECK(parse("~(v0=v0)", 1).depth() == 2);
  CHECK(parse("(v0=v0 \\/{} ~(v0=v0))", 1).depth() == 3);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("(v0=", 2), ParseError);
  CHECK_THROWS_AS(parse("v2=v0", 2), InputError);
  CHECK_THROWS_AS(parse("E v0/{3} (v0=v0)", 2), InputError);
  Structure S = Structure::equality(2);
  auto sig = S.signature();
  CHECK_THROWS_AS(parse("P(v0)", 1, &sig), InputError);
  try {
    parse("v0=v0 junk", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse("~~~~(v0=v0)", 1, nullptr, 3), InputError);
}

TEST_CASE("print and parse round trip on random formulas") {
  std::mt19937_64 rng(7);
  Structure S(2);
  S.add_constant("c", 0);
  S.add_function("f", 1);
  S.add_relation("R", 2);
  for (int a = 0; a < 2; ++a) S.set_function("f", {a}, 1 - a);
  auto atoms = enumerate_atoms(S, 3, 1);
  auto sig = S.signature();
  for (int k = 0; k < 300; ++k) {
    auto f = test::random_formula(rng, atoms, 3, 5, false);
    auto text = print(f);
    CAPTURE(text);
    CHECK(parse(text, 3, &sig) == f);
    CHECK(parse_document(print_document(f), &sig) == f);
  }
}

TEST_CASE("subformula polarity counts zeros in the position") {
  auto f = parse("~(v0=v0)", 1);
  auto subs = subformulas(f);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].position.empty());
  CHECK(subs[0].positive);
  CHECK(subs[1].position == "0");
  CHECK_FALSE(subs[1].positive);

  auto g = parse("(v0=v0 \\/{} v0=v0)", 1);
  for (const auto& s : subformulas(g)) CHECK(s.positive);
  CHECK(positive_position("00"));
  CHECK(positive_position("0301"));
  CHECK_FALSE(positive_position("031"));

  std::mt19937_64 rng(3);
  auto atoms = enumerate_atoms(Structure::equality(2), 2, 0);
  for (int k = 0; k < 100; ++k) {
    auto h = test::random_formula(rng, atoms, 2, 6, false);
    std::set<std::string> seen;
    for (const auto& s : subformulas(h)) {
      CHECK(seen.insert(s.position).second);
      if (!s.position.empty()) CHECK(seen.count(s.position.substr(0, s.position.size() - 1)) == 1);
      CHECK(h.find(s.position) == s.node);
    }
  }
}

TEST_CASE("unbound index sets") {
  auto f = parse("E v0/{} E v1/{0} (v0=v1)", 2);
  auto J = unbound_by_node(f);
  CHECK(J[0] == 0u);
  CHECK(J[1] == 1u);
  CHECK(J[2] == 3u);
  auto m = unbound_sets(f);
  CHECK(m.at("") == 0u);
  CHECK(m.at("3") == 1u);
  CHECK(m.at("33") == 3u);
  CHECK(index_set_to_string(3) == "{0,1}");
}

TEST_CASE("sentences and slash freedom") {
  CHECK(is_sentence(parse("A v0/{} E v1/{0} (v0=v1)", 2)));
  CHECK_FALSE(is_sentence(parse("E v1/{0} (v0=v1)", 2)));
  CHECK_FALSE(is_sentence(parse("v0=v0", 1)));
  CHECK(parse("E v1/{} (v0=v1)", 2).slash_free());
  CHECK_FALSE(parse("E v1/{0} (v0=v1)", 2).slash_free());
}

TEST_CASE("with_nvars and subformula extraction") {
  auto f = parse("E v0/{} ~(v0=v0)", 1);
  auto g = f.with_nvars(3);
  CHECK(g.nvars() == 3);
  CHECK(print(g) == print(f));
  auto sub = f.subformula(f.find("3"));
  CHECK(sub == parse("~(v0=v0)", 1));
  CHECK(sub.root().position.empty());
}
