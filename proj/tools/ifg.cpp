#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/error.hpp"
#include "ifg/finlat.hpp"
#include "ifg/games.hpp"
#include "ifg/laws.hpp"
#include "ifg/selftest.hpp"
#include "ifg/syntax.hpp"
#include "ifg/trump.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;
constexpr int kExitExpectation = 3;

struct Options {
  std::string structure;
  std::string formula;
  int nvars = 0;
  std::optional<std::string> team;
  int player = 1;
  std::string law;
  int depth = 1;
  std::size_t cap = 20000;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::string file;
  int max_size = 6;
  bool worked = false;
};

struct Loaded {
  ifg::Structure S;
  ifg::Formula f;
  ifg::Space sp;
};

Loaded load_formula(const Options& o) {
  auto S = ifg::Structure::load(o.structure);
  auto sig = S.signature();
  auto f = ifg::parse(o.formula, o.nvars, &sig);
  ifg::Space sp(S.size(), o.nvars);
  if (sp.size() > ifg::kMaxValuations) throw ifg::GuardError("too many valuations");
  return {std::move(S), std::move(f), sp};
}

ifg::Team team_of(const Options& o, const ifg::Space& sp) { return o.team ? sp.parse_team(*o.team) : sp.full(); }

int cmd_eval(const Options& o) {
  auto L = load_formula(o);
  ifg::Team V = team_of(o, L.sp);
  ifg::Evaluator ev(L.S, L.f);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "+ " << yn(ev.satisfies(V, ifg::Sign::Plus)) << " / - " << yn(ev.satisfies(V, ifg::Sign::Minus)) << "\n";
  return 0;
}

int cmd_truth(const Options& o) {
  auto L = load_formula(o);
  if (!ifg::is_sentence(L.f)) throw ifg::InputError("formula is not a sentence");
  std::cout << ifg::to_string(ifg::truth_value(L.S, L.f)) << "\n";
  return 0;
}

int cmd_game(const Options& o) {
  auto L = load_formula(o);
  ifg::Team V = team_of(o, L.sp);
  auto r = ifg::has_winning_strategy(L.S, L.f, V, o.player);
  std::cout << "team=" << L.sp.team_to_string(V) << " player=" << o.player << " "
            << (r.wins ? "wins" : "has no winning strategy") << "\n";
  if (r.wins && r.witness) std::cout << ifg::render_strategy(L.sp, L.f, *r.witness);
  return 0;
}

int cmd_meaning(const Options& o) {
  auto L = load_formula(o);
  if (L.sp.size() > ifg::kMaxEnumeratedValuations) throw ifg::GuardError("meaning needs at most 20 valuations");
  std::cout << ifg::render_element(L.sp, ifg::from_meaning(ifg::meaning(L.S, L.f))) << "\n";
  return 0;
}

int cmd_algebra_gen(const Options& o) {
  auto S = ifg::Structure::load(o.structure);
  auto els = ifg::cyls_of(S, o.nvars, o.depth, o.cap);
  ifg::AlgebraContext ctx(S.size(), o.nvars);
  std::cout << ifg::dump_algebra(ctx, els);
  return 0;
}

int cmd_laws(const Options& o) {
  const auto& info = ifg::find_law(o.law);
  auto S = ifg::Structure::load(o.structure);
  ifg::AlgebraContext ctx(S.size(), o.nvars);
  auto els = ifg::cyls_of(S, o.nvars, o.depth, o.cap);
  auto r = ifg::check_law(ctx, els, o.law, {o.samples, o.seed});
  bool met = ifg::expectation_met(info, r);
  std::cout << "law=" << info.id << " expect=" << (info.expect == ifg::Expectation::Holds ? "holds" : "fails")
            << " result=" << (r.holds ? "holds" : "fails") << " elements=" << els.size()
            << " instances=" << r.instances << "\n";
  if (!r.holds) std::cout << "counterexample: " << r.counterexample << "\n";
  std::cout << (met ? "expectation met" : "expectation NOT met") << "\n";
  return met ? 0 : kExitExpectation;
}

void print_checks(const std::vector<ifg::AxiomCheck>& cs) {
  for (const auto& c : cs)
    std::cout << "  " << c.name << ": " << (c.holds ? "holds" : "fails") << (c.witness.empty() ? "" : " (" + c.witness + ")")
              << "\n";
}

int cmd_monadic_classify(const Options& o) {
  auto A = ifg::load_fin_algebra(o.file);
  auto ax = ifg::check_axioms(A);
  std::cout << "size=" << A.n << "\n";
  std::cout << "axioms:\n";
  print_checks(ax.checks);
  std::cout << "kleene=" << (ax.kleene ? "yes" : "no") << " boolean=" << (ax.boolean ? "yes" : "no") << "\n";
  if (A.has_nabla()) {
    auto q = ifg::check_quantifier(A);
    std::cout << "quantifier:\n";
    print_checks(q.checks);
    std::cout << "type=" << ifg::to_string(ifg::classify_quantifier_type(A)) << "\n";
    auto m = ifg::check_variety_markers(A);
    std::cout << "kleene_range=" << (m.kleene_range ? "yes" : "no") << " boolean_range=" << (m.boolean_range ? "yes" : "no")
              << " fix_marker=" << (m.fix_marker ? "yes" : "no") << "\n";
    if (!m.witness.empty()) std::cout << "marker witness: " << m.witness << "\n";
  }
  auto irr0 = ifg::check_join_meet_irreducible(A, A.bottom);
  auto irr1 = ifg::check_join_meet_irreducible(A, A.top);
  std::cout << "0 meet-irreducible=" << (irr0.meet_irreducible ? "yes" : "no")
            << " 1 join-irreducible=" << (irr1.join_irreducible ? "yes" : "no") << "\n";
  if (A.n <= ifg::kMaxCongruenceCarrier)
    std::cout << "simple=" << (ifg::is_simple(A) ? "yes" : "no")
              << " subdirectly_irreducible=" << (ifg::is_subdirectly_irreducible(A) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_monadic_congruences(const Options& o) {
  auto A = ifg::load_fin_algebra(o.file);
  auto cs = ifg::congruences(A);
  std::cout << "count=" << cs.size() << "\n";
  for (const auto& c : cs) std::cout << ifg::render_congruence(A, c) << "\n";
  std::cout << "simple=" << (ifg::is_simple(A) ? "yes" : "no")
            << " subdirectly_irreducible=" << (ifg::is_subdirectly_irreducible(A) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_monadic_search(const Options& o) {
  ifg::SearchOptions so;
  so.max_size = o.max_size;
  so.seed = o.seed;
  so.max_candidates = o.samples;
  auto r = ifg::search_monadic_kleene(so);
  std::cout << "found=" << r.found.size() << " candidates=" << r.candidates
            << " exhausted=" << (r.exhausted ? "yes" : "no") << "\n";
  for (const auto& A : r.found) std::cout << "\n" << ifg::render_fin_algebra(A);
  return 0;
}

int cmd_embed(const Options& o) {
  auto A = ifg::load_fin_algebra(o.file);
  ifg::Embedding E;
  try {
    E = ifg::embed_monadic_kleene(A);
  } catch (const std::logic_error& e) {
    std::cout << "verification failed: " << e.what() << "\n";
    return kExitExpectation;
  }
  ifg::Space sp(E.base, 1);
  std::cout << "base=" << E.base << "\n";
  for (std::size_t i = 0; i < E.filters.size(); ++i) {
    std::cout << "filter " << i << ":";
    for (int x : E.filters[i]) std::cout << " " << A.label(x);
    std::cout << (static_cast<int>(i) == E.top_filter ? " (top)" : "") << "\n";
  }
  for (int x = 0; x < A.n; ++x)
    std::cout << "h(" << A.label(x) << ") = " << ifg::render_element(sp, E.image[static_cast<std::size_t>(x)]) << " ["
              << ifg::to_string(E.image_flags[static_cast<std::size_t>(x)]) << "]\n";
  std::cout << "verified\n";
  return 0;
}

int cmd_selftest(const Options& o) {
  if (o.worked) {
    std::cout << ifg::worked_examples();
    return 0;
  }
  auto rs = ifg::run_selftest();
  std::size_t failed = 0;
  for (const auto& r : rs) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.pass) {
      std::cout << "  " << r.detail;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (rs.size() - failed) << "/" << rs.size() << " passed\n";
  return failed == 0 ? 0 : kExitExpectation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for IFG logic, its cylindric set algebras and monadic Kleene algebras"};
  app.require_subcommand(1);
  Options o;

  auto formula_opts = [&](CLI::App* sc, bool with_team) {
    sc->add_option("-s,--structure", o.structure, "structure file")->required()->check(CLI::ExistingFile);
    sc->add_option("-f,--formula", o.formula, "formula text")->required();
    sc->add_option("-n,--nvars", o.nvars, "number of variables N")->required()->check(CLI::Range(0, 20));
    if (with_team) sc->add_option("--team", o.team, "team as comma separated digit strings (default: all valuations)");
  };

  int code = 0;
  auto* eval = app.add_subcommand("eval", "decide V |=+ f and V |=- f");
  formula_opts(eval, true);
  eval->callback([&] { code = cmd_eval(o); });

  auto* truth = app.add_subcommand("truth", "truth value of a sentence");
  formula_opts(truth, false);
  truth->callback([&] { code = cmd_truth(o); });

  auto* game = app.add_subcommand("game", "search a uniform winning strategy");
  formula_opts(game, true);
  game->add_option("--player", o.player, "1 = verifier of the root, 0 = falsifier")->check(CLI::Range(0, 1));
  game->callback([&] { code = cmd_game(o); });

  auto* mean = app.add_subcommand("meaning", "trumps and cotrumps of a formula");
  formula_opts(mean, false);
  mean->callback([&] { code = cmd_meaning(o); });

  auto algebra_opts = [&](CLI::App* sc) {
    sc->add_option("-s,--structure", o.structure, "structure file")->required()->check(CLI::ExistingFile);
    sc->add_option("-n,--nvars", o.nvars, "dimension N")->required()->check(CLI::Range(0, 20));
    sc->add_option("--depth", o.depth, "term depth of the generating atoms")->check(CLI::Range(0, 4));
    sc->add_option("--cap", o.cap, "maximum number of elements");
  };
  auto* gen = app.add_subcommand("algebra-gen", "dump the IFG cylindric set algebra of a structure");
  algebra_opts(gen);
  gen->callback([&] { code = cmd_algebra_gen(o); });

  auto* laws = app.add_subcommand("laws", "check a law on the generated algebra");
  algebra_opts(laws);
  laws->add_option("--law", o.law, "law id")->required();
  laws->add_option("--seed", o.seed, "sampling seed");
  laws->add_option("--samples", o.samples, "maximum argument tuples (0 = all)");
  laws->callback([&] { code = cmd_laws(o); });

  auto* monadic = app.add_subcommand("monadic", "finite De Morgan and monadic algebras");
  monadic->require_subcommand(1);
  auto* classify = monadic->add_subcommand("classify", "axioms, quantifier type and markers");
  classify->add_option("file", o.file, "algebra file")->required()->check(CLI::ExistingFile);
  classify->callback([&] { code = cmd_monadic_classify(o); });
  auto* congr = monadic->add_subcommand("congruences", "enumerate all congruences");
  congr->add_option("file", o.file, "algebra file")->required()->check(CLI::ExistingFile);
  congr->callback([&] { code = cmd_monadic_congruences(o); });
  auto* search = monadic->add_subcommand("search", "monadic Kleene algebras with a type 1 quantifier");
  search->add_option("--size", o.max_size, "maximum carrier size")->check(CLI::Range(2, 7));
  search->add_option("--seed", o.seed, "enumeration seed");
  search->add_option("--samples", o.samples, "maximum candidate orders (0 = all)");
  search->callback([&] { code = cmd_monadic_search(o); });

  auto* embed = app.add_subcommand("embed", "embed a monadic Kleene algebra into an IFG_1 algebra");
  embed->add_option("file", o.file, "algebra file")->required()->check(CLI::ExistingFile);
  embed->callback([&] { code = cmd_embed(o); });

  auto* self = app.add_subcommand("selftest", "run the worked examples");
  self->add_flag("--worked", o.worked, "print the worked set computations instead");
  self->callback([&] { code = cmd_selftest(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const ifg::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ifg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return code;
}
