#include "ifg/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ifg/error.hpp"

namespace ifg {

Space::Space(int base, int nvars) : base_(base), nvars_(nvars) {
  if (base < 0 || nvars < 0) throw InputError("negative universe or variable count");
  std::uint64_t s = 1;
  pow_.push_back(1);
  for (int i = 0; i < nvars; ++i) {
    s *= static_cast<std::uint64_t>(base);
    if (s > kMaxValuations)
      throw GuardError("|A|^N = " + std::to_string(base) + "^" + std::to_string(nvars) + " exceeds " +
                       std::to_string(kMaxValuations) + " valuations");
    pow_.push_back(static_cast<std::uint32_t>(s));
  }
  size_ = static_cast<std::uint32_t>(s);
  digits_.resize(static_cast<std::size_t>(size_) * static_cast<std::size_t>(nvars));
  for (Valuation a = 0; a < size_; ++a) {
    Valuation r = a;
    for (int i = 0; i < nvars; ++i) {
      digits_[a * static_cast<std::uint32_t>(nvars) + static_cast<std::uint32_t>(i)] =
          static_cast<std::uint8_t>(r % static_cast<Valuation>(base));
      r /= static_cast<Valuation>(base);
    }
  }
}

Valuation Space::class_rep(Valuation a, IndexSet J) const {
  for (int i = 0; i < nvars_; ++i)
    if (J >> i & 1u) a -= static_cast<Valuation>(digit(a, i)) * pow_[i];
  return a;
}

Valuation Space::encode(const std::vector<int>& d) const {
  if (static_cast<int>(d.size()) != nvars_) throw InputError("valuation has wrong length");
  Valuation a = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (d[i] < 0 || d[i] >= base_) throw InputError("valuation digit out of range");
    a += static_cast<Valuation>(d[i]) * pow_[i];
  }
  return a;
}

std::vector<int> Space::decode(Valuation a) const {
  std::vector<int> d(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) d[i] = digit(a, i);
  return d;
}

std::string Space::to_string(Valuation a) const {
  if (nvars_ == 0) return "()";
  std::string s;
  for (int i = 0; i < nvars_; ++i) {
    int d = digit(a, i);
    s += d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
  }
  return s;
}

Valuation Space::parse_valuation(std::string_view s) const {
  if (nvars_ == 0 && s == "()") return 0;
  if (static_cast<int>(s.size()) != nvars_) throw InputError("valuation '" + std::string(s) + "' has wrong length");
  std::vector<int> d;
  for (char c : s) {
    int v = c >= '0' && c <= '9' ? c - '0' : c >= 'a' && c <= 'z' ? c - 'a' + 10 : -1;
    if (v < 0 || v >= base_) throw InputError("valuation '" + std::string(s) + "' out of range");
    d.push_back(v);
  }
  return encode(d);
}

std::string Space::team_to_string(Team V) const {
  std::vector<std::string> members;
  for (Team t = V; t; t &= t - 1) members.push_back(to_string(static_cast<Valuation>(std::countr_zero(t))));
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  return out + "}";
}

Team Space::parse_team(std::string_view csv) const {
  if (csv.size() >= 2 && csv.front() == '{' && csv.back() == '}') csv = csv.substr(1, csv.size() - 2);
  Team V = 0;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto tok = csv.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) V |= singleton(parse_valuation(tok));
    else if (end != csv.size() || start != 0) throw InputError("empty valuation in team list");
    start = end + 1;
  }
  return V;
}

bool agree_outside(const Space& sp, Valuation a, Valuation b, IndexSet J) {
  for (int i = 0; i < sp.nvars(); ++i)
    if (!(J >> i & 1u) && sp.digit(a, i) != sp.digit(b, i)) return false;
  return true;
}

Team variant_const(const Space& sp, Team V, int n, int b) {
  Team out = 0;
  for (Team t = V; t; t &= t - 1) out |= singleton(sp.with_digit(static_cast<Valuation>(std::countr_zero(t)), n, b));
  return out;
}

Team variant_all(const Space& sp, Team V, int n) {
  Team out = 0;
  for (int b = 0; b < sp.base(); ++b) out |= variant_const(sp, V, n, b);
  return out;
}

Team variant(const Space& sp, Team V, int n, const TeamFunction& f) {
  if ((V & ~f.domain) != 0) throw InputError("function undefined on some member of the team");
  Team out = 0;
  for (Team t = V; t; t &= t - 1) {
    auto a = static_cast<Valuation>(std::countr_zero(t));
    out |= singleton(sp.with_digit(a, n, f(a)));
  }
  return out;
}

bool independent_of(const Space& sp, const TeamFunction& f, IndexSet J) {
  for (Team s = f.domain; s; s &= s - 1)
    for (Team t = s; t; t &= t - 1) {
      auto a = static_cast<Valuation>(std::countr_zero(s));
      auto b = static_cast<Valuation>(std::countr_zero(t));
      if (agree_outside(sp, a, b, J) && f(a) != f(b)) return false;
    }
  return true;
}

std::vector<Team> classes(const Space& sp, Team V, IndexSet J) {
  std::vector<Team> out;
  std::vector<Valuation> reps;
  for (Team t = V; t; t &= t - 1) {
    auto a = static_cast<Valuation>(std::countr_zero(t));
    Valuation r = sp.class_rep(a, J);
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end()) {
      reps.push_back(r);
      out.push_back(singleton(a));
    } else {
      out[static_cast<std::size_t>(it - reps.begin())] |= singleton(a);
    }
  }
  return out;
}

std::vector<TeamFunction> enumerate_independent_functions(const Space& sp, Team V, IndexSet J) {
  std::vector<TeamFunction> out;
  for_each_independent_function(sp, V, J, [&](const TeamFunction& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::pair<Team, Team>> enumerate_saturated_splits(const Space& sp, Team V, IndexSet J) {
  std::vector<std::pair<Team, Team>> out;
  for_each_saturated_split(sp, V, J, [&](Team a, Team b) {
    out.emplace_back(a, b);
    return true;
  });
  return out;
}

bool is_saturated(const Space& sp, Team U, IndexSet J) {
  for (Team t = U; t; t &= t - 1) {
    auto a = static_cast<Valuation>(std::countr_zero(t));
    for (Valuation b = 0; b < sp.size(); ++b)
      if (!contains(U, b) && agree_outside(sp, a, b, J)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure

Structure::Structure(int universe) : size_(universe) {
  if (universe < 0) throw InputError("negative universe size");
}

std::size_t Structure::tuple_index(int arity, const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != arity) throw InputError("arity mismatch");
  std::size_t idx = 0, mul = 1;
  for (int v : args) {
    if (v < 0 || v >= size_) throw InputError("element " + std::to_string(v) + " outside the universe");
    idx += static_cast<std::size_t>(v) * mul;
    mul *= static_cast<std::size_t>(size_);
  }
  return idx;
}

namespace {

std::size_t power(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

void Structure::add_constant(const std::string& name, int value) {
  if (value < 0 || value >= size_) throw InputError("constant " + name + " outside the universe");
  if (functions_.count(name) || relations_.count(name)) throw InputError("symbol " + name + " redeclared");
  constants_[name] = value;
}

void Structure::add_function(const std::string& name, int arity) {
  if (arity < 1 || arity > 4) throw InputError("function arity must be 1..4");
  if (constants_.count(name) || relations_.count(name)) throw InputError("symbol " + name + " redeclared");
  auto it = functions_.find(name);
  if (it != functions_.end()) {
    if (it->second.arity != arity) throw InputError("function " + name + " redeclared with another arity");
    return;
  }
  functions_[name] = Function{arity, std::vector<int>(power(size_, arity), -1)};
}

void Structure::set_function(const std::string& name, const std::vector<int>& args, int value) {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw InputError("unknown function " + name);
  if (value < 0 || value >= size_) throw InputError("function value outside the universe");
  it->second.table[tuple_index(it->second.arity, args)] = value;
}

void Structure::add_relation(const std::string& name, int arity) {
  if (arity < 0 || arity > 4) throw InputError("relation arity must be 0..4");
  if (constants_.count(name) || functions_.count(name)) throw InputError("symbol " + name + " redeclared");
  auto it = relations_.find(name);
  if (it != relations_.end()) {
    if (it->second.arity != arity) throw InputError("relation " + name + " redeclared with another arity");
    return;
  }
  relations_[name] = Relation{arity, std::vector<bool>(power(size_, arity), false)};
}

void Structure::add_tuple(const std::string& name, const std::vector<int>& args) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw InputError("unknown relation " + name);
  it->second.holds[tuple_index(it->second.arity, args)] = true;
}

int Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw InputError("unknown constant " + name);
  return it->second;
}

int Structure::apply(const std::string& name, const std::vector<int>& args) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw InputError("unknown function " + name);
  int v = it->second.table[tuple_index(it->second.arity, args)];
  if (v < 0) throw InputError("function " + name + " undefined at a tuple");
  return v;
}

bool Structure::holds(const std::string& name, const std::vector<int>& args) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw InputError("unknown relation " + name);
  return it->second.holds[tuple_index(it->second.arity, args)];
}

void Structure::validate() const {
  for (const auto& [name, f] : functions_)
    if (std::find(f.table.begin(), f.table.end(), -1) != f.table.end())
      throw InputError("function " + name + " is not total");
}

Signature Structure::signature() const {
  Signature sig;
  for (const auto& [n, v] : constants_) sig.symbols[n] = {Signature::Kind::Const, 0};
  for (const auto& [n, f] : functions_) sig.symbols[n] = {Signature::Kind::Func, f.arity};
  for (const auto& [n, r] : relations_) sig.symbols[n] = {Signature::Kind::Rel, r.arity};
  return sig;
}

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, int line) {
  std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }) || t.size() > 6)
    throw InputError("line " + std::to_string(line) + ": expected a number, got '" + t + "'");
  return std::stoi(t);
}

std::vector<int> parse_tuple(const std::string& s, int line) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_int(part, line));
  return out;
}

// "NAME/ARITY" -> (name, arity)
std::pair<std::string, int> parse_symbol(const std::string& s, int line) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected NAME/ARITY");
  return {trim(s.substr(0, slash)), parse_int(s.substr(slash + 1), line)};
}

}  // namespace

Structure Structure::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_universe = false;
  Structure S(0);
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (l.empty()) continue;
    auto sp = l.find(' ');
    std::string kw = l.substr(0, sp);
    std::string rest = sp == std::string::npos ? std::string() : trim(l.substr(sp + 1));
    if (kw == "universe") {
      if (have_universe) throw InputError("line " + std::to_string(line) + ": universe declared twice");
      S = Structure(parse_int(rest, line));
      have_universe = true;
      continue;
    }
    if (!have_universe) throw InputError("line " + std::to_string(line) + ": 'universe K' must come first");
    if (kw == "constant") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected NAME = k");
      S.add_constant(trim(rest.substr(0, eq)), parse_int(rest.substr(eq + 1), line));
    } else if (kw == "function") {
      auto colon = rest.find(':');
      auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw InputError("line " + std::to_string(line) + ": expected NAME/ARITY: args -> value");
      auto [name, arity] = parse_symbol(rest.substr(0, colon), line);
      S.add_function(name, arity);
      S.set_function(name, parse_tuple(rest.substr(colon + 1, arrow - colon - 1), line),
                     parse_int(rest.substr(arrow + 2), line));
    } else if (kw == "relation") {
      auto colon = rest.find(':');
      auto [name, arity] = parse_symbol(rest.substr(0, colon), line);
      S.add_relation(name, arity);
      if (colon != std::string::npos) {
        std::istringstream ts(rest.substr(colon + 1));
        std::string tok;
        while (ts >> tok) S.add_tuple(name, parse_tuple(tok, line));
      }
    } else {
      throw InputError("line " + std::to_string(line) + ": unknown directive '" + kw + "'");
    }
  }
  if (!have_universe) throw InputError("missing 'universe K'");
  S.validate();
  return S;
}

Structure Structure::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

std::vector<int> unrank(std::size_t idx, int arity, int base) {
  std::vector<int> out(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    out[i] = static_cast<int>(idx % static_cast<std::size_t>(base));
    idx /= static_cast<std::size_t>(base);
  }
  return out;
}

std::string csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string Structure::to_text() const {
  std::string out = "universe " + std::to_string(size_) + "\n";
  for (const auto& [n, v] : constants_) out += "constant " + n + " = " + std::to_string(v) + "\n";
  for (const auto& [n, f] : functions_)
    for (std::size_t i = 0; i < f.table.size(); ++i)
      out += "function " + n + "/" + std::to_string(f.arity) + ": " + csv(unrank(i, f.arity, size_)) + " -> " +
             std::to_string(f.table[i]) + "\n";
  for (const auto& [n, r] : relations_) {
    out += "relation " + n + "/" + std::to_string(r.arity) + ":";
    for (std::size_t i = 0; i < r.holds.size(); ++i)
      if (r.holds[i]) out += " " + csv(unrank(i, r.arity, size_));
    out += "\n";
  }
  return out;
}

Structure Structure::equality(int size) { return Structure(size); }

Structure Structure::with_constants(int size) {
  Structure S(size);
  for (int k = 0; k < size; ++k) S.add_constant(std::to_string(k), k);
  return S;
}

// ---------------------------------------------------------------------------
// Evaluation

int eval_term(const Structure& S, const Term& t, const Space& sp, Valuation a) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.var >= sp.nvars()) throw InputError("variable v" + std::to_string(t.var) + " out of range");
      return sp.digit(a, t.var);
    case Term::Kind::Const:
      return S.constant(t.name);
    case Term::Kind::Func: {
      std::vector<int> args;
      args.reserve(t.args.size());
      for (const auto& x : t.args) args.push_back(eval_term(S, x, sp, a));
      return S.apply(t.name, args);
    }
  }
  return 0;
}

bool eval_atomic(const Structure& S, const Atom& atom, const Space& sp, Valuation a) {
  if (atom.kind == Atom::Kind::Eq) return eval_term(S, atom.args[0], sp, a) == eval_term(S, atom.args[1], sp, a);
  std::vector<int> args;
  args.reserve(atom.args.size());
  for (const auto& x : atom.args) args.push_back(eval_term(S, x, sp, a));
  return S.holds(atom.name, args);
}

namespace {

void check_term(const Structure& S, const Term& t) {
  if (t.kind == Term::Kind::Const && !S.constants().count(t.name)) throw InputError("unknown constant " + t.name);
  if (t.kind == Term::Kind::Func) {
    auto it = S.functions().find(t.name);
    if (it == S.functions().end()) throw InputError("unknown function " + t.name);
    if (it->second.arity != static_cast<int>(t.args.size())) throw InputError("arity mismatch for " + t.name);
  }
  for (const auto& x : t.args) check_term(S, x);
}

}  // namespace

Team atom_truth(const Structure& S, const Atom& atom, const Space& sp) {
  if (S.size() != sp.base()) throw InputError("structure and valuation space disagree on |A|");
  for (const auto& t : atom.args) check_term(S, t);
  if (atom.kind == Atom::Kind::Rel) {
    auto it = S.relations().find(atom.name);
    if (it == S.relations().end()) throw InputError("unknown relation " + atom.name);
    if (it->second.arity != static_cast<int>(atom.args.size())) throw InputError("arity mismatch for " + atom.name);
  }
  Team out = 0;
  for (Valuation a = 0; a < sp.size(); ++a)
    if (eval_atomic(S, atom, sp, a)) out |= singleton(a);
  return out;
}

namespace {

void product_terms(const std::string& name, int arity, const std::vector<Term>& pool, std::vector<Term>& cur,
                   std::vector<Term>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(Term::apply(name, cur));
    return;
  }
  for (const auto& t : pool) {
    cur.push_back(t);
    product_terms(name, arity, pool, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Term> enumerate_terms(const Structure& S, int nvars, int depth) {
  std::vector<Term> terms;
  for (int i = 0; i < nvars; ++i) terms.push_back(Term::variable(i));
  for (const auto& [n, v] : S.constants()) terms.push_back(Term::constant(n));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Term> next = terms;
    for (const auto& [n, f] : S.functions()) {
      std::vector<Term> cur, made;
      product_terms(n, f.arity, terms, cur, made);
      for (auto& t : made)
        if (t.depth() == d) next.push_back(std::move(t));
    }
    terms = std::move(next);
  }
  return terms;
}

std::vector<Atom> enumerate_atoms(const Structure& S, int nvars, int depth) {
  auto terms = enumerate_terms(S, nvars, depth);
  std::vector<Atom> out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i; j < terms.size(); ++j) out.push_back(Atom::eq(terms[i], terms[j]));
  for (const auto& [n, r] : S.relations()) {
    std::vector<std::vector<Term>> tuples{{}};
    for (int k = 0; k < r.arity; ++k) {
      std::vector<std::vector<Term>> grown;
      for (const auto& tup : tuples)
        for (const auto& t : terms) {
          auto g = tup;
          g.push_back(t);
          grown.push_back(std::move(g));
        }
      tuples = std::move(grown);
    }
    for (auto& tup : tuples) out.push_back(Atom::rel(n, std::move(tup)));
  }
  return out;
}

}  // namespace ifg
