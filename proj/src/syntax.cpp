#include "ifg/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "ifg/error.hpp"

namespace ifg {

std::string index_set_to_string(IndexSet J) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (J >> i & 1u) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

int Term::depth() const {
  int d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return kind == Kind::Func ? d + 1 : 0;
}

namespace {

void collect_vars(const Term& t, IndexSet& out) {
  if (t.kind == Term::Kind::Var) out |= IndexSet{1} << t.var;
  for (const auto& a : t.args) collect_vars(a, out);
}

std::string join_terms(const std::vector<Term>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    out += to_string(ts[i]);
  }
  return out;
}

}  // namespace

IndexSet Atom::variables() const {
  IndexSet out = 0;
  for (const auto& a : args) collect_vars(a, out);
  return out;
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
      return "v" + std::to_string(t.var);
    case Term::Kind::Const:
      return t.name;
    case Term::Kind::Func:
      return t.name + "(" + join_terms(t.args) + ")";
  }
  return {};
}

std::string to_string(const Atom& a) {
  if (a.kind == Atom::Kind::Eq) return to_string(a.args[0]) + "=" + to_string(a.args[1]);
  return a.name + "(" + join_terms(a.args) + ")";
}

// ---------------------------------------------------------------------------
// Formula construction

void Formula::append_subtree(const Formula& f, const std::string& prefix) {
  int shift = static_cast<int>(nodes_.size());
  for (Node n : f.nodes_) {
    if (n.left >= 0) n.left += shift;
    if (n.right >= 0) n.right += shift;
    n.position = prefix + n.position;
    nodes_.push_back(std::move(n));
  }
}

Formula Formula::atomic(Atom a, int nvars) {
  if (nvars < 0) throw InputError("negative variable count");
  IndexSet vars = a.variables();
  if (nvars < 32 && (vars >> nvars) != 0) throw InputError("variable index out of range in " + to_string(a));
  Formula f;
  f.nvars_ = nvars;
  Node n;
  n.kind = NodeKind::Atomic;
  n.atom = std::move(a);
  f.nodes_.push_back(std::move(n));
  return f;
}

Formula Formula::negation(const Formula& g) {
  Formula f;
  f.nvars_ = g.nvars_;
  Node n;
  n.kind = NodeKind::Not;
  n.left = 1;
  f.nodes_.push_back(n);
  f.append_subtree(g, "0");
  return f;
}

Formula Formula::disjunction(IndexSet J, const Formula& l, const Formula& r) {
  if (l.nvars_ != r.nvars_) throw InputError("disjuncts have different variable counts");
  if (l.nvars_ < 32 && (J >> l.nvars_) != 0) throw InputError("slash index out of range");
  Formula f;
  f.nvars_ = l.nvars_;
  Node n;
  n.kind = NodeKind::Or;
  n.slash = J;
  n.left = 1;
  n.right = 1 + static_cast<int>(l.size());
  f.nodes_.push_back(n);
  f.append_subtree(l, "1");
  f.append_subtree(r, "2");
  return f;
}

Formula Formula::conjunction(IndexSet J, const Formula& l, const Formula& r) {
  return negation(disjunction(J, negation(l), negation(r)));
}

Formula Formula::exists(int v, IndexSet J, const Formula& g) {
  if (v < 0 || v >= g.nvars_) throw InputError("quantified variable out of range");
  if (g.nvars_ < 32 && (J >> g.nvars_) != 0) throw InputError("slash index out of range");
  Formula f;
  f.nvars_ = g.nvars_;
  Node n;
  n.kind = NodeKind::Exists;
  n.slash = J;
  n.var = v;
  n.left = 1;
  f.nodes_.push_back(n);
  f.append_subtree(g, "3");
  return f;
}

Formula Formula::forall(int v, IndexSet J, const Formula& g) { return negation(exists(v, J, negation(g))); }

int Formula::depth() const {
  std::vector<int> d(nodes_.size(), 1);
  for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
    const Node& n = nodes_[i];
    if (n.left >= 0) d[i] = std::max(d[i], d[n.left] + 1);
    if (n.right >= 0) d[i] = std::max(d[i], d[n.right] + 1);
  }
  return d.front();
}

int Formula::find(std::string_view position) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].position == position) return static_cast<int>(i);
  return -1;
}

Formula Formula::subformula(int i) const {
  // Subtrees are contiguous in pre-order.
  const std::string& prefix = nodes_[i].position;
  int end = i + 1;
  while (end < static_cast<int>(nodes_.size()) && nodes_[end].position.size() > prefix.size() &&
         nodes_[end].position.compare(0, prefix.size(), prefix) == 0)
    ++end;
  Formula f;
  f.nvars_ = nvars_;
  for (int k = i; k < end; ++k) {
    Node n = nodes_[k];
    if (n.left >= 0) n.left -= i;
    if (n.right >= 0) n.right -= i;
    n.position.erase(0, prefix.size());
    f.nodes_.push_back(std::move(n));
  }
  return f;
}

Formula Formula::with_nvars(int n) const {
  if (n < nvars_) throw InputError("cannot shrink the variable count");
  Formula f = *this;
  f.nvars_ = n;
  return f;
}

bool Formula::slash_free() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.slash == 0; });
}

bool positive_position(std::string_view position) {
  return std::count(position.begin(), position.end(), '0') % 2 == 0;
}

std::vector<SubformulaEntry> subformulas(const Formula& f) {
  std::vector<SubformulaEntry> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.node(static_cast<int>(i)).position;
    out.push_back({p, static_cast<int>(i), positive_position(p)});
  }
  return out;
}

std::vector<IndexSet> unbound_by_node(const Formula& f) {
  std::vector<IndexSet> J(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Node& n = f.node(static_cast<int>(i));
    IndexSet child = J[i];
    if (n.kind == NodeKind::Exists) child |= IndexSet{1} << n.var;
    if (n.left >= 0) J[n.left] = child;
    if (n.right >= 0) J[n.right] = child;
  }
  return J;
}

std::map<std::string, IndexSet> unbound_sets(const Formula& f) {
  auto J = unbound_by_node(f);
  std::map<std::string, IndexSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) out[f.node(static_cast<int>(i)).position] = J[i];
  return out;
}

bool is_sentence(const Formula& f) {
  if (f.nvars() == 0) return true;
  auto J = unbound_by_node(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Node& n = f.node(static_cast<int>(i));
    if (n.kind == NodeKind::Atomic && (n.atom.variables() & ~J[i]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_var_name(std::string_view s) {
  return s.size() >= 2 && s[0] == 'v' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  Parser(std::string_view text, int nvars, const Signature* sig, int depth_limit)
      : s_(text), nvars_(nvars), sig_(sig), limit_(depth_limit) {}

  Formula run() {
    Formula f = formula(1);
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    if (f.depth() > limit_) fail_at("formula depth limit " + std::to_string(limit_) + " exceeded", 0);
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int nvars_;
  const Signature* sig_;
  int limit_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string_view name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int var_index(std::string_view tok, std::size_t at) const {
    unsigned long v = 0;
    for (char c : tok.substr(1)) {
      v = v * 10 + static_cast<unsigned long>(c - '0');
      if (v > 1000000) break;
    }
    if (v >= static_cast<unsigned long>(nvars_))
      fail_at("variable index " + std::string(tok.substr(1)) + " >= N=" + std::to_string(nvars_), at);
    return static_cast<int>(v);
  }

  IndexSet index_list() {
    expect("{");
    IndexSet J = 0;
    skip();
    if (accept("}")) return J;
    do {
      skip();
      std::size_t start = pos_;
      unsigned long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (v > 1000000) v = 1000000;
        ++pos_;
      }
      if (start == pos_) fail("expected an index");
      if (v >= static_cast<unsigned long>(nvars_))
        fail_at("slash index " + std::to_string(v) + " >= N=" + std::to_string(nvars_), start);
      J |= IndexSet{1} << v;
    } while (accept(","));
    expect("}");
    return J;
  }

  void check_symbol(std::string_view n, Signature::Kind kind, int arity, std::size_t at) const {
    if (!sig_) return;
    auto it = sig_->symbols.find(std::string(n));
    if (it == sig_->symbols.end() || it->second.first != kind) fail_at("unknown symbol '" + std::string(n) + "'", at);
    if (it->second.second != arity) fail_at("arity mismatch for '" + std::string(n) + "'", at);
  }

  std::vector<Term> term_list() {
    std::vector<Term> out;
    expect("(");
    if (accept(")")) return out;
    do out.push_back(term());
    while (accept(","));
    expect(")");
    return out;
  }

  Term term() {
    skip();
    std::size_t at = pos_;
    std::string_view n = name();
    if (is_var_name(n)) return Term::variable(var_index(n, at));
    if (peek("(")) {
      auto args = term_list();
      check_symbol(n, Signature::Kind::Func, static_cast<int>(args.size()), at);
      return Term::apply(std::string(n), std::move(args));
    }
    check_symbol(n, Signature::Kind::Const, 0, at);
    return Term::constant(std::string(n));
  }

  Formula equation(Term lhs) {
    bool negated = false;
    if (accept("!=")) negated = true;
    else expect("=");
    Formula f = Formula::atomic(Atom::eq(std::move(lhs), term()), nvars_);
    return negated ? Formula::negation(f) : f;
  }

  Formula atom() {
    skip();
    std::size_t at = pos_;
    std::string_view n = name();
    if (is_var_name(n)) return equation(Term::variable(var_index(n, at)));
    if (peek("(")) {
      auto args = term_list();
      if (peek("=") || peek("!=")) {
        check_symbol(n, Signature::Kind::Func, static_cast<int>(args.size()), at);
        return equation(Term::apply(std::string(n), std::move(args)));
      }
      check_symbol(n, Signature::Kind::Rel, static_cast<int>(args.size()), at);
      return Formula::atomic(Atom::rel(std::string(n), std::move(args)), nvars_);
    }
    check_symbol(n, Signature::Kind::Const, 0, at);
    return equation(Term::constant(std::string(n)));
  }

  // "E"/"A" followed by a variable token starts a quantifier.
  bool quantifier_ahead() {
    skip();
    if (pos_ >= s_.size() || (s_[pos_] != 'E' && s_[pos_] != 'A')) return false;
    std::size_t p = pos_ + 1;
    if (p < s_.size() && is_name_char(s_[p])) return false;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    std::size_t start = p;
    while (p < s_.size() && is_name_char(s_[p])) ++p;
    return is_var_name(s_.substr(start, p - start));
  }

  Formula formula(int depth) {
    if (depth > 4 * limit_ + 8) fail("formula nesting too deep");
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("~")) return Formula::negation(formula(depth + 1));
    if (quantifier_ahead()) {
      bool universal = s_[pos_] == 'A';
      ++pos_;
      skip();
      std::size_t at = pos_;
      int v = var_index(name(), at);
      IndexSet J = 0;
      if (accept("/")) J = index_list();
      Formula body = formula(depth + 1);
      return universal ? Formula::forall(v, J, body) : Formula::exists(v, J, body);
    }
    if (accept("(")) {
      Formula l = formula(depth + 1);
      if (accept(")")) return l;
      bool disj;
      if (accept("\\/")) disj = true;
      else if (accept("/\\")) disj = false;
      else fail("expected ')' or a connective");
      IndexSet J = 0;
      if (peek("{")) J = index_list();
      Formula r = formula(depth + 1);
      expect(")");
      return disj ? Formula::disjunction(J, l, r) : Formula::conjunction(J, l, r);
    }
    return atom();
  }
};

}  // namespace

Formula parse(std::string_view text, int nvars, const Signature* sig, int depth_limit) {
  if (nvars < 0 || nvars > 31) throw InputError("variable count must be in 0..31");
  return Parser(text, nvars, sig, depth_limit).run();
}

namespace {

void print_node(const Formula& f, int i, std::string& out) {
  const Node& n = f.node(i);
  switch (n.kind) {
    case NodeKind::Atomic:
      out += to_string(n.atom);
      break;
    case NodeKind::Not:
      out += '~';
      print_node(f, n.left, out);
      break;
    case NodeKind::Or:
      out += '(';
      print_node(f, n.left, out);
      out += " \\/" + index_set_to_string(n.slash) + " ";
      print_node(f, n.right, out);
      out += ')';
      break;
    case NodeKind::Exists:
      out += "E v" + std::to_string(n.var) + "/" + index_set_to_string(n.slash) + " ";
      print_node(f, n.left, out);
      break;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_node(f, 0, out);
  return out;
}

std::string print_document(const Formula& f) { return "nvars " + std::to_string(f.nvars()) + "\n" + print(f) + "\n"; }

Formula parse_document(std::string_view text, const Signature* sig) {
  auto nl = text.find('\n');
  std::string_view head = text.substr(0, nl);
  if (head.substr(0, 6) != "nvars ") throw ParseError("missing 'nvars N' header", 0);
  int n = 0;
  for (char c : head.substr(6)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad variable count", 6);
    n = n * 10 + (c - '0');
  }
  if (nl == std::string_view::npos) throw ParseError("missing formula", head.size());
  try {
    return parse(text.substr(nl + 1), n, sig);
  } catch (const ParseError& e) {
    throw ParseError("in formula", e.offset() + nl + 1);
  }
}

}  // namespace ifg
