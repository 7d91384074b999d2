#include "ifg/finlat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ifg/error.hpp"

namespace ifg {

namespace {

constexpr std::size_t kParallelPoints = 512;

std::size_t at(int n, int x, int y) { return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + y; }

// Smallest index in [0, count) for which bad() is true, or count.
template <typename Bad>
std::size_t first_failure(std::size_t count, Bad&& bad) {
  if (count < kParallelPoints) {
    for (std::size_t i = 0; i < count; ++i)
      if (bad(i)) return i;
    return count;
  }
  std::size_t best = count;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < total; ++i)
    if (static_cast<std::size_t>(i) < best && bad(static_cast<std::size_t>(i))) best = static_cast<std::size_t>(i);
  return best;
}

// Checks ok(x, y, z) over all points of carrier^arity; the witness names the
// first failing point in lexicographic order.
template <typename Ok>
AxiomCheck pointwise(const FinAlgebra& A, const std::string& name, int arity, Ok&& ok) {
  const std::size_t n = static_cast<std::size_t>(A.n);
  std::size_t count = 1;
  for (int i = 0; i < arity; ++i) count *= n;
  auto decode = [&](std::size_t i) {
    std::array<int, 3> p{0, 0, 0};
    for (int k = arity - 1; k >= 0; --k) {
      p[static_cast<std::size_t>(k)] = static_cast<int>(i % n);
      i /= n;
    }
    return p;
  };
  std::size_t bad = first_failure(count, [&](std::size_t i) {
    auto p = decode(i);
    return !ok(p[0], p[1], p[2]);
  });
  AxiomCheck c{name, bad == count, ""};
  if (!c.holds) {
    auto p = decode(bad);
    static const char* names[] = {"x", "y", "z"};
    for (int k = 0; k < arity; ++k) {
      if (k) c.witness += ' ';
      c.witness += std::string(names[k]) + "=" + A.label(p[static_cast<std::size_t>(k)]);
    }
  }
  return c;
}

bool all_hold(const std::vector<AxiomCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const AxiomCheck& c) { return c.holds; });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  return v;
}

// Fills join and meet from an order relation; false if some pair lacks a
// least upper or greatest lower bound.
bool tables_from_order(int n, const std::vector<bool>& leq, std::vector<int>& join, std::vector<int>& meet) {
  join.assign(static_cast<std::size_t>(n) * n, -1);
  meet.assign(static_cast<std::size_t>(n) * n, -1);
  auto le = [&](int x, int y) { return leq[at(n, x, y)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lub = -1, glb = -1;
      for (int z = 0; z < n; ++z) {
        if (le(x, z) && le(y, z) && (lub < 0 || le(z, lub))) lub = z;
        if (le(z, x) && le(z, y) && (glb < 0 || le(glb, z))) glb = z;
      }
      if (lub < 0 || glb < 0) return false;
      for (int z = 0; z < n; ++z) {
        if (le(x, z) && le(y, z) && !le(lub, z)) return false;
        if (le(z, x) && le(z, y) && !le(z, glb)) return false;
      }
      join[at(n, x, y)] = lub;
      meet[at(n, x, y)] = glb;
    }
  return true;
}

void require_nabla(const FinAlgebra& A) {
  if (!A.has_nabla()) throw InputError("algebra has no quantifier table");
}

void require_neg(const FinAlgebra& A) {
  if (!A.has_neg()) throw InputError("algebra has no negation table");
}

}  // namespace

std::string FinAlgebra::label(int x) const {
  if (x >= 0 && static_cast<std::size_t>(x) < labels.size()) return labels[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

int FinAlgebra::find(const std::string& l) const {
  for (int x = 0; x < n; ++x)
    if (label(x) == l) return x;
  return -1;
}

FinAlgebra from_order(const std::vector<std::string>& labels, const std::vector<bool>& leq) {
  FinAlgebra A;
  A.n = static_cast<int>(labels.size());
  A.labels = labels;
  if (leq.size() != static_cast<std::size_t>(A.n) * A.n) throw InputError("order relation has the wrong size");
  if (A.n == 0) throw InputError("empty carrier");
  if (!tables_from_order(A.n, leq, A.join, A.meet)) throw InputError("order is not a lattice");
  A.bottom = A.meet[0];
  A.top = A.join[0];
  for (int x = 0; x < A.n; ++x) {
    A.bottom = A.wedge(A.bottom, x);
    A.top = A.vee(A.top, x);
  }
  return A;
}

FinAlgebra parse_fin_algebra(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      auto hash = raw.find('#');
      std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
      if (!l.empty()) lines.emplace_back(no, l);
    }
  }
  FinAlgebra A;
  A.n = -1;
  bool have_bottom = false, have_top = false;
  std::size_t i = 0;
  auto row = [&](int line, const std::vector<std::string>& ws) {
    if (static_cast<int>(ws.size()) != A.n)
      throw InputError("line " + std::to_string(line) + ": expected " + std::to_string(A.n) + " entries");
    std::vector<int> out;
    for (const auto& w : ws) out.push_back(to_int(w, line));
    return out;
  };
  // A one-line table given after the colon or on the following line.
  auto unary = [&](int line, const std::string& rest) {
    if (!trim(rest).empty()) return row(line, words(rest));
    if (i >= lines.size()) throw InputError("line " + std::to_string(line) + ": missing table row");
    auto [l2, s2] = lines[i++];
    return row(l2, words(s2));
  };
  while (i < lines.size()) {
    auto [line, l] = lines[i++];
    auto colon = l.find(':');
    std::string kw = colon == std::string::npos ? words(l)[0] : trim(l.substr(0, colon));
    std::string rest = trim(colon == std::string::npos ? l.substr(kw.size()) : l.substr(colon + 1));
    if (kw != "carrier" && A.n < 0) throw InputError("line " + std::to_string(line) + ": 'carrier n' must come first");
    if (kw == "carrier") {
      if (A.n >= 0) throw InputError("line " + std::to_string(line) + ": carrier declared twice");
      A.n = to_int(rest, line);
      if (A.n < 1) throw InputError("line " + std::to_string(line) + ": carrier must be positive");
    } else if (kw == "bottom") {
      A.bottom = to_int(rest, line);
      have_bottom = true;
    } else if (kw == "top") {
      A.top = to_int(rest, line);
      have_top = true;
    } else if (kw == "join" || kw == "meet") {
      if (colon == std::string::npos || !trim(rest).empty())
        throw InputError("line " + std::to_string(line) + ": expected '" + kw + ":' followed by rows");
      auto& table = kw == "join" ? A.join : A.meet;
      if (!table.empty()) throw InputError("line " + std::to_string(line) + ": " + kw + " table given twice");
      for (int r = 0; r < A.n; ++r) {
        if (i >= lines.size()) throw InputError("line " + std::to_string(line) + ": " + kw + " table is short");
        auto [l2, s2] = lines[i++];
        auto vals = row(l2, words(s2));
        table.insert(table.end(), vals.begin(), vals.end());
      }
    } else if (kw == "neg" || kw == "nabla") {
      if (colon == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected '" + kw + ":'");
      (kw == "neg" ? A.neg : A.nabla) = unary(line, rest);
    } else if (kw == "labels") {
      if (colon == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected 'labels:'");
      auto ws = words(rest);
      if (ws.empty() && i < lines.size()) ws = words(lines[i++].second);
      if (static_cast<int>(ws.size()) != A.n)
        throw InputError("line " + std::to_string(line) + ": expected " + std::to_string(A.n) + " labels");
      A.labels = ws;
    } else {
      throw InputError("line " + std::to_string(line) + ": unknown directive '" + kw + "'");
    }
  }
  if (A.n < 0) throw InputError("missing 'carrier n'");
  if (!have_bottom || !have_top) throw InputError("missing 'bottom' or 'top'");
  if (A.join.empty() || A.meet.empty()) throw InputError("missing join or meet table");
  validate(A);
  return A;
}

FinAlgebra load_fin_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fin_algebra(ss.str());
}

std::string render_fin_algebra(const FinAlgebra& A) {
  std::string out = "carrier " + std::to_string(A.n) + "\n";
  if (!A.labels.empty()) {
    out += "labels:";
    for (const auto& l : A.labels) out += " " + l;
    out += "\n";
  }
  out += "bottom " + std::to_string(A.bottom) + "\ntop " + std::to_string(A.top) + "\n";
  auto table = [&](const char* name, const std::vector<int>& t) {
    out += std::string(name) + ":\n";
    for (int x = 0; x < A.n; ++x) {
      for (int y = 0; y < A.n; ++y) out += (y ? " " : "") + std::to_string(t[at(A.n, x, y)]);
      out += "\n";
    }
  };
  auto line = [&](const char* name, const std::vector<int>& t) {
    if (t.empty()) return;
    out += std::string(name) + ":";
    for (int v : t) out += " " + std::to_string(v);
    out += "\n";
  };
  table("join", A.join);
  table("meet", A.meet);
  line("neg", A.neg);
  line("nabla", A.nabla);
  return out;
}

AxiomReport check_axioms(const FinAlgebra& A) {
  AxiomReport r;
  const auto& a = A;
  r.checks.push_back(pointwise(a, "idempotent", 1, [&](int x, int, int) {
    return a.vee(x, x) == x && a.wedge(x, x) == x;
  }));
  r.checks.push_back(pointwise(a, "commutative", 2, [&](int x, int y, int) {
    return a.vee(x, y) == a.vee(y, x) && a.wedge(x, y) == a.wedge(y, x);
  }));
  r.checks.push_back(pointwise(a, "associative", 3, [&](int x, int y, int z) {
    return a.vee(a.vee(x, y), z) == a.vee(x, a.vee(y, z)) && a.wedge(a.wedge(x, y), z) == a.wedge(x, a.wedge(y, z));
  }));
  r.checks.push_back(pointwise(a, "absorption", 2, [&](int x, int y, int) {
    return a.vee(x, a.wedge(x, y)) == x && a.wedge(x, a.vee(x, y)) == x;
  }));
  r.checks.push_back(pointwise(a, "bounds", 1, [&](int x, int, int) {
    return a.vee(x, a.bottom) == x && a.wedge(x, a.top) == x;
  }));
  r.lattice = all_hold(r.checks);
  if (!r.lattice) return r;
  r.checks.push_back(pointwise(a, "distributive", 3, [&](int x, int y, int z) {
    return a.vee(x, a.wedge(y, z)) == a.wedge(a.vee(x, y), a.vee(x, z));
  }));
  r.distributive = r.checks.back().holds;
  if (!A.has_neg() || !r.distributive) return r;
  r.checks.push_back(pointwise(a, "involution", 1, [&](int x, int, int) { return a.neg[a.neg[x]] == x; }));
  r.checks.push_back(pointwise(a, "de_morgan", 2, [&](int x, int y, int) {
    return a.neg[a.vee(x, y)] == a.wedge(a.neg[x], a.neg[y]);
  }));
  r.de_morgan = r.checks[r.checks.size() - 1].holds && r.checks[r.checks.size() - 2].holds;
  if (!r.de_morgan) return r;
  r.checks.push_back(pointwise(a, "kleene", 2, [&](int x, int y, int) {
    return a.leq(a.wedge(x, a.neg[x]), a.vee(y, a.neg[y]));
  }));
  r.kleene = r.checks.back().holds;
  r.checks.push_back(pointwise(a, "boolean", 1, [&](int x, int, int) { return a.wedge(x, a.neg[x]) == a.bottom; }));
  r.boolean = r.checks.back().holds;
  return r;
}

void validate(const FinAlgebra& A) {
  const std::size_t nn = static_cast<std::size_t>(A.n) * static_cast<std::size_t>(A.n);
  auto in_range = [&](int v) { return v >= 0 && v < A.n; };
  if (A.n < 1) throw InputError("empty carrier");
  if (!in_range(A.bottom) || !in_range(A.top)) throw InputError("bottom or top outside the carrier");
  if (A.join.size() != nn || A.meet.size() != nn) throw InputError("join and meet tables must be n x n");
  if (!std::all_of(A.join.begin(), A.join.end(), in_range) || !std::all_of(A.meet.begin(), A.meet.end(), in_range))
    throw InputError("lattice table entry outside the carrier");
  for (const auto* t : {&A.neg, &A.nabla}) {
    if (t->empty()) continue;
    if (t->size() != static_cast<std::size_t>(A.n)) throw InputError("unary table must have n entries");
    if (!std::all_of(t->begin(), t->end(), in_range)) throw InputError("unary table entry outside the carrier");
  }
  if (!A.labels.empty() && A.labels.size() != static_cast<std::size_t>(A.n)) throw InputError("label count differs from carrier");
  auto r = check_axioms(A);
  for (const auto& c : r.checks) {
    if (c.holds || c.name == "kleene" || c.name == "boolean") continue;
    throw InputError("axiom '" + c.name + "' fails at " + c.witness);
  }
}

std::vector<int> fixed_points(const FinAlgebra& A) {
  std::vector<int> out;
  if (!A.has_neg()) return out;
  for (int x = 0; x < A.n; ++x)
    if (A.neg[x] == x) out.push_back(x);
  return out;
}

std::vector<AxiomCheck> structural_facts(const FinAlgebra& A) {
  std::vector<AxiomCheck> out;
  const auto& a = A;
  out.push_back(pointwise(a, "type2_lemma", 3, [&](int p, int q, int x) {
    if (a.wedge(p, q) != a.bottom || a.vee(p, q) != a.top) return true;
    return (a.wedge(x, p) == a.bottom) == a.leq(x, q);
  }));
  if (!A.has_neg()) return out;
  out.push_back(pointwise(a, "de_morgan_dual", 2, [&](int x, int y, int) {
    return a.neg[a.wedge(x, y)] == a.vee(a.neg[x], a.neg[y]);
  }));
  if (!check_axioms(A).kleene) return out;
  auto fps = fixed_points(A);
  AxiomCheck unique{"center_unique", fps.size() <= 1, ""};
  if (!unique.holds) unique.witness = "fixed points " + a.label(fps[0]) + " and " + a.label(fps[1]);
  out.push_back(unique);
  if (fps.size() == 1) {
    int c = fps[0];
    out.push_back(pointwise(a, "type1_lemma", 1, [&](int x, int, int) {
      return a.wedge(x, c) != a.bottom || x == a.bottom;
    }));
  }
  return out;
}

FinAlgebra product(const FinAlgebra& A, const FinAlgebra& B) {
  FinAlgebra P;
  P.n = A.n * B.n;
  auto id = [&](int x, int y) { return x * B.n + y; };
  P.bottom = id(A.bottom, B.bottom);
  P.top = id(A.top, B.top);
  P.join.resize(static_cast<std::size_t>(P.n) * P.n);
  P.meet.resize(P.join.size());
  for (int x1 = 0; x1 < A.n; ++x1)
    for (int y1 = 0; y1 < B.n; ++y1) {
      P.labels.push_back("(" + A.label(x1) + "," + B.label(y1) + ")");
      for (int x2 = 0; x2 < A.n; ++x2)
        for (int y2 = 0; y2 < B.n; ++y2) {
          P.join[at(P.n, id(x1, y1), id(x2, y2))] = id(A.vee(x1, x2), B.vee(y1, y2));
          P.meet[at(P.n, id(x1, y1), id(x2, y2))] = id(A.wedge(x1, x2), B.wedge(y1, y2));
        }
    }
  if (A.has_neg() && B.has_neg())
    for (int x = 0; x < A.n; ++x)
      for (int y = 0; y < B.n; ++y) P.neg.push_back(id(A.neg[x], B.neg[y]));
  if (A.has_nabla() && B.has_nabla())
    for (int x = 0; x < A.n; ++x)
      for (int y = 0; y < B.n; ++y) P.nabla.push_back(id(A.nabla[x], B.nabla[y]));
  return P;
}

FinAlgebra subalgebra(const FinAlgebra& A, const std::vector<int>& elements) {
  std::vector<int> pos(static_cast<std::size_t>(A.n), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    int e = elements[i];
    if (e < 0 || e >= A.n || pos[static_cast<std::size_t>(e)] >= 0) throw InputError("bad subalgebra element list");
    pos[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  auto map = [&](int v) {
    int p = pos[static_cast<std::size_t>(v)];
    if (p < 0) throw InputError("subset is not closed: " + A.label(v) + " is missing");
    return p;
  };
  FinAlgebra S;
  S.n = static_cast<int>(elements.size());
  S.bottom = map(A.bottom);
  S.top = map(A.top);
  for (int x : elements) {
    S.labels.push_back(A.label(x));
    for (int y : elements) {
      S.join.push_back(map(A.vee(x, y)));
      S.meet.push_back(map(A.wedge(x, y)));
    }
    if (A.has_neg()) S.neg.push_back(map(A.neg[x]));
    if (A.has_nabla()) S.nabla.push_back(map(A.nabla[x]));
  }
  return S;
}

namespace {

std::vector<int> type0_table(const FinAlgebra& A) {
  std::vector<int> t;
  for (int x = 0; x < A.n; ++x) t.push_back(x == A.bottom ? A.bottom : A.top);
  return t;
}

std::vector<int> type1_table(const FinAlgebra& A, int c) {
  std::vector<int> t;
  for (int x = 0; x < A.n; ++x) t.push_back(x == A.bottom ? A.bottom : A.leq(x, c) ? c : A.top);
  return t;
}

std::vector<int> type2_table(const FinAlgebra& A, int a, int b) {
  std::vector<int> t;
  for (int x = 0; x < A.n; ++x)
    t.push_back(x == A.bottom ? A.bottom : A.leq(x, a) ? a : A.leq(x, b) ? b : A.top);
  return t;
}

bool complementary(const FinAlgebra& A, int a, int b) {
  return a != b && A.wedge(a, b) == A.bottom && A.vee(a, b) == A.top;
}

}  // namespace

FinAlgebra with_type0(FinAlgebra A) {
  A.nabla = type0_table(A);
  return A;
}

FinAlgebra with_type1(FinAlgebra A, int c) {
  require_neg(A);
  if (c < 0 || c >= A.n || A.neg[c] != c) throw InputError("type 1 quantifier needs a fixed point");
  A.nabla = type1_table(A, c);
  return A;
}

FinAlgebra with_type2(FinAlgebra A, int a, int b) {
  require_neg(A);
  if (a < 0 || b < 0 || a >= A.n || b >= A.n || A.neg[a] != a || A.neg[b] != b || !complementary(A, a, b))
    throw InputError("type 2 quantifier needs complementary fixed points");
  A.nabla = type2_table(A, a, b);
  return A;
}

namespace {

FinAlgebra chain(const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  std::vector<bool> leq(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = x <= y;
  return from_order(labels, leq);
}

FinAlgebra diamond(const std::string& a, const std::string& b) {
  // 0 < a, b < 1
  std::vector<bool> leq = {true, true, true, true, false, true, false, true,
                           false, false, true, true, false, false, false, true};
  FinAlgebra M = from_order({"0", a, b, "1"}, leq);
  M.neg = {3, 1, 2, 0};
  return M;
}

FinAlgebra make_named(const std::string& id) {
  if (id == "B") {
    auto B = chain({"0", "1"});
    B.neg = {1, 0};
    return B;
  }
  if (id == "K") {
    auto K = chain({"0", "a", "1"});
    K.neg = {2, 1, 0};
    return K;
  }
  if (id == "M") return diamond("a", "b");
  if (id == "K_nabla0") return with_type0(make_named("K"));
  if (id == "K_nabla1") return with_type1(make_named("K"), 1);
  if (id == "M_nabla0") return with_type0(make_named("M"));
  if (id == "M_nabla2") return with_type2(make_named("M"), 1, 2);
  if (id == "SixKxM") {
    auto P = product(make_named("K"), diamond("b", "c"));
    std::vector<int> els;
    for (const char* l : {"(0,0)", "(a,0)", "(a,b)", "(a,c)", "(a,1)", "(1,1)"}) els.push_back(P.find(l));
    auto S = subalgebra(P, els);
    return with_type1(S, S.find("(a,b)"));
  }
  if (id == "NineMxM") {
    auto P = product(make_named("M"), make_named("M"));
    std::vector<int> els;
    for (const char* l : {"(0,0)", "(a,0)", "(0,b)", "(a,a)", "(a,b)", "(b,b)", "(a,1)", "(1,b)", "(1,1)"})
      els.push_back(P.find(l));
    auto S = subalgebra(P, els);
    return with_type2(S, S.find("(a,a)"), S.find("(b,b)"));
  }
  if (id == "DoubleDiamond") {
    // 0 < ~a, ~b < c < a, b < 1
    std::vector<std::string> labels = {"0", "~b", "~a", "c", "a", "b", "1"};
    std::vector<int> rank = {0, 1, 1, 2, 3, 3, 4};
    std::vector<bool> leq(49);
    for (int x = 0; x < 7; ++x)
      for (int y = 0; y < 7; ++y)
        leq[at(7, x, y)] = x == y || (rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]);
    auto D = from_order(labels, leq);
    D.neg = {6, 5, 4, 3, 2, 1, 0};
    return D;
  }
  throw InputError("unknown algebra: " + id);
}

}  // namespace

const std::vector<std::string>& named_algebra_ids() {
  static const std::vector<std::string> ids = {"B",        "K",        "M",      "K_nabla0", "K_nabla1",     "M_nabla0",
                                               "M_nabla2", "SixKxM",   "NineMxM", "DoubleDiamond"};
  return ids;
}

FinAlgebra named_algebra(const std::string& id) {
  auto A = make_named(id);
  validate(A);
  return A;
}

bool QuantifierReport::quantifier() const {
  for (const char* q : {"Q1", "Q2", "Q3", "Q4", "Q5"})
    if (!holds(q)) return false;
  return true;
}

bool QuantifierReport::holds(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.holds;
  return false;
}

QuantifierReport check_quantifier(const FinAlgebra& A) {
  require_nabla(A);
  QuantifierReport r;
  const auto& a = A;
  const auto& q = A.nabla;
  r.checks.push_back({"Q1", q[A.bottom] == A.bottom, q[A.bottom] == A.bottom ? "" : "nabla 0 = " + A.label(q[A.bottom])});
  r.checks.push_back(pointwise(a, "Q2", 1, [&](int x, int, int) { return a.leq(x, q[x]); }));
  r.checks.push_back(pointwise(a, "Q3", 2, [&](int x, int y, int) { return q[a.vee(x, y)] == a.vee(q[x], q[y]); }));
  r.checks.push_back(pointwise(a, "Q4", 2, [&](int x, int y, int) {
    return q[a.wedge(x, q[y])] == a.wedge(q[x], q[y]);
  }));
  if (A.has_neg())
    r.checks.push_back(pointwise(a, "Q5", 1, [&](int x, int, int) { return q[a.neg[q[x]]] == a.neg[q[x]]; }));
  else
    r.checks.push_back({"Q5", true, "no negation"});
  r.checks.push_back(pointwise(a, "idempotent", 1, [&](int x, int, int) { return q[q[x]] == q[x]; }));
  std::vector<bool> in_range(static_cast<std::size_t>(A.n));
  for (int x = 0; x < A.n; ++x) in_range[static_cast<std::size_t>(q[x])] = true;
  auto R = [&](int x) { return static_cast<bool>(in_range[static_cast<std::size_t>(x)]); };
  AxiomCheck sub = pointwise(a, "range_subalgebra", 2, [&](int x, int y, int) {
    if (!R(x) || !R(y)) return true;
    return R(a.vee(x, y)) && R(a.wedge(x, y)) && (!a.has_neg() || R(a.neg[x]));
  });
  if (sub.holds && (!R(A.bottom) || !R(A.top))) sub = {"range_subalgebra", false, "bounds missing from range"};
  r.checks.push_back(sub);
  bool lattice_quantifier = r.holds("Q1") && r.holds("Q2") && r.holds("Q3") && r.holds("Q4");
  AxiomCheck eq{"q5_iff_range", !lattice_quantifier || r.holds("Q5") == sub.holds, ""};
  if (!eq.holds) eq.witness = "Q5 and range_subalgebra disagree";
  r.checks.push_back(eq);
  return r;
}

std::string to_string(QuantifierType t) {
  switch (t) {
    case QuantifierType::Type0: return "type0";
    case QuantifierType::Type1: return "type1";
    case QuantifierType::Type2: return "type2";
    default: return "other";
  }
}

QuantifierType classify_quantifier_type(const FinAlgebra& A) {
  require_nabla(A);
  if (!check_quantifier(A).quantifier()) return QuantifierType::Other;
  if (A.nabla == type0_table(A)) return QuantifierType::Type0;
  auto fps = fixed_points(A);
  for (int c : fps)
    if (A.nabla == type1_table(A, c)) return QuantifierType::Type1;
  for (int a : fps)
    for (int b : fps)
      if (a < b && complementary(A, a, b) && A.nabla == type2_table(A, a, b)) return QuantifierType::Type2;
  return QuantifierType::Other;
}

VarietyMarkers check_variety_markers(const FinAlgebra& A) {
  require_nabla(A);
  require_neg(A);
  const auto& a = A;
  const auto& q = A.nabla;
  const auto& ng = A.neg;
  auto kr = pointwise(a, "kleene_range", 2, [&](int x, int y, int) {
    return a.leq(a.wedge(q[x], ng[q[x]]), a.vee(q[y], ng[q[y]]));
  });
  auto br = pointwise(a, "boolean_range", 1, [&](int x, int, int) { return a.wedge(q[x], ng[q[x]]) == a.bottom; });
  auto fm = pointwise(a, "fix_marker", 1, [&](int x, int, int) {
    int m = q[a.wedge(x, ng[x])];
    return a.leq(m, ng[m]);
  });
  VarietyMarkers v{kr.holds, br.holds, fm.holds, ""};
  for (const auto* c : {&kr, &br, &fm}) {
    if (c->holds) continue;
    if (!v.witness.empty()) v.witness += "; ";
    v.witness += c->name + " fails at " + c->witness;
  }
  return v;
}

Irreducibility check_join_meet_irreducible(const FinAlgebra& A, int x) {
  if (x < 0 || x >= A.n) throw InputError("element outside the carrier");
  Irreducibility r;
  for (int y = 0; y < A.n; ++y)
    for (int z = 0; z < A.n; ++z) {
      if (A.vee(y, z) == x && y != x && z != x) r.join_irreducible = false;
      if (A.wedge(y, z) == x && y != x && z != x) r.meet_irreducible = false;
    }
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int root(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int x, int y) {
    x = root(x);
    y = root(y);
    if (x == y) return false;
    parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    return true;
  }
};

Congruence canonical(UnionFind& uf, int n) {
  Congruence out(static_cast<std::size_t>(n));
  std::map<int, int> ids;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = ids.emplace(uf.root(x), static_cast<int>(ids.size()));
    out[static_cast<std::size_t>(x)] = it->second;
  }
  return out;
}

// Smallest congruence containing the equivalence in uf.
Congruence close(const FinAlgebra& A, UnionFind uf) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < A.n; ++x)
      for (int y = x + 1; y < A.n; ++y) {
        if (uf.root(x) != uf.root(y)) continue;
        for (int z = 0; z < A.n; ++z) {
          changed |= uf.unite(A.vee(x, z), A.vee(y, z));
          changed |= uf.unite(A.wedge(x, z), A.wedge(y, z));
        }
        if (A.has_neg()) changed |= uf.unite(A.neg[x], A.neg[y]);
        if (A.has_nabla()) changed |= uf.unite(A.nabla[x], A.nabla[y]);
      }
  }
  return canonical(uf, A.n);
}

Congruence join_congruences(const FinAlgebra& A, const Congruence& s, const Congruence& t) {
  UnionFind uf(A.n);
  std::vector<int> first_s(static_cast<std::size_t>(A.n), -1), first_t(static_cast<std::size_t>(A.n), -1);
  for (int x = 0; x < A.n; ++x) {
    auto& fs = first_s[static_cast<std::size_t>(s[static_cast<std::size_t>(x)])];
    auto& ft = first_t[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])];
    if (fs < 0) fs = x;
    if (ft < 0) ft = x;
    uf.unite(x, fs);
    uf.unite(x, ft);
  }
  return close(A, uf);
}

int blocks(const Congruence& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

void guard_congruences(const FinAlgebra& A) {
  if (A.n > kMaxCongruenceCarrier)
    throw GuardError("congruence enumeration limited to " + std::to_string(kMaxCongruenceCarrier) + " elements");
}

}  // namespace

bool is_compatible(const FinAlgebra& A, const Congruence& theta) {
  if (theta.size() != static_cast<std::size_t>(A.n)) return false;
  auto same = [&](int x, int y) { return theta[static_cast<std::size_t>(x)] == theta[static_cast<std::size_t>(y)]; };
  for (int x = 0; x < A.n; ++x)
    for (int y = 0; y < A.n; ++y) {
      if (!same(x, y)) continue;
      if (A.has_neg() && !same(A.neg[x], A.neg[y])) return false;
      if (A.has_nabla() && !same(A.nabla[x], A.nabla[y])) return false;
      for (int z = 0; z < A.n; ++z)
        if (!same(A.vee(x, z), A.vee(y, z)) || !same(A.wedge(x, z), A.wedge(y, z))) return false;
    }
  return true;
}

Congruence principal_congruence(const FinAlgebra& A, int a, int b) {
  guard_congruences(A);
  if (a < 0 || b < 0 || a >= A.n || b >= A.n) throw InputError("element outside the carrier");
  UnionFind uf(A.n);
  uf.unite(a, b);
  return close(A, uf);
}

std::vector<Congruence> congruences(const FinAlgebra& A) {
  guard_congruences(A);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < A.n; ++a)
    for (int b = a + 1; b < A.n; ++b) pairs.emplace_back(a, b);
  std::vector<Congruence> principal(pairs.size());
  const long long np = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < np; ++i)
    principal[static_cast<std::size_t>(i)] = principal_congruence(A, pairs[static_cast<std::size_t>(i)].first,
                                                                  pairs[static_cast<std::size_t>(i)].second);
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

  Congruence identity(static_cast<std::size_t>(A.n));
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Congruence> seen{identity};
  std::vector<Congruence> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const auto& t : frontier)
      for (const auto& p : principal) {
        auto j = join_congruences(A, t, p);
        if (seen.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Congruence& s, const Congruence& t) {
    int bs = blocks(s), bt = blocks(t);
    return bs != bt ? bs > bt : s < t;
  });
  return out;
}

bool is_simple(const FinAlgebra& A) { return A.n >= 2 && congruences(A).size() == 2; }

bool is_subdirectly_irreducible(const FinAlgebra& A) {
  if (A.n < 2) return false;
  auto all = congruences(A);
  // Meet of the non-identity congruences: x ~ y iff related in every one.
  for (int x = 0; x < A.n; ++x)
    for (int y = x + 1; y < A.n; ++y) {
      bool everywhere = std::all_of(all.begin() + 1, all.end(), [&](const Congruence& c) {
        return c[static_cast<std::size_t>(x)] == c[static_cast<std::size_t>(y)];
      });
      if (everywhere) return true;
    }
  return false;
}

std::string render_congruence(const FinAlgebra& A, const Congruence& theta) {
  std::string out;
  for (int b = 0; b < blocks(theta); ++b) {
    out += "{";
    bool first = true;
    for (int x = 0; x < A.n; ++x) {
      if (theta[static_cast<std::size_t>(x)] != b) continue;
      out += (first ? "" : ",") + A.label(x);
      first = false;
    }
    out += "}";
  }
  return out;
}

Embedding embed_monadic_kleene(const FinAlgebra& A) {
  auto fail = [](const std::string& what) { throw InputError("embedding precondition failed: " + what); };
  if (!A.has_neg() || !A.has_nabla()) fail("negation and quantifier tables required");
  if (!check_axioms(A).kleene) fail("not a Kleene algebra");
  if (!check_quantifier(A).quantifier()) fail("nabla is not a quantifier");
  if (classify_quantifier_type(A) != QuantifierType::Type1) fail("nabla is not of type 1");
  if (!check_join_meet_irreducible(A, A.bottom).meet_irreducible) fail("0 is not meet irreducible");
  if (!check_join_meet_irreducible(A, A.top).join_irreducible) fail("1 is not join irreducible");
  const int c = fixed_points(A).front();

  std::vector<int> L;
  for (int x = 0; x < A.n; ++x)
    if (A.leq(c, x)) L.push_back(x);
  if (L.size() > 20) throw GuardError("interval [c,1] too large for prime filter enumeration");
  const std::size_t nl = L.size();
  const std::size_t ci = static_cast<std::size_t>(std::find(L.begin(), L.end(), c) - L.begin());
  Embedding E;
  std::vector<std::uint32_t> filter_masks;
  for (std::uint32_t F = 1; F < (std::uint32_t{1} << nl); ++F) {
    auto in = [&](std::size_t i) { return (F >> i) & 1u; };
    bool ok = !in(ci);
    for (std::size_t i = 0; ok && i < nl; ++i)
      for (std::size_t j = 0; ok && j < nl; ++j) {
        int x = L[i], y = L[j];
        std::size_t vj = static_cast<std::size_t>(std::find(L.begin(), L.end(), A.vee(x, y)) - L.begin());
        std::size_t mj = static_cast<std::size_t>(std::find(L.begin(), L.end(), A.wedge(x, y)) - L.begin());
        if (in(i) && A.leq(x, y) && !in(j)) ok = false;
        if (in(i) && in(j) && !in(mj)) ok = false;
        if (in(vj) && !in(i) && !in(j)) ok = false;
      }
    if (!ok) continue;
    std::vector<int> elems;
    for (std::size_t i = 0; i < nl; ++i)
      if (in(i)) elems.push_back(L[i]);
    if (elems == std::vector<int>{A.top}) E.top_filter = static_cast<int>(E.filters.size());
    E.filters.push_back(elems);
    filter_masks.push_back(F);
  }
  E.base = static_cast<int>(E.filters.size());
  if (E.top_filter < 0) throw std::logic_error("embedding: {1} is not a prime filter");
  if (static_cast<std::uint32_t>(E.base) > kMaxEnumeratedValuations) throw GuardError("too many prime filters");

  AlgebraContext ctx(E.base, 1);
  const std::uint32_t M = ctx.valuations();
  const Team full = TeamSet::full_team(M);
  // Cells of the partition of P(A): singletons stay with their own filter,
  // A itself joins the cell of {1}, everything else joins the first cell.
  std::vector<TeamSet> cell(static_cast<std::size_t>(E.base), TeamSet(M));
  for (Team U = 0; U <= full; ++U) {
    int k = std::popcount(U) == 1 ? std::countr_zero(U) : U == full ? E.top_filter : 0;
    cell[static_cast<std::size_t>(k)].insert(U);
  }
  auto G = [&](int x) {
    TeamSet out = TeamSet::only_empty(M);
    for (std::size_t f = 0; f < E.filters.size(); ++f)
      if (std::binary_search(E.filters[f].begin(), E.filters[f].end(), x)) out = out | cell[f];
    return out;
  };
  for (int x = 0; x < A.n; ++x) E.image.push_back(ctx.make(G(A.vee(x, c)), G(A.vee(A.neg[x], c))));
  for (const auto& X : E.image) E.image_flags.push_back(classify(X));

  auto bug = [&](const std::string& what) { throw std::logic_error("embedding verification failed: " + what); };
  const IndexSet J0 = 1;
  const auto& h = E.image;
  for (int x = 0; x < A.n; ++x)
    for (int y = x + 1; y < A.n; ++y)
      if (h[static_cast<std::size_t>(x)] == h[static_cast<std::size_t>(y)]) bug("h(" + A.label(x) + ") = h(" + A.label(y) + ")");
  if (h[static_cast<std::size_t>(A.bottom)] != ctx.zero()) bug("h(0) != 0");
  if (h[static_cast<std::size_t>(A.top)] != ctx.one()) bug("h(1) != 1");
  for (int x = 0; x < A.n; ++x) {
    const auto& hx = h[static_cast<std::size_t>(x)];
    if (ctx.neg(hx) != h[static_cast<std::size_t>(A.neg[x])]) bug("negation at " + A.label(x));
    if (ctx.cyl(0, J0, hx) != h[static_cast<std::size_t>(A.nabla[x])]) bug("quantifier at " + A.label(x));
    for (int y = 0; y < A.n; ++y) {
      const auto& hy = h[static_cast<std::size_t>(y)];
      if (ctx.sum(J0, hx, hy) != h[static_cast<std::size_t>(A.vee(x, y))]) bug("join at " + A.label(x) + "," + A.label(y));
      if (ctx.prod(J0, hx, hy) != h[static_cast<std::size_t>(A.wedge(x, y))]) bug("meet at " + A.label(x) + "," + A.label(y));
    }
  }
  return E;
}

namespace {

using Key = std::vector<int>;

Key key_of(int n, const std::vector<bool>& leq, const std::vector<int>& neg) {
  Key k{n};
  for (bool b : leq) k.push_back(b);
  k.insert(k.end(), neg.begin(), neg.end());
  return k;
}

// Relabels the middle elements to the lexicographically greatest presentation.
std::pair<Key, std::vector<int>> canonical_form(const FinAlgebra& A) {
  const int n = A.n;
  std::vector<int> mid;
  for (int x = 0; x < n; ++x)
    if (x != A.bottom && x != A.top) mid.push_back(x);
  std::vector<int> best_perm;
  Key best;
  std::vector<int> order = mid;
  std::sort(order.begin(), order.end());
  do {
    // new index of each old element
    std::vector<int> p(static_cast<std::size_t>(n));
    p[static_cast<std::size_t>(A.bottom)] = 0;
    p[static_cast<std::size_t>(A.top)] = n - 1;
    for (std::size_t i = 0; i < order.size(); ++i) p[static_cast<std::size_t>(order[i])] = static_cast<int>(i) + 1;
    std::vector<bool> leq(static_cast<std::size_t>(n) * n);
    std::vector<int> neg(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      neg[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])] = p[static_cast<std::size_t>(A.neg[x])];
      for (int y = 0; y < n; ++y) leq[at(n, p[static_cast<std::size_t>(x)], p[static_cast<std::size_t>(y)])] = A.leq(x, y);
    }
    Key k = key_of(n, leq, neg);
    if (best.empty() || k > best) {
      best = k;
      best_perm = p;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {best, best_perm};
}

FinAlgebra from_key(const Key& k) {
  const int n = k[0];
  std::vector<bool> leq(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < leq.size(); ++i) leq[i] = k[1 + i] != 0;
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back(x == 0 ? "0" : x == n - 1 ? "1" : "e" + std::to_string(x));
  FinAlgebra A = from_order(labels, leq);
  A.neg.assign(k.begin() + 1 + static_cast<std::ptrdiff_t>(leq.size()), k.end());
  for (int x = 0; x < n; ++x)
    if (A.neg[x] == x && x != 0) A.labels[static_cast<std::size_t>(x)] = "c";
  return with_type1(A, fixed_points(A).front());
}

}  // namespace

MonadicSearchResult search_monadic_kleene(const SearchOptions& opts) {
  if (opts.max_size > 7) throw GuardError("monadic Kleene search limited to 7 elements");
  MonadicSearchResult res;
  std::map<Key, FinAlgebra> found;
  std::mt19937_64 rng(opts.seed);
  for (int n = 2; n <= opts.max_size; ++n) {
    const int k = n - 2;
    std::vector<std::pair<int, int>> rel;  // ordered pairs of distinct middle elements
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j) rel.emplace_back(i + 1, j + 1);
    std::vector<std::uint32_t> masks(std::size_t{1} << rel.size());
    std::iota(masks.begin(), masks.end(), 0u);
    std::shuffle(masks.begin(), masks.end(), rng);
    for (std::uint32_t mask : masks) {
      if (opts.max_candidates && res.candidates >= opts.max_candidates) {
        res.exhausted = false;
        break;
      }
      ++res.candidates;
      std::vector<bool> leq(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x) {
        leq[at(n, x, x)] = true;
        leq[at(n, 0, x)] = true;
        leq[at(n, x, n - 1)] = true;
      }
      for (std::size_t r = 0; r < rel.size(); ++r)
        if ((mask >> r) & 1u) leq[at(n, rel[r].first, rel[r].second)] = true;
      bool order = true;
      for (int x = 0; order && x < n; ++x)
        for (int y = 0; order && y < n; ++y) {
          if (x != y && leq[at(n, x, y)] && leq[at(n, y, x)]) order = false;
          for (int z = 0; order && z < n; ++z)
            if (leq[at(n, x, y)] && leq[at(n, y, z)] && !leq[at(n, x, z)]) order = false;
        }
      if (!order) continue;
      FinAlgebra L;
      L.n = n;
      if (!tables_from_order(n, leq, L.join, L.meet)) continue;
      L.bottom = 0;
      L.top = n - 1;
      if (!check_axioms(L).distributive) continue;
      if (!check_join_meet_irreducible(L, 0).meet_irreducible || !check_join_meet_irreducible(L, n - 1).join_irreducible)
        continue;
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (perm[0] != n - 1) continue;
        L.neg = perm;
        auto ax = check_axioms(L);
        if (!ax.kleene) continue;
        auto fps = fixed_points(L);
        if (fps.size() != 1) continue;
        FinAlgebra Q = with_type1(L, fps[0]);
        if (!check_quantifier(Q).quantifier()) continue;
        Key key = canonical_form(Q).first;
        if (!found.count(key)) found.emplace(key, from_key(key));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  for (auto& [key, A] : found) res.found.push_back(A);
  return res;
}

namespace {

FinAlgebra reduct(const AlgebraContext& ctx, const std::vector<Element>& elements, bool monadic) {
  if (monadic && ctx.nvars() != 1) throw InputError("monadic reduct needs dimension 1");
  std::unordered_map<Element, int, ElementHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], static_cast<int>(i)).second) throw InputError("duplicate element in reduct");
  auto find = [&](const Element& X, const char* what) {
    auto it = index.find(X);
    if (it == index.end()) throw InputError(std::string("element set not closed under ") + what);
    return it->second;
  };
  FinAlgebra A;
  A.n = static_cast<int>(elements.size());
  A.bottom = find(ctx.zero(), "constants");
  A.top = find(ctx.one(), "constants");
  const IndexSet N = ctx.all_indices();
  const std::size_t n = elements.size();
  A.join.assign(n * n, -1);
  A.meet.assign(n * n, -1);
  bool closed = true;
  const long long total = static_cast<long long>(n * n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < total; ++i) {
    std::size_t x = static_cast<std::size_t>(i) / n, y = static_cast<std::size_t>(i) % n;
    auto s = index.find(ctx.sum(N, elements[x], elements[y]));
    auto p = index.find(ctx.prod(N, elements[x], elements[y]));
    if (s == index.end() || p == index.end()) {
#pragma omp atomic write
      closed = false;
      continue;
    }
    A.join[static_cast<std::size_t>(i)] = s->second;
    A.meet[static_cast<std::size_t>(i)] = p->second;
  }
  if (!closed) throw InputError("element set not closed under sum and product");
  for (const auto& X : elements) {
    A.neg.push_back(find(ctx.neg(X), "negation"));
    if (monadic) A.nabla.push_back(find(ctx.cyl(0, 1, X), "cylindrification"));
  }
  const Element omega = ctx.omega(), mho = ctx.mho();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& X = elements[i];
    A.labels.push_back(static_cast<int>(i) == A.bottom ? "0"
                       : static_cast<int>(i) == A.top ? "1"
                       : X == omega                   ? "Omega"
                       : X == mho                     ? "Mho"
                                                      : "#" + std::to_string(i));
  }
  return A;
}

}  // namespace

FinAlgebra de_morgan_reduct(const AlgebraContext& ctx, const std::vector<Element>& elements) {
  return reduct(ctx, elements, false);
}

FinAlgebra monadic_reduct(const AlgebraContext& ctx, const std::vector<Element>& elements) {
  return reduct(ctx, elements, true);
}

}  // namespace ifg
