#include "loops/mappings.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "loops/properties.hpp"

namespace loops {

// --- map definitions and evaluation -----------------------------------------

const BivariateMap& bivariate_map(const std::string& name) {
  static const std::map<std::string, BivariateMap> defs = [] {
    std::map<std::string, BivariateMap> m;
    m["f1"] = {"f1", parse_term("(y x) \\ x"), parse_term("x \\ (y \\ x)")};
    m["g1"] = {"g1", parse_term("(x y) \\ x"), parse_term("x \\ (x / y)")};
    m["f2"] = {"f2", parse_term("x / (x y)"), parse_term("(x / y) / x")};
    m["g2"] = {"g2", parse_term("x / (y x)"), parse_term("(y \\ x) / x")};
    return m;
  }();
  const auto it = defs.find(name);
  if (it == defs.end())
    throw LoopError(Err::BadInput, "unknown bivariate map: " + name);
  return it->second;
}

const VariadicMap& variadic_map(const std::string& name) {
  static const std::map<std::string, VariadicMap> defs = {
      {"alpha", {"alpha"}}, {"beta", {"beta"}}, {"phi", {"phi"}},
      {"psi", {"psi"}}};
  const auto it = defs.find(name);
  if (it == defs.end())
    throw LoopError(Err::BadInput, "unknown variadic map: " + name);
  return it->second;
}

int f1(const LoopTable& L, int x, int y) { return L.ldiv(L.mul(y, x), x); }
int g1(const LoopTable& L, int x, int y) { return L.ldiv(L.mul(x, y), x); }
int f2(const LoopTable& L, int x, int y) { return L.rdiv(x, L.mul(x, y)); }
int g2(const LoopTable& L, int x, int y) { return L.rdiv(x, L.mul(y, x)); }

namespace {

void require_element(const LoopTable& L, int v, const char* what) {
  if (v < 0 || v >= L.n())
    throw LoopError(Err::BadInput, std::string(what) + " out of range: " +
                                       std::to_string(v));
}

}  // namespace

int eval_map(const BivariateMap& m, const LoopTable& L, int x, int y) {
  require_element(L, x, "map argument x");
  require_element(L, y, "map argument y");
  return eval(*m.primary, L, Assignment{{'x', x}, {'y', y}});
}

int alpha(const LoopTable& L, const std::vector<int>& xs) {
  int acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = L.mul(acc, xs[i]);
  return acc;
}

int beta(const LoopTable& L, const std::vector<int>& xs) {
  int acc = xs.back();
  for (size_t i = xs.size() - 1; i-- > 0;) acc = L.ldiv(xs[i], acc);
  return acc;
}

int phi(const LoopTable& L, const std::vector<int>& xs) {
  int acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = L.mul(xs[i], acc);
  return acc;
}

int psi(const LoopTable& L, const std::vector<int>& xs) {
  int acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = L.rdiv(acc, xs[i]);
  return acc;
}

int eval_map(const VariadicMap& m, const LoopTable& L,
             const std::vector<int>& args) {
  if (args.empty())
    throw LoopError(Err::BadInput, "variadic map needs at least one argument");
  for (int v : args) require_element(L, v, "map argument");
  if (m.name == "alpha") return alpha(L, args);
  if (m.name == "beta") return beta(L, args);
  if (m.name == "phi") return phi(L, args);
  if (m.name == "psi") return psi(L, args);
  throw LoopError(Err::BadInput, "unknown variadic map: " + m.name);
}

// --- suite plumbing ----------------------------------------------------------

bool SuiteReport::all_ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ItemResult& i) { return i.ok(); });
}

const ItemResult* SuiteReport::find(const std::string& lemma_id,
                                    const std::string& item) const {
  for (const ItemResult& i : items)
    if (i.lemma_id == lemma_id && i.item == item) return &i;
  return nullptr;
}

std::map<std::string, std::pair<bool, bool>> as_claim_map(
    const SuiteReport& rep) {
  std::map<std::string, std::pair<bool, bool>> out;
  for (const ItemResult& i : rep.items)
    if (!i.skipped && !i.informational)
      out[i.lemma_id + " " + i.item] = {i.lhs, i.rhs};
  return out;
}

namespace {

constexpr const char* kNotMbl = "precondition: not a middle Bol loop";

struct Ctx {
  const LoopTable& L;
  bool mbl;
};

Ctx make_ctx(const LoopTable& L) { return Ctx{L, check(L, "MIDDLE_BOL").holds}; }

ItemResult blank(const std::string& lemma, const std::string& item,
                 const std::string& equation) {
  ItemResult r;
  r.lemma_id = lemma;
  r.item = item;
  r.equation = equation;
  return r;
}

ItemResult skipped_item(const std::string& lemma, const std::string& item,
                        const std::string& equation,
                        const std::string& reason) {
  ItemResult r = blank(lemma, item, equation);
  r.skipped = true;
  r.skip_reason = reason;
  return r;
}

std::string show_assignment(const Assignment& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, val] : a) {
    if (!first) os << ", ";
    first = false;
    os << v << "=" << val;
  }
  return os.str();
}

std::string witness_from(const CheckReport& r) {
  if (r.code == CheckCode::InvUndefined) return r.detail;
  if (r.counterexample) return show_assignment(*r.counterexample);
  return r.detail;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << sep;
    os << parts[i];
  }
  return os.str();
}

// Enumerates all |L|^|vars| assignments (vars[0] most significant) and
// returns the first one rejected by `ok`.
std::optional<Assignment> first_violation(
    const LoopTable& L, const std::vector<char>& vars,
    const std::function<bool(const Assignment&)>& ok) {
  const int n = L.n();
  std::vector<int> idx(vars.size(), 0);
  Assignment a;
  for (char v : vars) a[v] = 0;
  while (true) {
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = idx[i];
    if (!ok(a)) return a;
    size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (vars.empty()) return std::nullopt;
  }
}

void collect_term_vars(const TermPtr& t, std::vector<char>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var &&
      std::find(out.begin(), out.end(), t->var) == out.end())
    out.push_back(t->var);
  collect_term_vars(t->a, out);
  collect_term_vars(t->b, out);
}

// One or more identities that must all hold (a single mathematical claim
// split into parts, e.g. a chained value equation).
ItemResult identity_item(const Ctx& c, const std::string& lemma,
                         const std::string& item, const std::string& display,
                         const std::vector<std::string>& ids) {
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  r.lhs = r.rhs = r.agree = true;
  for (const std::string& s : ids) {
    const CheckReport rep = check_identity(parse_identity(s), c.L);
    if (!rep.holds) {
      r.lhs = r.rhs = r.agree = false;
      r.witness = s + "  fails at  " + witness_from(rep);
      break;
    }
  }
  return r;
}

ItemResult identity_item(const Ctx& c, const std::string& lemma,
                         const std::string& item, const std::string& id) {
  return identity_item(c, lemma, item, id, std::vector<std::string>{id});
}

// Pointwise equivalence: at every assignment the component equations are
// simultaneously true or simultaneously false.
ItemResult pointwise_item(const Ctx& c, const std::string& lemma,
                          const std::string& item,
                          const std::vector<std::string>& eqs) {
  const std::string display = join(eqs, "  <->  ");
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  std::vector<Identity> ids;
  std::vector<char> vars;
  for (const std::string& s : eqs) {
    ids.push_back(parse_identity(s));
    for (char v : ids.back().vars)
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
  }
  std::vector<char> truths;
  try {
    const auto bad = first_violation(c.L, vars, [&](const Assignment& a) {
      truths.clear();
      for (const Identity& id : ids)
        truths.push_back(eval(*id.lhs, c.L, a) == eval(*id.rhs, c.L, a));
      return std::all_of(truths.begin(), truths.end(),
                         [&](char t) { return t == truths.front(); });
    });
    r.lhs = r.rhs = r.agree = !bad.has_value();
    if (bad) {
      std::ostringstream os;
      os << "at " << show_assignment(*bad) << ": ";
      for (size_t i = 0; i < eqs.size(); ++i)
        os << (i ? ", " : "") << "[" << eqs[i] << "]="
           << (truths[i] ? "true" : "false");
      r.witness = os.str();
    }
  } catch (const EvalError& e) {
    r.lhs = r.rhs = r.agree = false;
    r.witness = e.what();
  }
  return r;
}

// Chained equality of expressions: all terms take the same value at every
// assignment.
ItemResult equal_terms_item(const Ctx& c, const std::string& lemma,
                            const std::string& item,
                            const std::vector<std::string>& exprs) {
  const std::string display = join(exprs, " = ");
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  std::vector<TermPtr> terms;
  std::vector<char> vars;
  for (const std::string& s : exprs) {
    terms.push_back(parse_term(s));
    collect_term_vars(terms.back(), vars);
  }
  std::vector<int> vals;
  try {
    const auto bad = first_violation(c.L, vars, [&](const Assignment& a) {
      vals.clear();
      for (const TermPtr& t : terms) vals.push_back(eval(*t, c.L, a));
      return std::all_of(vals.begin(), vals.end(),
                         [&](int v) { return v == vals.front(); });
    });
    r.lhs = r.rhs = r.agree = !bad.has_value();
    if (bad) {
      std::ostringstream os;
      os << "at " << show_assignment(*bad) << ": values";
      for (int v : vals) os << " " << v;
      r.witness = os.str();
    }
  } catch (const EvalError& e) {
    r.lhs = r.rhs = r.agree = false;
    r.witness = e.what();
  }
  return r;
}

// Resolves a cluster component: a catalog property name or an identity.
std::pair<bool, std::string> truth_of(const Ctx& c, const std::string& s) {
  if (const auto p = find_property(s)) {
    const CheckReport rep = check(c.L, *p);
    return {rep.holds, rep.holds ? "" : witness_from(rep)};
  }
  const CheckReport rep = check_identity(parse_identity(s), c.L);
  return {rep.holds, rep.holds ? "" : witness_from(rep)};
}

struct NamedBool {
  std::string label;
  bool value = false;
  std::string detail;
};

ItemResult cluster_from(const Ctx& /*c*/, const std::string& lemma,
                        const std::string& item, const std::string& display,
                        const std::vector<NamedBool>& parts) {
  ItemResult r = blank(lemma, item, display);
  r.lhs = parts.front().value;
  r.rhs = parts.back().value;
  r.agree = std::all_of(parts.begin(), parts.end(), [&](const NamedBool& p) {
    return p.value == parts.front().value;
  });
  if (!r.agree) {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << ", ";
      os << "[" << parts[i].label << "]=" << (parts[i].value ? "true" : "false");
      r.rhs = parts[i].value != parts.front().value ? parts[i].value : r.rhs;
    }
    for (const NamedBool& p : parts)
      if (!p.value && !p.detail.empty()) {
        os << "; first failure of [" << p.label << "] at " << p.detail;
        break;
      }
    r.witness = os.str();
  }
  return r;
}

// All member statements (property names or identities) must have the same
// truth value.
ItemResult cluster_item(const Ctx& c, const std::string& lemma,
                        const std::string& item,
                        const std::vector<std::string>& members) {
  const std::string display = join(members, "  <=>  ");
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  std::vector<NamedBool> parts;
  for (const std::string& s : members) {
    const auto [val, detail] = truth_of(c, s);
    parts.push_back({s, val, detail});
  }
  return cluster_from(c, lemma, item, display, parts);
}

// Property <=> identity biconditional.
ItemResult prop_bicond_item(const Ctx& c, const std::string& lemma,
                            const std::string& item, const std::string& prop,
                            const std::string& identity) {
  const std::string display = prop + "  <=>  " + identity;
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  const CheckReport direct = check(c.L, prop);
  const CheckReport eq = check_identity(parse_identity(identity), c.L);
  r.lhs = direct.holds;
  r.rhs = eq.holds;
  r.agree = r.lhs == r.rhs;
  if (!r.agree)
    r.witness = "direct " + prop + "=" + (r.lhs ? "true" : "false") +
                ", equation=" + (r.rhs ? "true" : "false") + " (" +
                witness_from(r.lhs ? eq : direct) + ")";
  return r;
}

// Identity <=> identity biconditional (whole-loop truth values).
ItemResult ident_bicond_item(const Ctx& c, const std::string& lemma,
                             const std::string& item, const std::string& a,
                             const std::string& b, bool informational = false) {
  const std::string display = "[" + a + "]  <=>  [" + b + "]";
  if (!c.mbl) {
    ItemResult r = skipped_item(lemma, item, display, kNotMbl);
    r.informational = informational;
    return r;
  }
  ItemResult r = blank(lemma, item, display);
  r.informational = informational;
  const CheckReport ra = check_identity(parse_identity(a), c.L);
  const CheckReport rb = check_identity(parse_identity(b), c.L);
  r.lhs = ra.holds;
  r.rhs = rb.holds;
  r.agree = r.lhs == r.rhs;
  if (!r.agree)
    r.witness = "lhs=" + std::string(r.lhs ? "true" : "false") + " (" +
                (r.lhs ? "holds" : witness_from(ra)) + "), rhs=" +
                (r.rhs ? "true" : "false") + " (" +
                (r.rhs ? "holds" : witness_from(rb)) + ")";
  return r;
}

// Procedural forall over one/two/three variables; used where the claim
// involves variadic maps or powers rather than a fixed term.
template <class F1v>
std::optional<int> find1(const LoopTable& L, F1v&& holds) {
  for (int x = 0; x < L.n(); ++x)
    if (!holds(x)) return x;
  return std::nullopt;
}

template <class F2v>
std::optional<std::pair<int, int>> find2(const LoopTable& L, F2v&& holds) {
  for (int x = 0; x < L.n(); ++x)
    for (int y = 0; y < L.n(); ++y)
      if (!holds(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

template <class F3v>
std::optional<std::array<int, 3>> find3(const LoopTable& L, F3v&& holds) {
  for (int x = 0; x < L.n(); ++x)
    for (int y = 0; y < L.n(); ++y)
      for (int z = 0; z < L.n(); ++z)
        if (!holds(x, y, z)) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

template <class F2v>
ItemResult forall2_item(const Ctx& c, const std::string& lemma,
                        const std::string& item, const std::string& display,
                        F2v&& holds) {
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  const auto bad = find2(c.L, holds);
  r.lhs = r.rhs = r.agree = !bad.has_value();
  if (bad)
    r.witness = "x=" + std::to_string(bad->first) +
                ", y=" + std::to_string(bad->second);
  return r;
}

// bool <=> procedural-forall biconditional.
template <class F2v>
ItemResult bool_vs_forall2(const Ctx& c, const std::string& lemma,
                           const std::string& item, const std::string& display,
                           bool direct, const std::string& direct_label,
                           F2v&& holds) {
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  const auto bad = find2(c.L, holds);
  r.lhs = direct;
  r.rhs = !bad.has_value();
  r.agree = r.lhs == r.rhs;
  if (!r.agree) {
    r.witness = direct_label + "=" + (r.lhs ? "true" : "false") +
                ", equation=" + (r.rhs ? "true" : "false");
    if (bad)
      r.witness += " (equation fails at x=" + std::to_string(bad->first) +
                   ", y=" + std::to_string(bad->second) + ")";
  }
  return r;
}

template <class F3v>
ItemResult bool_vs_forall3(const Ctx& c, const std::string& lemma,
                           const std::string& item, const std::string& display,
                           bool direct, const std::string& direct_label,
                           F3v&& holds) {
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  ItemResult r = blank(lemma, item, display);
  const auto bad = find3(c.L, holds);
  r.lhs = direct;
  r.rhs = !bad.has_value();
  r.agree = r.lhs == r.rhs;
  if (!r.agree) {
    r.witness = direct_label + "=" + (r.lhs ? "true" : "false") +
                ", equation=" + (r.rhs ? "true" : "false");
    if (bad)
      r.witness += " (equation fails at x=" + std::to_string((*bad)[0]) +
                   ", y=" + std::to_string((*bad)[1]) +
                   ", z=" + std::to_string((*bad)[2]) + ")";
  }
  return r;
}

std::vector<int> repeat_around(int lead, int x, int copies, bool lead_first) {
  std::vector<int> xs;
  if (lead_first) xs.push_back(lead);
  xs.insert(xs.end(), copies, x);
  if (!lead_first) xs.push_back(lead);
  return xs;
}

}  // namespace

// --- value tables ------------------------------------------------------------

SuiteReport check_f_lemma_table(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"map-value-tables", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };

  // f1: two-form agreement, then the eight listed values.
  add(identity_item(c, "LF1", "1", "(y x) \\ x = x \\ (y \\ x)"));
  add(identity_item(c, "LF1", "1(a)", "(e x) \\ x = e"));
  add(identity_item(c, "LF1", "1(b)", "(e x') \\ x' = e"));
  add(identity_item(c, "LF1", "1(c)", "(e e) \\ e = e"));
  add(identity_item(c, "LF1", "1(d)", "(x e) \\ e = x'"));
  add(identity_item(c, "LF1", "1(e)", "(x x) \\ x = x'"));
  add(identity_item(c, "LF1", "1(f)", "(x x') \\ x' = x'"));
  add(identity_item(c, "LF1", "1(g)", "(x' e) \\ e = x"));
  add(identity_item(c, "LF1", "1(h)", "(x' x) \\ x = x"));

  // g1 mirror.
  add(identity_item(c, "LF1", "2", "(x y) \\ x = x \\ (x / y)"));
  add(identity_item(c, "LF1", "2(a)", "(x e) \\ x = e"));
  add(identity_item(c, "LF1", "2(b)", "(x' e) \\ x' = e"));
  add(identity_item(c, "LF1", "2(c)", "(e e) \\ e = e"));
  add(identity_item(c, "LF1", "2(d)", "(e x) \\ e = x'"));
  add(identity_item(c, "LF1", "2(e)", "(x x) \\ x = x'"));
  add(identity_item(c, "LF1", "2(f)", "(x' x) \\ x' = x'"));
  add(identity_item(c, "LF1", "2(g)", "(e x') \\ e = x"));
  add(identity_item(c, "LF1", "2(h)", "(x x') \\ x = x"));

  // f2: two-form agreement and value triples.
  add(identity_item(c, "LF2", "1", "x / (x y) = (x / y) / x"));
  add(identity_item(c, "LF2", "1(a)",
                    "x / (x x) = e / (e x) = x' / (x' x) = x'",
                    {"x / (x x) = x'", "e / (e x) = x'", "x' / (x' x) = x'"}));
  add(identity_item(c, "LF2", "1(b)", "x / (x x') = e / (e x') = x",
                    {"x / (x x') = x", "e / (e x') = x"}));
  add(identity_item(c, "LF2", "1(c)",
                    "x / (x e) = x' / (x' e) = e / (e e) = e",
                    {"x / (x e) = e", "x' / (x' e) = e", "e / (e e) = e"}));

  // g2 mirror.
  add(identity_item(c, "LF2", "2", "x / (y x) = (y \\ x) / x"));
  add(identity_item(c, "LF2", "2(a)",
                    "x / (x x) = e / (x e) = x' / (x x') = x'",
                    {"x / (x x) = x'", "e / (x e) = x'", "x' / (x x') = x'"}));
  add(identity_item(c, "LF2", "2(b)", "x / (x' x) = e / (x' e) = x",
                    {"x / (x' x) = x", "e / (x' e) = x"}));
  add(identity_item(c, "LF2", "2(c)",
                    "x / (e x) = x' / (e x') = e / (e e) = e",
                    {"x / (e x) = e", "x' / (e x') = e", "e / (e e) = e"}));
  return rep;
}

// --- commutativity criteria --------------------------------------------------

SuiteReport check_commutativity_criteria(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"commutativity-criteria", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };

  const std::string f1_eq_g1 = "(y x) \\ x = (x y) \\ x";
  add(cluster_item(c, "LF1", "3", {f1_eq_g1, "COMMUTATIVE"}));
  add(cluster_item(c, "LF1", "4",
                   {f1_eq_g1, "y \\ x = x / y", "x \\ y = y / x"}));
  add(cluster_item(c, "LF1", "5",
                   {f1_eq_g1, "(y x) \\ x = x \\ (x / y)",
                    "(x y) \\ x = x \\ (y \\ x)"}));
  add(pointwise_item(c, "LF1", "6", {"y (x / y) = x", "(y \\ x) y = x"}));

  add(cluster_item(c, "LF2", "3",
                   {"x / (x y) = x / (y x)", "COMMUTATIVE", "y \\ x = x / y",
                    "x \\ y = y / x", "x / (x y) = (y \\ x) / x",
                    "x / (y x) = (x / y) / x"}));
  return rep;
}

// --- alpha/beta theorem --------------------------------------------------------

SuiteReport check_alpha_beta_theorem(const LoopTable& L, int n_max) {
  if (n_max <= 0) n_max = std::min(2 * L.n(), 8);
  n_max = std::max(n_max, 2);
  const Ctx c = make_ctx(L);
  SuiteReport rep{"alpha-beta", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
  const bool pa = c.mbl && is_power_associative(L);

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    // f1(x, alpha_k(y,x,..,x)) = beta_k(x,..,x, f1(x,y))
    add(forall2_item(
        c, "T-AB", "1" + nk,
        "f1(x, alpha_" + std::to_string(k) + "(y, x..x)) = beta_" +
            std::to_string(k) + "(x..x, f1(x, y))",
        [&](int x, int y) {
          return f1(L, x, alpha(L, repeat_around(y, x, k - 1, true))) ==
                 beta(L, repeat_around(f1(L, x, y), x, k - 1, false));
        }));
    // f1(x, alpha_{k+1}(x,y,x,..,x)) = beta_{k+1}(x,..,x, g1(x,y))
    add(forall2_item(
        c, "T-AB", "2" + nk,
        "f1(x, alpha_" + std::to_string(k + 1) + "(x, y, x..x)) = beta_" +
            std::to_string(k + 1) + "(x..x, g1(x, y))",
        [&](int x, int y) {
          std::vector<int> as{x, y};
          as.insert(as.end(), k - 1, x);
          return f1(L, x, alpha(L, as)) ==
                 beta(L, repeat_around(g1(L, x, y), x, k, false));
        }));
  }

  add(prop_bicond_item(c, "T-AB", "3", "RAP",
                       "(y x) \\ x = x ((y (x x)) \\ x)"));

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    const std::string prap = "PRAP(" + std::to_string(k) + ")";
    const std::string display =
        prap + "  <=>  (y x^" + std::to_string(k) + ") beta_" +
        std::to_string(k) + "(x..x, f1(x, y)) = x";
    if (!c.mbl) {
      add(skipped_item("T-AB", "4" + nk, display, kNotMbl));
      continue;
    }
    const CheckReport direct = check(L, prap);
    if (direct.code == CheckCode::PreconditionFailed) {
      add(skipped_item("T-AB", "4" + nk, display,
                       "direct check unavailable: not power associative"));
      continue;
    }
    add(bool_vs_forall2(c, "T-AB", "4" + nk, display, direct.holds, prap,
                        [&](int x, int y) {
                          return L.mul(L.mul(y, L.right_power(x, k)),
                                       beta(L, repeat_around(f1(L, x, y), x,
                                                             k - 1, false))) ==
                                 x;
                        }));
  }

  {
    const std::string display =
        "[RAP, power-assoc.]  x x = e  <=>  (y x) \\ x = x (y \\ x)";
    if (!c.mbl) {
      add(skipped_item("T-AB", "5", display, kNotMbl));
    } else if (!check(L, "RAP").holds) {
      add(skipped_item("T-AB", "5", display, "hypothesis RAP fails"));
    } else if (!pa) {
      add(skipped_item("T-AB", "5", display,
                       "hypothesis fails: not power associative"));
    } else {
      const bool exp2 = !find1(L, [&](int x) { return L.mul(x, x) == 0; });
      add(bool_vs_forall2(c, "T-AB", "5", display, exp2, "x x = e",
                          [&](int x, int y) {
                            return f1(L, x, y) == L.mul(x, L.ldiv(y, x));
                          }));
    }
  }

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    const std::string prap = "PRAP(" + std::to_string(k) + ")";
    const std::string display = "[" + prap + "]  x^" + std::to_string(k) +
                                " = e  <=>  y beta_" + std::to_string(k) +
                                "(x..x, f1(x, y)) = x";
    if (!c.mbl) {
      add(skipped_item("T-AB", "6" + nk, display, kNotMbl));
      continue;
    }
    const CheckReport hyp = check(L, prap);
    if (hyp.code == CheckCode::PreconditionFailed) {
      add(skipped_item("T-AB", "6" + nk, display,
                       "hypothesis unavailable: not power associative"));
      continue;
    }
    if (!hyp.holds) {
      add(skipped_item("T-AB", "6" + nk, display,
                       "hypothesis " + prap + " fails"));
      continue;
    }
    const bool expk =
        !find1(L, [&](int x) { return L.right_power(x, k) == 0; });
    add(bool_vs_forall2(
        c, "T-AB", "6" + nk, display, expk,
        "x^" + std::to_string(k) + " = e", [&](int x, int y) {
          return L.mul(y, beta(L, repeat_around(f1(L, x, y), x, k - 1,
                                                false))) == x;
        }));
  }
  return rep;
}

// --- phi/psi theorem -----------------------------------------------------------

SuiteReport check_phi_psi_theorem(const LoopTable& L, int n_max) {
  if (n_max <= 0) n_max = std::min(2 * L.n(), 8);
  n_max = std::max(n_max, 2);
  const Ctx c = make_ctx(L);
  SuiteReport rep{"phi-psi", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
  const bool pa = c.mbl && is_power_associative(L);

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    // f2(x, phi_k(y,x,..,x)) = psi_k(f2(x,y), x,..,x)
    add(forall2_item(
        c, "T-PQ", "1" + nk,
        "f2(x, phi_" + std::to_string(k) + "(y, x..x)) = psi_" +
            std::to_string(k) + "(f2(x, y), x..x)",
        [&](int x, int y) {
          return f2(L, x, phi(L, repeat_around(y, x, k - 1, true))) ==
                 psi(L, repeat_around(f2(L, x, y), x, k - 1, true));
        }));
    // f2(x, phi_{k+1}(x,y,x,..,x)) = psi_{k+1}(g2(x,y), x,..,x)
    add(forall2_item(
        c, "T-PQ", "2" + nk,
        "f2(x, phi_" + std::to_string(k + 1) + "(x, y, x..x)) = psi_" +
            std::to_string(k + 1) + "(g2(x, y), x..x)",
        [&](int x, int y) {
          std::vector<int> ps{x, y};
          ps.insert(ps.end(), k - 1, x);
          return f2(L, x, phi(L, ps)) ==
                 psi(L, repeat_around(g2(L, x, y), x, k, true));
        }));
  }

  add(prop_bicond_item(c, "T-PQ", "3", "LAP",
                       "x / (x y) = (x / ((x x) y)) x"));

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    const std::string plap = "PLAP(" + std::to_string(k) + ")";
    const std::string display =
        plap + "  <=>  psi_" + std::to_string(k) +
        "(f2(x, y), x..x) (x^" + std::to_string(k) + " y) = x";
    if (!c.mbl) {
      add(skipped_item("T-PQ", "4" + nk, display, kNotMbl));
      continue;
    }
    const CheckReport direct = check(L, plap);
    if (direct.code == CheckCode::PreconditionFailed) {
      add(skipped_item("T-PQ", "4" + nk, display,
                       "direct check unavailable: not power associative"));
      continue;
    }
    add(bool_vs_forall2(
        c, "T-PQ", "4" + nk, display, direct.holds, plap, [&](int x, int y) {
          return L.mul(psi(L, repeat_around(f2(L, x, y), x, k - 1, true)),
                       L.mul(L.left_power(x, k), y)) == x;
        }));
  }

  {
    const std::string display =
        "[LAP, power-assoc.]  x x = e  <=>  x / (x y) = (x / y) x";
    if (!c.mbl) {
      add(skipped_item("T-PQ", "5", display, kNotMbl));
    } else if (!check(L, "LAP").holds) {
      add(skipped_item("T-PQ", "5", display, "hypothesis LAP fails"));
    } else if (!pa) {
      add(skipped_item("T-PQ", "5", display,
                       "hypothesis fails: not power associative"));
    } else {
      const bool exp2 = !find1(L, [&](int x) { return L.mul(x, x) == 0; });
      add(bool_vs_forall2(c, "T-PQ", "5", display, exp2, "x x = e",
                          [&](int x, int y) {
                            return f2(L, x, y) == L.mul(L.rdiv(x, y), x);
                          }));
    }
  }

  for (int k = 2; k <= n_max; ++k) {
    const std::string nk = "(n=" + std::to_string(k) + ")";
    const std::string plap = "PLAP(" + std::to_string(k) + ")";
    const std::string display = "[" + plap + "]  x^" + std::to_string(k) +
                                " = e  <=>  psi_" + std::to_string(k) +
                                "(f2(x, y), x..x) y = x";
    if (!c.mbl) {
      add(skipped_item("T-PQ", "6" + nk, display, kNotMbl));
      continue;
    }
    const CheckReport hyp = check(L, plap);
    if (hyp.code == CheckCode::PreconditionFailed) {
      add(skipped_item("T-PQ", "6" + nk, display,
                       "hypothesis unavailable: not power associative"));
      continue;
    }
    if (!hyp.holds) {
      add(skipped_item("T-PQ", "6" + nk, display,
                       "hypothesis " + plap + " fails"));
      continue;
    }
    const bool expk = !find1(L, [&](int x) { return L.left_power(x, k) == 0; });
    add(bool_vs_forall2(
        c, "T-PQ", "6" + nk, display, expk,
        "x^" + std::to_string(k) + " = e", [&](int x, int y) {
          return L.mul(psi(L, repeat_around(f2(L, x, y), x, k - 1, true)),
                       y) == x;
        }));
  }
  return rep;
}

// --- inverse-property conditions (a)-(x) --------------------------------------

SuiteReport check_cip_lip_rip_conditions(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"inverse-property-conditions", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };

  add(identity_item(c, "T-AX", "(a)", "x / (y x) = (y \\ x) / x"));
  add(pointwise_item(c, "T-AX", "(b)", {"z (y x) = x", "y (z x) = x"}));
  add(identity_item(c, "T-AX", "(c)", "x / (x z) = (x / z) / x"));
  add(pointwise_item(c, "T-AX", "(d)", {"(y x) u = x", "y (x u) = x"}));
  add(identity_item(c, "T-AX", "(e)", "x / (x y) = (x / y) / x"));
  add(identity_item(c, "T-AX", "(f)", "x / (y x) = (y \\ x) / x"));
  add(cluster_item(c, "T-AX", "(g)",
                   {"x / y = x \\ y", "(x / (x y)) x = (y / (x y)) y",
                    "x ((x y) \\ x) = (y / (x y)) y",
                    "(x / (x y)) x = y ((x y) \\ y)",
                    "x ((x y) \\ x) = y ((x y) \\ y)"}));
  // There is no item (h) in this list.
  add(pointwise_item(c, "T-AX", "(i)",
                     {"(y x) z = x", "x z = (x / (y x)) x", "y (x z) = x"}));
  add(prop_bicond_item(c, "T-AX", "(j)", "CIP", "x y' = (x / (y x)) x"));
  add(pointwise_item(c, "T-AX", "(k)",
                     {"(y x) z = x", "x z = (x / (y x)) x", "y (x z) = x"}));
  add(prop_bicond_item(c, "T-AX", "(l)", "CIP", "x y' = (x / (y x)) x"));
  add(pointwise_item(c, "T-AX", "(m)",
                     {"z (x y) = x", "z x = x ((x y) \\ x)", "(z x) y = x"}));
  add(prop_bicond_item(c, "T-AX", "(n)", "CIP", "y' x = x ((x y) \\ x)"));
  add(pointwise_item(c, "T-AX", "(o)",
                     {"z (x y) = x", "z x = x ((x y) \\ x)"}));
  add(prop_bicond_item(c, "T-AX", "(p)", "CIP", "y' x = x ((x y) \\ x)"));
  add(pointwise_item(c, "T-AX", "(q)",
                     {"z (y x) = x", "z x = x ((y x) \\ x)", "y (z x) = x"}));
  add(prop_bicond_item(c, "T-AX", "(r)", "LIP", "y' x = x ((y x) \\ x)"));
  add(pointwise_item(c, "T-AX", "(s)",
                     {"z (y x) = x", "z x = x ((y x) \\ x)"}));
  add(prop_bicond_item(c, "T-AX", "(t)", "LIP", "y' x = x ((y x) \\ x)"));
  add(pointwise_item(c, "T-AX", "(u)",
                     {"(x y) z = x", "x z = (x / (x y)) x"}));
  add(prop_bicond_item(c, "T-AX", "(v)", "RIP", "x y' = (x / (x y)) x"));
  add(pointwise_item(c, "T-AX", "(w)",
                     {"(x y) z = x", "x z = (x / (x y)) x"}));
  add(prop_bicond_item(c, "T-AX", "(x)", "RIP", "x y' = (x / (x y)) x"));
  return rep;
}

// --- cross products of the four maps ------------------------------------------

SuiteReport check_fg_cross_lemma(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"map-cross-products", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };

  // Equivalence clusters: when two of the maps coincide.
  add(cluster_item(c, "LF2", "4",
                   {"(y x) \\ x = x / (x y)", "((y x) \\ x) (x y) = x",
                    "(y x) (x / (x y)) = x",
                    "x \\ (y \\ x) = (x / y) / x"}));
  add(cluster_item(c, "LF2", "5",
                   {"(x y) \\ x = x / (y x)", "((x y) \\ x) (y x) = x",
                    "(x y) (x / (y x)) = x",
                    "x \\ (x / y) = (y \\ x) / x"}));
  add(cluster_item(c, "LF2", "6",
                   {"(y x) \\ x = x / (y x)", "(y x) (x / (y x)) = x",
                    "((y x) \\ x) (y x) = x", "x ((y \\ x) / x) = y \\ x",
                    "(x \\ (y \\ x)) x = y \\ x"}));
  add(cluster_item(c, "LF2", "7",
                   {"x / (x y) = (x y) \\ x", "((x y) \\ x) (x y) = x",
                    "((y x) \\ x) (y x) = x", "x ((x / y) / x) = x / y",
                    "(x \\ (x / y)) x = x / y"}));

  // Three-way product identities; items 9/11/13/15 restate 8/10/12/14
  // through the second defining forms.
  add(equal_terms_item(c, "LF2", "8",
                       {"(x / (x y)) ((z x) \\ x)",
                        "x (((z x) (x y)) \\ x)", "(x / ((z x) (x y))) x"}));
  add(equal_terms_item(c, "LF2", "9",
                       {"((x / y) / x) (x \\ (z \\ x))",
                        "x (((z x) (x y)) \\ x)", "(x / ((z x) (x y))) x"}));
  add(equal_terms_item(c, "LF2", "10",
                       {"(x / (y x)) ((x z) \\ x)",
                        "x (((x z) (y x)) \\ x)", "(x / ((x z) (y x))) x"}));
  add(equal_terms_item(c, "LF2", "11",
                       {"((y \\ x) / x) (x \\ (x / z))",
                        "x (((x z) (y x)) \\ x)", "(x / ((x z) (y x))) x"}));
  add(equal_terms_item(c, "LF2", "12",
                       {"(x / (x y)) ((x z) \\ x)",
                        "x (((x z) (x y)) \\ x)", "(x / ((x z) (x y))) x"}));
  add(equal_terms_item(c, "LF2", "13",
                       {"((x / y) / x) (x \\ (x / z))",
                        "x (((x z) (x y)) \\ x)", "(x / ((x z) (x y))) x"}));
  add(equal_terms_item(c, "LF2", "14",
                       {"(x / (y x)) ((z x) \\ x)",
                        "x (((z x) (y x)) \\ x)", "(x / ((z x) (y x))) x"}));
  add(equal_terms_item(c, "LF2", "15",
                       {"((y \\ x) / x) (x \\ (z \\ x))",
                        "x (((z x) (y x)) \\ x)", "(x / ((z x) (y x))) x"}));
  return rep;
}

// --- group / Moufang / extra characterizations ---------------------------------

SuiteReport characterize_group_moufang_extra(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"group-moufang-extra", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
  const bool assoc = c.mbl && check(L, "ASSOCIATIVE").holds;
  const bool moufang = c.mbl && check(L, "MOUFANG").holds;
  const bool extra = c.mbl && check(L, "EXTRA").holds;

  const auto F1 = [&](int x, int z) { return f1(L, x, z); };
  const auto G1 = [&](int x, int z) { return g1(L, x, z); };
  const auto F2 = [&](int x, int y) { return f2(L, x, y); };
  const auto G2 = [&](int x, int y) { return g2(L, x, y); };

  add(bool_vs_forall3(
      c, "T-CHAR", "1(b)",
      "ASSOCIATIVE  <=>  x / y = (f2(x,y) f1(x,z)) / beta_4(x,x,z,x)", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.rdiv(x, y) == L.rdiv(L.mul(F2(x, y), F1(x, z)),
                                      beta(L, {x, x, z, x}));
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(c)",
      "ASSOCIATIVE  <=>  x / y = (f2(x,y) f1(x,z)) / beta_2(phi_3(x,x,z), x)",
      assoc, "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.rdiv(x, y) == L.rdiv(L.mul(F2(x, y), F1(x, z)),
                                      L.ldiv(phi(L, {x, x, z}), x));
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(d)",
      "ASSOCIATIVE  <=>  z \\ x = psi_2(x, alpha_3(x,x,y)) \\ (f2(x,y) f1(x,z))",
      assoc, "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.ldiv(z, x) == L.ldiv(L.rdiv(x, alpha(L, {x, x, y})),
                                      L.mul(F2(x, y), F1(x, z)));
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(e)",
      "ASSOCIATIVE  <=>  z \\ x = psi_4(x,y,x,x) \\ (f2(x,y) f1(x,z))", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.ldiv(z, x) ==
               L.ldiv(psi(L, {x, y, x, x}), L.mul(F2(x, y), F1(x, z)));
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(f)",
      "ASSOCIATIVE  <=>  alpha_3(x,z,y) (g2(x,y) g1(x,z)) = x", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(alpha(L, {x, z, y}), L.mul(G2(x, y), G1(x, z))) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(g)",
      "ASSOCIATIVE  <=>  (g2(x,y) g1(x,z)) phi_3(x,y,z) = x", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(L.mul(G2(x, y), G1(x, z)), phi(L, {x, y, z})) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(h)",
      "ASSOCIATIVE  <=>  f2(x,y) g1(x,z) = alpha_2(f2(x,y), x) beta_2(x, g1(x,z))",
      assoc, "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(F2(x, y), G1(x, z)) ==
               L.mul(L.mul(F2(x, y), x), L.ldiv(x, G1(x, z)));
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(i)",
      "ASSOCIATIVE  <=>  (f2(x,y) g1(x,z)) phi_3(y,x,z) = x", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(L.mul(F2(x, y), G1(x, z)), phi(L, {y, x, z})) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(j)",
      "ASSOCIATIVE  <=>  alpha_3(z,x,y) (g2(x,y) f1(x,z)) = x", assoc,
      "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(alpha(L, {z, x, y}), L.mul(G2(x, y), F1(x, z))) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "1(k)",
      "ASSOCIATIVE  <=>  g2(x,y) f1(x,z) = psi_2(g2(x,y), x) phi_2(f1(x,z), x)",
      assoc, "ASSOCIATIVE", [&](int x, int y, int z) {
        return L.mul(G2(x, y), F1(x, z)) ==
               L.mul(L.rdiv(G2(x, y), x), L.mul(x, F1(x, z)));
      }));

  {
    const std::string display =
        "[x x = e]  ASSOCIATIVE  <=>  (x / y) (z \\ x) = f2(x,y) f1(x,z)";
    if (!c.mbl) {
      add(skipped_item("T-CHAR", "2", display, kNotMbl));
    } else if (find1(L, [&](int x) { return L.mul(x, x) == 0; })) {
      add(skipped_item("T-CHAR", "2", display, "hypothesis x x = e fails"));
    } else {
      add(bool_vs_forall3(c, "T-CHAR", "2", display, assoc, "ASSOCIATIVE",
                          [&](int x, int y, int z) {
                            return L.mul(L.rdiv(x, y), L.ldiv(z, x)) ==
                                   L.mul(F2(x, y), F1(x, z));
                          }));
    }
  }
  {
    const std::string display =
        "[flexible]  ASSOCIATIVE  <=>  g2(x,y) f1(x,z) = psi_2(g2(x,y), x) "
        "phi_2(f1(x,z), x)";
    if (!c.mbl) {
      add(skipped_item("T-CHAR", "3", display, kNotMbl));
    } else if (!check(L, "FLEXIBLE").holds) {
      add(skipped_item("T-CHAR", "3", display, "hypothesis FLEXIBLE fails"));
    } else {
      add(bool_vs_forall3(
          c, "T-CHAR", "3", display, assoc, "ASSOCIATIVE",
          [&](int x, int y, int z) {
            return L.mul(G2(x, y), F1(x, z)) ==
                   L.mul(L.rdiv(G2(x, y), x), L.mul(x, F1(x, z)));
          }));
    }
  }

  add(bool_vs_forall3(
      c, "T-CHAR", "4(b)",
      "MOUFANG  <=>  phi_3(y,z,x) (g2(x,y) g1(x,z)) = x", moufang, "MOUFANG",
      [&](int x, int y, int z) {
        return L.mul(phi(L, {y, z, x}), L.mul(G2(x, y), G1(x, z))) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "4(c)",
      "MOUFANG  <=>  (g2(x,y) g1(x,z)) alpha_3(z,y,x) = x", moufang, "MOUFANG",
      [&](int x, int y, int z) {
        return L.mul(L.mul(G2(x, y), G1(x, z)), alpha(L, {z, y, x})) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "5(b)",
      "EXTRA  <=>  (f2(x,y) g1(x,z)) alpha_3(z,x,y) = x", extra, "EXTRA",
      [&](int x, int y, int z) {
        return L.mul(L.mul(F2(x, y), G1(x, z)), alpha(L, {z, x, y})) == x;
      }));
  add(bool_vs_forall3(
      c, "T-CHAR", "5(c)",
      "EXTRA  <=>  phi_3(y,x,z) (g2(x,y) f1(x,z)) = x", extra, "EXTRA",
      [&](int x, int y, int z) {
        return L.mul(phi(L, {y, x, z}), L.mul(G2(x, y), F1(x, z))) == x;
      }));
  return rep;
}

// --- N-identity theorems --------------------------------------------------------

namespace {

// Shared word strings for the N-identity suites.
namespace nwords {
// g1 family, words ((..(xy)x..)x) vs x-prefixed right sides.
constexpr const char* kA1_3 = "(x y) x = x (y x)";
constexpr const char* kA1_4a = "((x y) x) x = x ((y x) x)";
constexpr const char* kA1_4b = "((x y) x) x = x (y (x x))";
constexpr const char* kA2_1 = "(((x y) x) x) x = x (((y x) x) x)";
constexpr const char* kA2_2 = "(((x y) x) x) x = x ((y x) (x x))";
constexpr const char* kA2_3 = "(((x y) x) x) x = x ((y (x x)) x)";
constexpr const char* kA2_4a = "(((x y) x) x) x = x (y ((x x) x))";
constexpr const char* kA2_4b = "(((x y) x) x) x = x (y (x (x x)))";
// g2 family, words x(x(..(yx)..)) vs x-suffixed right sides.
constexpr const char* kA3_2 = "x (x (y x)) = (x (x y)) x";
constexpr const char* kA3_3 = "x (x (y x)) = ((x x) y) x";
constexpr const char* kA4_1 = "x (x (x (y x))) = (x (x (x y))) x";
constexpr const char* kA4_2 = "x (x (x (y x))) = ((x x) (x y)) x";
constexpr const char* kA4_3 = "x (x (x (y x))) = (x ((x x) y)) x";
constexpr const char* kA4_4a = "x (x (x (y x))) = ((x (x x)) y) x";
constexpr const char* kA4_4b = "x (x (x (y x))) = (((x x) x) y) x";
}  // namespace nwords

// Cluster whose members are identities; evaluated only under a hypothesis.
ItemResult gated_cluster(const Ctx& c, const std::string& lemma,
                         const std::string& item, const std::string& hyp_label,
                         bool hyp_ok, const std::vector<std::string>& members) {
  const std::string display =
      "[" + hyp_label + "]  " + join(members, "  <=>  ");
  if (!c.mbl) return skipped_item(lemma, item, display, kNotMbl);
  if (!hyp_ok)
    return skipped_item(lemma, item, display,
                        "hypothesis fails: " + hyp_label);
  std::vector<NamedBool> parts;
  for (const std::string& s : members) {
    const auto [val, detail] = truth_of(c, s);
    parts.push_back({s, val, detail});
  }
  return cluster_from(c, lemma, item, display, parts);
}

bool holds_identity(const Ctx& c, const std::string& s) {
  return check_identity(parse_identity(s), c.L).holds;
}

}  // namespace

std::vector<SuiteReport> check_n_identity_theorems(const LoopTable& L) {
  using namespace nwords;
  const Ctx c = make_ctx(L);
  std::vector<SuiteReport> out;

  {  // Words of length 3 and 4 against g1.
    SuiteReport rep{"n-identities-1", {}};
    auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
    add(ident_bicond_item(c, "T-N1", "1", kA1_3,
                          "(x y) \\ x = x ((x (y x)) \\ x)"));
    add(ident_bicond_item(
        c, "T-N1", "2", kA1_4a,
        "(x y) \\ x = x (x ((x ((y x) x)) \\ x))"));
    add(ident_bicond_item(
        c, "T-N1", "3", kA1_4b,
        "(x y) \\ x = x (x ((x (y (x x))) \\ x))"));
    add(gated_cluster(c, "T-N1", "4", "(x y) y = x (y y)",
                      !c.mbl || holds_identity(c, "(x y) y = x (y y)"),
                      {kA1_4a, kA1_4b, "(x y) (x x) = x (y (x x))"}));
    out.push_back(std::move(rep));
  }

  {  // Words of length 5 (and 6 in item 9) against g1.
    SuiteReport rep{"n-identities-2", {}};
    auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
    add(ident_bicond_item(
        c, "T-N2", "1", kA2_1,
        "(x y) \\ x = x (x (x ((x (((y x) x) x)) \\ x)))"));
    add(ident_bicond_item(
        c, "T-N2", "2", kA2_2,
        "(x y) \\ x = x (x (x ((x ((y x) (x x))) \\ x)))"));
    add(ident_bicond_item(
        c, "T-N2", "3", kA2_3,
        "(x y) \\ x = x (x (x ((x ((y (x x)) x)) \\ x)))"));
    add(cluster_item(
        c, "T-N2", "4",
        {kA2_4a, kA2_4b,
         "(x y) \\ x = x (x (x ((x (y ((x x) x))) \\ x)))"}));
    {
      ItemResult alias = ident_bicond_item(c, "T-N2", "4(c)", kA2_4a, kA2_4a,
                                           /*informational=*/true);
      alias.equation = std::string(kA2_4a) +
                       "   [the cube x x x read left-nested; same claim as "
                       "item 4's first member]";
      add(std::move(alias));
    }
    const bool hyp_rap = !c.mbl || holds_identity(c, "(x y) y = x (y y)");
    const bool hyp_6 =
        !c.mbl || holds_identity(c, "(x (y y)) y = x ((y y) y)");
    const bool hyp_7 =
        !c.mbl || holds_identity(c, "(x y) (y y) = x (y (y y))");
    add(gated_cluster(c, "T-N2", "5", "(x y) y = x (y y)", hyp_rap,
                      {kA2_1, kA2_2, kA2_3}));
    add(gated_cluster(c, "T-N2", "6", "(x (y y)) y = x ((y y) y)", hyp_6,
                      {kA2_3, kA2_4a, kA2_4b}));
    add(gated_cluster(c, "T-N2", "7", "(x y) (y y) = x (y (y y))", hyp_7,
                      {kA2_2, kA2_3, kA2_4a}));
    add(gated_cluster(
        c, "T-N2", "8",
        "(x y) y = x (y y), (x (y y)) y = x ((y y) y), (x y) (y y) = x (y (y y))",
        hyp_rap && hyp_6 && hyp_7,
        {kA2_1, kA2_2, kA2_3, kA2_4a, kA2_4b,
         "(x y) ((x x) x) = x (y ((x x) x))"}));
    add(ident_bicond_item(
        c, "T-N2", "9",
        "((((x y) x) x) x) x = x ((((y x) x) x) x)",
        "(x y) \\ x = x (x (x (x ((x ((((y x) x) x) x)) \\ x))))"));
    out.push_back(std::move(rep));
  }

  {  // Words of length 4 against g2 = x/(yx).
    SuiteReport rep{"n-identities-3", {}};
    auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
    add(ident_bicond_item(c, "T-N3", "1", kA1_3,
                          "x / (y x) = (x / ((x y) x)) x"));
    add(ident_bicond_item(c, "T-N3", "1(alt)", kA1_3,
                          "x \\ (y x) = (x \\ ((x y) x)) x",
                          /*informational=*/true));
    add(ident_bicond_item(c, "T-N3", "2", kA3_2,
                          "x / (y x) = ((x / ((x (x y)) x)) x) x"));
    add(ident_bicond_item(c, "T-N3", "2(alt)", kA3_2,
                          "x \\ (y x) = ((x \\ ((x (x y)) x)) x) x",
                          /*informational=*/true));
    add(ident_bicond_item(c, "T-N3", "3", kA3_3,
                          "x / (y x) = ((x / (((x x) y) x)) x) x"));
    add(ident_bicond_item(c, "T-N3", "3(alt)", kA3_3,
                          "x \\ (y x) = ((x \\ (((x x) y) x)) x) x",
                          /*informational=*/true));
    add(gated_cluster(c, "T-N3", "4", "x (x y) = (x x) y",
                      !c.mbl || holds_identity(c, "x (x y) = (x x) y"),
                      {"(x (x y)) x = x (x (y x))",
                       "((x x) y) x = x (x (y x))",
                       "(x x) (y x) = ((x x) y) x"}));
    out.push_back(std::move(rep));
  }

  {  // Words of length 5 (and 6 in item 9) against g2.
    SuiteReport rep{"n-identities-4", {}};
    auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };
    add(ident_bicond_item(
        c, "T-N4", "1", kA4_1,
        "x / (y x) = (((x / ((x (x (x y))) x)) x) x) x"));
    add(ident_bicond_item(
        c, "T-N4", "1(alt)", kA4_1,
        "x \\ (y x) = (((x \\ ((x (x (x y))) x)) x) x) x",
        /*informational=*/true));
    add(ident_bicond_item(
        c, "T-N4", "2", kA4_2,
        "x / (y x) = (((x / (((x x) (x y)) x)) x) x) x"));
    add(ident_bicond_item(
        c, "T-N4", "2(alt)", kA4_2,
        "x \\ (y x) = (((x \\ (((x x) (x y)) x)) x) x) x",
        /*informational=*/true));
    add(ident_bicond_item(
        c, "T-N4", "3", kA4_3,
        "x / (y x) = (((x / ((x ((x x) y)) x)) x) x) x"));
    add(ident_bicond_item(
        c, "T-N4", "3(alt)", kA4_3,
        "x \\ (y x) = (((x \\ ((x ((x x) y)) x)) x) x) x",
        /*informational=*/true));
    add(cluster_item(
        c, "T-N4", "4",
        {kA4_4a, kA4_4b,
         "x / (y x) = (((x / ((((x x) x) y) x)) x) x) x"}));
    {
      ItemResult alias = ident_bicond_item(c, "T-N4", "4(c)", kA4_4b, kA4_4b,
                                           /*informational=*/true);
      alias.equation = std::string(kA4_4b) +
                       "   [the cube x x x read left-nested; same claim as "
                       "item 4's second member]";
      add(std::move(alias));
    }
    const bool hyp_lap = !c.mbl || holds_identity(c, "x (x y) = (x x) y");
    const bool hyp_6 =
        !c.mbl || holds_identity(c, "x ((x x) y) = (x (x x)) y");
    const bool hyp_7 =
        !c.mbl || holds_identity(c, "(x x) (x y) = ((x x) x) y");
    add(gated_cluster(c, "T-N4", "5", "x (x y) = (x x) y", hyp_lap,
                      {kA4_1, kA4_2, kA4_3}));
    add(gated_cluster(c, "T-N4", "6", "x ((x x) y) = (x (x x)) y", hyp_6,
                      {kA4_3, kA4_4a, kA4_4b}));
    add(gated_cluster(c, "T-N4", "7", "(x x) (x y) = ((x x) x) y", hyp_7,
                      {kA4_2, kA4_3, kA4_4a}));
    add(gated_cluster(
        c, "T-N4", "8",
        "x (x y) = (x x) y, x ((x x) y) = (x (x x)) y, (x x) (x y) = ((x x) x) y",
        hyp_lap && hyp_6 && hyp_7,
        {kA4_1, kA4_2, kA4_3, kA4_4a, kA4_4b,
         "((x x) x) (y x) = (((x x) x) y) x"}));
    add(ident_bicond_item(
        c, "T-N4", "9",
        "x (x (x (x (y x)))) = (x (x (x (x y)))) x",
        "x / (y x) = ((((x / ((x (x (x (x y)))) x)) x) x) x) x"));
    add(ident_bicond_item(
        c, "T-N4", "9(alt)",
        "x (x (x (x (y x)))) = (x (x (x (x y)))) x",
        "x \\ (y x) = ((((x \\ ((x (x (x (x y)))) x)) x) x) x) x",
        /*informational=*/true));
    out.push_back(std::move(rep));
  }
  return out;
}

// --- division / inverse lemma ----------------------------------------------------

SuiteReport check_first_lemma(const LoopTable& L) {
  const Ctx c = make_ctx(L);
  SuiteReport rep{"division-inverse-lemma", {}};
  auto add = [&](ItemResult r) { rep.items.push_back(std::move(r)); };

  add(identity_item(c, "L1", "(a)",
                    "(y z) \\ e = (e / z) (y \\ e)  ;  z \\ e = e / z",
                    {"(y z) \\ e = (e / z) (y \\ e)", "z \\ e = e / z"}));
  add(identity_item(c, "L1", "(b)", "(y x) \\ x = x \\ (y \\ x)"));
  add(pointwise_item(c, "L1", "(c)", {"(y x) u = x", "y (x u) = x"}));
  add(identity_item(c, "L1", "(d)", "(x z) \\ x = x \\ (x / z)"));
  add(pointwise_item(c, "L1", "(e)", {"(x z) u = x", "(x u) z = x"}));
  add(identity_item(c, "L1", "(f)", "x (z \\ x) = (x / z) x"));
  add(identity_item(c, "L1", "(g)",
                    "x x = (x / z) ((e / z) \\ x)  ;  x x = (x / (y \\ e)) (y \\ x)",
                    {"x x = (x / z) ((e / z) \\ x)",
                     "x x = (x / (y \\ e)) (y \\ x)"}));

  {  // (h) is a per-element equivalence, not a whole-loop one.
    const std::string display =
        "per element x:  x x = e  <=>  (x / z)' = z' \\ x for all z";
    if (!c.mbl) {
      add(skipped_item("L1", "(h)", display, kNotMbl));
    } else {
      ItemResult r = blank("L1", "(h)", display);
      r.lhs = r.rhs = r.agree = true;
      try {
        for (int x = 0; x < L.n() && r.agree; ++x) {
          const bool square_e = L.mul(x, x) == 0;
          bool cond = true;
          int bad_z = -1;
          for (int z = 0; z < L.n(); ++z)
            if (L.inv(L.rdiv(x, z)) != L.ldiv(L.inv(z), x)) {
              cond = false;
              bad_z = z;
              break;
            }
          if (square_e != cond) {
            r.lhs = r.rhs = r.agree = false;
            r.witness = "x=" + std::to_string(x) + ": x x = e is " +
                        (square_e ? "true" : "false") +
                        " but the division condition is " +
                        (cond ? "true" : "false") +
                        (bad_z >= 0 ? " (fails at z=" + std::to_string(bad_z) +
                                          ")"
                                    : "");
          }
        }
      } catch (const LoopError& e) {
        r.lhs = r.rhs = r.agree = false;
        r.witness = e.what();
      }
      add(std::move(r));
    }
  }

  add(identity_item(c, "L1", "(i)", "(x / (y z)) x = (x / z) (y \\ x)"));

  {  // (j): CIP <=> commutative + each flavor of the inverse property.
    const std::string display =
        "CIP  <=>  COMMUTATIVE & WIP  <=>  COMMUTATIVE & IP  <=>  "
        "COMMUTATIVE & LIP  <=>  COMMUTATIVE & RIP";
    if (!c.mbl) {
      add(skipped_item("L1", "(j)", display, kNotMbl));
    } else {
      const bool comm = check(L, "COMMUTATIVE").holds;
      std::vector<NamedBool> parts{
          {"CIP", check(L, "CIP").holds, ""},
          {"COMMUTATIVE & WIP", comm && check(L, "WIP").holds, ""},
          {"COMMUTATIVE & IP", comm && check(L, "IP").holds, ""},
          {"COMMUTATIVE & LIP", comm && check(L, "LIP").holds, ""},
          {"COMMUTATIVE & RIP", comm && check(L, "RIP").holds, ""}};
      add(cluster_from(c, "L1", "(j)", display, parts));
    }
  }

  add(cluster_item(c, "L1", "(k)", {"SAIP", "FLEXIBLE"}));
  add(cluster_item(c, "L1", "(l)", {"AIP", "COMMUTATIVE"}));
  add(cluster_item(c, "L1", "(m)",
                   {"x / y = x \\ y", "x ((y x) \\ x) = y ((y x) \\ y)",
                    "(x / (y x)) x = y ((y x) \\ y)",
                    "x ((y x) \\ x) = (y / (y x)) y",
                    "(x / (y x)) x = (y / (y x)) y"}));
  return rep;
}

std::vector<SuiteReport> all_suites(const LoopTable& L, int n_max) {
  std::vector<SuiteReport> out;
  out.push_back(check_first_lemma(L));
  out.push_back(check_f_lemma_table(L));
  out.push_back(check_commutativity_criteria(L));
  out.push_back(check_alpha_beta_theorem(L, n_max));
  out.push_back(check_phi_psi_theorem(L, n_max));
  out.push_back(check_cip_lip_rip_conditions(L));
  out.push_back(check_fg_cross_lemma(L));
  out.push_back(characterize_group_moufang_extra(L));
  for (SuiteReport& r : check_n_identity_theorems(L))
    out.push_back(std::move(r));
  return out;
}

}  // namespace loops
