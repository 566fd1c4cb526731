#include "loops/term.hpp"

#include <algorithm>
#include <sstream>

namespace loops {

TermPtr mk_var(char v) {
  return std::make_shared<Term>(Term{TermKind::Var, v, nullptr, nullptr});
}
TermPtr mk_e() {
  return std::make_shared<Term>(Term{TermKind::ConstE, 0, nullptr, nullptr});
}
TermPtr mk_mul(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(
      Term{TermKind::Mul, 0, std::move(a), std::move(b)});
}
TermPtr mk_ldiv(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(
      Term{TermKind::LDiv, 0, std::move(a), std::move(b)});
}
TermPtr mk_rdiv(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(
      Term{TermKind::RDiv, 0, std::move(a), std::move(b)});
}
TermPtr mk_inv(TermPtr a) {
  return std::make_shared<Term>(Term{TermKind::Inv, 0, std::move(a), nullptr});
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Var:
      return a.var == b.var;
    case TermKind::ConstE:
      return true;
    case TermKind::Inv:
      return structurally_equal(*a.a, *b.a);
    default:
      return structurally_equal(*a.a, *b.a) && structurally_equal(*a.b, *b.b);
  }
}

int term_depth(const Term& t) {
  switch (t.kind) {
    case TermKind::Var:
    case TermKind::ConstE:
      return 1;
    case TermKind::Inv:
      return 1 + term_depth(*t.a);
    default:
      return 1 + std::max(term_depth(*t.a), term_depth(*t.b));
  }
}

namespace {

void collect_vars(const Term& t, std::vector<char>& order,
                  std::map<char, int>& counts) {
  switch (t.kind) {
    case TermKind::Var:
      ++counts[t.var];
      break;
    case TermKind::ConstE:
      break;
    case TermKind::Inv:
      collect_vars(*t.a, order, counts);
      break;
    default:
      collect_vars(*t.a, order, counts);
      collect_vars(*t.b, order, counts);
  }
}

// First-appearance order across the whole identity (lhs scanned first).
void collect_order(const Term& t, std::vector<char>& order) {
  switch (t.kind) {
    case TermKind::Var:
      if (std::find(order.begin(), order.end(), t.var) == order.end())
        order.push_back(t.var);
      break;
    case TermKind::ConstE:
      break;
    case TermKind::Inv:
      collect_order(*t.a, order);
      break;
    default:
      collect_order(*t.a, order);
      collect_order(*t.b, order);
  }
}

int word_length(const Term& t) {
  switch (t.kind) {
    case TermKind::Var:
    case TermKind::ConstE:
      return 1;
    case TermKind::Inv:
      return word_length(*t.a);
    default:
      return word_length(*t.a) + word_length(*t.b);
  }
}

}  // namespace

Identity Identity::make(TermPtr lhs, TermPtr rhs) {
  Identity id;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  std::map<char, int> lc, rc;
  std::vector<char> order;
  collect_vars(*id.lhs, order, lc);
  collect_vars(*id.rhs, order, rc);
  collect_order(*id.lhs, order);
  collect_order(*id.rhs, order);
  id.vars = order;
  for (char v : order) id.occurrences[v] = {lc[v], rc[v]};
  return id;
}

bool Identity::balanced() const {
  if (word_length(*lhs) != word_length(*rhs)) return false;
  for (const auto& [v, c] : occurrences)
    if (c.first != c.second) return false;
  return true;
}

// --- parser ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  TermPtr parse_full_term() {
    skip_ws();
    TermPtr t = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected trailing input");
    return t;
  }

  Identity parse_full_identity() {
    skip_ws();
    TermPtr lhs = expr();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '=')
      throw ParseError(pos_, "expected '='");
    ++pos_;
    skip_ws();
    TermPtr rhs = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected trailing input");
    return Identity::make(std::move(lhs), std::move(rhs));
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  TermPtr expr() {
    TermPtr t = divexpr();
    while (peek() == '*') {
      ++pos_;
      t = mk_mul(std::move(t), divexpr());
    }
    return t;
  }

  TermPtr divexpr() {
    TermPtr t = juxexpr();
    for (char c = peek(); c == '\\' || c == '/'; c = peek()) {
      ++pos_;
      TermPtr r = juxexpr();
      t = c == '\\' ? mk_ldiv(std::move(t), std::move(r))
                    : mk_rdiv(std::move(t), std::move(r));
    }
    return t;
  }

  bool starts_primary(char c) {
    return c == '(' || (c >= 'a' && c <= 'z');
  }

  TermPtr juxexpr() {
    TermPtr t = postfix();
    while (starts_primary(peek())) t = mk_mul(std::move(t), postfix());
    return t;
  }

  TermPtr postfix() {
    TermPtr t = primary();
    while (peek() == '\'') {
      ++pos_;
      t = mk_inv(std::move(t));
    }
    return t;
  }

  TermPtr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      TermPtr t = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return t;
    }
    if (c == 'e') {
      ++pos_;
      return mk_e();
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return mk_var(c);
    }
    throw ParseError(pos_, pos_ >= s_.size() ? "unexpected end of input"
                                             : "unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& src) {
  return Parser(src).parse_full_term();
}

Identity parse_identity(const std::string& src) {
  return Parser(src).parse_full_identity();
}

// --- printer ----------------------------------------------------------------
// Emits juxtaposition for products (never '*'), so binding tiers are just
// inverse > juxtaposition > division. Parenthesizes exactly where the
// grammar's associativity/precedence would otherwise regroup.

namespace {

enum Tier { TDiv = 0, TJux = 1, TAtom = 2 };

Tier tier(const Term& t) {
  switch (t.kind) {
    case TermKind::LDiv:
    case TermKind::RDiv:
      return TDiv;
    case TermKind::Mul:
      return TJux;
    default:
      return TAtom;
  }
}

void print_rec(const Term& t, std::ostream& os, int min_tier) {
  const bool paren = tier(t) < min_tier;
  if (paren) os << '(';
  switch (t.kind) {
    case TermKind::Var:
      os << t.var;
      break;
    case TermKind::ConstE:
      os << 'e';
      break;
    case TermKind::Mul:
      // Left operand may be another juxtaposition (left-assoc); the right
      // operand must be an atom-tier item or get parenthesized.
      print_rec(*t.a, os, TJux);
      print_rec(*t.b, os, TAtom);
      break;
    case TermKind::LDiv:
    case TermKind::RDiv:
      print_rec(*t.a, os, TDiv);
      os << (t.kind == TermKind::LDiv ? '\\' : '/');
      // Divisions are left-associative, so the right operand needs at least
      // juxtaposition tier.
      print_rec(*t.b, os, TJux);
      break;
    case TermKind::Inv: {
      // The ' suffix attaches to a primary: bare names and nested ' are
      // fine, anything composite needs explicit parens.
      const bool atomic = t.a->kind == TermKind::Var ||
                          t.a->kind == TermKind::ConstE ||
                          t.a->kind == TermKind::Inv;
      if (atomic) {
        print_rec(*t.a, os, TAtom);
      } else {
        os << '(';
        print_rec(*t.a, os, TDiv);
        os << ')';
      }
      os << '\'';
      break;
    }
  }
  if (paren) os << ')';
}

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_rec(t, os, TDiv);
  return os.str();
}

std::string print_identity(const Identity& id) {
  return print_term(*id.lhs) + " = " + print_term(*id.rhs);
}

// --- evaluation -------------------------------------------------------------

int eval(const Term& t, const LoopTable& L, const Assignment& env) {
  switch (t.kind) {
    case TermKind::Var: {
      const auto it = env.find(t.var);
      if (it == env.end()) throw UnboundVarError(t.var);
      return it->second;
    }
    case TermKind::ConstE:
      return 0;
    case TermKind::Mul:
      return L.mul(eval(*t.a, L, env), eval(*t.b, L, env));
    case TermKind::LDiv:
      return L.ldiv(eval(*t.a, L, env), eval(*t.b, L, env));
    case TermKind::RDiv:
      return L.rdiv(eval(*t.a, L, env), eval(*t.b, L, env));
    case TermKind::Inv: {
      const int v = eval(*t.a, L, env);
      if (L.lam(v) != L.rho(v)) throw InvUndefinedError(v);
      return L.lam(v);
    }
  }
  throw EvalError("corrupt term");
}

CheckReport check_identity(const Identity& id, const LoopTable& L) {
  CheckReport rep;
  const int n = L.n();
  const size_t k = id.vars.size();
  std::vector<int> a(k, 0);
  Assignment env;
  for (;;) {
    for (size_t i = 0; i < k; ++i) env[id.vars[i]] = a[i];
    ++rep.checked_assignments;
    try {
      if (eval(*id.lhs, L, env) != eval(*id.rhs, L, env)) {
        rep.holds = false;
        rep.counterexample = env;
        rep.detail = "sides differ";
        return rep;
      }
    } catch (const InvUndefinedError& e) {
      rep.holds = false;
      rep.counterexample = env;
      rep.code = CheckCode::InvUndefined;
      rep.detail = e.what();
      return rep;
    }
    // Advance odometer, last variable fastest; vars[0] most significant.
    size_t i = k;
    while (i > 0) {
      if (++a[i - 1] < n) break;
      a[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  rep.holds = true;
  return rep;
}

std::vector<NamedIdentity> parse_catalog(const std::string& text) {
  std::vector<NamedIdentity> out;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw LoopError(Err::BadInput,
                      "catalog line " + std::to_string(lineno) +
                          ": expected `name: lhs = rhs`");
    std::string name = line.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    out.push_back({name, parse_identity(line.substr(colon + 1))});
  }
  return out;
}

}  // namespace loops
