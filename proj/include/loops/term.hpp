// term.hpp -- term language for loop words and generic identity checking.
//
// Grammar (concrete syntax), loosest binding first:
//   expr    := divexpr ('*' divexpr)*            explicit product, left-assoc
//   divexpr := juxexpr (('\' | '/') juxexpr)*    divisions, one tier, left-assoc
//   juxexpr := postfix postfix*                  juxtaposed product, left-assoc
//   postfix := primary '\''*                     postfix inverse, tightest
//   primary := 'a'..'z' variable | 'e' | '(' expr ')'
// 'e' is the identity constant, so it is not available as a variable name.
// Consequences: "x * y/z" is x*(y/z) and "x y \ z * w" is ((xy)\z)*w.
//
// The inverse token ' denotes the unified two-sided inverse and is only
// evaluable at elements whose one-sided inverses coincide; elsewhere eval
// throws and check_identity reports an inverse-undefined outcome instead of
// guessing a side.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loops/table.hpp"

namespace loops {

enum class TermKind { Var, ConstE, Mul, LDiv, RDiv, Inv };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  char var = 0;      // Var only
  TermPtr a, b;      // Mul/LDiv/RDiv: both; Inv: a only
};

TermPtr mk_var(char v);
TermPtr mk_e();
TermPtr mk_mul(TermPtr a, TermPtr b);
TermPtr mk_ldiv(TermPtr a, TermPtr b);
TermPtr mk_rdiv(TermPtr a, TermPtr b);
TermPtr mk_inv(TermPtr a);

bool structurally_equal(const Term& a, const Term& b);
int term_depth(const Term& t);

struct ParseError : std::runtime_error {
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  size_t position;
};

// An identity lhs = rhs. vars is the union of variables of both sides in
// order of first appearance (lhs scanned first); that order fixes the
// assignment enumeration and hence which counterexample is "least".
// occurrences records per-variable counts on each side; the balanced-word
// condition is metadata only, never enforced.
struct Identity {
  TermPtr lhs, rhs;
  std::vector<char> vars;
  std::map<char, std::pair<int, int>> occurrences;
  bool balanced() const;  // same length and per-variable counts on both sides

  static Identity make(TermPtr lhs, TermPtr rhs);
};

TermPtr parse_term(const std::string& src);       // no '=' allowed
Identity parse_identity(const std::string& src);  // exactly one top-level '='

std::string print_term(const Term& t);  // reparses to an identical AST
std::string print_identity(const Identity& id);

using Assignment = std::map<char, int>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvUndefinedError : EvalError {
  InvUndefinedError(int elem)
      : EvalError("inverse undefined at element " + std::to_string(elem)),
        element(elem) {}
  int element;
};
struct UnboundVarError : EvalError {
  UnboundVarError(char v)
      : EvalError(std::string("unbound variable ") + v), var(v) {}
  char var;
};

int eval(const Term& t, const LoopTable& L, const Assignment& env);

enum class CheckCode { Ok, InvUndefined, PreconditionFailed };

struct CheckReport {
  bool holds = false;
  std::optional<Assignment> counterexample;  // least failing assignment
  long long checked_assignments = 0;
  CheckCode code = CheckCode::Ok;
  std::string detail;  // human-readable context for failures / skip codes
};

// Exhaustively evaluates id over all |L|^|vars| assignments in lexicographic
// order (vars[0] most significant) and stops at the first failure, so the
// reported counterexample is the lexicographically least one. An undefined
// inverse is reported as a counterexample-class result with
// code = InvUndefined, not a crash.
CheckReport check_identity(const Identity& id, const LoopTable& L);

// Identity catalog file: one `name: lhs = rhs` per line, '#' comments.
struct NamedIdentity {
  std::string name;
  Identity id;
};
std::vector<NamedIdentity> parse_catalog(const std::string& text);

}  // namespace loops
