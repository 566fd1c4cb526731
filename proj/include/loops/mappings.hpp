// mappings.hpp -- the bivariate maps f1,g1,f2,g2 and the variadic
// alpha/beta/phi/psi families over a loop, plus the characterization
// suites built on them: value tables, commutativity criteria, the
// alpha/beta and phi/psi power theorems, the inverse-property
// conditions (a)-(x), the cross-product identities, the
// group/Moufang/extra characterizations, and the N-identity theorems.
//
// Definitions (primary form first; the second form agrees with the
// first pointwise on every middle Bol loop):
//   f1(x,y) = (yx)\x  = x\(y\x)        g1(x,y) = (xy)\x  = x\(x/y)
//   f2(x,y) = x/(xy)  = (x/y)/x        g2(x,y) = x/(yx)  = (y\x)/x
//   alpha_i = left-nested product       (..((x1 x2) x3)..) xi
//   beta_i  = right-nested left divs    x1\(x2\(..(x_{i-1}\xi)..))
//   phi_i   = right-nested product      xi(x_{i-1}(..(x3(x2 x1))..))
//   psi_i   = left-nested right divs    ((..((x1/x2)/x3)..)/xi
// Arity-1 variadic maps are the identity on their argument.
//
// Every suite item is evaluated as two independently computed sides
// (or as a family of booleans that must agree); nothing is assumed.
// All suites require a middle Bol loop; on other loops every item is
// skip-coded.  Skipped items never count as passes.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loops/table.hpp"
#include "loops/term.hpp"

namespace loops {

struct BivariateMap {
  std::string name;    // "f1" | "g1" | "f2" | "g2"
  TermPtr primary;     // defining form in variables x, y
  TermPtr equivalent;  // agrees with primary on middle Bol loops
};

struct VariadicMap {
  std::string name;  // "alpha" | "beta" | "phi" | "psi"
};

// Lookup by name; throws LoopError(BadInput) for unknown names.
const BivariateMap& bivariate_map(const std::string& name);
const VariadicMap& variadic_map(const std::string& name);

// Evaluation (primary form for bivariate maps; arity >= 1 for variadic).
int eval_map(const BivariateMap& m, const LoopTable& L, int x, int y);
int eval_map(const VariadicMap& m, const LoopTable& L,
             const std::vector<int>& args);

// Convenience evaluators (primary forms).
int f1(const LoopTable& L, int x, int y);
int g1(const LoopTable& L, int x, int y);
int f2(const LoopTable& L, int x, int y);
int g2(const LoopTable& L, int x, int y);
int alpha(const LoopTable& L, const std::vector<int>& xs);
int beta(const LoopTable& L, const std::vector<int>& xs);
int phi(const LoopTable& L, const std::vector<int>& xs);
int psi(const LoopTable& L, const std::vector<int>& xs);

// --- suite reports ---------------------------------------------------------

// One checked claim.  For plain identities lhs == rhs == agree; for
// biconditionals lhs/rhs are the two independently computed sides; for
// equivalence clusters agree means all member booleans coincide (the
// members are listed in the witness field on disagreement).
struct ItemResult {
  std::string lemma_id;  // stable label: LF1, LF2, T-AB, T-PQ, T-AX, ...
  std::string item;      // sub-item label, e.g. "3", "1(g)", "(v)", "4(n=3)"
  std::string equation;  // the statement checked, in the identity grammar
  bool lhs = false;
  bool rhs = false;
  bool agree = false;
  bool skipped = false;
  std::string skip_reason;
  std::string witness;          // first counterexample, when !agree
  bool informational = false;   // alternate-reading rows; never counted
  bool ok() const { return skipped || informational || agree; }
};

struct SuiteReport {
  std::string suite;
  std::vector<ItemResult> items;
  bool all_ok() const;
  const ItemResult* find(const std::string& lemma_id,
                         const std::string& item) const;
};

// Value tables: the eight listed values of f1 and g1 and the value
// triples of f2 and g2, plus each map's two-form agreement.
SuiteReport check_f_lemma_table(const LoopTable& L);

// f1=g1 / f2=g2 vs commutativity, the division-transpose criteria, and
// the pointwise substitution biconditional.
SuiteReport check_commutativity_criteria(const LoopTable& L);

// The alpha/beta theorem: unconditional adjunction identities for
// 2 <= n <= n_max, the RAP and per-n PRAP biconditionals, and the
// exponent items under their hypotheses.  n_max <= 0 selects the
// default min(2*order, 8).
SuiteReport check_alpha_beta_theorem(const LoopTable& L, int n_max = 0);

// Mirror theorem for f2/g2 with phi/psi, LAP and PLAP.
SuiteReport check_phi_psi_theorem(const LoopTable& L, int n_max = 0);

// Items (a)-(x): pointwise solution equivalences and the CIP/LIP/RIP
// equation biconditionals (there is no printed item (h)).
SuiteReport check_cip_lip_rip_conditions(const LoopTable& L);

// Cross products of the four maps: equivalence clusters 4-7 and the
// three-way product identities 8-15.
SuiteReport check_fg_cross_lemma(const LoopTable& L);

// Group / Moufang / extra loop characterizations through the variadic
// maps; conditional items (exponent 2, flexibility) are skip-coded when
// their hypothesis fails.
SuiteReport characterize_group_moufang_extra(const LoopTable& L);

// The four N-identity theorems (words of type N=3..6 in one or two
// variables vs their g1/g2 forms).  The canonical g2 = x/(yx) is used
// throughout; rows evaluating the divergent alternate reading
// g2 = x\(yx) are included as informational only.
std::vector<SuiteReport> check_n_identity_theorems(const LoopTable& L);

// Division/inverse consequences of the middle Bol identity: items
// L1a..L1m (anti-automorphic inverses, translation solution
// equivalences, the squared-element criterion per element, the
// inverse-property equivalence chains, and the five-way division
// coincidence cluster).
SuiteReport check_first_lemma(const LoopTable& L);

// claim -> (lhs, rhs) view of a suite, keyed "<lemma_id> <item>".
// Skipped and informational rows are omitted.
std::map<std::string, std::pair<bool, bool>> as_claim_map(const SuiteReport&);

// Every suite above, in a stable order.
std::vector<SuiteReport> all_suites(const LoopTable& L, int n_max = 0);

}  // namespace loops
