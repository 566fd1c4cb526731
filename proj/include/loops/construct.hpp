// construct.hpp -- constructions between loop classes and isomorphism tools.
//
// The bridge maps realize the isostrophy between one-sided Bol loops and
// middle Bol loops:
//   from a right Bol loop:  x o y = (y(x y^rho)) y
//   from a left Bol loop:   x o y = y ((y^lam x) y)
// Both postconditions (the result validates and is middle Bol) are enforced
// at runtime; a violation is reported as ValidationFailed since the
// construction is supposed to succeed on every conforming input.

#pragma once

#include <optional>
#include <vector>

#include "loops/table.hpp"

namespace loops {

LoopTable middle_from_right_bol(const LoopTable& L);  // throws NotRightBol
LoopTable middle_from_left_bol(const LoopTable& L);   // throws NotLeftBol

// Transposed table x*y = yx.
LoopTable opposite(const LoopTable& L);

// Principal isotope x o y = (x/b)(a\y); its identity element a*b is
// renormalized to index 0 by validation.
LoopTable principal_isotope(const LoopTable& L, int a, int b);

// Relabels L by permutation p (new label of z is p[z]); the result is
// revalidated, so p need not fix the identity.
LoopTable relabel(const LoopTable& L, const std::vector<int>& p);

// Isomorphism phi with phi(x*y) = phi(x)*phi(y), phi(0) = 0, if one exists.
// Backtracking over images, pruned by per-element invariants (translation
// cycle types, inverse agreement, element order) and forced-product closure.
std::optional<std::vector<int>> are_isomorphic(const LoopTable& A,
                                               const LoopTable& B);

// Lexicographically least table over all identity-fixing relabelings.
// Canonical forms are equal iff the loops are isomorphic. Throws
// OrderTooLarge above the bound; the default keeps (n-1)! enumerable.
LoopTable canonical_form(const LoopTable& L, int bound = 8);

}  // namespace loops
