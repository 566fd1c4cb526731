// properties.hpp -- named catalog of loop classes.
//
// Each catalog entry is either a set of identities over the term language
// (all of which must hold) or a short procedure for checks that need
// one-sided inverses or iterated powers. Names are unique; the PLAP(k) /
// PRAP(k) families take their exponent as part of the name and demand
// power associativity as a precondition (reported as PreconditionFailed,
// never as plain "false").

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loops/term.hpp"

namespace loops {

struct PropertyDef {
  std::string name;
  std::vector<Identity> identities;  // empty for procedural entries
  bool procedural = false;           // dispatched on name
};

// Built-in catalog: MIDDLE_BOL, RIGHT_BOL, LEFT_BOL, MOUFANG, EXTRA,
// FLEXIBLE, LAP, RAP, COMMUTATIVE, ASSOCIATIVE, the sixteen Fenyves
// identities F1..F4, F11..F14, F21..F24, F31..F34, the inverse-property
// family LIP, RIP, IP, WIP, CIP, AIP, AAIP, SAIP, and PLAP(2), PLAP(3),
// PRAP(2), PRAP(3).
const std::vector<PropertyDef>& default_catalog();

// Exact catalog lookup, plus dynamic PLAP(k)/PRAP(k) for any k >= 1.
std::optional<PropertyDef> find_property(const std::string& name);

CheckReport check(const LoopTable& L, const PropertyDef& p);
CheckReport check(const LoopTable& L, const std::string& name);

// The two division-form renderings of the middle Bol identity:
//   form 2:  x(yz\x) = (x/z)(y\x)
//   form 3:  (x/yz)x = (x/z)(y\x)
// They must agree on every loop (both hold or both fail).
std::pair<CheckReport, CheckReport> is_middle_bol_equivalent_forms(
    const LoopTable& L);

struct ClassifyResult {
  std::map<std::string, bool> values;
  std::map<std::string, std::string> skipped;  // name -> precondition detail
  std::vector<std::string> audit_violations;   // nonempty = implementation bug
};

// Evaluates the whole catalog and runs the classical-implication audit
// (EXTRA => MOUFANG, MOUFANG => both Bol + flexible, groups => almost
// everything, ...). Violations are reported, not thrown: they mean the
// checker itself is wrong, and tests assert the list stays empty.
ClassifyResult classify(const LoopTable& L);
std::vector<std::string> audit_implications(
    const std::map<std::string, bool>& values);

// Dumpable form of the built-in catalog: identity entries in the catalog
// file syntax (name: lhs = rhs), procedural entries as comments.
std::string dump_catalog_text();

}  // namespace loops
