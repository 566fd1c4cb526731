// Unit tests for the property catalog: identity-backed and procedural
// checks on known groups and a nonassociative loop, the middle-Bol
// equivalent-forms pair, classification, and the implication audit.

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "loops/properties.hpp"

using namespace loops;

namespace {

const std::vector<LoopTable>& group_fixtures() {
  static const std::vector<LoopTable> gs = {
      fixtures::cyclic(1), fixtures::cyclic(2), fixtures::cyclic(3),
      fixtures::cyclic(4), fixtures::cyclic(5), fixtures::cyclic(6),
      fixtures::cyclic(8), fixtures::klein4(),  fixtures::s3(),
      fixtures::dihedral8(), fixtures::quaternion8()};
  return gs;
}

bool holds(const LoopTable& L, const std::string& name) {
  return check(L, name).holds;
}

}  // namespace

TEST_CASE("catalog is well-formed") {
  const auto& cat = default_catalog();
  CHECK(cat.size() == 38);
  std::set<std::string> names;
  for (const auto& p : cat) {
    CHECK(names.insert(p.name).second);  // unique
    CHECK((p.procedural || !p.identities.empty()));
  }
  for (const char* must :
       {"MIDDLE_BOL", "RIGHT_BOL", "LEFT_BOL", "MOUFANG", "EXTRA", "FLEXIBLE",
        "LIP", "RIP", "IP", "WIP", "CIP", "AIP", "AAIP", "SAIP", "LAP", "RAP",
        "PLAP(2)", "PRAP(3)", "COMMUTATIVE", "ASSOCIATIVE", "F1", "F14", "F22",
        "F34"})
    CHECK(names.count(must));
}

TEST_CASE("find_property handles exact names and the PLAP/PRAP family") {
  CHECK(find_property("MOUFANG").has_value());
  CHECK(find_property("PLAP(7)").has_value());
  CHECK(find_property("PRAP(4)").has_value());
  CHECK_FALSE(find_property("PLAP(0)").has_value());
  CHECK_FALSE(find_property("PLAP(x)").has_value());
  CHECK_FALSE(find_property("NOPE").has_value());
  CHECK_THROWS_AS((void)check(fixtures::cyclic(2), "NOPE"), LoopError);
}

TEST_CASE("groups satisfy the group-implied catalog entries") {
  for (const LoopTable& g : group_fixtures()) {
    CAPTURE(g.n());
    for (const char* p :
         {"ASSOCIATIVE", "MIDDLE_BOL", "RIGHT_BOL", "LEFT_BOL", "MOUFANG",
          "EXTRA", "FLEXIBLE", "LAP", "RAP", "LIP", "RIP", "IP", "WIP", "AAIP",
          "SAIP", "F1", "F2", "F3", "F4", "F11", "F12", "F13", "F14", "F21",
          "F22", "F23", "F24", "F31", "F32", "F33", "F34", "PLAP(2)",
          "PLAP(3)", "PRAP(2)", "PRAP(3)"}) {
      CAPTURE(p);
      CHECK(holds(g, p));
    }
  }
}

TEST_CASE("CIP and AIP separate abelian from nonabelian groups") {
  // In a group, (xy)x^-1 = y and (xy)^-1 = x^-1 y^-1 both say "commutative".
  CHECK(holds(fixtures::cyclic(4), "CIP"));
  CHECK(holds(fixtures::cyclic(4), "AIP"));
  CHECK(holds(fixtures::klein4(), "CIP"));
  for (const char* p : {"CIP", "AIP", "COMMUTATIVE"}) {
    CAPTURE(p);
    CHECK_FALSE(holds(fixtures::s3(), p));
    CHECK_FALSE(holds(fixtures::dihedral8(), p));
    CHECK_FALSE(holds(fixtures::quaternion8(), p));
  }
}

TEST_CASE("a nonassociative loop fails with a counterexample") {
  const LoopTable L = fixtures::nonassoc5();
  const CheckReport r = check(L, "ASSOCIATIVE");
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  // Reported witness really does break the identity.
  const int x = r.counterexample->at('x');
  const int y = r.counterexample->at('y');
  const int z = r.counterexample->at('z');
  CHECK(L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z)));
  CHECK_FALSE(holds(L, "MIDDLE_BOL"));
}

TEST_CASE("multi-identity entries sum their work") {
  const CheckReport r = check(fixtures::cyclic(4), "MOUFANG");
  CHECK(r.holds);
  CHECK(r.checked_assignments == 2 * 64);  // both Moufang forms, 4^3 each
}

TEST_CASE("PLAP/PRAP demand power associativity first") {
  const CheckReport r = check(fixtures::nonassoc5(), "PLAP(2)");
  CHECK_FALSE(r.holds);
  CHECK(r.code == CheckCode::PreconditionFailed);
  CHECK(r.detail.find("power associativity") != std::string::npos);
  CHECK_FALSE(r.counterexample.has_value());

  CHECK(check(fixtures::quaternion8(), "PLAP(5)").holds);
  CHECK(check(fixtures::s3(), "PRAP(6)").holds);
}

TEST_CASE("middle Bol forms agree on every fixture") {
  auto all = group_fixtures();
  all.push_back(fixtures::nonassoc5());
  for (const LoopTable& L : all) {
    const auto [f2, f3] = is_middle_bol_equivalent_forms(L);
    CAPTURE(L.n());
    CHECK(f2.holds == f3.holds);
    CHECK(f2.holds == holds(L, "MIDDLE_BOL"));
  }
  CHECK(is_middle_bol_equivalent_forms(fixtures::cyclic(5)).first.holds);
  const auto [n2, n3] = is_middle_bol_equivalent_forms(fixtures::nonassoc5());
  CHECK_FALSE(n2.holds);
  CHECK_FALSE(n3.holds);
}

TEST_CASE("classify covers the catalog and the audit stays clean") {
  auto all = group_fixtures();
  all.push_back(fixtures::nonassoc5());
  for (const LoopTable& L : all) {
    const ClassifyResult c = classify(L);
    CAPTURE(L.n());
    CHECK(c.values.size() + c.skipped.size() == default_catalog().size());
    CHECK(c.audit_violations.empty());
  }
  const ClassifyResult bad = classify(fixtures::nonassoc5());
  CHECK(bad.skipped.count("PLAP(2)") == 1);
  CHECK(bad.skipped.count("PRAP(3)") == 1);
  CHECK_FALSE(bad.values.at("ASSOCIATIVE"));

  const ClassifyResult z2 = classify(fixtures::cyclic(2));
  for (const auto& [name, value] : z2.values) {
    CAPTURE(name);
    CHECK(value);  // Z2 satisfies every catalog property
  }
  CHECK(z2.skipped.empty());
}

TEST_CASE("audit flags a fabricated inconsistency") {
  std::map<std::string, bool> v{{"EXTRA", true}, {"MOUFANG", false}};
  const auto violations = audit_implications(v);
  REQUIRE(violations.size() >= 1);
  CHECK(violations[0].find("EXTRA") != std::string::npos);
}

TEST_CASE("catalog dump round-trips through the catalog parser") {
  const std::string text = dump_catalog_text();
  CHECK(text.find("MIDDLE_BOL:") != std::string::npos);
  const auto entries = parse_catalog(text);
  // One line per identity of each non-procedural entry.
  size_t expect = 0;
  for (const auto& p : default_catalog())
    if (!p.procedural) expect += p.identities.size();
  CHECK(entries.size() == expect);
  for (const auto& e : entries) {
    const auto p = find_property(e.name);
    REQUIRE(p.has_value());
    bool found = false;
    for (const Identity& id : p->identities)
      found = found || (structurally_equal(*id.lhs, *e.id.lhs) &&
                        structurally_equal(*id.rhs, *e.id.rhs));
    CHECK(found);
  }
}
