#include <random>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "loops/table.hpp"
#include "loops/term.hpp"
#include "naive_eval.hpp"

using namespace loops;

namespace {

// Full-strength comparison of the two code paths on one (identity, loop)
// pair: outcome, failure class, least counterexample and the number of
// assignments visited must all coincide.
void expect_same(const Identity& id, const LoopTable& L) {
  const CheckReport ref = check_identity(id, L);
  const naive::Report oracle = naive::check(id, L);
  CAPTURE(print_identity(id));
  CAPTURE(L.n());
  REQUIRE(ref.code != CheckCode::PreconditionFailed);  // plain identities only
  CHECK(ref.holds == oracle.holds);
  CHECK(ref.checked_assignments == oracle.checked);
  CHECK((ref.code == CheckCode::InvUndefined) == oracle.inv_undefined);
  REQUIRE(ref.counterexample.has_value() == oracle.counterexample.has_value());
  if (ref.counterexample) CHECK(*ref.counterexample == *oracle.counterexample);
}

}  // namespace

TEST_CASE("naive division scans match the precomputed tables") {
  for (const LoopTable& L :
       {fixtures::s3(), fixtures::nonassoc5(), fixtures::cyclic(5)})
    for (int x = 0; x < L.n(); ++x)
      for (int y = 0; y < L.n(); ++y) {
        CHECK(naive::ldiv_scan(L, x, y) == L.ldiv(x, y));
        CHECK(naive::rdiv_scan(L, x, y) == L.rdiv(x, y));
      }
}

TEST_CASE("both paths agree on handwritten identities") {
  const Identity mbol = parse_identity("x(yz\\x) = (x/z)(y\\x)");
  const Identity assoc = parse_identity("(xy)z = x(yz)");
  const Identity inv_left = parse_identity("x' x = e");
  const Identity silly = parse_identity("x/(y\\x) = (x y)'");
  for (const LoopTable& L :
       {fixtures::cyclic(1), fixtures::cyclic(4), fixtures::klein4(),
        fixtures::s3(), fixtures::dihedral8(), fixtures::quaternion8(),
        fixtures::nonassoc5()}) {
    expect_same(mbol, L);
    expect_same(assoc, L);
    expect_same(inv_left, L);  // exercises inverse-undefined agreement
    expect_same(silly, L);
  }
}

TEST_CASE("random loop generator emits valid loops of the requested order") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const LoopTable L = testgen::random_loop(rng, n);
      CHECK(L.n() == n);
      for (int x = 0; x < n; ++x) {
        CHECK(L.mul(0, x) == x);
        CHECK(L.mul(x, 0) == x);
      }
    }
}

TEST_CASE("check_identity matches the oracle on 1000 random triples") {
  std::mt19937 rng(20260814);  // pinned: the run is reproducible
  std::uniform_int_distribution<int> order(1, 5);
  int holds_count = 0, fails_count = 0, undefined_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = order(rng);
    const LoopTable L = testgen::random_loop(rng, n);
    const Identity id = testgen::random_identity(rng);
    const CheckReport ref = check_identity(id, L);
    const naive::Report oracle = naive::check(id, L);
    CAPTURE(trial);
    CAPTURE(print_identity(id));
    CAPTURE(n);
    REQUIRE(ref.holds == oracle.holds);
    REQUIRE(ref.checked_assignments == oracle.checked);
    REQUIRE((ref.code == CheckCode::InvUndefined) == oracle.inv_undefined);
    REQUIRE(ref.counterexample.has_value() ==
            oracle.counterexample.has_value());
    if (ref.counterexample) REQUIRE(*ref.counterexample == *oracle.counterexample);
    if (ref.holds)
      ++holds_count;
    else if (ref.code == CheckCode::InvUndefined)
      ++undefined_count;
    else
      ++fails_count;
  }
  // The sample must genuinely exercise all three outcome classes.
  CHECK(holds_count > 50);
  CHECK(fails_count > 50);
  CHECK(undefined_count > 5);
}
