// Unit tests for the term language: parsing with the documented precedence
// tiers, printing (round-trip guarantee), evaluation against a table, and
// exhaustive identity checking with least counterexamples.

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "loops/term.hpp"

using namespace loops;

TEST_CASE("parser respects the precedence and associativity tiers") {
  // Documented examples: "x * y/z" is x*(y/z), "x y \ z * w" is ((xy)\z)*w.
  CHECK(structurally_equal(
      *parse_term("x * y/z"),
      *mk_mul(mk_var('x'), mk_rdiv(mk_var('y'), mk_var('z')))));
  CHECK(structurally_equal(
      *parse_term("x y \\ z * w"),
      *mk_mul(mk_ldiv(mk_mul(mk_var('x'), mk_var('y')), mk_var('z')),
              mk_var('w'))));
  // Juxtaposition is left-associative; divisions share one tier, left-assoc.
  CHECK(structurally_equal(*parse_term("xyz"),
                           *parse_term("(xy)z")));
  CHECK(structurally_equal(*parse_term("a\\b/c"),
                           *parse_term("(a\\b)/c")));
  CHECK_FALSE(structurally_equal(*parse_term("xyz"), *parse_term("x(yz)")));
  // Postfix inverse binds tightest; it stacks.
  CHECK(structurally_equal(*parse_term("xy'"),
                           *mk_mul(mk_var('x'), mk_inv(mk_var('y')))));
  CHECK(structurally_equal(*parse_term("(xy)'"),
                           *mk_inv(mk_mul(mk_var('x'), mk_var('y')))));
  CHECK(structurally_equal(*parse_term("x''"), *mk_inv(mk_inv(mk_var('x')))));
  // 'e' is the identity constant, not a variable.
  CHECK(parse_term("e")->kind == TermKind::ConstE);
  CHECK(parse_identity("xe = x").vars == std::vector<char>{'x'});
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS((void)parse_term(""), ParseError);
  CHECK_THROWS_AS((void)parse_term("(x"), ParseError);
  CHECK_THROWS_AS((void)parse_term("x)"), ParseError);
  CHECK_THROWS_AS((void)parse_term("x = y"), ParseError);
  CHECK_THROWS_AS((void)parse_term("x + y"), ParseError);
  CHECK_THROWS_AS((void)parse_term("X"), ParseError);
  CHECK_THROWS_AS((void)parse_identity("x y"), ParseError);
  CHECK_THROWS_AS((void)parse_identity("x = y = z"), ParseError);
  try {
    (void)parse_term("xy)z");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("identity metadata: variable order, occurrences, balance") {
  const Identity id = parse_identity("y(zx) = (xz)y");
  CHECK(id.vars == std::vector<char>{'y', 'z', 'x'});  // first appearance, lhs first
  CHECK(id.occurrences.at('x') == std::pair<int, int>{1, 1});
  CHECK(id.balanced());

  const Identity unb = parse_identity("xx = x");
  CHECK(unb.occurrences.at('x') == std::pair<int, int>{2, 1});
  CHECK_FALSE(unb.balanced());

  // e and ' keep words balanced only if both sides match up.
  CHECK_FALSE(parse_identity("xy' = x").balanced());
  CHECK(parse_identity("x'y = y'x").balanced());
}

TEST_CASE("printer emits juxtaposition that reparses identically") {
  for (const char* src :
       {"x", "e", "xy", "x(yz)", "(xy)z", "x\\y", "x/y", "x\\(y/z)",
        "(x/y)\\z", "x * y/z", "x y \\ z * w", "xy'", "(xy)'", "x''",
        "e'((xy)\\(z/x))'", "x(y(zw))", "((x/(yz))x)'"}) {
    const TermPtr t = parse_term(src);
    const std::string printed = print_term(*t);
    CAPTURE(src);
    CAPTURE(printed);
    CHECK(structurally_equal(*t, *parse_term(printed)));
    CHECK(printed.find('*') == std::string::npos);
  }
  CHECK(print_term(*parse_term("x * y/z")) == "x(y/z)");
  CHECK(print_identity(parse_identity("x y=y x")) == "xy = yx");
}

namespace {

TermPtr random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 1 ? 1 : 5);
  std::uniform_int_distribution<int> var(0, 2);
  switch (kind(rng)) {
    case 0:
      return mk_var(static_cast<char>('x' + var(rng)));
    case 1:
      return mk_e();
    case 2:
      return mk_mul(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 3:
      return mk_ldiv(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 4:
      return mk_rdiv(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default:
      return mk_inv(random_term(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("printer round-trips random ASTs") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    const TermPtr t = random_term(rng, 5);
    const std::string printed = print_term(*t);
    CAPTURE(printed);
    REQUIRE(structurally_equal(*t, *parse_term(printed)));
  }
}

TEST_CASE("evaluation over a cyclic group matches modular arithmetic") {
  const LoopTable z7 = fixtures::cyclic(7);
  const TermPtr t = parse_term("(xy')/(z\\e)");  // x - y + z mod 7
  Assignment env{{'x', 3}, {'y', 5}, {'z', 6}};
  CHECK(eval(*t, z7, env) == 4);
  CHECK(eval(*parse_term("e"), z7, env) == 0);
  CHECK(eval(*parse_term("x'"), z7, env) == 4);
  CHECK_THROWS_AS((void)eval(*parse_term("w"), z7, env), UnboundVarError);
}

TEST_CASE("evaluation refuses the unified inverse where sides differ") {
  const LoopTable L = fixtures::nonassoc5();
  Assignment env{{'x', 2}};
  CHECK_THROWS_AS((void)eval(*parse_term("x'"), L, env), InvUndefinedError);
  try {
    (void)eval(*parse_term("x'"), L, env);
  } catch (const InvUndefinedError& e) {
    CHECK(e.element == 2);
  }
  env['x'] = 1;  // lam(1) == rho(1) == 1
  CHECK(eval(*parse_term("x'"), L, env) == 1);
}

TEST_CASE("check_identity: holds, counts, and least counterexamples") {
  const Identity assoc = parse_identity("(xy)z = x(yz)");

  const CheckReport ok = check_identity(assoc, fixtures::cyclic(6));
  CHECK(ok.holds);
  CHECK(ok.code == CheckCode::Ok);
  CHECK(ok.checked_assignments == 216);
  CHECK_FALSE(ok.counterexample.has_value());

  // First failing triple in lexicographic order (x most significant) is
  // x=1, y=1, z=2: (1*1)*2 = 2 but 1*(1*2) = 4. 25 + 5 + 3 = 33 checks.
  const CheckReport bad = check_identity(assoc, fixtures::nonassoc5());
  CHECK_FALSE(bad.holds);
  CHECK(bad.code == CheckCode::Ok);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->at('x') == 1);
  CHECK(bad.counterexample->at('y') == 1);
  CHECK(bad.counterexample->at('z') == 2);
  CHECK(bad.checked_assignments == 33);
}

TEST_CASE("check_identity flags undefined inverses instead of crashing") {
  const CheckReport rep =
      check_identity(parse_identity("xx' = e"), fixtures::nonassoc5());
  CHECK_FALSE(rep.holds);
  CHECK(rep.code == CheckCode::InvUndefined);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->at('x') == 2);  // first element with lam != rho
  CHECK(rep.checked_assignments == 3);
}

TEST_CASE("ground identities check exactly one assignment") {
  const CheckReport rep = check_identity(parse_identity("e = e\\e"),
                                         fixtures::cyclic(3));
  CHECK(rep.holds);
  CHECK(rep.checked_assignments == 1);
}

TEST_CASE("catalog text parses names and skips comments") {
  const auto cat = parse_catalog(
      "# comment line\n"
      "assoc: (xy)z = x(yz)\n"
      "\n"
      "flex : x(yx) = (xy)x   # trailing note\n");
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].name == "assoc");
  CHECK(cat[1].name == "flex");
  // (xy)x prints without parens: juxtaposition is left-associative anyway.
  CHECK(print_identity(cat[1].id) == "x(yx) = xyx");
  CHECK_THROWS_AS((void)parse_catalog("missing equals sign\n"), LoopError);
}
