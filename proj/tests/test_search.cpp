// Unit tests for exhaustive loop enumeration, dedup, search guards, and the
// corpus builder.  Expected counts are classical classification results:
// loops up to isomorphism number 1,1,1,2,6,109 for orders 1..6, and the
// reduced Latin squares of orders 4 and 5 number 4 and 56.

#include <filesystem>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "loops/construct.hpp"
#include "loops/properties.hpp"
#include "loops/search.hpp"

using namespace loops;

namespace {

SearchResult run(int order, std::vector<std::string> require = {},
                 std::vector<std::string> forbid = {}, bool dedup = true,
                 std::optional<long long> limit = std::nullopt,
                 std::optional<long long> budget = std::nullopt) {
  SearchSpec s;
  s.order = order;
  s.require = std::move(require);
  s.forbid = std::move(forbid);
  s.dedup = dedup;
  s.limit = limit;
  s.budget = budget;
  return enumerate(s);
}

Err thrown(const SearchSpec& s) {
  try {
    (void)enumerate(s);
  } catch (const LoopError& e) {
    return e.code();
  }
  FAIL("expected LoopError");
  return Err::BadInput;
}

}  // namespace

TEST_CASE("loop counts up to isomorphism match the classification") {
  const int expected[] = {0, 1, 1, 1, 2, 6, 109};
  for (int n = 1; n <= 6; ++n) {
    SearchResult r = run(n);
    CAPTURE(n);
    CHECK(r.loops.size() == static_cast<size_t>(expected[n]));
    CHECK(r.complete);
  }
}

TEST_CASE("raw enumeration counts reduced Latin squares") {
  CHECK(run(4, {}, {}, false).loops.size() == 4);
  CHECK(run(5, {}, {}, false).loops.size() == 56);
}

TEST_CASE("group counts match the classification") {
  CHECK(run(4, {"ASSOCIATIVE"}).loops.size() == 2);
  CHECK(run(5, {"ASSOCIATIVE"}).loops.size() == 1);
  CHECK(run(6, {"ASSOCIATIVE"}).loops.size() == 2);
}

TEST_CASE("the only right Bol loop of order 7 is the cyclic group") {
  SearchResult r = run(7, {"RIGHT_BOL"});
  REQUIRE(r.loops.size() == 1);
  CHECK(r.complete);
  CHECK(are_isomorphic(r.loops[0], fixtures::cyclic(7)).has_value());
}

TEST_CASE("a nonassociative right Bol loop of order 8 is found instantly") {
  SearchResult r = run(8, {"RIGHT_BOL"}, {"ASSOCIATIVE"}, false, 1);
  REQUIRE(r.loops.size() == 1);
  CHECK_FALSE(r.complete);  // stopped by the limit
  CHECK(check(r.loops[0], "RIGHT_BOL").holds);
  CHECK_FALSE(check(r.loops[0], "ASSOCIATIVE").holds);
}

TEST_CASE("no nonassociative middle Bol loop exists below order 7") {
  for (int n = 4; n <= 6; ++n) {
    SearchResult r = run(n, {"MIDDLE_BOL"}, {"ASSOCIATIVE"});
    CAPTURE(n);
    CHECK(r.loops.empty());
    CHECK(r.complete);
  }
}

TEST_CASE("middle Bol loops of order at most 6 are exactly the groups") {
  const int expected[] = {0, 1, 1, 1, 2, 1, 2};
  for (int n = 1; n <= 6; ++n) {
    SearchResult mbl = run(n, {"MIDDLE_BOL"});
    CAPTURE(n);
    CHECK(mbl.loops.size() == static_cast<size_t>(expected[n]));
    for (const LoopTable& L : mbl.loops)
      CHECK(check(L, "ASSOCIATIVE").holds);
  }
}

TEST_CASE("every emitted loop satisfies the requirements") {
  SearchResult r = run(5, {"FLEXIBLE"}, {"COMMUTATIVE"});
  CHECK(r.complete);
  for (const LoopTable& L : r.loops) {
    CHECK(check(L, "FLEXIBLE").holds);
    CHECK_FALSE(check(L, "COMMUTATIVE").holds);
  }
}

TEST_CASE("dedup output is pairwise non-isomorphic") {
  SearchResult r = run(5);
  REQUIRE(r.loops.size() == 6);
  for (size_t i = 0; i < r.loops.size(); ++i)
    for (size_t j = i + 1; j < r.loops.size(); ++j)
      CHECK_FALSE(are_isomorphic(r.loops[i], r.loops[j]));
}

TEST_CASE("searches are deterministic") {
  SearchResult a = run(5, {"LIP"});
  SearchResult b = run(5, {"LIP"});
  REQUIRE(a.loops.size() == b.loops.size());
  for (size_t i = 0; i < a.loops.size(); ++i) CHECK(a.loops[i] == b.loops[i]);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("adding a requirement can only shrink the result") {
  SearchResult loose = run(6, {"MIDDLE_BOL"});
  SearchResult tight = run(6, {"MIDDLE_BOL", "COMMUTATIVE"});
  CHECK(tight.loops.size() < loose.loops.size());
  // The representative of each surviving class is rediscovered verbatim: the
  // extra requirement only filters leaves, it does not reorder the search.
  for (const LoopTable& t : tight.loops) {
    bool found = false;
    for (const LoopTable& l : loose.loops) found = found || t == l;
    CHECK(found);
  }
}

TEST_CASE("requirements may be raw identities") {
  SearchResult named = run(4, {"COMMUTATIVE"}, {}, false);
  SearchResult raw = run(4, {"xy = yx"}, {}, false);
  CHECK(named.loops.size() == 4);  // all 4 reduced squares are abelian groups
  REQUIRE(raw.loops.size() == named.loops.size());
  for (size_t i = 0; i < raw.loops.size(); ++i)
    CHECK(raw.loops[i] == named.loops[i]);
}

TEST_CASE("limit and budget stop the search and clear the complete flag") {
  SearchResult lim = run(6, {}, {}, false, 5);
  CHECK(lim.loops.size() == 5);
  CHECK_FALSE(lim.complete);

  SearchResult bud = run(5, {}, {}, false, std::nullopt, 10);
  CHECK_FALSE(bud.complete);
  CHECK(bud.nodes_explored <= 11);  // stops right after exceeding the budget
}

TEST_CASE("searches above the order cap are rejected") {
  SearchSpec s;
  s.order = 11;
  CHECK(thrown(s) == Err::OrderTooLarge);
  s.order = 16;
  CHECK(thrown(s) == Err::OrderTooLarge);
  s.order = 0;
  CHECK(thrown(s) == Err::BadInput);
}

TEST_CASE("dedup is rejected above the canonical-form bound") {
  SearchSpec s;
  s.order = 9;
  s.dedup = true;
  s.budget = 1000;
  CHECK(thrown(s) == Err::OrderTooLarge);
}

TEST_CASE("unbounded unprunable searches at order 7+ are rejected") {
  SearchSpec s;
  s.order = 7;
  s.dedup = true;  // empty require + dedup: would enumerate all 7-loops
  CHECK(thrown(s) == Err::EmptyRequireWithDedupOverflow);

  s.require = {"MIDDLE_BOL"};  // not prunable cell-by-cell
  s.dedup = false;
  CHECK(thrown(s) == Err::BadInput);

  s.budget = 50'000;  // bounded version is accepted
  SearchResult r = enumerate(s);
  CHECK_FALSE(r.complete);
}

TEST_CASE("conflicting require and forbid lists are rejected") {
  SearchSpec s;
  s.order = 4;
  s.require = {"FLEXIBLE"};
  s.forbid = {"FLEXIBLE"};
  CHECK(thrown(s) == Err::BadInput);
  s.forbid = {"NO_SUCH_PROPERTY"};
  CHECK(thrown(s) == Err::BadInput);
}

TEST_CASE("corpus build and reload round-trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "loops_corpus_test";
  fs::remove_all(dir);

  std::vector<CorpusSetInfo> infos =
      build_corpus(dir.string(), {2, 3, 4, 5}, {"ASSOCIATIVE", "MIDDLE_BOL"});
  CHECK(infos.size() == 8);
  for (const CorpusSetInfo& i : infos) {
    CAPTURE(i.cls);
    CAPTURE(i.order);
    CHECK(i.complete);
    CHECK_FALSE(i.spec_hash.empty());
  }

  std::vector<CorpusEntry> entries = load_corpus(dir.string());
  // Groups: 1,1,2,1.  Middle Bol coincides with groups at these orders.
  CHECK(entries.size() == 10);
  std::set<std::string> ids;
  for (const CorpusEntry& e : entries) {
    ids.insert(e.id);
    CHECK(e.table.n() == e.order);
    CHECK(e.id == e.cls + "/n" + std::to_string(e.order) + "/" +
                      std::to_string(e.index));
    if (e.cls == "ASSOCIATIVE") CHECK(check(e.table, "ASSOCIATIVE").holds);
    if (e.cls == "MIDDLE_BOL") CHECK(check(e.table, "MIDDLE_BOL").holds);
  }
  CHECK(ids.size() == entries.size());

  std::vector<CorpusSetInfo> manifests = read_manifests(dir.string());
  CHECK(manifests.size() == infos.size());
  for (const CorpusSetInfo& m : manifests) {
    CHECK((m.cls == "ASSOCIATIVE" || m.cls == "MIDDLE_BOL"));
    CHECK(m.count >= 1);
  }

  // Rebuilding one set replaces its files in place; other sets persist.
  std::vector<CorpusSetInfo> again =
      build_corpus(dir.string(), {4}, {"ASSOCIATIVE"});
  CHECK(again.size() == 1);
  CHECK(load_corpus(dir.string()).size() == entries.size());
  CHECK(read_manifests(dir.string()).size() == infos.size());
  fs::remove_all(dir);
}

TEST_CASE("order-9 corpus set is bounded, group-seeded and iso-deduped") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "loops_corpus_n9_test";
  fs::remove_all(dir);

  std::vector<CorpusSetInfo> infos =
      build_corpus(dir.string(), {9}, {"MIDDLE_BOL"});
  REQUIRE(infos.size() == 1);
  CHECK_FALSE(infos[0].complete);  // honest flag: bounded search semantics
  CHECK(infos[0].method == "images+bounded");

  // The bounded sweep reaches exactly the two groups of order 9 (as bridge
  // images); iso-dedup must collapse the hundreds of relabelings it emits.
  std::vector<CorpusEntry> entries = load_corpus(dir.string());
  REQUIRE(entries.size() == 2);
  for (const CorpusEntry& e : entries) {
    CHECK(check(e.table, "MIDDLE_BOL").holds);
    CHECK(check(e.table, "ASSOCIATIVE").holds);
  }
  CHECK_FALSE(are_isomorphic(entries[0].table, entries[1].table).has_value());
  fs::remove_all(dir);
}
