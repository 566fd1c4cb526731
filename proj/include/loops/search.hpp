// search.hpp -- exhaustive enumeration of loops by backtracking, plus the
// corpus builder used by the verification harness.
//
// The enumerator fills the Cayley table cell by cell in row-major order with
// row 0 and column 0 fixed to the identity pattern, maintaining row/column
// candidate bitmasks. Multiplication-only constraints (ASSOCIATIVE,
// LEFT_BOL, RIGHT_BOL) prune partial tables incrementally; everything else
// (division-based identities, inverse properties) is decided on completed
// tables only. Every emitted loop is re-validated and re-checked through
// the independent properties engine, so the pruning is never trusted.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/table.hpp"

namespace loops {

struct SearchSpec {
  int order = 1;
  std::vector<std::string> require;  // property names or raw "lhs = rhs"
  std::vector<std::string> forbid;   // must fail on every emitted loop
  bool dedup = false;                // canonical-form dedup (order <= 8)
  std::optional<long long> limit;    // max emitted loops
  std::optional<long long> budget;   // max explored nodes
};

struct SearchResult {
  std::vector<LoopTable> loops;
  long long nodes_explored = 0;
  bool complete = false;  // true iff the space was exhausted within budget
};

// Hard cap: order <= 10. Unconstrained specs at order >= 7 must carry a
// limit or budget (EmptyRequireWithDedupOverflow / BadInput guards).
SearchResult enumerate(const SearchSpec& spec);

// --- corpus ---------------------------------------------------------------
// Layout: <dir>/<class>/n<order>/<index>.json with a manifest.json beside
// the tables ({class, order, complete, count, spec_hash, method}) and an
// aggregated manifest.json at <dir> root.

struct CorpusSetInfo {
  std::string cls;
  int order = 0;
  bool complete = false;
  long long count = 0;
  std::string spec_hash;
  std::string method;  // exhaustive | pruned-exhaustive | images+bounded | ...
};

struct CorpusEntry {
  std::string cls;
  int order = 0;
  int index = 0;
  std::string id;  // "<class>/n<order>/<index>"
  LoopTable table;
};

// Orders <= 6: exhaustive with dedup. Higher orders: pruned exhaustive
// search where an incremental constraint exists (the Bol classes,
// ASSOCIATIVE), otherwise constructed images from right Bol loops (for
// MIDDLE_BOL) merged with a budgeted direct search, with honest
// completeness flags either way.
std::vector<CorpusSetInfo> build_corpus(const std::string& dir,
                                        const std::vector<int>& orders,
                                        const std::vector<std::string>& classes);

std::vector<CorpusEntry> load_corpus(const std::string& dir);
std::vector<CorpusSetInfo> read_manifests(const std::string& dir);

}  // namespace loops
