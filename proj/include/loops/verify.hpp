// verify.hpp -- corpus-level lemma verification harness.
//
// Runs, for every loop handed to it, the equivalent-forms agreement check
// (lemma L2) and every characterization suite from mappings.hpp (L1, LF1,
// LF2, T-AB, T-PQ, T-AX, T-CHAR, T-N1..T-N4), flattening the results into
// one record per (loop, item) plus a per-item coverage table.  Failures
// are report content, never exceptions; a corrupted corpus file becomes an
// error entry for that file while the rest of the corpus is still checked.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loops/mappings.hpp"
#include "loops/table.hpp"

namespace loops {

struct LemmaRecord {
  std::string loop_id;
  ItemResult item;
};

// Aggregated view of one (lemma, item) claim across the whole corpus.
// checked counts loops where the item actually ran; a conditional item
// with checked == 0 is listed in VerifyReport::uncovered rather than
// silently passing.
struct CoverageEntry {
  std::string lemma_id;
  std::string item;
  int checked = 0;
  int skipped = 0;
  int lhs_true = 0;   // checked loops whose direct/lhs side was true
  int lhs_false = 0;
  std::vector<std::string> skip_reasons;  // distinct, sorted
};

struct VerifyReport {
  std::vector<LemmaRecord> records;  // sorted by loop id, lemma id, item
  std::vector<CoverageEntry> coverage;
  std::vector<std::string> uncovered;  // "<lemma> <item>: <reasons>"
  std::vector<std::string> errors;     // corpus files that failed to load
  int loops_checked = 0;
  int failures = 0;  // checked, non-informational records with agree=false
  bool all_ok() const { return failures == 0 && errors.empty(); }
};

// Core harness over explicitly provided (id, table) pairs.
VerifyReport verify_lemmas(
    const std::vector<std::pair<std::string, LoopTable>>& loops,
    int n_max = 0);

// Walks a corpus directory (corpus/<class>/n<order>/<index>.json) and runs
// the harness over every table it can load.
VerifyReport verify_lemmas_dir(const std::string& corpus_dir, int n_max = 0);

// Structured report: {loops_checked, failures, errors, records, coverage,
// uncovered}; each record is {loop_id, lemma_id, item, equation, lhs, rhs,
// agree, holds, skipped, skip_reason, witness, informational}.
std::string to_json(const VerifyReport& rep);

// Human-readable digest: per-lemma tallies, failures, skip coverage.
std::string summary_text(const VerifyReport& rep);

}  // namespace loops
