#include "loops/verify.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "loops/properties.hpp"

namespace fs = std::filesystem;

namespace loops {

namespace {

// Lemma L2: the two division renderings of the defining identity agree on
// every loop, middle Bol or not.
ItemResult equivalent_forms_item(const LoopTable& L) {
  ItemResult r;
  r.lemma_id = "L2";
  r.item = "agreement";
  r.equation =
      "[x ((y z) \\ x) = (x / z) (y \\ x)]  <=>  "
      "[(x / (y z)) x = (x / z) (y \\ x)]";
  const auto [form2, form3] = is_middle_bol_equivalent_forms(L);
  r.lhs = form2.holds;
  r.rhs = form3.holds;
  r.agree = r.lhs == r.rhs;
  if (!r.agree) {
    std::ostringstream os;
    os << "form2=" << (r.lhs ? "holds" : "fails") << ", form3="
       << (r.rhs ? "holds" : "fails");
    const auto& failing = r.lhs ? form3 : form2;
    if (failing.counterexample) {
      os << " (first disagreement at";
      for (const auto& [v, val] : *failing.counterexample)
        os << " " << v << "=" << val;
      os << ")";
    }
    r.witness = os.str();
  }
  return r;
}

struct CoverageKey {
  std::string lemma_id, item;
  bool operator<(const CoverageKey& o) const {
    return lemma_id != o.lemma_id ? lemma_id < o.lemma_id : item < o.item;
  }
};

}  // namespace

VerifyReport verify_lemmas(
    const std::vector<std::pair<std::string, LoopTable>>& loops, int n_max) {
  VerifyReport rep;
  std::map<CoverageKey, CoverageEntry> cov;

  // Suite evaluation is a pure function of an immutable table, so loops are
  // distributed over a worker pool; aggregation below runs in input order
  // and the records are sorted afterwards, so the report is byte-identical
  // regardless of scheduling.
  std::vector<std::vector<ItemResult>> per_loop(loops.size());
  std::vector<std::optional<std::string>> per_loop_error(loops.size());
  {
    const size_t workers =
        std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                         loops.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t k = next.fetch_add(1); k < loops.size();
             k = next.fetch_add(1)) {
          try {
            std::vector<ItemResult> items;
            items.push_back(equivalent_forms_item(loops[k].second));
            for (const SuiteReport& s : all_suites(loops[k].second, n_max))
              for (const ItemResult& i : s.items) items.push_back(i);
            per_loop[k] = std::move(items);
          } catch (const std::exception& e) {  // unreachable on valid tables
            per_loop_error[k] = e.what();
          }
        }
      });
    for (std::thread& t : pool) t.join();
  }

  for (size_t k = 0; k < loops.size(); ++k) {
    const std::string& id = loops[k].first;
    if (per_loop_error[k]) {
      rep.errors.push_back(id + ": " + *per_loop_error[k]);
      continue;
    }
    ++rep.loops_checked;
    for (ItemResult& i : per_loop[k]) {
      if (i.informational) {
        rep.records.push_back({id, std::move(i)});
        continue;
      }
      CoverageEntry& c = cov[{i.lemma_id, i.item}];
      c.lemma_id = i.lemma_id;
      c.item = i.item;
      if (i.skipped) {
        ++c.skipped;
        if (std::find(c.skip_reasons.begin(), c.skip_reasons.end(),
                      i.skip_reason) == c.skip_reasons.end())
          c.skip_reasons.push_back(i.skip_reason);
      } else {
        ++c.checked;
        ++(i.lhs ? c.lhs_true : c.lhs_false);
        if (!i.agree) ++rep.failures;
      }
      rep.records.push_back({id, std::move(i)});
    }
  }

  std::sort(rep.records.begin(), rep.records.end(),
            [](const LemmaRecord& a, const LemmaRecord& b) {
              if (a.loop_id != b.loop_id) return a.loop_id < b.loop_id;
              if (a.item.lemma_id != b.item.lemma_id)
                return a.item.lemma_id < b.item.lemma_id;
              return a.item.item < b.item.item;
            });

  for (auto& [key, entry] : cov) {
    std::sort(entry.skip_reasons.begin(), entry.skip_reasons.end());
    if (entry.checked == 0) {
      std::string why = entry.skip_reasons.empty()
                            ? std::string("never evaluated")
                            : entry.skip_reasons.front();
      for (size_t i = 1; i < entry.skip_reasons.size(); ++i)
        why += "; " + entry.skip_reasons[i];
      rep.uncovered.push_back(key.lemma_id + " " + key.item + ": " + why);
    }
    rep.coverage.push_back(std::move(entry));
  }
  return rep;
}

VerifyReport verify_lemmas_dir(const std::string& corpus_dir, int n_max) {
  std::vector<std::pair<std::string, LoopTable>> loops;
  std::vector<std::string> errors;
  std::vector<fs::path> files;
  if (!fs::exists(corpus_dir)) {
    VerifyReport rep;
    rep.errors.push_back(corpus_dir + ": no such corpus directory");
    return rep;
  }
  for (const auto& e : fs::recursive_directory_iterator(corpus_dir)) {
    if (!e.is_regular_file()) continue;
    const fs::path& p = e.path();
    if (p.extension() != ".json" || p.filename() == "manifest.json") continue;
    files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& p : files) {
    const std::string id =
        fs::relative(p, corpus_dir).replace_extension("").generic_string();
    try {
      loops.emplace_back(id, load_table_file(p.string()));
    } catch (const std::exception& ex) {
      errors.push_back(id + ": " + ex.what());
    }
  }
  VerifyReport rep = verify_lemmas(loops, n_max);
  rep.errors.insert(rep.errors.begin(), errors.begin(), errors.end());
  return rep;
}

std::string to_json(const VerifyReport& rep) {
  nlohmann::json j;
  j["loops_checked"] = rep.loops_checked;
  j["failures"] = rep.failures;
  j["errors"] = rep.errors;
  j["uncovered"] = rep.uncovered;
  j["records"] = nlohmann::json::array();
  for (const LemmaRecord& r : rep.records) {
    nlohmann::json e;
    e["loop_id"] = r.loop_id;
    e["lemma_id"] = r.item.lemma_id;
    e["item"] = r.item.item;
    e["equation"] = r.item.equation;
    e["lhs"] = r.item.lhs;
    e["rhs"] = r.item.rhs;
    e["agree"] = r.item.agree;
    e["holds"] = r.item.agree;  // identity items: one truth value
    e["skipped"] = r.item.skipped;
    if (r.item.skipped) e["skip_reason"] = r.item.skip_reason;
    e["witness"] = r.item.witness;
    e["informational"] = r.item.informational;
    j["records"].push_back(std::move(e));
  }
  j["coverage"] = nlohmann::json::array();
  for (const CoverageEntry& c : rep.coverage) {
    nlohmann::json e;
    e["lemma_id"] = c.lemma_id;
    e["item"] = c.item;
    e["checked"] = c.checked;
    e["skipped"] = c.skipped;
    e["lhs_true"] = c.lhs_true;
    e["lhs_false"] = c.lhs_false;
    e["skip_reasons"] = c.skip_reasons;
    j["coverage"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string summary_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "loops checked: " << rep.loops_checked << "\n";

  // Per-lemma tallies over non-informational records.
  std::map<std::string, std::array<int, 3>> tally;  // lemma -> {ok, fail, skip}
  for (const LemmaRecord& r : rep.records) {
    if (r.item.informational) continue;
    auto& t = tally[r.item.lemma_id];
    if (r.item.skipped)
      ++t[2];
    else if (r.item.agree)
      ++t[0];
    else
      ++t[1];
  }
  for (const auto& [lemma, t] : tally)
    os << "  " << lemma << ": " << t[0] << " ok, " << t[1] << " failed, "
       << t[2] << " skipped\n";

  if (!rep.errors.empty()) {
    os << "corpus errors:\n";
    for (const std::string& e : rep.errors) os << "  " << e << "\n";
  }
  for (const LemmaRecord& r : rep.records)
    if (!r.item.skipped && !r.item.informational && !r.item.agree)
      os << "FAIL " << r.loop_id << " " << r.item.lemma_id << " "
         << r.item.item << "  [" << r.item.equation << "]  " << r.item.witness
         << "\n";
  if (!rep.uncovered.empty()) {
    os << "conditional items never exercised on this corpus:\n";
    for (const std::string& u : rep.uncovered) os << "  " << u << "\n";
  }
  os << (rep.all_ok() ? "RESULT: all checked items agree"
                      : "RESULT: failures present")
     << "\n";
  return os.str();
}

}  // namespace loops
