// loops_cli -- command-line surface for the loop toolkit.
//
// Exit codes: 0 = all checks passed / search completed, 1 = a checked claim
// failed (counterexample found, verification failure, non-isomorphic pair),
// 2 = usage or input error (malformed table, unparsable identity, unknown
// property, out-of-range arguments).
//
// Identity strings use `\` for left division literally. Most shells treat
// backslash as an escape character, so quote the identity with single
// quotes:   loops_cli check --table z4.json --identity 'x(yz\x) = (x/z)(y\x)'

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loops/construct.hpp"
#include "loops/properties.hpp"
#include "loops/search.hpp"
#include "loops/table.hpp"
#include "loops/term.hpp"
#include "loops/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// Orders accept comma lists and A..B ranges: "2..5", "2,4,6", "2..4,8".
std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  for (const std::string& tok : split_csv(s)) {
    const auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(tok));
      continue;
    }
    const int lo = std::stoi(tok.substr(0, dots));
    const int hi = std::stoi(tok.substr(dots + 2));
    if (hi < lo)
      throw loops::LoopError(loops::Err::BadInput, "empty order range " + tok);
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  }
  if (out.empty())
    throw loops::LoopError(loops::Err::BadInput, "no orders given");
  return out;
}

std::string show_assignment(const loops::Assignment& a) {
  std::string s;
  for (const auto& [v, val] : a) {
    if (!s.empty()) s += " ";
    s += std::string(1, v) + "=" + std::to_string(val);
  }
  return s;
}

int report_check(const loops::CheckReport& rep) {
  if (rep.code == loops::CheckCode::PreconditionFailed) {
    std::cout << "precondition failed: " << rep.detail << "\n";
    return kClaimFailed;
  }
  if (rep.holds) {
    std::cout << "holds (" << rep.checked_assignments
              << " assignments checked)\n";
    return kOk;
  }
  std::cout << "fails";
  if (rep.counterexample)
    std::cout << " at " << show_assignment(*rep.counterexample);
  if (rep.code == loops::CheckCode::InvUndefined)
    std::cout << " (inverse undefined)";
  if (!rep.detail.empty()) std::cout << " -- " << rep.detail;
  std::cout << "\n";
  return kClaimFailed;
}

struct Args {
  std::string table, table2, prop, identity, from, corpus, json_path;
  std::string dir = "corpus";
  std::string orders, classes, require, forbid;
  int order = 0, a = 0, b = 0;
  long long limit = -1, budget = -1;
  bool dedup = false;
};

int cmd_check(const Args& g) {
  const loops::LoopTable L = loops::load_table_file(g.table);
  if (!g.prop.empty()) {
    const auto def = loops::find_property(g.prop);
    if (!def)
      throw loops::LoopError(loops::Err::BadInput,
                             "unknown property " + g.prop);
    return report_check(loops::check(L, *def));
  }
  return report_check(
      loops::check_identity(loops::parse_identity(g.identity), L));
}

int cmd_classify(const Args& g) {
  const loops::LoopTable L = loops::load_table_file(g.table);
  const loops::ClassifyResult r = loops::classify(L);
  std::cout << "order " << L.n() << "\n";
  for (const auto& [name, holds] : r.values)
    std::cout << name << ": " << (holds ? "holds" : "fails") << "\n";
  for (const auto& [name, why] : r.skipped)
    std::cout << name << ": skipped (" << why << ")\n";
  for (const std::string& v : r.audit_violations)
    std::cout << "AUDIT VIOLATION: " << v << "\n";
  return r.audit_violations.empty() ? kOk : kClaimFailed;
}

int cmd_search(const Args& g) {
  loops::SearchSpec spec;
  spec.order = g.order;
  spec.require = split_csv(g.require);
  spec.forbid = split_csv(g.forbid);
  spec.dedup = g.dedup;
  if (g.limit >= 0) spec.limit = g.limit;
  if (g.budget >= 0) spec.budget = g.budget;
  const loops::SearchResult res = loops::enumerate(spec);
  std::cout << "found " << res.loops.size() << " loop(s), nodes explored "
            << res.nodes_explored << ", space "
            << (res.complete ? "exhausted" : "not exhausted") << "\n";
  for (size_t i = 0; i < res.loops.size(); ++i)
    std::cout << "# loop " << i << "\n"
              << loops::to_json(res.loops[i]) << "\n";
  return kOk;
}

int cmd_construct(const Args& g) {
  const loops::LoopTable L = loops::load_table_file(g.table);
  loops::LoopTable out;
  if (g.from == "right-bol")
    out = loops::middle_from_right_bol(L);
  else if (g.from == "left-bol")
    out = loops::middle_from_left_bol(L);
  else
    throw loops::LoopError(loops::Err::BadInput,
                           "--from must be right-bol or left-bol");
  std::cout << loops::to_json(out) << "\n";
  return kOk;
}

int cmd_isotope(const Args& g) {
  const loops::LoopTable L = loops::load_table_file(g.table);
  std::cout << loops::to_json(loops::principal_isotope(L, g.a, g.b)) << "\n";
  return kOk;
}

int cmd_iso(const Args& g) {
  const loops::LoopTable A = loops::load_table_file(g.table);
  const loops::LoopTable B = loops::load_table_file(g.table2);
  const auto phi = loops::are_isomorphic(A, B);
  if (!phi) {
    std::cout << "not isomorphic\n";
    return kClaimFailed;
  }
  std::cout << "isomorphic via";
  for (size_t i = 0; i < phi->size(); ++i)
    std::cout << " " << i << "->" << (*phi)[i];
  std::cout << "\n";
  return kOk;
}

int cmd_verify(const Args& g) {
  const loops::VerifyReport rep = loops::verify_lemmas_dir(g.corpus);
  std::cout << loops::summary_text(rep);
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path);
    if (!out)
      throw loops::LoopError(loops::Err::BadInput,
                             "cannot write " + g.json_path);
    out << loops::to_json(rep);
    std::cout << "json report written to " << g.json_path << "\n";
  }
  return rep.all_ok() ? kOk : kClaimFailed;
}

int cmd_corpus_build(const Args& g) {
  const std::vector<int> ords = parse_orders(g.orders);
  const std::vector<std::string> cls = split_csv(g.classes);
  if (cls.empty())
    throw loops::LoopError(loops::Err::BadInput, "no classes given");
  const auto sets = loops::build_corpus(g.dir, ords, cls);
  for (const auto& s : sets)
    std::cout << s.cls << " n" << s.order << ": " << s.count << " loop(s), "
              << (s.complete ? "complete" : "incomplete") << " (" << s.method
              << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite loop toolkit: check identities and properties on Cayley "
      "tables, search for loops under constraints, construct middle Bol "
      "loops from one-sided Bol loops, and verify the lemma catalog over a "
      "corpus.\n"
      "Identity syntax: juxtaposition multiplies (left-assoc), '\\' and '/' "
      "are left and right division, postfix ' is the two-sided inverse, 'e' "
      "the identity constant. The backslash is part of the identity syntax, "
      "so quote identities in the shell with single quotes:\n"
      "  loops_cli check --table z4.json --identity 'x(yz\\x) = (x/z)(y\\x)'"};
  app.require_subcommand(1);
  Args g;

  CLI::App* c_check = app.add_subcommand(
      "check", "Check one property or one identity on a table file");
  c_check->add_option("--table", g.table, "loop table file (json or text)")
      ->required();
  CLI::Option* o_prop =
      c_check->add_option("--prop", g.prop, "catalog property name");
  CLI::Option* o_ident = c_check->add_option(
      "--identity", g.identity,
      "identity string, e.g. 'x(yz\\x) = (x/z)(y\\x)'");
  o_prop->excludes(o_ident);

  CLI::App* c_classify = app.add_subcommand(
      "classify", "Evaluate the whole property catalog on a table file");
  c_classify->add_option("--table", g.table, "loop table file")->required();

  CLI::App* c_search = app.add_subcommand(
      "search", "Enumerate loops of one order under constraints");
  c_search->add_option("--order", g.order, "loop order (1..10)")->required();
  c_search->add_option("--require", g.require,
                       "comma list of property names or identities");
  c_search->add_option("--forbid", g.forbid,
                       "comma list that must fail on every hit");
  c_search->add_flag("--dedup", g.dedup, "emit one loop per isomorphism class");
  c_search->add_option("--limit", g.limit, "stop after this many loops");
  c_search->add_option("--budget", g.budget, "stop after this many nodes");

  CLI::App* c_construct = app.add_subcommand(
      "construct", "Build the middle Bol image of a one-sided Bol loop");
  c_construct
      ->add_option("--from", g.from, "source class: right-bol | left-bol")
      ->required();
  c_construct->add_option("--table", g.table, "loop table file")->required();

  CLI::App* c_isotope = app.add_subcommand(
      "isotope", "Principal isotope x o y = (x/b)(a\\y), renormalized");
  c_isotope->add_option("--table", g.table, "loop table file")->required();
  c_isotope->add_option("--a", g.a, "column element a")->required();
  c_isotope->add_option("--b", g.b, "row element b")->required();

  CLI::App* c_iso =
      app.add_subcommand("iso", "Decide isomorphism of two loop tables");
  c_iso->add_option("--table", g.table, "first table")->required();
  c_iso->add_option("--table2", g.table2, "second table")->required();

  CLI::App* c_verify = app.add_subcommand(
      "verify-lemmas", "Run every lemma suite over a corpus directory");
  c_verify->add_option("--corpus", g.corpus, "corpus directory")->required();
  c_verify->add_option("--json", g.json_path, "write the structured report");

  CLI::App* c_corpus = app.add_subcommand("corpus", "Corpus maintenance");
  CLI::App* c_build = c_corpus->add_subcommand(
      "build", "Enumerate/construct loops into <dir>/<class>/n<order>/");
  c_build->add_option("--dir", g.dir, "corpus directory (default: corpus)");
  c_build
      ->add_option("--orders", g.orders, "orders, e.g. '2..8' or '2,4,6'")
      ->required();
  c_build
      ->add_option("--classes", g.classes,
                   "comma list of class names, e.g. MIDDLE_BOL,RIGHT_BOL")
      ->required();
  c_corpus->require_subcommand(1);

  CLI::App* c_dump = app.add_subcommand(
      "dump-catalog", "Print the built-in property catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the usage diagnostic
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (c_check->parsed()) {
      if (g.prop.empty() == g.identity.empty()) {
        std::cerr << "check needs exactly one of --prop / --identity\n";
        return kUsage;
      }
      return cmd_check(g);
    }
    if (c_classify->parsed()) return cmd_classify(g);
    if (c_search->parsed()) return cmd_search(g);
    if (c_construct->parsed()) return cmd_construct(g);
    if (c_isotope->parsed()) return cmd_isotope(g);
    if (c_iso->parsed()) return cmd_iso(g);
    if (c_verify->parsed()) return cmd_verify(g);
    if (c_corpus->parsed() && c_build->parsed()) return cmd_corpus_build(g);
    if (c_dump->parsed()) {
      std::cout << loops::dump_catalog_text();
      return kOk;
    }
  } catch (const loops::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const loops::LoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << "no subcommand\n";
  return kUsage;
}
