#include "loops/properties.hpp"

#include <algorithm>
#include <sstream>

namespace loops {

namespace {

PropertyDef ident(const std::string& name,
                  std::initializer_list<const char*> ids) {
  PropertyDef p;
  p.name = name;
  for (const char* s : ids) p.identities.push_back(parse_identity(s));
  return p;
}

PropertyDef proc(const std::string& name) {
  PropertyDef p;
  p.name = name;
  p.procedural = true;
  return p;
}

std::vector<PropertyDef> build_catalog() {
  std::vector<PropertyDef> c;
  c.push_back(ident("MIDDLE_BOL", {"x((yz)\\x) = (x/z)(y\\x)"}));
  c.push_back(ident("RIGHT_BOL", {"((xy)z)y = x((yz)y)"}));
  c.push_back(ident("LEFT_BOL", {"(x(yx))z = x(y(xz))"}));
  // The two Moufang identities from the Fenyves list; either alone defines
  // Moufang loops, both are kept so a failure names the side that broke.
  c.push_back(ident("MOUFANG", {"(xy)(zx) = (x(yz))x", "(xy)(zx) = x((yz)x)"}));
  c.push_back(ident("EXTRA", {"(xy)(xz) = x((yx)z)", "(yx)(zx) = (y(xz))x"}));
  c.push_back(ident("FLEXIBLE", {"x(yx) = (xy)x"}));
  c.push_back(ident("LAP", {"x(xy) = (xx)y"}));
  c.push_back(ident("RAP", {"(yx)x = y(xx)"}));
  c.push_back(ident("COMMUTATIVE", {"xy = yx"}));
  c.push_back(ident("ASSOCIATIVE", {"(xy)z = x(yz)"}));

  // Fenyves identities, common left sides xy.zx / xy.xz / yx.zx / yx.xz.
  c.push_back(ident("F1", {"(xy)(zx) = ((xy)z)x"}));
  c.push_back(ident("F2", {"(xy)(zx) = (x(yz))x"}));
  c.push_back(ident("F3", {"(xy)(zx) = x(y(zx))"}));
  c.push_back(ident("F4", {"(xy)(zx) = x((yz)x)"}));
  c.push_back(ident("F11", {"(xy)(xz) = ((xy)x)z"}));
  c.push_back(ident("F12", {"(xy)(xz) = (x(yx))z"}));
  c.push_back(ident("F13", {"(xy)(xz) = x((yx)z)"}));
  c.push_back(ident("F14", {"(xy)(xz) = x(y(xz))"}));
  c.push_back(ident("F21", {"(yx)(zx) = ((yx)z)x"}));
  c.push_back(ident("F22", {"(yx)(zx) = (y(xz))x"}));
  c.push_back(ident("F23", {"(yx)(zx) = y((xz)x)"}));
  c.push_back(ident("F24", {"(yx)(zx) = y(x(zx))"}));
  c.push_back(ident("F31", {"(yx)(xz) = ((yx)x)z"}));
  c.push_back(ident("F32", {"(yx)(xz) = (y(xx))z"}));
  c.push_back(ident("F33", {"(yx)(xz) = y((xx)z)"}));
  c.push_back(ident("F34", {"(yx)(xz) = y(x(xz))"}));

  // Inverse-property family; these use one-sided inverses directly so they
  // stay decidable on loops where the unified ' would be undefined.
  for (const char* name :
       {"LIP", "RIP", "IP", "WIP", "CIP", "AIP", "AAIP", "SAIP"})
    c.push_back(proc(name));
  for (const char* name : {"PLAP(2)", "PLAP(3)", "PRAP(2)", "PRAP(3)"})
    c.push_back(proc(name));
  return c;
}

// Exhaustive scan over (x, y) pairs for the procedural two-variable checks.
template <typename Pred>
CheckReport forall_xy(const LoopTable& L, Pred&& pred,
                      const std::string& what) {
  CheckReport r;
  const int n = L.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checked_assignments;
      if (!pred(x, y)) {
        r.holds = false;
        r.counterexample = Assignment{{'x', x}, {'y', y}};
        r.detail = what + " fails";
        return r;
      }
    }
  r.holds = true;
  return r;
}

// name is PLAP(k) or PRAP(k); returns k, or 0 if the name is not of that
// shape or k is out of the accepted range.
int parse_pap_exponent(const std::string& name, const char* prefix) {
  const std::string pre = std::string(prefix) + "(";
  if (name.size() < pre.size() + 2 || name.compare(0, pre.size(), pre) != 0 ||
      name.back() != ')')
    return 0;
  int k = 0;
  for (size_t i = pre.size(); i + 1 < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
    k = k * 10 + (name[i] - '0');
    if (k > 64) return 0;  // hard cap; nothing sane needs bigger exponents
  }
  return k >= 1 ? k : 0;
}

CheckReport check_pap(const LoopTable& L, int k, bool left) {
  const PAReport pa = power_associativity(L);
  if (!pa.ok) {
    CheckReport r;
    r.holds = false;
    r.code = CheckCode::PreconditionFailed;
    std::ostringstream os;
    os << "power associativity fails: <" << pa.x << "> has ((" << pa.triple[0]
       << "*" << pa.triple[1] << ")*" << pa.triple[2] << ") != (" << pa.triple[0]
       << "*(" << pa.triple[1] << "*" << pa.triple[2] << "))";
    r.detail = os.str();
    return r;
  }
  if (left) {
    // x(x(...(xy))) with k leading x's equals x^k * y.
    return forall_xy(
        L,
        [&](int x, int y) {
          int v = y;
          for (int i = 0; i < k; ++i) v = L.mul(x, v);
          return v == L.mul(L.left_power(x, k), y);
        },
        "PLAP(" + std::to_string(k) + ")");
  }
  // ((yx)x...)x with k trailing x's equals y * x^k.
  return forall_xy(
      L,
      [&](int x, int y) {
        int v = y;
        for (int i = 0; i < k; ++i) v = L.mul(v, x);
        return v == L.mul(y, L.right_power(x, k));
      },
      "PRAP(" + std::to_string(k) + ")");
}

CheckReport check_procedural(const LoopTable& L, const std::string& name) {
  if (name == "LIP")
    return forall_xy(
        L, [&](int x, int y) { return L.mul(L.lam(x), L.mul(x, y)) == y; },
        "LIP: lam(x)(xy) = y");
  if (name == "RIP")
    return forall_xy(
        L, [&](int x, int y) { return L.mul(L.mul(y, x), L.rho(x)) == y; },
        "RIP: (yx)rho(x) = y");
  if (name == "IP") {
    CheckReport l = check_procedural(L, "LIP");
    if (!l.holds) return l;
    CheckReport r = check_procedural(L, "RIP");
    r.checked_assignments += l.checked_assignments;
    return r;
  }
  if (name == "WIP")
    return forall_xy(
        L,
        [&](int x, int y) { return L.mul(x, L.rho(L.mul(y, x))) == L.rho(y); },
        "WIP: x(yx)^rho = y^rho");
  if (name == "CIP")
    return forall_xy(
        L, [&](int x, int y) { return L.mul(L.mul(x, y), L.rho(x)) == y; },
        "CIP: (xy)x^rho = y");
  if (name == "AIP")
    return forall_xy(
        L,
        [&](int x, int y) {
          return L.rho(L.mul(x, y)) == L.mul(L.rho(x), L.rho(y));
        },
        "AIP: (xy)^rho = x^rho y^rho");
  if (name == "AAIP")
    return forall_xy(
        L,
        [&](int x, int y) {
          return L.rho(L.mul(x, y)) == L.mul(L.rho(y), L.rho(x));
        },
        "AAIP: (xy)^rho = y^rho x^rho");
  if (name == "SAIP")
    return forall_xy(
        L,
        [&](int x, int y) {
          return L.rho(L.mul(L.mul(x, y), x)) ==
                 L.mul(L.mul(L.rho(x), L.rho(y)), L.rho(x));
        },
        "SAIP: (xy.x)^rho = (x^rho y^rho)x^rho");
  if (int k = parse_pap_exponent(name, "PLAP")) return check_pap(L, k, true);
  if (int k = parse_pap_exponent(name, "PRAP")) return check_pap(L, k, false);
  throw LoopError(Err::BadInput, "unknown procedural property " + name);
}

}  // namespace

const std::vector<PropertyDef>& default_catalog() {
  static const std::vector<PropertyDef> catalog = build_catalog();
  return catalog;
}

std::optional<PropertyDef> find_property(const std::string& name) {
  for (const PropertyDef& p : default_catalog())
    if (p.name == name) return p;
  if (parse_pap_exponent(name, "PLAP") || parse_pap_exponent(name, "PRAP"))
    return proc(name);
  return std::nullopt;
}

CheckReport check(const LoopTable& L, const PropertyDef& p) {
  if (p.procedural) return check_procedural(L, p.name);
  CheckReport total;
  for (const Identity& id : p.identities) {
    CheckReport r = check_identity(id, L);
    total.checked_assignments += r.checked_assignments;
    if (!r.holds) {
      r.checked_assignments = total.checked_assignments;
      r.detail = p.name + ": " + print_identity(id) + " fails";
      return r;
    }
  }
  total.holds = true;
  return total;
}

CheckReport check(const LoopTable& L, const std::string& name) {
  const auto p = find_property(name);
  if (!p) throw LoopError(Err::BadInput, "unknown property " + name);
  return check(L, *p);
}

std::pair<CheckReport, CheckReport> is_middle_bol_equivalent_forms(
    const LoopTable& L) {
  static const Identity form2 = parse_identity("x((yz)\\x) = (x/z)(y\\x)");
  static const Identity form3 = parse_identity("(x/(yz))x = (x/z)(y\\x)");
  return {check_identity(form2, L), check_identity(form3, L)};
}

std::vector<std::string> audit_implications(
    const std::map<std::string, bool>& v) {
  // Classical facts only: each rule says (all antecedents) => consequent.
  static const std::vector<std::pair<std::vector<std::string>, std::string>>
      rules = [] {
        std::vector<std::pair<std::vector<std::string>, std::string>> r;
        auto add = [&](std::vector<std::string> ants, std::string con) {
          r.push_back({std::move(ants), std::move(con)});
        };
        add({"EXTRA"}, "MOUFANG");
        for (const char* p : {"LEFT_BOL", "RIGHT_BOL", "FLEXIBLE", "LIP",
                              "RIP", "IP", "LAP", "RAP", "WIP"})
          add({"MOUFANG"}, p);
        add({"LEFT_BOL"}, "LIP");
        add({"LEFT_BOL"}, "LAP");
        add({"RIGHT_BOL"}, "RIP");
        add({"RIGHT_BOL"}, "RAP");
        add({"LIP", "RIP"}, "IP");
        add({"IP"}, "LIP");
        add({"IP"}, "RIP");
        add({"IP"}, "WIP");
        for (const char* p :
             {"MIDDLE_BOL", "RIGHT_BOL", "LEFT_BOL", "MOUFANG", "EXTRA",
              "FLEXIBLE", "LAP", "RAP", "LIP", "RIP", "IP", "WIP", "AAIP",
              "SAIP", "F1", "F2", "F3", "F4", "F11", "F12", "F13", "F14",
              "F21", "F22", "F23", "F24", "F31", "F32", "F33", "F34",
              "PLAP(2)", "PLAP(3)", "PRAP(2)", "PRAP(3)"})
          add({"ASSOCIATIVE"}, p);
        add({"ASSOCIATIVE", "COMMUTATIVE"}, "CIP");
        add({"ASSOCIATIVE", "COMMUTATIVE"}, "AIP");
        return r;
      }();

  std::vector<std::string> violations;
  for (const auto& [ants, con] : rules) {
    bool fire = true;
    for (const std::string& a : ants) {
      const auto it = v.find(a);
      if (it == v.end() || !it->second) {
        fire = false;
        break;
      }
    }
    const auto it = v.find(con);
    if (fire && it != v.end() && !it->second) {
      std::string msg;
      for (const std::string& a : ants) msg += a + " ";
      violations.push_back(msg + "=> " + con + " violated");
    }
  }
  return violations;
}

ClassifyResult classify(const LoopTable& L) {
  ClassifyResult out;
  for (const PropertyDef& p : default_catalog()) {
    const CheckReport r = check(L, p);
    if (r.code == CheckCode::PreconditionFailed)
      out.skipped[p.name] = r.detail;
    else
      out.values[p.name] = r.holds;
  }
  out.audit_violations = audit_implications(out.values);
  return out;
}

std::string dump_catalog_text() {
  std::ostringstream os;
  os << "# built-in property catalog\n"
     << "# identity entries: `name: lhs = rhs` (all lines of a name must "
        "hold)\n";
  for (const PropertyDef& p : default_catalog())
    if (!p.procedural)
      for (const Identity& id : p.identities)
        os << p.name << ": " << print_identity(id) << "\n";
  os << "# procedural entries (lam/rho are the one-sided inverses):\n"
     << "#   LIP      lam(x)(xy) = y\n"
     << "#   RIP      (yx)rho(x) = y\n"
     << "#   IP       LIP and RIP\n"
     << "#   WIP      x(yx)^rho = y^rho\n"
     << "#   CIP      (xy)x^rho = y\n"
     << "#   AIP      (xy)^rho = x^rho y^rho\n"
     << "#   AAIP     (xy)^rho = y^rho x^rho\n"
     << "#   SAIP     ((xy)x)^rho = (x^rho y^rho)x^rho\n"
     << "#   PLAP(k)  x(x(...(xy))) [k x's] = x^k y   on power-assoc. loops\n"
     << "#   PRAP(k)  (((yx)x)...)x [k x's] = y x^k   on power-assoc. loops\n";
  return os.str();
}

}  // namespace loops
