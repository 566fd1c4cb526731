#include "loops/table.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace loops {

LoopTable LoopTable::validate(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw LoopError(Err::BadInput, "empty table");
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != n)
      throw LoopError(Err::BadInput, "table is not square");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (raw[i][j] < 0 || raw[i][j] >= n)
        throw LoopError(Err::BadInput,
                        "entry out of range at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");

  // Latin property: rows and columns are permutations.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[raw[i][j]]++)
        throw LoopError(Err::NotLatin, "duplicate in row " + std::to_string(i));
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[raw[i][j]]++)
        throw LoopError(Err::NotLatin,
                        "duplicate in column " + std::to_string(j));
    }
  }

  // Two-sided identity: e*x = x and x*e = x for all x.
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = raw[c][x] == x && raw[x][c] == x;
    if (ok) {
      e = c;
      break;
    }
  }
  if (e < 0) throw LoopError(Err::NoIdentity, "no two-sided identity element");

  // Relabel so the identity is element 0: p swaps 0 <-> e.
  LoopTable L;
  L.n_ = n;
  L.mul_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::swap(p[0], p[e]);  // p = its own inverse
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L.mul_[i * n + j] = p[raw[p[i]][p[j]]];

  L.build_derived();
  return L;
}

void LoopTable::build_derived() {
  const int n = n_;
  ldiv_.assign(static_cast<size_t>(n) * n, 0);
  rdiv_.assign(static_cast<size_t>(n) * n, 0);
  lam_.assign(n, 0);
  rho_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const int y = mul_[x * n + z];
      ldiv_[x * n + y] = z;  // x\y = z since x*z = y
      rdiv_[y * n + z] = x;  // y/z = x since x*z = y
    }
  for (int x = 0; x < n; ++x) {
    lam_[x] = rdiv(0, x);  // lam(x)*x = e
    rho_[x] = ldiv(x, 0);  // x*rho(x) = e
  }
}

bool LoopTable::two_sided_inverses() const { return lam_ == rho_; }

int LoopTable::inv(int x) const {
  if (lam_[x] != rho_[x])
    throw LoopError(Err::ValidationFailed,
                    "element " + std::to_string(x) +
                        " has distinct one-sided inverses");
  return lam_[x];
}

int LoopTable::left_power(int x, int k) const {
  if (k == 0) return 0;
  int v = x;
  for (int i = 1; i < k; ++i) v = mul(x, v);
  return v;
}

int LoopTable::right_power(int x, int k) const {
  if (k == 0) return 0;
  int v = x;
  for (int i = 1; i < k; ++i) v = mul(v, x);
  return v;
}

std::optional<int> LoopTable::element_order(int x) const {
  // Close <x> under *; reject if the closed subset fails associativity.
  std::vector<char> in(n_, 0);
  std::vector<int> members;
  in[0] = in[x] = 1;
  members.push_back(0);
  if (x != 0) members.push_back(x);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = members;
    for (int a : snapshot)
      for (int b : snapshot) {
        const int c = mul(a, b);
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
          grew = true;
        }
      }
  }
  for (int a : members)
    for (int b : members)
      for (int c : members)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return std::nullopt;
  // <x> is a cyclic group; the order of x is the least k >= 1 with x^k = e.
  int v = x, k = 1;
  while (v != 0) {
    v = mul(v, x);
    ++k;
  }
  return k;
}

ElementInfo inverses(const LoopTable& L, int x) {
  return ElementInfo{x, L.lam(x), L.rho(x), L.element_order(x)};
}

PAReport power_associativity(const LoopTable& L) {
  PAReport r;
  for (int x = 0; x < L.n(); ++x) {
    std::vector<char> in(L.n(), 0);
    std::vector<int> members;
    in[0] = in[x] = 1;
    members.push_back(0);
    if (x != 0) members.push_back(x);
    bool grew = true;
    while (grew) {
      grew = false;
      const auto snapshot = members;
      for (int a : snapshot)
        for (int b : snapshot) {
          const int c = L.mul(a, b);
          if (!in[c]) {
            in[c] = 1;
            members.push_back(c);
            grew = true;
          }
        }
    }
    for (int a : members)
      for (int b : members)
        for (int c : members)
          if (L.mul(L.mul(a, b), c) != L.mul(a, L.mul(b, c)))
            return PAReport{false, x, {a, b, c}};
  }
  return r;
}

bool is_power_associative(const LoopTable& L) {
  return power_associativity(L).ok;
}

std::optional<int> loop_exponent(const LoopTable& L) {
  long long m = 1;
  for (int x = 0; x < L.n(); ++x) {
    const auto k = L.element_order(x);
    if (!k) return std::nullopt;
    m = std::lcm(m, static_cast<long long>(*k));
  }
  return static_cast<int>(m);
}

std::vector<std::vector<int>> LoopTable::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = mul(i, j);
  return out;
}

std::string to_json(const LoopTable& L) {
  nlohmann::json j;
  j["n"] = L.n();
  j["table"] = L.rows();
  return j.dump();
}

std::string to_text(const LoopTable& L) {
  std::ostringstream os;
  os << L.n() << '\n';
  for (int i = 0; i < L.n(); ++i) {
    for (int j = 0; j < L.n(); ++j) os << (j ? " " : "") << L.mul(i, j);
    os << '\n';
  }
  return os.str();
}

LoopTable from_json(const std::string& payload) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(payload);
  } catch (const nlohmann::json::exception& e) {
    throw LoopError(Err::BadInput, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("table"))
    throw LoopError(Err::BadInput, "JSON table needs fields n and table");
  std::vector<std::vector<int>> raw;
  try {
    raw = j["table"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw LoopError(Err::BadInput, std::string("bad table field: ") + e.what());
  }
  if (static_cast<int>(raw.size()) != j["n"].get<int>())
    throw LoopError(Err::BadInput, "field n disagrees with table size");
  return LoopTable::validate(raw);
}

LoopTable from_text(const std::string& payload) {
  std::istringstream is(payload);
  int n = 0;
  if (!(is >> n) || n <= 0)
    throw LoopError(Err::BadInput, "text table must start with the order");
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(is >> raw[i][j]))
        throw LoopError(Err::BadInput, "text table truncated");
  return LoopTable::validate(raw);
}

LoopTable load_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw LoopError(Err::BadInput, "cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string s = buf.str();
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw LoopError(Err::BadInput, "empty table file " + path);
  return s[first] == '{' ? from_json(s) : from_text(s);
}

void save_table_file(const LoopTable& L, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw LoopError(Err::BadInput, "cannot write " + path);
  const bool json = path.size() > 5 && path.rfind(".json") == path.size() - 5;
  f << (json ? to_json(L) : to_text(L));
  if (json) f << '\n';
}

}  // namespace loops
