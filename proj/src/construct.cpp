#include "loops/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "loops/properties.hpp"

namespace loops {

namespace {

LoopTable validated_bridge(const std::vector<std::vector<int>>& raw,
                           const char* which) {
  LoopTable out = [&] {
    try {
      return LoopTable::validate(raw);
    } catch (const LoopError& e) {
      throw LoopError(Err::ValidationFailed,
                      std::string(which) + ": derived table invalid (" +
                          e.what() + "); construction bug");
    }
  }();
  if (!check(out, "MIDDLE_BOL").holds)
    throw LoopError(Err::ValidationFailed,
                    std::string(which) +
                        ": derived table is not middle Bol; construction bug");
  return out;
}

}  // namespace

LoopTable middle_from_right_bol(const LoopTable& L) {
  if (!check(L, "RIGHT_BOL").holds)
    throw LoopError(Err::NotRightBol, "input is not a right Bol loop");
  const int n = L.n();
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      raw[x][y] = L.mul(L.mul(y, L.mul(x, L.rho(y))), y);
  return validated_bridge(raw, "middle_from_right_bol");
}

LoopTable middle_from_left_bol(const LoopTable& L) {
  if (!check(L, "LEFT_BOL").holds)
    throw LoopError(Err::NotLeftBol, "input is not a left Bol loop");
  const int n = L.n();
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      raw[x][y] = L.mul(y, L.mul(L.mul(L.lam(y), x), y));
  return validated_bridge(raw, "middle_from_left_bol");
}

LoopTable opposite(const LoopTable& L) {
  const int n = L.n();
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) raw[x][y] = L.mul(y, x);
  return LoopTable::validate(raw);
}

LoopTable principal_isotope(const LoopTable& L, int a, int b) {
  const int n = L.n();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw LoopError(Err::BadInput, "isotope parameters out of range");
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      raw[x][y] = L.mul(L.rdiv(x, b), L.ldiv(a, y));
  return LoopTable::validate(raw);
}

LoopTable relabel(const LoopTable& L, const std::vector<int>& p) {
  const int n = L.n();
  if (static_cast<int>(p.size()) != n)
    throw LoopError(Err::BadInput, "permutation size mismatch");
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) raw[p[x]][p[y]] = p[L.mul(x, y)];
  return LoopTable::validate(raw);
}

namespace {

// Isomorphism-invariant profile of one element; images must match profiles.
struct ElemSig {
  std::vector<int> left_cycles, right_cycles;  // sorted cycle types
  bool two_sided;                              // lam(x) == rho(x)
  bool involution;                             // x*x == e
  int order;                                   // element_order or -1

  bool operator==(const ElemSig&) const = default;
};

std::vector<int> cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<int> type;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int t = s; !seen[t]; t = perm[t]) {
      seen[t] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<ElemSig> signatures(const LoopTable& L) {
  const int n = L.n();
  std::vector<ElemSig> sig(n);
  std::vector<int> lt(n), rt(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      lt[y] = L.mul(x, y);
      rt[y] = L.mul(y, x);
    }
    sig[x].left_cycles = cycle_type(lt);
    sig[x].right_cycles = cycle_type(rt);
    sig[x].two_sided = L.lam(x) == L.rho(x);
    sig[x].involution = L.mul(x, x) == 0;
    sig[x].order = L.element_order(x).value_or(-1);
  }
  return sig;
}

// Backtracking isomorphism search with forced-product closure: whenever
// phi(u) and phi(v) are both set, phi(u*v) is forced to phi(u)*phi(v).
class IsoSearch {
 public:
  IsoSearch(const LoopTable& A, const LoopTable& B)
      : A_(A), B_(B), n_(A.n()), phi_(n_, -1), used_(n_, 0),
        sigA_(signatures(A)), sigB_(signatures(B)) {}

  std::optional<std::vector<int>> run() {
    if (!assign(0, 0)) return std::nullopt;  // identities must correspond
    if (extend()) return phi_;
    return std::nullopt;
  }

 private:
  bool assign(int u, int v) {
    // Sets phi(u) = v and closes under products; records changes on trail_.
    if (phi_[u] >= 0) return phi_[u] == v;
    if (used_[v] || !(sigA_[u] == sigB_[v])) return false;
    phi_[u] = v;
    used_[v] = 1;
    trail_.push_back(u);
    const size_t start = trail_.size() - 1;
    for (size_t i = start; i < trail_.size(); ++i) {
      const int a = trail_[i];
      for (int b = 0; b < n_; ++b) {
        if (phi_[b] < 0) continue;
        if (!assign_product(a, b) || !assign_product(b, a)) return false;
      }
    }
    return true;
  }

  bool assign_product(int a, int b) {
    const int p = A_.mul(a, b), q = B_.mul(phi_[a], phi_[b]);
    return assign(p, q);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      const int u = trail_.back();
      trail_.pop_back();
      used_[phi_[u]] = 0;
      phi_[u] = -1;
    }
  }

  bool extend() {
    int u = -1;
    for (int i = 0; i < n_; ++i)
      if (phi_[i] < 0) {
        u = i;
        break;
      }
    if (u < 0) return true;
    for (int v = 0; v < n_; ++v) {
      const size_t mark = trail_.size();
      if (assign(u, v) && extend()) return true;
      undo_to(mark);
    }
    return false;
  }

  const LoopTable &A_, &B_;
  int n_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<ElemSig> sigA_, sigB_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const LoopTable& A,
                                               const LoopTable& B) {
  if (A.n() != B.n()) return std::nullopt;
  // Cheap global screen before searching.
  auto profile = [](const std::vector<ElemSig>& s) {
    std::vector<ElemSig> p(s);
    std::sort(p.begin(), p.end(), [](const ElemSig& a, const ElemSig& b) {
      return std::tie(a.left_cycles, a.right_cycles, a.two_sided,
                      a.involution, a.order) <
             std::tie(b.left_cycles, b.right_cycles, b.two_sided,
                      b.involution, b.order);
    });
    return p;
  };
  if (profile(signatures(A)) != profile(signatures(B))) return std::nullopt;
  return IsoSearch(A, B).run();
}

LoopTable canonical_form(const LoopTable& L, int bound) {
  const int n = L.n();
  if (n > bound)
    throw LoopError(Err::OrderTooLarge,
                    "canonical_form bound is " + std::to_string(bound) +
                        ", got order " + std::to_string(n));
  std::vector<int> p(n), best_flat = L.flat(), flat(n * n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) flat[p[x] * n + p[y]] = p[L.mul(x, y)];
    if (flat < best_flat) best_flat = flat;
  } while (std::next_permutation(p.begin() + 1, p.end()));  // p[0] = 0 fixed
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = best_flat[x * n + y];
  return LoopTable::validate(rows);
}

}  // namespace loops
