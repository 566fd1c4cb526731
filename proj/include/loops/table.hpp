// table.hpp -- Cayley-table representation of finite loops.
//
// A LoopTable stores the multiplication table of a finite loop on the
// element set {0..n-1} with the identity normalized to index 0, plus the
// two division tables derived from it:
//   ldiv(x,y) = the unique z with x*z = y          (left division  x\y)
//   rdiv(x,y) = the unique z with z*y = x          (right division x/y)
// Tables are immutable after validation; all operations are pure reads,
// so instances can be shared freely across threads.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loops {

enum class Err {
  NotLatin,
  NoIdentity,
  OrderTooLarge,
  NotRightBol,
  NotLeftBol,
  ValidationFailed,
  BadInput,
  EmptyRequireWithDedupOverflow,  // search guard: unconstrained dedup blowup
};

class LoopError : public std::runtime_error {
 public:
  LoopError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

class LoopTable {
 public:
  // Empty placeholder (order 0); only useful as an assignment target.
  LoopTable() = default;

  // Validates a raw square table: every row and column must be a permutation
  // of 0..n-1 and a two-sided identity must exist. The identity element is
  // relabeled to index 0 by a simultaneous row/column/value permutation, so
  // e.g. [[1,0],[0,1]] normalizes to the usual Z2 table. Throws LoopError
  // with NotLatin / NoIdentity / BadInput.
  static LoopTable validate(const std::vector<std::vector<int>>& raw);

  int n() const { return n_; }
  int identity() const { return 0; }

  int mul(int x, int y) const { return mul_[x * n_ + y]; }
  int ldiv(int x, int y) const { return ldiv_[x * n_ + y]; }
  int rdiv(int x, int y) const { return rdiv_[x * n_ + y]; }

  // One-sided inverses: lam(x)*x = e, x*rho(x) = e.
  int lam(int x) const { return lam_[x]; }
  int rho(int x) const { return rho_[x]; }
  bool two_sided_inverses() const;  // lam(x) == rho(x) for all x

  // Unified inverse; throws LoopError(ValidationFailed) where lam != rho.
  int inv(int x) const;

  // k-fold products of x alone. left_power is right-nested x(x(...(x*x)));
  // right_power is left-nested (((x*x)x)...)x. k = 0 returns the identity by
  // convention (the source material never uses x^0).
  int left_power(int x, int k) const;
  int right_power(int x, int k) const;

  // Order of x in <x>, defined only when <x> closes under * and is
  // associative on that subset (then left and right powers agree and cycle).
  std::optional<int> element_order(int x) const;

  const std::vector<int>& flat() const { return mul_; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const LoopTable& o) const {
    return n_ == o.n_ && mul_ == o.mul_;
  }
  bool operator<(const LoopTable& o) const {
    return n_ != o.n_ ? n_ < o.n_ : mul_ < o.mul_;
  }

 private:
  void build_derived();  // fills ldiv_, rdiv_, lam_, rho_

  int n_ = 0;
  std::vector<int> mul_, ldiv_, rdiv_;
  std::vector<int> lam_, rho_;
};

struct ElementInfo {
  int idx = 0;
  int lambda_inv = 0;
  int rho_inv = 0;
  std::optional<int> order;  // absent: <idx> does not form a group
};

ElementInfo inverses(const LoopTable& L, int x);

// Per-element power associativity: <x> closed under * and associative on the
// closed subset. A failing loop yields witness element and triple.
struct PAReport {
  bool ok = true;
  int x = -1;                      // offending generator when !ok
  std::array<int, 3> triple{};     // (a,b,c) in <x> with (ab)c != a(bc)
};
PAReport power_associativity(const LoopTable& L);
bool is_power_associative(const LoopTable& L);

// Least m with x^m = e for all x; defined only on power-associative loops.
std::optional<int> loop_exponent(const LoopTable& L);

// --- external interfaces ------------------------------------------------
// JSON: { "n": int, "table": [[int,...],...] }, 0-indexed.
// Text: n on the first line, then n whitespace-separated rows.
// Both round-trip bit-exact through save/load.
std::string to_json(const LoopTable& L);
std::string to_text(const LoopTable& L);
LoopTable from_json(const std::string& payload);
LoopTable from_text(const std::string& payload);
LoopTable load_table_file(const std::string& path);  // sniffs format
void save_table_file(const LoopTable& L, const std::string& path);

}  // namespace loops
