// fixtures.hpp -- small Cayley tables shared by the unit tests.
//
// Everything here is constructed from first principles (modular addition,
// permutation composition, hand-checked Latin squares) so the tests do not
// depend on the library code they are checking.

#pragma once

#include <vector>

#include "loops/table.hpp"

namespace fixtures {

inline loops::LoopTable cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return loops::LoopTable::validate(t);
}

inline loops::LoopTable klein4() {
  return loops::LoopTable::validate({
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  });
}

// Symmetric group on 3 points, elements = permutations of {0,1,2} in
// lexicographic order, product (a*b)(x) = a(b(x)).
inline loops::LoopTable s3() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int c[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == c[0] && perms[i][1] == c[1] && perms[i][2] == c[2])
        return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int c[3];
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  return loops::LoopTable::validate(t);
}

// Dihedral group of order 8: <r, s | r^4 = s^2 = e, srs = r^-1>.
// Elements 0..3 are r^0..r^3, 4..7 are s*r^0..s*r^3.
inline loops::LoopTable dihedral8() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  auto mul = [](int a, int b) {
    const int ra = a & 3, sa = a >> 2, rb = b & 3, sb = b >> 2;
    // (s^sa r^ra)(s^sb r^rb) = s^(sa^sb) r^(rb + (sb ? -ra : ra) mod 4)
    const int r = ((sb ? 4 - ra : ra) + rb) & 3;
    return ((sa ^ sb) << 2) | r;
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return loops::LoopTable::validate(t);
}

// Quaternion group: 0=1, 1=i, 2=j, 3=k, 4=-1, 5=-i, 6=-j, 7=-k.
inline loops::LoopTable quaternion8() {
  // base[a][b] for a,b in {1,i,j,k} as (sign, value) with ii=jj=kk=-1,
  // ij=k, jk=i, ki=j.
  static const int val[4][4] = {{0, 1, 2, 3},
                                {1, 0, 3, 2},
                                {2, 3, 0, 1},
                                {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0},
                                {0, 1, 0, 1},
                                {0, 1, 1, 0},
                                {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int va = a & 3, sa = a >> 2, vb = b & 3, sb = b >> 2;
      const int s = sa ^ sb ^ neg[va][vb];
      t[a][b] = (s << 2) | val[va][vb];
    }
  return loops::LoopTable::validate(t);
}

// Hand-checked nonassociative loop of order 5: (1*1)*2 = 2 but 1*(1*2) = 4.
// Element 2 has lam(2) = 4 != 3 = rho(2), so ' is undefined there.
inline loops::LoopTable nonassoc5() {
  return loops::LoopTable::validate({
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 3, 4, 0, 1},
      {3, 4, 1, 2, 0},
      {4, 2, 0, 1, 3},
  });
}

// Z3 written with the identity sitting at index 2; exercises normalization.
inline std::vector<std::vector<int>> shifted_z3_raw() {
  return {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
}

}  // namespace fixtures
