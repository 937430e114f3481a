#pragma once

#include <algorithm>
#include <numeric>

#include "types.hpp"

namespace bchf {

// Element of W(BC_r) = signs semidirect permutations, acting on lambda
// coordinates as (w v)_j = sign_j * v_{perm_j}.
struct weyl_elem {
  std::array<int, max_rank> sign{};
  std::array<int, max_rank> perm{};

  template <class V>
  V apply(const V& v, int r) const {
    V out(v);
    for (int j = 0; j < r; ++j) out[j] = double(sign[j]) * v[perm[j]];
    return out;
  }
};

inline std::vector<weyl_elem> weyl_group(int r) {
  std::vector<weyl_elem> out;
  std::array<int, max_rank> p{};
  std::iota(p.begin(), p.begin() + r, 0);
  do {
    for (int mask = 0; mask < (1 << r); ++mask) {
      weyl_elem w;
      w.perm = p;
      for (int j = 0; j < r; ++j) w.sign[j] = (mask >> j & 1) ? -1 : 1;
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.begin() + r));
  return out;
}

// Sign flips on coordinates i+1..r only (identity permutation): the group
// W^Xi_i used in the restricted sum defining F at partially discrete points.
inline std::vector<weyl_elem> sign_flips_above(int r, int i) {
  std::vector<weyl_elem> out;
  int free = r - i;
  for (int mask = 0; mask < (1 << free); ++mask) {
    weyl_elem w;
    std::iota(w.perm.begin(), w.perm.begin() + r, 0);
    for (int j = 0; j < r; ++j) w.sign[j] = 1;
    for (int j = 0; j < free; ++j)
      if (mask >> j & 1) w.sign[i + j] = -1;
    out.push_back(w);
  }
  return out;
}

// Full permutation group on all r coordinates (no sign changes): the index
// set of the symmetric-part sum F_Xi.
inline std::vector<weyl_elem> permutations_only(int r) {
  std::vector<weyl_elem> out;
  std::array<int, max_rank> p{};
  std::iota(p.begin(), p.begin() + r, 0);
  do {
    weyl_elem w;
    w.perm = p;
    for (int j = 0; j < r; ++j) w.sign[j] = 1;
    out.push_back(w);
  } while (std::next_permutation(p.begin(), p.begin() + r));
  return out;
}

// |W(BC_m)| = 2^m m!
inline long weyl_order(int m) {
  long f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f << m;
}

}  // namespace bchf
