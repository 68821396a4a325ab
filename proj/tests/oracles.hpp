#pragma once

// Brute-force oracles used by the unit tests. Deliberately naive and
// independent of the library's computation paths.

#include <algorithm>
#include <vector>

#include "schub/pair.hpp"

namespace oracle {

inline int inversions(const schub::Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.degree(); ++i)
    for (int j = i + 1; j <= w.degree(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

inline int rank_count(const schub::Permutation& w, int i, int j) {
  int count = 0;
  for (int u = 1; u <= i; ++u)
    if (w(u) <= j) ++count;
  return count;
}

// Pattern containment by enumerating index subsets.
inline bool contains_pattern_brute(const schub::Permutation& w,
                                   const schub::Permutation& pat) {
  int n = w.degree(), k = pat.degree();
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k && iso; ++b)
        iso = (pat(a + 1) < pat(b + 1)) == (w(idx[a] + 1) < w(idx[b] + 1));
    if (iso) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// R via the definition: x < xt <= w, using Bruhat comparisons only.
inline std::vector<schub::Transposition> r_set_brute(const schub::PermPair& p) {
  std::vector<schub::Transposition> out;
  for (const auto& t : schub::all_transpositions(p.degree())) {
    schub::Permutation xt = p.x().swapped(t.a, t.b);
    if (p.x()(t.a) < p.x()(t.b) && schub::bruhat_leq(xt, p.w()))
      out.push_back(t);
  }
  return out;
}

}  // namespace oracle
