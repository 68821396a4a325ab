#include "schub/enumerate.hpp"

#include <algorithm>

namespace schub {

void for_each_x_below(const Permutation& w,
                      const std::function<void(const PermPair&)>& fn) {
  RankTable rkw = RankTable::of(w);
  for (const Permutation& x : symmetric_group(w.degree())) {
    if (!bruhat_leq(RankTable::of(x), rkw)) continue;
    fn(PermPair::make(w, x));
  }
}

void enumerate_pairs(int n, const std::function<void(const PermPair&)>& fn,
                     int max_degree) {
  int cap = std::min(max_degree, kMaxDegree);
  if (n < 1 || n > cap)
    throw std::invalid_argument("enumeration degree must be in 1.." +
                                std::to_string(cap));
  for (const Permutation& w : symmetric_group(n)) for_each_x_below(w, fn);
}

std::uint64_t count_pairs(int n) {
  std::uint64_t count = 0;
  enumerate_pairs(n, [&](const PermPair&) { ++count; });
  return count;
}

}  // namespace schub
