#pragma once

#include <cstdint>
#include <functional>

#include "schub/pair.hpp"

namespace schub {

/// Default enumeration degree cap; raised by the CLI through SCHUB_MAX_N
/// (hard cap kMaxDegree).
inline constexpr int kDefaultMaxEnumerationDegree = 7;

/// Visits every pair (w, x) with x <= w in S_n exactly once, ordered
/// lexicographically by (w, x) one-line words. Throws if n is outside
/// [1, max_degree].
void enumerate_pairs(int n, const std::function<void(const PermPair&)>& fn,
                     int max_degree = kDefaultMaxEnumerationDegree);

/// Visits (w, x) for every x <= w, x in lex order.
void for_each_x_below(const Permutation& w,
                      const std::function<void(const PermPair&)>& fn);

std::uint64_t count_pairs(int n);

}  // namespace schub
