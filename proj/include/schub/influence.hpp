#pragma once

#include <optional>

#include "schub/pair.hpp"

namespace schub {

/// Essential set of w:
///   {(i,j) in the restricted square :
///      w(i) <= j < w(i+1) and w^{-1}(j) <= i < w^{-1}(j+1)}.
/// The minimal set of rank conditions cutting out the interval below w.
PointSet essential_set(const Permutation& w);

/// y <= w iff rk_y >= rk_w on essential_set(w).
bool leq_via_essential(const Permutation& y, const Permutation& w);

/// One closure step:
///   B united with every p admitting a witness p' in A with p, p'
///   strictly componentwise comparable, diff_w(p,p') = 0 and both corners
///   of (p,p') already in B.
PointSet closure_step(const Permutation& w, const PointSet& a,
                      const PointSet& b);

/// Least fixed point of B -> closure_step(w, A, B) starting from B = A,
/// computed with a worklist over newly added points.
PointSet influence_set(const Permutation& w, const PointSet& a);

/// Influence closure of the level set fills the framed square.
bool is_influential(const PermPair& pair);

/// First y (in lex order) with rk_y = rk_w on the level set but y </= w,
/// or nullopt if the pair is tight. Brute force over S_n; degree <= 7.
std::optional<Permutation> tightness_counterexample(const PermPair& pair);

/// Agreement with rk_w on the level set forces Bruhat-belowness.
bool is_tight(const PermPair& pair);

}  // namespace schub
