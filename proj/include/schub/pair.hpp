#pragma once

#include <stdexcept>
#include <vector>

#include "schub/rank.hpp"

namespace schub {

struct NotComparableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ordered pair (w, x) with x <= w in Bruhat order, with cached rank
/// tables for w, x and their difference rk_pair = rk_x - rk_w >= 0.
///
/// The level set X is where rk_pair vanishes; it always contains the
/// frame, so its complement lies in the restricted square.
class PermPair {
 public:
  /// Throws NotComparableError unless x <= w (same degree required).
  static PermPair make(const Permutation& w, const Permutation& x);

  const Permutation& w() const { return w_; }
  const Permutation& x() const { return x_; }
  int degree() const { return w_.degree(); }

  const RankTable& rank_w() const { return rkw_; }
  const RankTable& rank_x() const { return rkx_; }
  const RankTable& rank_pair() const { return rkpi_; }

  int length_w() const { return lw_; }
  int length_x() const { return lx_; }
  /// l(pair) = l(w) - l(x) >= 0.
  int length() const { return lw_ - lx_; }

  bool in_level_set(Point p) const { return rkpi_.at(p) == 0; }
  PointSet level_set() const;
  PointSet level_set_complement() const;

  /// R = {t : x < xt <= w}, computed by the box criterion: t_{a,b} is in R
  /// iff x(a) < x(b) and rk_pair > 0 on [graph_x(a), graph_x(b)).
  std::vector<Transposition> r_set() const;

  /// Same set through Bruhat comparisons of x*t against w; the slow route
  /// kept for cross-testing.
  std::vector<Transposition> r_set_slow() const;

  /// R* = {t in R : xt covers x}.
  std::vector<Transposition> rs_set() const;

  bool in_r_set(const Transposition& t) const;

  /// #R = l(pair); always #R >= l(pair).
  bool is_smooth() const;

  /// #{t : xt <= w} = #R + l(x).
  int tangent_dim() const;

  /// The pair (w, x*t) for t in R; rank tables are updated incrementally
  /// over the affected box. Throws if t is not in R.
  PermPair mutated(const Transposition& t) const;

  PermPair upended() const;
  PermPair inverted() const;

  friend bool operator==(const PermPair& a, const PermPair& b) {
    return a.w_ == b.w_ && a.x_ == b.x_;
  }

 private:
  PermPair() = default;

  Permutation w_, x_;
  RankTable rkw_, rkx_, rkpi_;
  int lw_ = 0, lx_ = 0;
};

}  // namespace schub
