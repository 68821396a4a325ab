#pragma once

#include <array>
#include <cstdint>

#include "schub/perm.hpp"
#include "schub/point.hpp"

namespace schub {

/// Dense (n+1) x (n+1) table over the framed square.
///
/// Holds either a rank function rk_w(i,j) = #{u <= i : w(u) <= j} or a
/// difference of two rank functions (which for a valid pair is nonnegative).
class RankTable {
 public:
  RankTable() : n_(0) { v_.fill(0); }

  static RankTable of(const Permutation& w);

  /// Entrywise rk_hi - rk_lo; used for rk_pair = rk_x - rk_w.
  static RankTable difference(const RankTable& hi, const RankTable& lo);

  int degree() const { return n_; }

  int at(int i, int j) const { return v_[i * (n_ + 1) + j]; }
  int at(Point p) const { return at(p.i, p.j); }

  /// Subtracts 1 from every entry of the half-open box
  /// [i_lo..i_hi) x [j_lo..j_hi); the incremental update behind pair
  /// mutation x -> xt.
  void decrement_box(int i_lo, int i_hi, int j_lo, int j_hi);

  friend bool operator==(const RankTable& a, const RankTable& b) {
    if (a.n_ != b.n_) return false;
    int m = (a.n_ + 1) * (a.n_ + 1);
    for (int k = 0; k < m; ++k)
      if (a.v_[k] != b.v_[k]) return false;
    return true;
  }

 private:
  int n_;
  std::array<std::uint8_t, (kMaxDegree + 1) * (kMaxDegree + 1)> v_;
};

/// Second difference of a table over the box spanned by p and q:
///   rk(p) + rk(q) - rk(p.i, q.j) - rk(q.i, p.j).
/// When q >= p componentwise this counts graph points in the half-open
/// box (p, q]. Symmetric in p and q. Throws if a point is outside the
/// framed square.
int diff(const RankTable& rk, Point p, Point q);

/// Bruhat order: y <= w iff rk_w <= rk_y everywhere (equivalently on the
/// restricted square, since the frame is forced).
bool bruhat_leq(const Permutation& y, const Permutation& w);
bool bruhat_leq(const RankTable& rk_y, const RankTable& rk_w);

/// y < w with l(w) = l(y) + 1.
bool covers(const Permutation& y, const Permutation& w);

}  // namespace schub
