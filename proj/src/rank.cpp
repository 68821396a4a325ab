#include "schub/rank.hpp"

#include <stdexcept>

namespace schub {

RankTable RankTable::of(const Permutation& w) {
  RankTable t;
  int n = w.degree();
  t.n_ = n;
  // rk(i,j) = rk(i-1,j) + [w(i) <= j], row by row.
  for (int j = 0; j <= n; ++j) t.v_[j] = 0;
  for (int i = 1; i <= n; ++i) {
    int wi = w(i);
    const int row = i * (n + 1);
    const int prev = row - (n + 1);
    t.v_[row] = 0;
    for (int j = 1; j <= n; ++j)
      t.v_[row + j] = static_cast<std::uint8_t>(t.v_[prev + j] + (wi <= j));
  }
  return t;
}

RankTable RankTable::difference(const RankTable& hi, const RankTable& lo) {
  if (hi.n_ != lo.n_) throw std::invalid_argument("degree mismatch");
  RankTable t;
  t.n_ = hi.n_;
  int m = (hi.n_ + 1) * (hi.n_ + 1);
  for (int k = 0; k < m; ++k)
    t.v_[k] = static_cast<std::uint8_t>(hi.v_[k] - lo.v_[k]);
  return t;
}

void RankTable::decrement_box(int i_lo, int i_hi, int j_lo, int j_hi) {
  for (int i = i_lo; i < i_hi; ++i)
    for (int j = j_lo; j < j_hi; ++j) --v_[i * (n_ + 1) + j];
}

int diff(const RankTable& rk, Point p, Point q) {
  int n = rk.degree();
  if (!in_framed_square(p, n) || !in_framed_square(q, n))
    throw std::invalid_argument("point outside the framed square");
  return rk.at(p) + rk.at(q) - rk.at(p.i, q.j) - rk.at(q.i, p.j);
}

bool bruhat_leq(const RankTable& rk_y, const RankTable& rk_w) {
  if (rk_y.degree() != rk_w.degree())
    throw std::invalid_argument("degree mismatch");
  int n = rk_y.degree();
  // The frame is forced equal; the restricted square decides.
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (rk_w.at(i, j) > rk_y.at(i, j)) return false;
  return true;
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree())
    throw std::invalid_argument("degree mismatch");
  return bruhat_leq(RankTable::of(y), RankTable::of(w));
}

bool covers(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree())
    throw std::invalid_argument("degree mismatch");
  return w.length() == y.length() + 1 && bruhat_leq(y, w);
}

}  // namespace schub
