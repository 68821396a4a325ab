#include "schub/pair.hpp"

#include <algorithm>

namespace schub {

PermPair PermPair::make(const Permutation& w, const Permutation& x) {
  if (w.degree() != x.degree())
    throw NotComparableError("pair members must have the same degree");
  PermPair p;
  p.w_ = w;
  p.x_ = x;
  p.rkw_ = RankTable::of(w);
  p.rkx_ = RankTable::of(x);
  if (!bruhat_leq(p.rkx_, p.rkw_))
    throw NotComparableError("x is not below w in Bruhat order");
  p.rkpi_ = RankTable::difference(p.rkx_, p.rkw_);
  p.lw_ = w.length();
  p.lx_ = x.length();
  return p;
}

PointSet PermPair::level_set() const {
  int n = degree();
  PointSet s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (rkpi_.at(i, j) == 0) s.insert({i, j});
  return s;
}

PointSet PermPair::level_set_complement() const {
  int n = degree();
  PointSet s(n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (rkpi_.at(i, j) > 0) s.insert({i, j});
  return s;
}

bool PermPair::in_r_set(const Transposition& t) const {
  // Box criterion: x < xt needs x(a) < x(b); then xt <= w exactly when
  // rk_pair stays positive on [graph_x(a), graph_x(b)).
  if (t.b > degree()) return false;
  int ja = x_(t.a), jb = x_(t.b);
  if (ja >= jb) return false;
  for (int i = t.a; i < t.b; ++i)
    for (int j = ja; j < jb; ++j)
      if (rkpi_.at(i, j) == 0) return false;
  return true;
}

std::vector<Transposition> PermPair::r_set() const {
  std::vector<Transposition> out;
  int n = degree();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Transposition t(a, b);
      if (in_r_set(t)) out.push_back(t);
    }
  return out;
}

std::vector<Transposition> PermPair::r_set_slow() const {
  std::vector<Transposition> out;
  int n = degree();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (x_(a) >= x_(b)) continue;  // need x < xt
      Permutation xt = x_.swapped(a, b);
      if (bruhat_leq(xt, w_)) out.emplace_back(a, b);
    }
  return out;
}

std::vector<Transposition> PermPair::rs_set() const {
  std::vector<Transposition> out;
  for (const Transposition& t : r_set()) {
    Permutation xt = x_.swapped(t.a, t.b);
    if (xt.length() == lx_ + 1) out.push_back(t);
  }
  return out;
}

bool PermPair::is_smooth() const {
  return static_cast<int>(r_set().size()) == length();
}

int PermPair::tangent_dim() const {
  return static_cast<int>(r_set().size()) + lx_;
}

PermPair PermPair::mutated(const Transposition& t) const {
  if (!in_r_set(t))
    throw std::domain_error("transposition not in R of the pair");
  PermPair p = *this;
  p.x_ = x_.swapped(t.a, t.b);
  // rk_xt = rk_x - 1 exactly on the box [graph_x(a), graph_x(b)).
  int ja = x_(t.a), jb = x_(t.b);
  p.rkx_.decrement_box(t.a, t.b, ja, jb);
  p.rkpi_.decrement_box(t.a, t.b, ja, jb);
  p.lx_ = p.x_.length();
  return p;
}

PermPair PermPair::upended() const { return make(w_.upend(), x_.upend()); }

PermPair PermPair::inverted() const {
  return make(w_.inverse(), x_.inverse());
}

}  // namespace schub
