#include "schub/influence.hpp"

#include <vector>

namespace schub {

PointSet essential_set(const Permutation& w) {
  int n = w.degree();
  PointSet s(n);
  if (n < 2) return s;
  Permutation wi = w.inverse();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (w(i) <= j && j < w(i + 1) && wi(j) <= i && i < wi(j + 1))
        s.insert({i, j});
  return s;
}

bool leq_via_essential(const Permutation& y, const Permutation& w) {
  if (y.degree() != w.degree())
    throw std::invalid_argument("degree mismatch");
  RankTable rky = RankTable::of(y), rkw = RankTable::of(w);
  for (Point p : essential_set(w).points())
    if (rky.at(p) < rkw.at(p)) return false;
  return true;
}

PointSet closure_step(const Permutation& w, const PointSet& a,
                      const PointSet& b) {
  int n = w.degree();
  RankTable rk = RankTable::of(w);
  PointSet out = b;
  std::vector<Point> witnesses = a.points();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Point p{i, j};
      if (out.contains(p)) continue;
      for (Point q : witnesses) {
        if (!comparable_cw(p, q)) continue;
        if (!b.contains({p.i, q.j}) || !b.contains({q.i, p.j})) continue;
        if (diff(rk, p, q) != 0) continue;
        out.insert(p);
        break;
      }
    }
  return out;
}

PointSet influence_set(const Permutation& w, const PointSet& a) {
  int n = w.degree();
  RankTable rk = RankTable::of(w);
  PointSet b = a;
  std::vector<Point> witnesses = a.points();

  // A point p enters via a witness q in A once both corners of (p,q) sit
  // in B; processing each newly added point in its corner role reaches the
  // fixed point without rescanning the square.
  std::vector<Point> work = b.points();
  auto try_add = [&](Point p, Point q) {
    if (!in_framed_square(p, n) || b.contains(p)) return;
    if (!comparable_cw(p, q)) return;
    if (!b.contains({p.i, q.j}) || !b.contains({q.i, p.j})) return;
    if (diff(rk, p, q) != 0) return;
    b.insert(p);
    work.push_back(p);
  };
  while (!work.empty()) {
    Point c = work.back();
    work.pop_back();
    // c as corner (p.i, q.j): p runs over row c.i, q over A in column c.j.
    for (Point q : witnesses) {
      if (q.j == c.j)
        for (int jp = 0; jp <= n; ++jp) try_add({c.i, jp}, q);
      if (q.i == c.i)
        for (int ip = 0; ip <= n; ++ip) try_add({ip, c.j}, q);
    }
  }
  return b;
}

bool is_influential(const PermPair& pair) {
  return influence_set(pair.w(), pair.level_set()) ==
         PointSet::full_square(pair.degree());
}

std::optional<Permutation> tightness_counterexample(const PermPair& pair) {
  int n = pair.degree();
  if (n > 7)
    throw std::domain_error("tightness enumeration capped at degree 7");
  std::vector<Point> level;
  for (Point p : pair.level_set().points())
    if (in_restricted_square(p, n)) level.push_back(p);
  const RankTable& rkw = pair.rank_w();
  for (const Permutation& y : symmetric_group(n)) {
    RankTable rky = RankTable::of(y);
    bool agrees = true;
    for (Point p : level)
      if (rky.at(p) != rkw.at(p)) {
        agrees = false;
        break;
      }
    if (agrees && !bruhat_leq(rky, rkw)) return y;
  }
  return std::nullopt;
}

bool is_tight(const PermPair& pair) {
  return !tightness_counterexample(pair).has_value();
}

}  // namespace schub
