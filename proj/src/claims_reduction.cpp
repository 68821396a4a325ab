#include <algorithm>

#include "claims.hpp"
#include "schub/neighbors.hpp"
#include "schub/reduction.hpp"

namespace schub::claims {

namespace {

std::vector<Point> framed_points(int n) {
  std::vector<Point> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Point> complement_points(const PermPair& p) {
  std::vector<Point> out;
  int n = p.degree();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (p.rank_pair().at(i, j) > 0) out.push_back({i, j});
  return out;
}

std::vector<Transposition> s_set(const PermPair& p, Point q) {
  std::vector<Transposition> out;
  const Permutation& x = p.x();
  for (const Transposition& t : p.r_set())
    if (leq_cw(x.graph_point(t.a), q) && !leq_cw(x.graph_point(t.b), q))
      out.push_back(t);
  return out;
}

using ElemCheck = void (*)(int, const PermPair&, const Reduction&, Sink&);

Claim elem_claim(int part, const char* summary, ElemCheck check) {
  ClaimInfo info{"lemma-elem-" + std::to_string(part), summary, 5, 7, 7};
  return {info, true, sn_units,
          [check](int n, std::uint64_t u, Sink& s) {
            for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
              check(n, p, reduce(p), s);
              s.count();
            });
          }};
}

}  // namespace

void register_reduction_claims(std::vector<Claim>& out) {
  out.push_back(elem_claim(
      1, "the reduction is a valid pair",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        s.require(bruhat_leq(red.target.x(), red.target.w()) &&
                      red.target.degree() ==
                          static_cast<int>(red.rows.size()),
                  p.w(), p.x(), {}, {}, "reduction not a valid pair");
      }));

  out.push_back(elem_claim(
      2, "the reduction preserves l(pair)",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        s.require(red.target.length() == p.length(), p.w(), p.x(), {}, {},
                  "length not preserved");
      }));

  out.push_back(elem_claim(
      3, "rank of the pair transports through point projection",
      [](int n, const PermPair& p, const Reduction& red, Sink& s) {
        for (Point q : framed_points(n))
          s.require(p.rank_pair().at(q) ==
                        red.target.rank_pair().at(project_point(red, q)),
                    p.w(), p.x(), q, {}, "rank transport failure");
      }));

  out.push_back(elem_claim(
      4, "diff_w dominates and diff_pair transports through projection",
      [](int n, const PermPair& p, const Reduction& red, Sink& s) {
        auto pts = framed_points(n);
        const RankTable& tw = red.target.rank_w();
        for (Point a : pts)
          for (Point b : pts) {
            if (!leq_cw(a, b)) continue;
            Point pa = project_point(red, a), pb = project_point(red, b);
            bool ok =
                diff(p.rank_w(), a, b) >= diff(tw, pa, pb) &&
                diff(p.rank_pair(), a, b) ==
                    diff(red.target.rank_pair(), pa, pb);
            if (!ok) {
              s.fail(p.w(), p.x(), a, {}, "diff transport failure");
              return;
            }
          }
      }));

  out.push_back(elem_claim(
      5, "reflection projection is a bijection onto R of the reduction",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        std::vector<Transposition> image;
        for (const Transposition& t : p.r_set()) {
          auto pt = project_transposition(red, t);
          if (!pt) {
            s.fail(p.w(), p.x(), {}, t, "reflection collapsed to identity");
            return;
          }
          image.push_back(*pt);
        }
        std::sort(image.begin(), image.end());
        bool distinct =
            std::adjacent_find(image.begin(), image.end()) == image.end();
        s.require(distinct && image == red.target.r_set(), p.w(), p.x(), {},
                  {}, "projection not a bijection onto reduced R");
      }));

  out.push_back(elem_claim(
      6, "mutated level sets transport through projection",
      [](int n, const PermPair& p, const Reduction& red, Sink& s) {
        for (const Transposition& t : p.r_set()) {
          auto pt = project_transposition(red, t);
          if (!pt) continue;  // part 5 reports this
          PermPair mut = p.mutated(t);
          PermPair mut_red = red.target.mutated(*pt);
          for (Point q : framed_points(n))
            s.require((mut.rank_pair().at(q) == 0) ==
                          (mut_red.rank_pair().at(project_point(red, q)) ==
                           0),
                      p.w(), p.x(), q, t, "mutated level-set transport");
        }
      }));

  out.push_back(elem_claim(
      7, "smoothness is preserved by reduction",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        s.require(p.is_smooth() == red.target.is_smooth(), p.w(), p.x(), {},
                  {}, "smoothness changed by reduction");
      }));

  out.push_back(elem_claim(
      8, "the reduction is reduced",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        s.require(is_reduced(red.target), p.w(), p.x(), {}, {},
                  "reduction not reduced");
      }));

  out.push_back(elem_claim(
      9, "critical sets transport through projection",
      [](int n, const PermPair& p, const Reduction& red, Sink& s) {
        PointSet crit = critical_set(p);
        PointSet crit_red_pair = critical_set(red.target);
        for (Point q : framed_points(n))
          s.require(crit.contains(q) ==
                        crit_red_pair.contains(project_point(red, q)),
                    p.w(), p.x(), q, {}, "critical transport failure");
      }));

  out.push_back(elem_claim(
      10, "coordinatewise shifts transport through projection",
      [](int, const PermPair& p, const Reduction& red, Sink& s) {
        for (Point q : complement_points(p)) {
          ShiftFrame f = shift_frame(p, q);
          ShiftFrame fr = shift_frame(red.target, project_point(red, q));
          s.require(fr.rd == project_point(red, f.rd) &&
                        fr.lu == project_point(red, f.lu),
                    p.w(), p.x(), q, {}, "shift transport failure");
        }
      }));

  out.push_back(
      {{"betii",
        "a complement graph point of x forces a reflection through its row",
        5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (int i = 1; i <= n; ++i) {
             if (p.rank_pair().at(p.x().graph_point(i)) == 0) continue;
             bool found = false;
             for (int i2 = 1; i2 <= n && !found; ++i2)
               found = i2 != i && p.in_r_set(Transposition(i, i2));
             s.require(found, p.w(), p.x(), p.x().graph_point(i), {},
                       "no reflection through the row");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"redec",
        "a reduced pair with decreasing x-prefix keeps w above x there", 5,
        8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (!is_reduced(p)) return;
           const Permutation& x = p.x();
           int prefix = 1;
           while (prefix < n && x(prefix) > x(prefix + 1)) ++prefix;
           for (int i = 1; i <= prefix; ++i)
             s.require(p.w()(i) > x(i), p.w(), x, {}, {},
                       "w(i) <= x(i) under a decreasing prefix");
           s.count();
         });
       }});

  out.push_back(
      {{"cor-smth",
        "after a smooth cover mutation, t or its conjugate stays in R", 5, 7,
        7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (!p.is_smooth()) return;
           for (const Transposition& tp : p.rs_set()) {
             PermPair mut = p.mutated(tp);
             for (const Transposition& t : p.r_set()) {
               if (t == tp) continue;
               s.require(mut.in_r_set(t) ||
                             mut.in_r_set(t.conjugated_by(tp)),
                         p.w(), p.x(), {}, t,
                         "both t and its conjugate left R");
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"gasharov-injective",
        "the conjugation-or-identity map lands in R minus t' injectively", 5,
        7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (const Transposition& tp : p.r_set()) {
             auto map = gasharov_map(p, tp);
             std::vector<Transposition> image;
             for (const auto& [t, ft] : map) {
               s.require(p.in_r_set(ft) && !(ft == tp), p.w(), p.x(), {}, t,
                         "image escapes R minus t'");
               image.push_back(ft);
             }
             std::sort(image.begin(), image.end());
             s.require(std::adjacent_find(image.begin(), image.end()) ==
                           image.end(),
                       p.w(), p.x(), {}, tp, "map not injective");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"gasharov-smooth",
        "smooth iff the map is onto R minus t' and the mutation is smooth",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (p.length() == 0) return;
           bool smooth = p.is_smooth();
           for (const Transposition& tp : p.rs_set()) {
             std::vector<Transposition> image, rest;
             for (const auto& [t, ft] : gasharov_map(p, tp))
               image.push_back(ft);
             for (const Transposition& t : p.r_set())
               if (!(t == tp)) rest.push_back(t);
             std::sort(image.begin(), image.end());
             bool onto = image == rest;
             s.require(smooth == (onto && p.mutated(tp).is_smooth()), p.w(),
                       p.x(), {}, tp, "smoothness recursion mismatch");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"lemma-redred",
        "strong P and the vanishing diff_w conditions survive reduction at "
        "rank-one points",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           Reduction red = reduce(p);
           for (Point q : complement_points(p)) {
             if (p.rank_pair().at(q) != 1) continue;
             Point qr = project_point(red, q);
             ShiftFrame f = shift_frame(p, q);
             ShiftFrame fr = shift_frame(red.target, qr);
             bool ok =
                 strong_prop_right(p, q) ==
                     strong_prop_right(red.target, qr) &&
                 strong_prop_left(p, q) ==
                     strong_prop_left(red.target, qr) &&
                 (diff(p.rank_w(), q, f.rd) == 0) ==
                     (diff(red.target.rank_w(), qr, fr.rd) == 0) &&
                 (diff(p.rank_w(), q, f.lu) == 0) ==
                     (diff(red.target.rank_w(), qr, fr.lu) == 0);
             s.require(ok, p.w(), p.x(), q, {},
                       "reduction changed a rank-one condition");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"redcrit", "reduced critical points transport through projection",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (!p.is_smooth()) return;
           Reduction red = reduce(p);
           PointSet mine = crit_red(p);
           PointSet theirs = crit_red(red.target);
           for (Point q : complement_points(p))
             s.require(mine.contains(q) ==
                           theirs.contains(project_point(red, q)),
                       p.w(), p.x(), q, {}, "crit_red transport failure");
           s.count();
         });
       }});

  out.push_back(
      {{"sset-transport",
        "the Gasharov map carries straddling reflections into straddling "
        "reflections",
        4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (const Transposition& tp : p.rs_set()) {
             PermPair mut = p.mutated(tp);
             for (Point q : complement_points(p)) {
               auto sp = s_set(p, q);
               if (std::find(sp.begin(), sp.end(), tp) != sp.end()) continue;
               s.require(mut.rank_pair().at(q) > 0, p.w(), p.x(), q, tp,
                         "point left the complement");
               if (mut.rank_pair().at(q) == 0) continue;
               auto smut = s_set(mut, q);
               for (const auto& [t, ft] : gasharov_map(p, tp))
                 if (std::find(smut.begin(), smut.end(), t) != smut.end())
                   s.require(std::find(sp.begin(), sp.end(), ft) != sp.end(),
                             p.w(), p.x(), q, t,
                             "image leaves the straddling set");
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"minimal-classification",
        "reduced minimal pairs are exactly the shape-formula pairs", 6, 7,
        7},
       true,
       [](int n) {
         return sn_units(n) + admissible_shapes(n).size();
       },
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         if (u < d.size()) {
           for_pairs_of(d, u, [&](const PermPair& p) {
             if (!is_reduced(p)) return;
             for (const Transposition& t : p.r_set()) {
               if (!is_t_minimal(p, t)) continue;
               MinimalShape shape{n, t.a, t.b, p.x()(t.a), p.x()(t.b)};
               s.require(shape_admissible(shape) &&
                             minimal_shape_pair(shape) == p,
                         p.w(), p.x(), {}, t,
                         "reduced minimal pair escapes the shape formula");
             }
             s.count();
           });
         } else {
           MinimalShape shape = admissible_shapes(n)[u - d.size()];
           PermPair p = minimal_shape_pair(shape);
           Transposition t(shape.i1, shape.i2);
           s.require(is_reduced(p) && p.in_r_set(t) && is_t_minimal(p, t),
                     p.w(), p.x(), {}, t,
                     "shape pair not reduced t-minimal");
           s.count();
         }
       }});

  out.push_back(
      {{"shape-footnote",
        "every shape pair is smooth, reduced and t-minimal", 8, 12, 16},
       false,
       [](int n) { return admissible_shapes(n).size(); },
       [](int n, std::uint64_t u, Sink& s) {
         MinimalShape shape = admissible_shapes(n)[u];
         PermPair p = minimal_shape_pair(shape);
         Transposition t(shape.i1, shape.i2);
         s.require(p.is_smooth() && is_reduced(p) && p.in_r_set(t) &&
                       is_t_minimal(p, t),
                   p.w(), p.x(), {}, t, "footnote property fails");
         s.count();
       }});

  out.push_back(
      {{"basicbasic",
        "shape pairs satisfy the case formulas for crit_red and the shifts",
        8, 12, 16},
       false,
       [](int n) { return admissible_shapes(n).size(); },
       [](int n, std::uint64_t u, Sink& s) {
         MinimalShape sh = admissible_shapes(n)[u];
         PermPair p = minimal_shape_pair(sh);
         if (!p.is_smooth()) {
           s.fail(p.w(), p.x(), {}, {}, "shape pair not smooth");
           return;
         }
         PointSet critred = crit_red(p);
         PointSet expected(n);
         bool case1 = sh.i1 == 1 && sh.j1 == 1 && sh.i2 + sh.j2 == n + 2;
         bool case2 = sh.i2 == n && sh.j2 == n && sh.i1 + sh.j1 == n;
         if (case1) {
           bool oneline = p.w() == Permutation::longest(n) && p.x()(1) == 1;
           for (int i = 2; i <= n; ++i)
             oneline = oneline && p.x()(i) == n + 2 - i;
           s.require(oneline, p.w(), p.x(), {}, {}, "case-1 one-line forms");
           for (int i = 1; i < n; ++i)
             for (int j = 1; j < n; ++j)
               if (i + j <= n) expected.insert({i, j});
         } else if (case2) {
           bool oneline = p.w() == Permutation::longest(n) && p.x()(n) == n;
           for (int i = 1; i < n; ++i)
             oneline = oneline && p.x()(i) == n - i;
           s.require(oneline, p.w(), p.x(), {}, {}, "case-2 one-line forms");
           for (int i = 1; i < n; ++i)
             for (int j = 1; j < n; ++j)
               if (i + j >= n) expected.insert({i, j});
         } else {
           for (int i = n + sh.i1 - sh.j2; i <= sh.i2 - sh.j1; ++i)
             expected.insert({i, n - i});
         }
         s.require(critred == expected, p.w(), p.x(), {}, {},
                   "crit_red differs from the case formula");
         for (Point q : critred.points()) {
           ShiftFrame f = shift_frame(p, q);
           bool right = strong_prop_right(p, q);
           bool left = strong_prop_left(p, q);
           if (case1) {
             bool ok = f.lu == Point{0, 0} && left &&
                       f.rd == Point{n + 1 - q.j, n + 1 - q.i} &&
                       right == (diff(p.rank_w(), q, f.rd) == 0) &&
                       right == (q.i + q.j == n);
             s.require(ok, p.w(), p.x(), q, {}, "case-1 shift formulas");
           } else if (case2) {
             bool ok = f.rd == Point{n, n} && right &&
                       f.lu == Point{n - 1 - q.j, n - 1 - q.i} &&
                       left == (diff(p.rank_w(), q, f.lu) == 0) &&
                       left == (q.i + q.j == n);
             s.require(ok, p.w(), p.x(), q, {}, "case-2 shift formulas");
           } else {
             bool ok = f.rd == Point{sh.i2, sh.j2} &&
                       f.lu == Point{sh.i1 - 1, sh.j1 - 1} && right && left;
             s.require(ok, p.w(), p.x(), q, {}, "case-3 shift formulas");
           }
         }
         s.count();
       }});
}

}  // namespace schub::claims
