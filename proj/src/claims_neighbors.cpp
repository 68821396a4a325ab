#include <algorithm>

#include "claims.hpp"
#include "schub/influence.hpp"
#include "schub/neighbors.hpp"

namespace schub::claims {

namespace {

std::vector<Point> complement_points(const PermPair& p) {
  std::vector<Point> out;
  int n = p.degree();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (p.rank_pair().at(i, j) > 0) out.push_back({i, j});
  return out;
}

// S(p) = {t in R : graph_x(a) <= p componentwise but graph_x(b) is not}.
std::vector<Transposition> s_set(const PermPair& p, Point q) {
  std::vector<Transposition> out;
  const Permutation& x = p.x();
  for (const Transposition& t : p.r_set())
    if (leq_cw(x.graph_point(t.a), q) && !leq_cw(x.graph_point(t.b), q))
      out.push_back(t);
  return out;
}

PointSet transform_set(const PointSet& in, int n, bool invert) {
  PointSet out(n);
  for (Point p : in.points()) out.insert(invert ? inverted(p) : upended(p, n));
  return out;
}

}  // namespace

void register_neighbor_claims(std::vector<Claim>& out) {
  out.push_back(
      {{"prop-main", "q_cond holds at every complement point of a smooth "
                     "pair",
        6, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (p.is_smooth())
             for (const PointViolation& v : check_prop_main(p))
               s.fail(p.w(), p.x(), v.p, {}, v.clause);
           s.count();
         });
       }});

  out.push_back(
      {{"prop-main1",
        "strong shift conditions at every critical point of a smooth pair",
        6, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (p.is_smooth())
             for (const PointViolation& v : check_prop_main1(p))
               s.fail(p.w(), p.x(), v.p, {}, v.clause);
           s.count();
         });
       }});

  out.push_back(
      {{"prpdholds",
        "rank-drop definition of P equals the corner diff characterization",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             NeighborFrame fd = next_down(p, q);
             NeighborFrame fu = next_up(p, q);
             bool okd = prop_down(p, q) ==
                            (diff(p.rank_x(), q, fd.corner) > 0) &&
                        prop_down(p, q) ==
                            (diff(p.rank_pair(), q, fd.corner) > 0);
             bool oku = prop_up(p, q) ==
                            (diff(p.rank_x(), q, fu.corner) > 0) &&
                        prop_up(p, q) ==
                            (diff(p.rank_pair(), q, fu.corner) > 0);
             s.require(okd && oku, p.w(), p.x(), q, {},
                       "P characterizations disagree");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"equrpop",
        "diff_x(p, shift) = 1 iff rank one, level shift target and "
        "vanishing diff_w",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             ShiftFrame f = shift_frame(p, q);
             bool right = p.rank_pair().at(q) == 1 &&
                          p.in_level_set(f.rd) &&
                          diff(p.rank_w(), q, f.rd) == 0;
             bool left = p.rank_pair().at(q) == 1 &&
                         p.in_level_set(f.lu) &&
                         diff(p.rank_w(), q, f.lu) == 0;
             s.require(strong_prop_right(p, q) == right &&
                           strong_prop_left(p, q) == left,
                       p.w(), p.x(), q, {},
                       "strong P characterizations disagree");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"q-upend", "P and Q conditions transport through upending", 4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           PermPair up = p.upended();
           for (Point q : complement_points(p)) {
             Point qs = upended(q, n);
             bool ok = prop_down(p, q) == prop_up(up, qs) &&
                       prop_up(p, q) == prop_down(up, qs) &&
                       q_cond(p, q) == q_cond(up, qs);
             s.require(ok, p.w(), p.x(), q, {},
                       "P/Q upending transport");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"strongp-symmetries",
        "strong P transports through upending and inversion", 4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           PermPair up = p.upended();
           PermPair inv = p.inverted();
           for (Point q : complement_points(p)) {
             bool right = strong_prop_right(p, q);
             bool ok = right == strong_prop_left(up, upended(q, n)) &&
                       right == strong_prop_right(inv, inverted(q));
             s.require(ok, p.w(), p.x(), q, {},
                       "strong P symmetry transport");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"crit-rank1", "critical points carry rank exactly one", 5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : critical_set(p).points())
             s.require(p.rank_pair().at(q) == 1, p.w(), p.x(), q, {},
                       "critical point with rank != 1");
           s.count();
         });
       }});

  out.push_back(
      {{"crit-symmetry",
        "critical set transports through upending and inversion", 4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           PointSet crit = critical_set(p);
           bool ok = critical_set(p.upended()) ==
                         transform_set(crit, n, false) &&
                     critical_set(p.inverted()) ==
                         transform_set(crit, n, true);
           s.require(ok, p.w(), p.x(), {}, {}, "critical set transport");
           s.count();
         });
       }});

  out.push_back(
      {{"prpdp",
        "existential witness characterization of P, with strong P implying "
        "P",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             int jd = next_down(p, q).side.j;
             bool wit_down = false;
             for (int l = q.i + 1; l <= n && !wit_down; ++l)
               wit_down = p.in_level_set({l, jd}) &&
                          diff(p.rank_w(), q, {l, jd}) == 0 &&
                          diff(p.rank_x(), q, {l, jd}) > 0;
             int ju = next_up(p, q).side.j;
             bool wit_up = false;
             for (int l = q.i - 1; l >= 0 && !wit_up; --l)
               wit_up = p.in_level_set({l, ju}) &&
                        diff(p.rank_w(), q, {l, ju}) == 0 &&
                        diff(p.rank_x(), q, {l, ju}) > 0;
             s.require(prop_down(p, q) == wit_down &&
                           prop_up(p, q) == wit_up,
                       p.w(), p.x(), q, {}, "existential witness mismatch");
             s.require(!strong_prop_right(p, q) || prop_down(p, q),
                       p.w(), p.x(), q, {}, "strong right P without P down");
             s.require(!strong_prop_left(p, q) || prop_up(p, q), p.w(),
                       p.x(), q, {}, "strong left P without P up");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"strongp-rank1-prpd", "strong P equals rank one plus P", 5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             bool rank1 = p.rank_pair().at(q) == 1;
             bool ok = strong_prop_right(p, q) ==
                           (rank1 && prop_down(p, q)) &&
                       strong_prop_left(p, q) == (rank1 && prop_up(p, q));
             s.require(ok, p.w(), p.x(), q, {},
                       "strong P vs rank-one P equivalence");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"nitm2", "failed P up forces an up-maximal target with rank "
                 "domination on the column segment",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             if (prop_up(p, q)) continue;
             NeighborFrame f = next_up(p, q);
             Point tgt = f.target;
             s.require(next_up(p, tgt).target == tgt, p.w(), p.x(), q, {},
                       "up target not up-maximal");
             s.require(next_up(p, tgt).side == f.corner, p.w(), p.x(), q, {},
                       "left shift of target differs from corner");
             int rq = p.rank_pair().at(q);
             for (int i1 = tgt.i; i1 <= q.i; ++i1) {
               Point mid{i1, q.j};
               int rm = p.rank_pair().at(mid);
               s.require(rm >= rq, p.w(), p.x(), mid, {},
                         "rank dips on the column segment");
               if (rm == rq) {
                 NeighborFrame fm = next_up(p, mid);
                 s.require(fm.target == tgt && fm.side.j == f.corner.j &&
                               !prop_up(p, mid),
                           p.w(), p.x(), mid, {},
                           "equal-rank point breaks the shared frame");
               }
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"nitm", "failed P down forces a down-maximal target with rank "
                "domination on the column segment",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (Point q : complement_points(p)) {
             if (prop_down(p, q)) continue;
             NeighborFrame f = next_down(p, q);
             Point tgt = f.target;
             s.require(next_down(p, tgt).target == tgt, p.w(), p.x(), q, {},
                       "down target not down-maximal");
             s.require(next_down(p, tgt).side == f.corner, p.w(), p.x(), q,
                       {}, "right shift of target differs from corner");
             int rq = p.rank_pair().at(q);
             for (int i1 = q.i; i1 <= tgt.i; ++i1) {
               Point mid{i1, q.j};
               int rm = p.rank_pair().at(mid);
               s.require(rm >= rq, p.w(), p.x(), mid, {},
                         "rank dips on the column segment");
               if (rm == rq) {
                 NeighborFrame fm = next_down(p, mid);
                 s.require(fm.target == tgt && fm.side.j == f.corner.j &&
                               !prop_down(p, mid),
                           p.w(), p.x(), mid, {},
                           "equal-rank point breaks the shared frame");
               }
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"maxsmlr-prime",
        "mutation can only push the down target further down", 4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (const Transposition& t : p.r_set()) {
             PermPair m = p.mutated(t);
             for (Point q : complement_points(m)) {
               int base = next_down(p, q).target.i;
               int moved = next_down(m, q).target.i;
               s.require(moved >= base, p.w(), p.x(), q, t,
                         "down target moved up after mutation");
               if (moved == q.i)
                 s.require(base == q.i, p.w(), p.x(), q, t,
                           "down-maximality not inherited");
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"maxsmlr", "mutation can only push the up target further up", 4, 7,
        7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (const Transposition& t : p.r_set()) {
             PermPair m = p.mutated(t);
             for (Point q : complement_points(m)) {
               int base = next_up(p, q).target.i;
               int moved = next_up(m, q).target.i;
               s.require(moved <= base, p.w(), p.x(), q, t,
                         "up target moved down after mutation");
               if (moved == q.i)
                 s.require(base == q.i, p.w(), p.x(), q, t,
                           "up-maximality not inherited");
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"simptau",
        "every complement point admits a straddling cover reflection", 5, 7,
        7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           auto rs = p.rs_set();
           for (Point q : complement_points(p)) {
             bool found = false;
             for (const Transposition& t : s_set(p, q))
               if (std::find(rs.begin(), rs.end(), t) != rs.end()) {
                 found = true;
                 break;
               }
             s.require(found, p.w(), p.x(), q, {},
                       "S*(p) empty at a complement point");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"staged-influence",
        "rank stages of a smooth pair enter the influence set two closure "
        "steps at a time",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (!p.is_smooth()) return;
           PointSet level = p.level_set();
           PointSet infl = influence_set(p.w(), level);
           PointSet prev = level;
           for (int stage = 1; stage <= n; ++stage) {
             PointSet cur(n);
             for (int i = 0; i <= n; ++i)
               for (int j = 0; j <= n; ++j)
                 if (p.rank_pair().at(i, j) <= stage) cur.insert({i, j});
             PointSet reached = closure_step(
                 p.w(), level, closure_step(p.w(), level, prev));
             s.require(reached.contains_all(cur), p.w(), p.x(), {}, {},
                       "stage escapes two closure steps");
             s.require(infl.contains_all(cur), p.w(), p.x(), {}, {},
                       "stage escapes the influence set");
             prev = cur;
           }
           s.count();
         });
       }});

  out.push_back(
      {{"neighbor-total",
        "neighbor and shift frames are total and well-formed", 5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (int i = 1; i < n; ++i)
             for (int j = 1; j < n; ++j) {
               Point q{i, j};
               NeighborFrame fd = next_down(p, q);
               NeighborFrame fu = next_up(p, q);
               bool ok =
                   p.in_level_set(fd.side) && p.in_level_set(fd.corner) &&
                   diff(p.rank_w(), q, fd.corner) == 0 && fd.side.j > j &&
                   fd.target.i >= i && fd.target.j == j &&
                   fd.corner == Point{fd.target.i, fd.side.j} &&
                   p.in_level_set(fu.side) && p.in_level_set(fu.corner) &&
                   diff(p.rank_w(), q, fu.corner) == 0 && fu.side.j < j &&
                   fu.target.i <= i && fu.target.j == j &&
                   fu.corner == Point{fu.target.i, fu.side.j};
               s.require(ok, p.w(), p.x(), q, {}, "neighbor frame malformed");
             }
           for (Point q : complement_points(p)) {
             ShiftFrame f = shift_frame(p, q);
             bool ok = lt_cw(q, f.rd) && lt_cw(f.lu, q) &&
                       p.in_level_set({q.i, f.rd.j}) &&
                       p.in_level_set({f.rd.i, q.j}) &&
                       p.in_level_set({q.i, f.lu.j}) &&
                       p.in_level_set({f.lu.i, q.j});
             s.require(ok, p.w(), p.x(), q, {}, "shift frame malformed");
           }
           s.count();
         });
       }});
}

}  // namespace schub::claims
