#include <algorithm>

#include "claims.hpp"
#include "schub/influence.hpp"

namespace schub::claims {

namespace {

const Permutation& identity_of(int n) {
  static std::mutex mu;
  static std::vector<Permutation> ids(kMaxDegree + 1);
  std::lock_guard<std::mutex> lock(mu);
  if (ids[n].degree() != n) ids[n] = Permutation::identity(n);
  return ids[n];
}

}  // namespace

void register_influence_claims(std::vector<Claim>& out) {
  out.push_back(
      {{"influential-tight", "every influential pair is tight", 5, 6, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         for_pairs_of(d, u, [&](const PermPair& p) {
           if (is_influential(p)) {
             auto witness = tight_witness_index(p, d);
             s.require(!witness, p.w(), p.x(), {}, {},
                       witness ? "influential but not tight, y=" +
                                     (*d.perms)[*witness].str()
                               : "");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"scor",
        "rk_y dominates rk_w on the influence closure of the agreement set",
        4, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& tw = d.tables[u];
         for (std::size_t yi = 0; yi < d.size(); ++yi) {
           const RankTable& ty = d.tables[yi];
           PointSet agree(n);
           for (int i = 0; i <= n; ++i)
             for (int j = 0; j <= n; ++j)
               if (tw.at(i, j) == ty.at(i, j)) agree.insert({i, j});
           bool ok = true;
           for (Point p : influence_set(w, agree).points())
             if (ty.at(p) < tw.at(p)) {
               ok = false;
               break;
             }
           s.require(ok, w, (*d.perms)[yi], {}, {},
                     "rk_y < rk_w inside the influence set");
           s.count();
         }
       }});

  out.push_back(
      {{"essential-sufficient",
        "a level set containing ess(w) forces tightness", 5, 6, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         for_pairs_of(d, u, [&](const PermPair& p) {
           if (p.level_set().contains_all(essential_set(p.w()))) {
             auto witness = tight_witness_index(p, d);
             s.require(!witness, p.w(), p.x(), {}, {},
                       "ess(w) inside level set but pair not tight");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"essential-equiv",
        "order via essential-set rank conditions equals Bruhat order", 5, 7,
        7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         for (std::size_t yi = 0; yi < d.size(); ++yi) {
           const Permutation& y = (*d.perms)[yi];
           s.require(leq_via_essential(y, w) ==
                         bruhat_leq(d.tables[yi], d.tables[u]),
                     w, y, {}, {}, "essential-set order test mismatch");
           s.count();
         }
       }});

  out.push_back(
      {{"essential-minimal",
        "dropping any essential point breaks the order equivalence", 5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& tw = d.tables[u];
         auto ess = essential_set(w).points();
         for (Point dropped : ess) {
           bool found = false;
           for (std::size_t yi = 0; yi < d.size() && !found; ++yi) {
             const RankTable& ty = d.tables[yi];
             bool agrees = true;
             for (Point p : ess) {
               if (p == dropped) continue;
               if (ty.at(p) < tw.at(p)) {
                 agrees = false;
                 break;
               }
             }
             found = agrees && !bruhat_leq(ty, tw);
           }
           s.require(found, w, w, dropped, {},
                     "essential point is redundant");
         }
         s.count();
       }});

  out.push_back(
      {{"influence-fixed-point",
        "worklist influence set is the closure-step fixed point", 5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         auto check = [&](const Permutation& w, const Permutation& x,
                          const PointSet& a) {
           PointSet infl = influence_set(w, a);
           s.require(closure_step(w, a, infl) == infl, w, x, {}, {},
                     "influence set not stable under closure_step");
           PointSet ref = a;
           for (;;) {
             PointSet next = closure_step(w, a, ref);
             if (next == ref) break;
             ref = next;
           }
           s.require(ref == infl, w, x, {}, {},
                     "worklist result differs from iterated closure");
         };
         for_pairs_of(d, u, [&](const PermPair& p) {
           check(p.w(), p.x(), p.level_set());
           if (p.x() == p.w()) check(p.w(), p.x(), essential_set(p.w()));
           s.count();
         });
       }});

  out.push_back({{"theorem-main", "every smooth pair is tight", 6, 6, 7},
                 true,
                 sn_units,
                 [](int n, std::uint64_t u, Sink& s) {
                   const SnData& d = sn_data(n);
                   for_pairs_of(d, u, [&](const PermPair& p) {
                     if (p.is_smooth()) {
                       auto witness = tight_witness_index(p, d);
                       s.require(!witness, p.w(), p.x(), {}, {},
                                 witness ? "smooth but not tight, y=" +
                                               (*d.perms)[*witness].str()
                                         : "");
                     }
                     s.count();
                   });
                 }});

  out.push_back(
      {{"theorem-main-prime", "every smooth pair is influential", 6, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           if (p.is_smooth())
             s.require(is_influential(p), p.w(), p.x(), {}, {},
                       "smooth pair not influential");
           s.count();
         });
       }});

  out.push_back(
      {{"smooth-pattern",
        "(w,e) smooth iff w avoids 3412 and 4231", 7, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         static const Permutation p3412 = Permutation::parse("3412");
         static const Permutation p4231 = Permutation::parse("4231");
         bool avoids = !w.contains_pattern(p3412) &&
                       !w.contains_pattern(p4231);
         PermPair p = PermPair::make(w, identity_of(n));
         s.require(p.is_smooth() == avoids, w, identity_of(n), {}, {},
                   "smoothness vs pattern avoidance");
         s.count();
       }});

  out.push_back(
      {{"tight-pattern",
        "(w,e) tight iff w avoids 4231, 35142, 42513, 351624", 6, 6, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         static const std::vector<Permutation> pats = {
             Permutation::parse("4231"), Permutation::parse("35142"),
             Permutation::parse("42513"), Permutation::parse("351624")};
         bool avoids = true;
         for (const Permutation& pat : pats)
           if (pat.degree() <= n && w.contains_pattern(pat)) avoids = false;
         PermPair p = PermPair::make(w, identity_of(n));
         bool tight = !tight_witness_index(p, d);
         s.require(tight == avoids, w, identity_of(n), {}, {},
                   "tightness vs pattern avoidance");
         s.count();
       }});
}

}  // namespace schub::claims
