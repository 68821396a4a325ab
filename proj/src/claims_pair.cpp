#include <algorithm>

#include "claims.hpp"

namespace schub::claims {

namespace {

bool same_set(std::vector<Transposition> a, std::vector<Transposition> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

void register_pair_claims(std::vector<Claim>& out) {
  out.push_back(
      {{"pair-invariants",
        "table arithmetic, frame membership, R* basics, level-set chain "
        "identity",
        4, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& tw = d.tables[u];
         for (std::size_t yi = 0; yi < d.size(); ++yi) {
           if (!bruhat_leq(d.tables[yi], tw)) continue;
           PermPair p = PermPair::make(w, (*d.perms)[yi]);
           const RankTable& pi = p.rank_pair();
           bool ok = p.length() >= 0;
           for (int i = 0; i <= n && ok; ++i)
             for (int j = 0; j <= n && ok; ++j) {
               int v = d.tables[yi].at(i, j) - tw.at(i, j);
               ok = pi.at(i, j) == v && v >= 0;
               if (i == 0 || j == 0 || i == n || j == n) ok = ok && v == 0;
             }
           s.require(ok, w, p.x(), {}, {}, "pair table invariant");
           auto r = p.r_set();
           auto rs = p.rs_set();
           s.require(rs.empty() == (p.x() == w), w, p.x(), {}, {},
                     "R* empty iff w = x");
           s.require(std::includes(r.begin(), r.end(), rs.begin(), rs.end()),
                     w, p.x(), {}, {}, "R* inside R");
           // X_{(w,x)} = X_{(w,y)} cap X_{(y,x)} for x <= y <= w.
           for (std::size_t xi = 0; xi < d.size(); ++xi) {
             if (!bruhat_leq(d.tables[xi], d.tables[yi])) continue;
             bool chain = true;
             for (int i = 1; i < n && chain; ++i)
               for (int j = 1; j < n && chain; ++j) {
                 bool wx = d.tables[xi].at(i, j) == tw.at(i, j);
                 bool wy = d.tables[yi].at(i, j) == tw.at(i, j);
                 bool yx = d.tables[xi].at(i, j) == d.tables[yi].at(i, j);
                 chain = wx == (wy && yx);
               }
             s.require(chain, w, (*d.perms)[xi], {}, {},
                       "level-set chain identity");
           }
           s.count();
         }
       }});

  out.push_back({{"basicne", "#R >= l(pair) for every pair", 5, 8, 8},
                 true,
                 sn_units,
                 [](int n, std::uint64_t u, Sink& s) {
                   for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
                     s.require(static_cast<int>(p.r_set().size()) >=
                                   p.length(),
                               p.w(), p.x(), {}, {}, "#R < l(pair)");
                     s.count();
                   });
                 }});

  out.push_back(
      {{"tijR",
        "box criterion for R membership matches the Bruhat route, with the "
        "complement box identity",
        5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         for_pairs_of(d, u, [&](const PermPair& p) {
           const Permutation& x = p.x();
           for (const Transposition& t : all_transpositions(n)) {
             bool fast = p.in_r_set(t);
             bool slow = x(t.a) < x(t.b) &&
                         bruhat_leq(x.swapped(t.a, t.b), p.w());
             s.require(fast == slow, p.w(), x, {}, t,
                       "box criterion vs Bruhat route");
             if (fast) {
               PermPair step = PermPair::make(x.swapped(t.a, t.b), x);
               PointSet box(n);
               for (int i = t.a; i < t.b; ++i)
                 for (int j = x(t.a); j < x(t.b); ++j) box.insert({i, j});
               s.require(step.level_set_complement() == box &&
                             p.level_set_complement().contains_all(box),
                         p.w(), x, {}, t, "complement box inside Xc");
             }
           }
           s.count();
         });
       }});

  out.push_back(
      {{"eq-1234", "crossing pattern forces the outer reflection into R", 5,
        8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           const Permutation& x = p.x();
           for (int i = 1; i <= n; ++i)
             for (int j = i + 1; j <= n; ++j)
               for (int k = j + 1; k <= n; ++k)
                 for (int l = k + 1; l <= n; ++l) {
                   if (!(x(j) < x(i) && x(i) < x(l) && x(l) < x(k))) continue;
                   if (!p.in_r_set({i, k}) || !p.in_r_set({j, l})) continue;
                   s.require(p.in_r_set({i, l}), p.w(), x, {},
                             Transposition(i, l), "t_{i,l} missing from R");
                 }
           s.count();
         });
       }});

  out.push_back(
      {{"sf",
        "level points with vanishing diff_w force vanishing diff_x and "
        "level corners",
        5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           auto level = p.level_set().points();
           for (Point a : level)
             for (Point b : level) {
               if (!lt_cw(a, b)) continue;
               if (diff(p.rank_w(), a, b) != 0) continue;
               bool ok = diff(p.rank_x(), a, b) == 0 &&
                         p.in_level_set({a.i, b.j}) &&
                         p.in_level_set({b.i, a.j});
               s.require(ok, p.w(), p.x(), a, {}, "sf consequence");
             }
           s.count();
         });
       }});

  out.push_back(
      {{"rstar-cover",
        "cover membership in R* iff no intermediate reflection pair", 5, 8,
        8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           auto rs = p.rs_set();
           for (const Transposition& t : p.r_set()) {
             bool split = false;
             for (int m = t.a + 1; m < t.b && !split; ++m)
               split = p.in_r_set({t.a, m}) && p.in_r_set({m, t.b});
             bool cover = std::find(rs.begin(), rs.end(), t) != rs.end();
             s.require(cover == !split, p.w(), p.x(), {}, t,
                       "R* vs intermediate-reflection test");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"hereditary-smooth", "smooth (w,x) forces smooth (w,x') up the "
                             "interval",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& tw = d.tables[u];
         std::vector<std::size_t> below;
         std::vector<char> smooth;
         for (std::size_t xi = 0; xi < d.size(); ++xi)
           if (bruhat_leq(d.tables[xi], tw)) {
             below.push_back(xi);
             smooth.push_back(
                 PermPair::make(w, (*d.perms)[xi]).is_smooth() ? 1 : 0);
           }
         for (std::size_t a = 0; a < below.size(); ++a) {
           if (!smooth[a]) continue;
           for (std::size_t b = 0; b < below.size(); ++b) {
             if (!bruhat_leq(d.tables[below[a]], d.tables[below[b]]))
               continue;
             s.require(smooth[b] == 1, w, (*d.perms)[below[b]], {}, {},
                       "smoothness not inherited upward");
           }
           s.count();
         }
       }});

  out.push_back(
      {{"pair-symmetries",
        "upend/invert involutions with rank, level-set and R transport", 4,
        7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           PermPair up = p.upended();
           PermPair inv = p.inverted();
           s.require(up.upended() == p && inv.inverted() == p, p.w(), p.x(),
                     {}, {}, "involution");
           bool ranks = true;
           for (int i = 0; i <= n && ranks; ++i)
             for (int j = 0; j <= n && ranks; ++j) {
               Point q{i, j};
               ranks = up.rank_pair().at(upended(q, n)) ==
                           p.rank_pair().at(q) &&
                       inv.rank_pair().at(inverted(q)) == p.rank_pair().at(q);
             }
           s.require(ranks, p.w(), p.x(), {}, {}, "rank transport");
           auto r = p.r_set();
           std::vector<Transposition> r_up, r_inv;
           for (const Transposition& t : r) {
             r_up.push_back(t.upended(n));
             r_inv.push_back(t.conjugated_by(p.x()));
           }
           s.require(same_set(up.r_set(), r_up), p.w(), p.x(), {}, {},
                     "R transport under upend");
           s.require(same_set(inv.r_set(), r_inv), p.w(), p.x(), {}, {},
                     "R transport under inversion");
           std::vector<Transposition> rs_up, rs_inv;
           for (const Transposition& t : p.rs_set()) {
             rs_up.push_back(t.upended(n));
             rs_inv.push_back(t.conjugated_by(p.x()));
           }
           s.require(same_set(up.rs_set(), rs_up) &&
                         same_set(inv.rs_set(), rs_inv),
                     p.w(), p.x(), {}, {}, "R* transport");
           for (const Transposition& t : r) {
             PermPair m = p.mutated(t);
             s.require(m.upended() == up.mutated(t.upended(n)), p.w(), p.x(),
                       {}, t, "mutation commutes with upend");
             s.require(m.inverted() == inv.mutated(t.conjugated_by(p.x())),
                       p.w(), p.x(), {}, t, "mutation commutes with invert");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"mutate-incremental",
        "incremental mutation tables equal a from-scratch rebuild", 5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           for (const Transposition& t : p.r_set()) {
             PermPair inc = p.mutated(t);
             PermPair ref = PermPair::make(p.w(), p.x().swapped(t.a, t.b));
             s.require(inc.rank_x() == ref.rank_x() &&
                           inc.rank_pair() == ref.rank_pair() &&
                           inc.x() == ref.x(),
                       p.w(), p.x(), {}, t, "incremental table mismatch");
             s.require(inc.length() < p.length(), p.w(), p.x(), {}, t,
                       "mutation must drop l(pair)");
           }
           s.count();
         });
       }});

  out.push_back(
      {{"tangent-dim", "#R + l(x) counts every xt below w", 5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for_pairs_of(sn_data(n), u, [&](const PermPair& p) {
           int direct = 0;
           for (const Transposition& t : all_transpositions(n))
             if (bruhat_leq(p.x().swapped(t.a, t.b), p.w())) ++direct;
           s.require(p.tangent_dim() == direct, p.w(), p.x(), {}, {},
                     "tangent dimension mismatch");
           s.count();
         });
       }});
}

}  // namespace schub::claims
