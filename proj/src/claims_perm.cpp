#include <algorithm>
#include <unordered_set>

#include "claims.hpp"

namespace schub::claims {

namespace {

// Standardization code of a subsequence: entry ranks packed 4 bits each,
// matching Permutation::code().
std::uint64_t standardize(const std::vector<int>& vals) {
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    int rank = 0;
    for (int v : vals)
      if (v < vals[k]) ++rank;
    c = (c << 4) | rank;
  }
  return c;
}

}  // namespace

void register_perm_claims(std::vector<Claim>& out) {
  out.push_back(
      {{"length-reflection", "l(w) equals #{t : wt < w via Bruhat tables}", 6,
        8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         int below = 0;
         for (const Transposition& t : all_transpositions(n))
           if (bruhat_leq(w.swapped(t.a, t.b), w)) ++below;
         s.require(below == d.lengths[u], w, w, {}, {},
                   "inversion count != #{t : wt < w}");
         s.count();
       }});

  out.push_back(
      {{"rank-table", "rank table boundary, unit steps, graph-point jumps", 6,
        8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& t = d.tables[u];
         bool ok = true;
         for (int i = 0; i <= n && ok; ++i)
           ok = t.at(0, i) == 0 && t.at(i, 0) == 0 && t.at(n, i) == i &&
                t.at(i, n) == i;
         for (int i = 1; i <= n && ok; ++i)
           for (int j = 1; j <= n && ok; ++j) {
             int dr = t.at(i, j) - t.at(i - 1, j);
             int dc = t.at(i, j) - t.at(i, j - 1);
             int dd = t.at(i, j) - t.at(i - 1, j) - t.at(i, j - 1) +
                      t.at(i - 1, j - 1);
             ok = (dr == 0 || dr == 1) && (dc == 0 || dc == 1) &&
                  (dd == 1) == (w(i) == j);
           }
         s.require(ok, w, w, {}, {}, "rank table invariant");
         s.count();
       }});

  out.push_back(
      {{"bruhat-oracle",
        "table comparison matches reachability along length-increasing "
        "transposition moves",
        5, 7, 7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& y = (*d.perms)[u];
         std::vector<char> reach(d.size(), 0);
         std::vector<std::size_t> stack{u};
         reach[u] = 1;
         while (!stack.empty()) {
           std::size_t zi = stack.back();
           stack.pop_back();
           const Permutation& z = (*d.perms)[zi];
           for (int a = 1; a <= n; ++a)
             for (int b = a + 1; b <= n; ++b) {
               if (z(a) >= z(b)) continue;
               std::size_t ti = d.index_of(z.swapped(a, b));
               if (!reach[ti]) {
                 reach[ti] = 1;
                 stack.push_back(ti);
               }
             }
         }
         for (std::size_t wi = 0; wi < d.size(); ++wi) {
           s.require(static_cast<bool>(reach[wi]) ==
                         bruhat_leq(d.tables[u], d.tables[wi]),
                     (*d.perms)[wi], y, {}, {},
                     "bruhat_leq disagrees with closure oracle");
           s.count();
         }
       }});

  out.push_back(
      {{"symmetry-rank",
        "rk identities under upending and inversion of the permutation", 5, 8,
        8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         const RankTable& t = d.tables[u];
         RankTable tu = RankTable::of(w.upend());
         RankTable ti = RankTable::of(w.inverse());
         bool ok = true;
         for (int i = 0; i <= n && ok; ++i)
           for (int j = 0; j <= n && ok; ++j) {
             Point p{i, j};
             ok = tu.at(upended(p, n)) == n - i - j + t.at(p) &&
                  ti.at(inverted(p)) == t.at(p);
           }
         s.require(ok, w, w, {}, {}, "rank symmetry identity");
         s.count();
       }});

  out.push_back(
      {{"pattern-oracle",
        "contains_pattern matches brute-force subsequence enumeration", 6, 7,
        7},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         for (int k = 1; k <= n; ++k) (void)symmetric_group(k);
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         std::unordered_set<std::uint64_t> contained[kMaxDegree + 1];
         for (unsigned mask = 1; mask < (1u << n); ++mask) {
           std::vector<int> vals;
           for (int i = 0; i < n; ++i)
             if (mask & (1u << i)) vals.push_back(w(i + 1));
           contained[vals.size()].insert(standardize(vals));
         }
         for (int k = 1; k <= n; ++k)
           for (const Permutation& pat : symmetric_group(k)) {
             s.require(w.contains_pattern(pat) ==
                           (contained[k].count(pat.code()) > 0),
                       w, pat, {}, {}, "pattern containment mismatch");
             s.count();
           }
       }});

  out.push_back(
      {{"transposition-order",
        "w < wt iff w(a) < w(b), with complement box [graph(a), graph(b))", 5,
        8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         for (const Transposition& t : all_transpositions(n)) {
           Permutation wt = w.swapped(t.a, t.b);
           bool up = w(t.a) < w(t.b);
           s.require(bruhat_leq(w, wt) == up, w, wt, {}, t,
                     "w < wt iff w(a) < w(b)");
           if (up) {
             PointSet box(n);
             for (int i = t.a; i < t.b; ++i)
               for (int j = w(t.a); j < w(t.b); ++j) box.insert({i, j});
             s.require(PermPair::make(wt, w).level_set_complement() == box, w,
                       wt, {}, t, "complement of (wt, w) is the box");
           }
           s.count();
         }
       }});

  out.push_back(
      {{"enumerate-pairs",
        "pair stream visits exactly {x <= w}, once, in lex order", 5, 8, 8},
       true,
       sn_units,
       [](int n, std::uint64_t u, Sink& s) {
         const SnData& d = sn_data(n);
         const Permutation& w = (*d.perms)[u];
         std::vector<Permutation> streamed;
         for_each_x_below(
             w, [&](const PermPair& p) { streamed.push_back(p.x()); });
         std::vector<Permutation> brute;
         for (const Permutation& x : *d.perms)
           if (bruhat_leq(x, w)) brute.push_back(x);
         s.require(streamed == brute, w, w, {}, {},
                   "enumeration order/content mismatch");
         s.count(brute.size());
       }});
}

}  // namespace schub::claims
