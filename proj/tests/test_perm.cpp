#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schub/rank.hpp"

using namespace schub;

TEST_CASE("one-line construction and validation") {
  std::vector<int> id3{1, 2, 3};
  CHECK(Permutation::from_oneline(id3) == Permutation::identity(3));
  Permutation w = Permutation::parse("35142");
  CHECK(w.degree() == 5);
  CHECK(w(1) == 3);
  CHECK(w(5) == 2);
  std::vector<int> bad{1, 1, 2};
  CHECK_THROWS_AS(Permutation::from_oneline(bad), std::invalid_argument);
  std::vector<int> range{0, 2};
  CHECK_THROWS_AS(Permutation::from_oneline(range), std::invalid_argument);
  std::vector<int> empty;
  CHECK_THROWS_AS(Permutation::from_oneline(empty), std::invalid_argument);
}

TEST_CASE("text round trips") {
  CHECK(Permutation::parse("35142").str() == "35142");
  Permutation big = Permutation::parse("10,9,8,3,12,7,6,2,1,11,5,4");
  CHECK(big.degree() == 12);
  CHECK(Permutation::parse(big.str()) == big);
  CHECK_THROWS_AS(Permutation::parse("3x1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
}

TEST_CASE("length") {
  CHECK(Permutation::identity(4).length() == 0);
  for (int n = 1; n <= 6; ++n)
    CHECK(Permutation::longest(n).length() == n * (n - 1) / 2);
  Permutation w = Permutation::parse("35142");
  CHECK(oracle::inversions(w) == 6);
  CHECK(w.length() == 6);
}

TEST_CASE("rank tables") {
  Permutation e = Permutation::identity(5);
  RankTable te = RankTable::of(e);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) CHECK(te.at(i, j) == std::min(i, j));
  Permutation w = Permutation::parse("35142");
  RankTable tw = RankTable::of(w);
  CHECK(tw.at(3, 3) == 2);
  CHECK(tw.at(3, 3) == oracle::rank_count(w, 3, 3));
  CHECK(tw.at(5, 5) == 5);
  for (const Permutation& v : symmetric_group(4)) {
    RankTable t = RankTable::of(v);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j)
        CHECK(t.at(i, j) == oracle::rank_count(v, i, j));
  }
}

TEST_CASE("bruhat order") {
  Permutation w = Permutation::parse("35142");
  Permutation x = Permutation::parse("21345");
  CHECK(bruhat_leq(x, w));
  CHECK_FALSE(bruhat_leq(w, x));
  for (const Permutation& v : symmetric_group(4))
    CHECK(bruhat_leq(Permutation::identity(4), v));
  // Length must be monotone along the order.
  for (const Permutation& a : symmetric_group(4))
    for (const Permutation& b : symmetric_group(4))
      if (a.length() > b.length()) CHECK_FALSE(bruhat_leq(a, b));
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), w),
                  std::invalid_argument);
}

TEST_CASE("covers") {
  Permutation e3 = Permutation::identity(3);
  CHECK(covers(e3, e3.swapped(1, 2)));
  CHECK_FALSE(covers(e3, e3));
  CHECK_FALSE(covers(Permutation::parse("213"), Permutation::parse("321")));
}

TEST_CASE("right multiplication by transpositions") {
  Permutation e3 = Permutation::identity(3);
  CHECK(e3.swapped(1, 2) == Permutation::parse("213"));
  CHECK(Permutation::parse("213").swapped(1, 3) == Permutation::parse("312"));
  for (const Permutation& v : symmetric_group(4))
    for (const auto& t : all_transpositions(4)) {
      CHECK(v.swapped(t.a, t.b).swapped(t.a, t.b) == v);  // involution
      CHECK((v(t.a) < v(t.b)) == (v.swapped(t.a, t.b).length() > v.length()));
    }
  CHECK_THROWS_AS(e3.swapped(1, 4), std::invalid_argument);
}

TEST_CASE("inverse and upend") {
  Permutation e = Permutation::identity(4);
  CHECK(e.inverse() == e);
  CHECK(e.upend() == e);
  Permutation w0 = Permutation::longest(5);
  CHECK(w0.upend() == w0);
  Permutation w = Permutation::parse("35142");
  CHECK(w.inverse() == w);
  for (const Permutation& v : symmetric_group(4)) {
    CHECK(v.inverse().inverse() == v);
    CHECK(v.upend().upend() == v);
    // group identities: v * v^{-1} = e as words
    for (int i = 1; i <= 4; ++i) CHECK(v.inverse()(v(i)) == i);
  }
}

TEST_CASE("pattern containment") {
  Permutation p4231 = Permutation::parse("4231");
  CHECK(p4231.contains_pattern(p4231));
  CHECK_FALSE(Permutation::parse("35142").contains_pattern(p4231));
  Permutation p351624 = Permutation::parse("351624");
  CHECK(p351624.contains_pattern(p351624));
  std::vector<Permutation> pats = {
      Permutation::parse("12"), Permutation::parse("321"),
      Permutation::parse("3412"), p4231, Permutation::parse("35142")};
  for (const Permutation& v : symmetric_group(5))
    for (const Permutation& pat : pats)
      CHECK(v.contains_pattern(pat) == oracle::contains_pattern_brute(v, pat));
}

TEST_CASE("transpositions normalize and conjugate") {
  Transposition t(3, 1);
  CHECK(t.a == 1);
  CHECK(t.b == 3);
  CHECK_THROWS_AS(Transposition(2, 2), std::invalid_argument);
  Permutation x = Permutation::parse("21345");
  Transposition c = Transposition(1, 3).conjugated_by(x);
  CHECK(c.a == 2);
  CHECK(c.b == 3);
  CHECK(Transposition(1, 3).upended(5).a == 3);
  CHECK(Transposition(1, 3).upended(5).b == 5);
  CHECK(Transposition(1, 2).conjugated_by(Transposition(2, 3)).a == 1);
  CHECK(Transposition(1, 2).conjugated_by(Transposition(2, 3)).b == 3);
}

TEST_CASE("diff counts graph points in half-open boxes") {
  Permutation w = Permutation::parse("35142");
  RankTable t = RankTable::of(w);
  CHECK(diff(t, {2, 2}, {2, 2}) == 0);
  RankTable te = RankTable::of(Permutation::identity(5));
  CHECK(diff(te, {0, 0}, {5, 5}) == 5);
  CHECK(diff(t, {0, 2}, {3, 5}) == 2);
  CHECK(diff(t, {3, 5}, {0, 2}) == 2);  // symmetric
  CHECK_THROWS_AS(diff(t, {0, 0}, {6, 6}), std::invalid_argument);
}
