#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_bracket.hpp"

using oracle::Poly;
using oracle::Tangle;

namespace {

Poly poly(std::initializer_list<std::pair<int, long long>> terms) {
  Poly p;
  for (auto& [e, c] : terms) oracle::add_term(p, e, c);
  return p;
}

}  // namespace

TEST_CASE("kinked unknot closures") {
  // Kink whose curl closes through the counterclockwise pairing: removable.
  Tangle good{{{{1, 2, 2, 1}}}, {}};
  CHECK(oracle::closed_value_all_negative(good) == poly({{-1, 1}, {1, 1}}));

  // The mirror kink picks up the unit -q^-3.
  Tangle bad{{{{1, 1, 2, 2}}}, {}};
  CHECK(oracle::closed_value_all_negative(bad) == poly({{-2, -1}, {-4, -1}}));
}

TEST_CASE("one-crossing tangle") {
  Tangle t{{{{0, 1, 2, 3}}}, {0, 1, 2, 3}};
  auto r = oracle::bracket_all_negative(t);
  REQUIRE(r.terms.size() == 2);
  oracle::Pairing cw{{0, 1}, {2, 3}};
  oracle::Pairing ccw{{0, 3}, {1, 2}};
  CHECK(r.terms.at(cw) == poly({{-2, -1}}));
  CHECK(r.terms.at(ccw) == poly({{-1, 1}}));
}

TEST_CASE("trefoil, hopf link, figure eight") {
  // Standard trefoil code; with every crossing resolved by the negative rule
  // this is the left-handed value.
  Tangle trefoil{{{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}}, {}};
  auto tre = oracle::closed_value_all_negative(trefoil);
  CHECK(tre == poly({{-1, 1}, {-3, 1}, {-5, 1}, {-9, -1}}));

  Tangle hopf{{{{4, 1, 3, 2}}, {{2, 3, 1, 4}}}, {}};
  auto h = oracle::closed_value_all_negative(hopf);
  CHECK(h == poly({{0, 1}, {-2, 1}, {-4, 1}, {-6, 1}}));

  Tangle fig8{{{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 2}}, {{2, 7, 3, 8}}}, {}};
  auto f = oracle::closed_value_all_negative(fig8);
  CHECK(f == poly({{-1, 1}, {-11, 1}}));
}

TEST_CASE("mirror symmetry") {
  // Reversing every cyclic order and flipping all signs inverts q.
  Tangle trefoil{{{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}}, {}};
  Tangle mirror = trefoil;
  for (auto& x : mirror.crossings) x = {x[0], x[3], x[2], x[1]};
  auto neg = oracle::closed_value_all_negative(trefoil);
  auto pos = oracle::closed_value(mirror, {1, 1, 1});
  Poly pos_inverted;
  for (auto& [e, c] : pos) oracle::add_term(pos_inverted, -e, c);
  CHECK(neg == pos_inverted);
}

TEST_CASE("second Reidemeister move cancels with honest signs") {
  // A strand poked under another; the two crossings carry opposite signs.
  Tangle poke{{{{1, 4, 0, 3}}, {{1, 5, 2, 4}}}, {0, 3, 5, 2}};
  Tangle identity{{}, {0, 1, 1, 0}};
  auto id = oracle::bracket_all_negative(identity);
  CHECK(oracle::bracket(poke, {-1, 1}).terms == id.terms);
  CHECK(oracle::bracket(poke, {1, -1}).terms == id.terms);

  // Same-sign assignments differ by the unit -q^{+-3}.
  auto same = oracle::bracket(poke, {-1, -1});
  oracle::Pairing vert{{0, 3}, {1, 2}};
  CHECK(same.terms.at(vert) == poly({{-3, -1}}));
}

TEST_CASE("third Reidemeister move with honest signs") {
  // Braid words s1 s2 s1 and s2 s1 s2 on three strands, all crossings positive.
  Tangle t121{{{{1, 4, 3, 0}}, {{2, 6, 5, 4}}, {{5, 8, 7, 3}}}, {0, 1, 2, 6, 8, 7}};
  Tangle t212{{{{2, 4, 3, 1}}, {{3, 6, 5, 0}}, {{4, 8, 7, 6}}}, {0, 1, 2, 8, 7, 5}};
  auto a = oracle::bracket(t121, {1, 1, 1});
  auto b = oracle::bracket(t212, {1, 1, 1});
  CHECK(a.terms == b.terms);
}
