#include "catch_amalgamated.hpp"

#include "m4kit/constructions.hpp"
#include "m4kit/error.hpp"
#include "m4kit/geography.hpp"
#include "oracles.hpp"

using namespace m4kit;

TEST_CASE("coordinates of the constructions", "[geography]") {
  CHECK(coords(X1(1)) == GeoPoint{1, 7});
  CHECK(coords(V(1)) == GeoPoint{1, 5});
  CHECK(coords(W(1)) == GeoPoint{1, 3});
  CHECK(coords(Xn(2, 1)) == GeoPoint{2, 15});
  CHECK(coords(Xn(3, 1)) == GeoPoint{3, 23});
  CHECK_THROWS_AS(coords(1, 0), Error);
  CHECK(coords(0, 0) == GeoPoint{0, 0});
}

TEST_CASE("region boundaries", "[geography]") {
  CHECK(region_check({1, 0}));
  CHECK(region_check({1, 7}));
  CHECK_FALSE(region_check({1, 8}));
  CHECK_FALSE(region_check({1, -1}));
  CHECK_FALSE(region_check({0, 0}));
}

TEST_CASE("Freedman numbers", "[geography]") {
  FreedmanModel f = freedman_numbers(5, -1);
  CHECK(f.b2_plus == 1);
  CHECK(f.b2_minus == 2);
  CHECK(f.name() == "CP2#2CP2bar");
  CHECK(freedman_numbers(7, -3).name() == "CP2#4CP2bar");
  CHECK(freedman_numbers(9, -5).name() == "CP2#6CP2bar");
  CHECK(freedman_numbers(13, -1).name() == "5CP2#6CP2bar");
}

TEST_CASE("Freedman model needs a trivial certificate", "[geography]") {
  Certificate c;
  c.verdict = Verdict::Inconclusive;
  CHECK_THROWS_AS(freedman_model(X1(1), c), Error);
  c.verdict = Verdict::Trivial;
  CHECK(freedman_model(X1(1), c).name() == "CP2#2CP2bar");
}

TEST_CASE("wedge sum", "[geography]") {
  CHECK(wedge_sum({1, 7}, 1, 7) == GeoPoint{2, 14});
  CHECK_THROWS_AS(wedge_sum({1, 7}, 1, 8), Error);
  CHECK_THROWS_AS(wedge_sum({1, 7}, 1, -1), Error);
}

TEST_CASE("supported pairs", "[geography]") {
  auto pairs = supported_pairs(3);
  for (GeoPoint p : {GeoPoint{1, 5}, GeoPoint{1, 7}, GeoPoint{2, 9}, GeoPoint{2, 11},
                     GeoPoint{2, 13}, GeoPoint{2, 15}, GeoPoint{3, 23}}) {
    CHECK(std::find(pairs.begin(), pairs.end(), p) != pairs.end());
  }
  for (const auto& p : pairs) CHECK(region_check(p));
  CHECK_THROWS_AS(realize_pair({1, 0}, Budget{}), Error);
}

TEST_CASE("realization of (1, 7)", "[geography]") {
  Realization r = realize_pair({1, 7}, Budget{});
  CHECK(r.skipped_site == "Y.a2'xc'");
  CHECK(r.designated == "c");
  CHECK(r.pi1.verdict == Verdict::InfiniteCyclic);
  REQUIRE(r.surjectivity_index);
  CHECK(*r.surjectivity_index == 1);
  CHECK(r.meridian.verdict == Verdict::Trivial);
  CHECK(r.established());
  CHECK(coords(r.e, r.sigma) == GeoPoint{1, 7});
}

TEST_CASE("arithmetic rows are not established", "[geography]") {
  Realization r = realize_pair({2, 13}, Budget{});
  CHECK(r.arithmetic_only);
  CHECK(coords(r.e, r.sigma) == GeoPoint{2, 13});
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("coords and euler_signature are inverse", "[geography][property]") {
  oracle::Gen gen(23);
  for (int i = 0; i < 1000; ++i) {
    long long chi = gen.uniform(-50, 50), c = gen.uniform(-400, 400);
    auto [e, s] = euler_signature({chi, c});
    CHECK((e + s) % 4 == 0);
    CHECK(coords(e, s) == GeoPoint{chi, c});
    // Noether-type identities spelled out directly.
    CHECK(4 * chi == e + s);
    CHECK(c == 2 * e + 3 * s);
    CHECK(region_check({chi, c}) == (c >= 0 && c <= 8 * chi - 1));
  }
}

TEST_CASE("Freedman numbers add up", "[geography][property]") {
  oracle::Gen gen(31);
  for (int i = 0; i < 500; ++i) {
    long long bp = gen.uniform(0, 20), bm = gen.uniform(0, 20);
    long long e = bp + bm + 2, s = bp - bm;
    FreedmanModel f = freedman_numbers(e, s);
    CHECK(f.b2_plus == bp);
    CHECK(f.b2_minus == bm);
  }
}
