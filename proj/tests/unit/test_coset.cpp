#include "catch_amalgamated.hpp"

#include "m4kit/abelianize.hpp"
#include "m4kit/coset.hpp"
#include "oracles.hpp"

using namespace m4kit;

TEST_CASE("index of the trivial subgroup in small groups", "[coset]") {
  Presentation s3 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  CosetResult r = todd_coxeter(s3, {}, 1000);
  REQUIRE(r.index);
  CHECK(*r.index == oracle::symmetric_group(3).size());
  CHECK(*r.index == 6);

  Presentation s4 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^4"});
  REQUIRE(todd_coxeter(s4, {}, 10000).index);
  CHECK(*todd_coxeter(s4, {}, 10000).index == oracle::symmetric_group(4).size());

  Presentation a5 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
  CHECK(todd_coxeter(a5, {}, 10000).index == std::optional<std::size_t>(60));
}

TEST_CASE("subgroup indices", "[coset]") {
  Presentation s3 = make_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
  CHECK(todd_coxeter(s3, {Word("a")}, 100).index == std::optional<std::size_t>(3));
  CHECK(todd_coxeter(s3, {Word("b")}, 100).index == std::optional<std::size_t>(2));
  CHECK(todd_coxeter(s3, {Word("a"), Word("b")}, 100).index == std::optional<std::size_t>(1));
  Presentation z = make_presentation({"c"}, {});
  CHECK(todd_coxeter(z, {Word("c", 5)}, 100).index == std::optional<std::size_t>(5));
  CHECK(todd_coxeter(z, {Word("c")}, 100).index == std::optional<std::size_t>(1));
}

TEST_CASE("budget exhaustion is reported", "[coset]") {
  Presentation z = make_presentation({"c"}, {});
  CosetResult r = todd_coxeter(z, {}, 50);
  CHECK(r.exceeded());
  CHECK(r.max_live <= 50);
}

TEST_CASE("trivial group presentations", "[coset]") {
  Presentation p = make_presentation({"a", "b"}, {"a b a^-1 b^-2", "b a b^-1 a^-2"});
  CHECK(todd_coxeter(p, {}, 10000).index == std::optional<std::size_t>(1));
}

TEST_CASE("coset index of finite abelian groups matches the Smith order",
          "[coset][property]") {
  oracle::Gen gen(3);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    Presentation p = gen.abelian(static_cast<std::size_t>(gen.uniform(1, 3)), 3, 4);
    H1Result h = h1(p);
    if (h.rank != 0) continue;
    BigInt order = 1;
    for (const auto& t : h.torsion) order *= t;
    if (order > 2000) continue;
    CosetResult r = todd_coxeter(p, {}, 200000);
    REQUIRE(r.index);
    CHECK(BigInt(*r.index) == order);
    ++checked;
  }
  CHECK(checked > 20);
}
