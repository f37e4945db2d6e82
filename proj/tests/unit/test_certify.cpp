#include "catch_amalgamated.hpp"

#include "m4kit/certify.hpp"
#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"
#include "m4kit/manifest.hpp"
#include "m4kit/replay.hpp"
#include "oracles.hpp"

using namespace m4kit;

namespace {

const Budget kBudget{};

bool commute(const CommutingPairs& pairs, const std::string& x, const std::string& y) {
  return pairs.count({x, y}) || pairs.count({y, x});
}

bool replays(const Certificate& c) { return replay(c, kBudget).ok; }

}  // namespace

TEST_CASE("trivial group", "[certify]") {
  Presentation p = make_presentation({"a", "b"}, {"a b a^-1 b^-2", "b a b^-1 a^-2"});
  Certificate c = certify(p, Target::trivial(), kBudget);
  CHECK(c.verdict == Verdict::Trivial);
  CHECK(describe(c) == "trivial");
  CHECK(replays(c));
}

TEST_CASE("cyclic verdicts name their generator", "[certify]") {
  Certificate z = certify(make_presentation({"c"}, {}), Target::infinite_cyclic("c"), kBudget);
  CHECK(z.verdict == Verdict::InfiniteCyclic);
  CHECK(z.generator == "c");
  CHECK(replays(z));

  Certificate z4 = certify(make_presentation({"a", "c"}, {"a c^-2", "c^4"}), Target{}, kBudget);
  CHECK(z4.verdict == Verdict::FiniteCyclic);
  CHECK(z4.order == 4);
  CHECK(replays(z4));

  Certificate wrong = certify(make_presentation({"a"}, {"a^4"}), Target::finite_cyclic(2), kBudget);
  CHECK(wrong.verdict == Verdict::Inconclusive);
  CHECK(replays(wrong));
}

TEST_CASE("an undesignatable generator is an error", "[certify]") {
  CHECK_THROWS_AS(certify(make_presentation({"c"}, {}), Target::infinite_cyclic("z"), kBudget), Error);
  CHECK_THROWS_AS(certify(make_presentation({"c"}, {}), Target::finite_cyclic(1), kBudget), Error);
}

TEST_CASE("non-cyclic abelianization is inconclusive", "[certify]") {
  Certificate c = certify(make_presentation({"a", "b"}, {"[a,b]"}), Target::trivial(), kBudget);
  CHECK(c.verdict == Verdict::Inconclusive);
  REQUIRE(c.final_h1);
  CHECK(to_string(*c.final_h1) == "Z^2");
  CHECK(replays(c));
}

TEST_CASE("perfect group with trivial H1 is not called trivial", "[certify]") {
  // Binary icosahedral group: abelianization 0, order 120.
  Presentation p = make_presentation({"s", "t"}, {"s^3 t^-5", "(s t)^2 t^-5"});
  REQUIRE(oracle::invariant_factors(oracle::exponent_matrix(p)) == std::vector<long long>{1, 1});
  CHECK(todd_coxeter(p, {}, 100000).index == std::optional<std::size_t>(120));
  Certificate c = certify(p, Target{}, kBudget);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK(replays(c));
}

TEST_CASE("conditional relators need their meridian", "[certify]") {
  // Without the meridian the conditional relator a must not be used.
  Presentation p = parse_presentation("<a, b | [a,b], b | conditional: a ~ [a,b^-1]>");
  Certificate c = certify(p, Target::trivial(), kBudget);
  CHECK(c.verdict == Verdict::Trivial);
  CHECK(replays(c));

  Presentation q = parse_presentation("<a, b | b | conditional: a ~ a>");
  Certificate d = certify(q, Target::infinite_cyclic("a"), kBudget);
  CHECK(d.verdict != Verdict::InfiniteCyclic);
  CHECK(replays(d));
}

TEST_CASE("word triviality", "[certify]") {
  Presentation p = make_presentation({"a", "b"}, {"[a,b]"});
  Certificate yes = prove_word_trivial(p, parse_word("[a,b^-1]"), kBudget);
  CHECK(yes.verdict == Verdict::Trivial);
  CHECK(yes.claim == Claim::WordTrivial);
  CHECK(replays(yes));

  Presentation f = make_presentation({"a", "b"}, {});
  Certificate no = prove_word_trivial(f, parse_word("[a,b]"), kBudget);
  CHECK(no.verdict == Verdict::Inconclusive);
  CHECK(replays(no));
}

TEST_CASE("commutation closure", "[certify]") {
  CommutingPairs pairs =
      commutation_closure(make_presentation({"a", "b", "c", "d"}, {"[a,b]", "c^-1 a b", "[c,d]"}));
  CHECK(commute(pairs, "a", "b"));
  CHECK(commute(pairs, "c", "d"));
  CHECK(commute(pairs, "a", "c"));
  CHECK_FALSE(commute(pairs, "a", "d"));
}

TEST_CASE("images map input generators into the final presentation", "[certify]") {
  Presentation p = make_presentation({"a", "b", "c"}, {"a c^-3", "b c^-1"});
  Certificate cert = certify(p, Target::infinite_cyclic("c"), kBudget);
  REQUIRE(cert.verdict == Verdict::InfiniteCyclic);
  CHECK(cert.images.at("a") == Word("c", 3));
  CHECK(cert.images.at("b") == Word("c"));
  for (const auto& [g, w] : cert.images)
    for (const auto& l : w.letters()) CHECK(cert.final_presentation.has_generator(l.gen));
}

TEST_CASE("tampered certificates fail replay", "[certify]") {
  Presentation p = make_presentation({"a", "b", "c"}, {"a c^-3", "b c^-1", "[a,b] c"});
  Certificate good = certify(p, Target::trivial(), kBudget);
  REQUIRE(good.verdict == Verdict::Trivial);
  REQUIRE(replays(good));

  Certificate verdict = good;
  verdict.input = make_presentation({"a", "b", "c"}, {"a c^-3", "b c^-1"});
  CHECK_FALSE(replays(verdict));

  bool tampered_step = false;
  for (std::size_t i = 0; i < good.trace.size(); ++i) {
    if (good.trace[i].output.is_identity()) continue;
    Certificate t = good;
    t.trace[i].output = t.trace[i].output * Word("a");
    CHECK_FALSE(replays(t));
    tampered_step = true;
    break;
  }
  CHECK(tampered_step);

  Certificate dropped = good;
  dropped.trace.erase(dropped.trace.begin() + 1);
  CHECK_FALSE(replays(dropped));

  Certificate claim = certify(make_presentation({"a"}, {"a^2"}), Target{}, kBudget);
  REQUIRE(claim.verdict == Verdict::FiniteCyclic);
  claim.order = 3;
  CHECK_FALSE(replays(claim));
}

TEST_CASE("certificate JSON round trip", "[certify]") {
  Presentation p = parse_presentation("<a, b, c | a c^-3, b c^-1 | meridional: g ~ [a,b]>");
  Certificate c = certify(p, Target::infinite_cyclic("c"), kBudget);
  Certificate back = certificate_from_json(certificate_json(c));
  CHECK(back.input == c.input);
  CHECK(back.verdict == c.verdict);
  CHECK(back.generator == c.generator);
  CHECK(back.trace == c.trace);
  CHECK(back.images == c.images);
  CHECK(back.final_presentation == c.final_presentation);
  CHECK(back.final_h1 == c.final_h1);
  CHECK(replays(back));
  CHECK_THROWS_AS(certificate_from_json("{"), Error);
}

TEST_CASE("conclusive verdicts agree with the abelianization", "[certify][property]") {
  oracle::Gen gen(5);
  for (int i = 0; i < 120; ++i) {
    Presentation p = gen.abelian(static_cast<std::size_t>(gen.uniform(1, 3)), 3, 4);
    Certificate c = certify(p, Target{}, kBudget);
    CHECK(replays(c));
    auto inv = oracle::invariant_factors(oracle::exponent_matrix(p));
    std::size_t rank = p.generators.size() - inv.size();
    std::vector<long long> torsion;
    for (long long d : inv)
      if (d > 1) torsion.push_back(d);
    switch (c.verdict) {
      case Verdict::Trivial:
        CHECK(rank == 0);
        CHECK(torsion.empty());
        break;
      case Verdict::InfiniteCyclic:
        CHECK(rank == 1);
        CHECK(torsion.empty());
        break;
      case Verdict::FiniteCyclic:
        CHECK(rank == 0);
        CHECK(torsion == std::vector<long long>{c.order});
        break;
      case Verdict::Inconclusive:
        // Cyclic H1 alone is not enough: no single generator may generate.
        if (rank + torsion.size() <= 1)
          CHECK((c.reason.find("has index") != std::string::npos ||
                 c.reason.find("budget") != std::string::npos));
        break;
    }
  }
}
