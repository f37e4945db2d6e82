#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "m4kit/abelianize.hpp"
#include "m4kit/presentation.hpp"

namespace m4kit {

struct Budget {
  std::size_t max_cosets = 1'000'000;
  std::size_t max_steps = 10'000;

  // Defaults, with M4KIT_BUDGET_COSETS applied when set.
  static Budget from_env();
};

enum class Verdict { Trivial, FiniteCyclic, InfiniteCyclic, Inconclusive };

struct Target {
  enum class Kind { Auto, Trivial, InfiniteCyclic, FiniteCyclic };
  Kind kind = Kind::Auto;
  long long order = 0;    // FiniteCyclic only
  std::string generator;  // designated generator; empty = engine's choice

  static Target trivial() { return {Kind::Trivial, 0, {}}; }
  static Target infinite_cyclic(std::string g = {}) { return {Kind::InfiniteCyclic, 0, std::move(g)}; }
  static Target finite_cyclic(long long p, std::string g = {}) { return {Kind::FiniteCyclic, p, std::move(g)}; }
};

// What the certificate is about: the group itself, or the triviality of a
// single word in it.
enum class Claim { Group, WordTrivial };

// One derivation step. Which fields matter depends on `rule`:
//   strip-meridional            -
//   seed-commute   gen, gen2    inputs[0] = commutator relator
//   derive-commute gen, gen2    inputs[0] = relator gen^e w, letters of w commute with gen2
//   commute-cancel target/slot  inputs[0] = word, rotation, pos2 (pos1 is 0), output
//   kill           gen          inputs[0] = relator gen^(+-1)
//   eliminate      gen          inputs[0] = relator, output = definition of gen
//   shorten                     inputs = {relator, source}, rotation, pos1 = length, pos2 = variant, output
//   activate                    inputs[0] = meridian (current form), value = justification
//   h1                          value = group text
//   coset-index                 inputs = subgroup generators, value = index or "exceeded"
//   verdict                     value = verdict text
struct Step {
  std::string rule;
  std::string target;  // "relator", "subject" or "meridian" (commute-cancel)
  std::size_t slot = 0;
  std::string gen;
  std::string gen2;
  std::vector<Word> inputs;
  Word output;
  long long rotation = 0;
  long long pos1 = 0;
  long long pos2 = 0;
  std::string value;

  bool operator==(const Step&) const = default;
};

struct Certificate {
  Presentation input;
  Claim claim = Claim::Group;
  Word subject;  // WordTrivial only
  Target target;
  Verdict verdict = Verdict::Inconclusive;
  long long order = 0;     // FiniteCyclic
  std::string generator;   // cyclic verdicts
  std::string reason;      // Inconclusive
  std::vector<Step> trace;
  Presentation final_presentation;
  // Image of each input generator in final_presentation.
  std::map<std::string, Word> images;
  std::optional<H1Result> final_h1;
  std::size_t cosets_used = 0;
  std::size_t steps_used = 0;

  bool conclusive() const { return verdict != Verdict::Inconclusive; }
};

std::string to_string(Verdict v);
// "trivial", "Z (generator c)", "Z/4 (generator c)", "inconclusive: ...".
std::string describe(const Certificate& c);

using CommutingPairs = std::set<std::pair<std::string, std::string>>;

// Fixed point of the seeding rule on commutator relators and the
// definitional rule on relators g = w.
CommutingPairs commutation_closure(const Presentation& p);

struct Simplified {
  Presentation result;
  std::vector<Step> trace;
  bool budget_exhausted = false;
};

// Tietze cascade on the core (meridional tier dropped, conditional relators
// carried along but never used).
Simplified simplify(const Presentation& p, const Budget& budget);

Certificate certify(const Presentation& p, const Target& target, const Budget& budget);
// Proves `w` = 1 in the group of `p`, conditional tiers handled as in certify.
Certificate prove_word_trivial(const Presentation& p, const Word& w, const Budget& budget);

}  // namespace m4kit
