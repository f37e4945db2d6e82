#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m4kit/word.hpp"

namespace m4kit {

// A symbolic family of generators g_1..g_s (s unknown) lying in the normal
// closure of `meridian`. They never appear in relators.
struct MeridionalTier {
  std::string name;
  Word meridian;

  bool operator==(const MeridionalTier&) const = default;
};

// A relator that holds only once `meridian` is known to be trivial.
struct ConditionalRelator {
  Word relator;
  Word meridian;

  bool operator==(const ConditionalRelator&) const = default;
};

using GeneratorMap = std::vector<std::pair<std::string, Word>>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<MeridionalTier> meridional;
  std::vector<ConditionalRelator> conditional;
  std::map<std::string, Word> distinguished;

  bool has_generator(const std::string& g) const;
  int generator_index(const std::string& g) const;  // -1 when absent
  // Throws Error when an invariant is broken.
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

// Convenience constructor; relators given in word syntax.
Presentation make_presentation(std::vector<std::string> generators,
                               const std::vector<std::string>& relators);

// Distinguished names of P and Q are prefixed with `p_prefix.` / `q_prefix.`
// when the prefixes are nonempty.
Presentation free_product(const Presentation& p, const Presentation& q,
                          const std::string& p_prefix = "",
                          const std::string& q_prefix = "");
Presentation impose(const Presentation& p, const std::vector<Word>& relations);
// Tietze removal of g, given a relator proving g = definition.
Presentation eliminate(const Presentation& p, const std::string& g,
                       const Word& definition);
Presentation strip_meridional(const Presentation& p);
// Rename generators (and every word mentioning them).
Presentation rename(const Presentation& p,
                    const std::map<std::string, std::string>& names);
// Meridional tiers dropped, conditional relators and every tier or
// conditional meridian added as relators. The group of the closed manifold.
Presentation closed_candidate(const Presentation& p);

// `<a, b | rel, rel | meridional: g ~ w | conditional: r ~ w |
//   distinguished: name = w>`
std::string to_text(const Presentation& p);
Presentation parse_presentation(std::string_view text);

}  // namespace m4kit
