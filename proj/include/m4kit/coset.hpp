#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "m4kit/presentation.hpp"

namespace m4kit {

struct CosetResult {
  std::optional<std::size_t> index;  // empty when the coset budget ran out
  std::size_t max_live = 0;          // peak number of live cosets
  std::size_t defined = 0;           // total coset definitions

  bool exceeded() const { return !index.has_value(); }
};

// HLT coset enumeration with lookahead. Meridional tiers and conditional
// relators are ignored; strip or close the presentation first.
CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                         std::size_t max_cosets);

}  // namespace m4kit
