#pragma once

#include <cstddef>
#include <string>

#include "m4kit/certify.hpp"

namespace m4kit {

struct ReplayResult {
  bool ok = false;
  std::size_t steps_checked = 0;
  std::string error;  // first failing step, when !ok
};

// Re-executes a certificate's trace from its input presentation using word
// algebra only (coset steps re-run the enumeration) and checks that the
// recorded verdict is supported. Independent of the engine's search code.
ReplayResult replay(const Certificate& cert, const Budget& budget);

}  // namespace m4kit
