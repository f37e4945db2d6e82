#pragma once

#include <string>

#include "m4kit/manifold.hpp"

namespace m4kit {

// Replace the site's current relator by pushoff^m curve^-k in pi1 and in
// every surface complement that carries it. k >= 0, m >= 1, gcd(k, m) = 1.
MarkedManifold torus_surgery(const MarkedManifold& mfd, const std::string& site, long long k,
                             long long m);

MarkedManifold blow_up(const MarkedManifold& mfd);

// Parallel-copy identification on standard surface labels. Only the
// label-to-label map of the constructions is supported.
struct SumIdentification {
  std::string name = "standard";
};

// Normal connected sum along genus-g surfaces of square zero. Colliding
// generator names on the X side get a trailing prime. pi1 of the result is a
// candidate (upper-bound) presentation; surgery sites are carried with
// names qualified by the summand names.
MarkedManifold fiber_sum(const MarkedManifold& x, const std::string& s,
                         const MarkedManifold& n, const std::string& s_prime,
                         const SumIdentification& id = {});

// Presentation of M minus a neighbourhood of the torus at `site`: pi1 with
// the site's relator removed.
Presentation torus_complement(const MarkedManifold& mfd, const std::string& site);

}  // namespace m4kit
