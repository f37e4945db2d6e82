#pragma once

#include <optional>
#include <string>
#include <vector>

#include "m4kit/certify.hpp"
#include "m4kit/manifold.hpp"

namespace m4kit {

struct GeoPoint {
  long long chi_h = 0;
  long long c1sq = 0;
  bool operator==(const GeoPoint&) const = default;
};

// chi_h = (e + sigma) / 4, c1^2 = 2e + 3 sigma. Throws when e + sigma is not
// divisible by 4.
GeoPoint coords(long long e, long long sigma);
GeoPoint coords(const MarkedManifold& m);
// Inverse of coords: sigma = c1^2 - 8 chi_h, e = 4 chi_h - sigma.
std::pair<long long, long long> euler_signature(const GeoPoint& p);

// 0 <= c1^2 <= 8 chi_h - 1.
bool region_check(const GeoPoint& p);

// m CP2 # n CP2bar with m = b2+, n = b2-.
struct FreedmanModel {
  long long b2_plus = 0;
  long long b2_minus = 0;
  std::string name() const;
};

// b2 = e - 2, b2+- = (b2 +- sigma) / 2 for a simply connected manifold.
FreedmanModel freedman_numbers(long long e, long long sigma);
// Requires a Trivial certificate for m's pi1 and odd parity.
FreedmanModel freedman_model(const MarkedManifold& m, const Certificate& pi1);

// Point of Y built from X by the wedge construction: (chi_h(X) + chi,
// c1^2(X) + c). Throws unless 0 <= c <= 8 chi - 1.
GeoPoint wedge_sum(const GeoPoint& x, long long chi, long long c);

struct Realization {
  GeoPoint point;
  std::string construction;        // human-readable recipe
  std::string skipped_site;        // torus T' left unsurgered
  std::vector<std::string> torus_generators;
  std::string designated;          // generator of pi1(N) = Z
  MarkedManifold n;                // N (or the base N0 for arithmetic rows)
  bool arithmetic_only = false;    // invariants of the final sum only
  long long e = 0;                 // of the final manifold
  long long sigma = 0;
  Certificate pi1;                 // pi1(N) = Z
  std::optional<std::size_t> surjectivity_index;  // index of <T' generators> in pi1(N)
  Certificate meridian;            // meridian of T' trivial in N minus T'
  std::string note;

  // pi1 = Z proved, T' surjects, meridian trivial.
  bool established() const;
};

// Builds the construction behind each realized pair. Throws for pairs the
// library does not construct.
Realization realize_pair(const GeoPoint& target, const Budget& budget);
// Pairs realize_pair can construct with chi_h <= max_chi.
std::vector<GeoPoint> supported_pairs(long long max_chi);

}  // namespace m4kit
