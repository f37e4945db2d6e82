#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "m4kit/manifold.hpp"

namespace m4kit {

// Y_n(m): 2n+4 surgeries on Sigma_2 x Sigma_n. Surface "Sigma2".
MarkedManifold Yn(int n, int m);
// Y_1(1/p,1/q): four surgeries on Sigma_2 x T^2. Surface "Sigma2".
MarkedManifold Y1(int p, int q);
// T^4 with its six commutators and the four catalogued surgery sites.
MarkedManifold T4();
// T^4 # CP2bar with the braided genus-2 surface "SigmaBar2". (e1, e3) are
// the exponent signs in the push-off [alpha1^e1, alpha3^e3] of the second site.
MarkedManifold T4CP2bar(int e1 = 1, int e3 = -1);
// Z''(1/q, m/r) = T4CP2bar after (alpha2'xalpha3', k=q) and
// (alpha2''xalpha4', k=r, m). Requires gcd(m, r) = 1.
MarkedManifold Zpp(int q, int r, int m, int e1 = 1, int e3 = -1);
// T^4 # 2 CP2bar with surface "SigmaHat2" (meridian bounds an exceptional disk).
MarkedManifold T4_2CP2bar();
// M(1/q, 1/r): Luttinger surgeries alpha1'xalpha3' (q) and alpha2'xalpha3'' (r).
MarkedManifold Mqr(int q, int r);
// (T^2 x S^2) # 4 CP2bar with surface "SigmaTilde2".
MarkedManifold T2xS2_4blowups();

struct CatalogParam {
  std::string name;
  long long default_value;
  bool required;
};

struct CatalogEntry {
  std::string name;
  std::vector<CatalogParam> params;
  std::string summary;
  std::function<MarkedManifold(const std::map<std::string, long long>&)> make;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace m4kit
