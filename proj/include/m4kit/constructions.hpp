#pragma once

#include "m4kit/manifold.hpp"

namespace m4kit {

// Fiber sums assembled from catalog blocks. Summands are named "Y", "Z",
// "M" and "T", so sites read e.g. "Y.a2'xc'".
struct Signs {
  int e1 = 1;
  int e3 = -1;
};

// Y1(1,1) # Zpp(1,1,m) along Sigma2 / SigmaBar2.
MarkedManifold X1(int m, Signs s = {});
// Y1(1/p,1) # Zpp(1,1,m).
MarkedManifold X1_tilde(int p, int m, Signs s = {});
// Yn(n,m) # Z' with Z' = Zpp(1,0,1).
MarkedManifold Xn(int n, int m, Signs s = {});
// Mqr(1,1) # Zpp(1,1,m) along SigmaHat2 / SigmaBar2.
MarkedManifold V(int m, Signs s = {});
// (T^2 x S^2) # 4 CP2bar # Zpp(1,1,m) along SigmaTilde2 / SigmaBar2.
MarkedManifold W(int m, Signs s = {});
// Yn(n,1) # T4CP2bar with no surgery on the T^4 side.
MarkedManifold Yn_unsurgered_sum(int n, Signs s = {});

}  // namespace m4kit
