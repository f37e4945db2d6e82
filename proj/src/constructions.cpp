#include "m4kit/constructions.hpp"

#include "m4kit/blocks.hpp"
#include "m4kit/surgery.hpp"

namespace m4kit {

namespace {

MarkedManifold named(MarkedManifold m, const char* name) {
  m.name = name;
  return m;
}

MarkedManifold sum(MarkedManifold x, const char* sx, MarkedManifold n, const char* sn,
                   const char* xname, const char* nname) {
  return fiber_sum(named(std::move(x), xname), sx, named(std::move(n), nname), sn);
}

}  // namespace

MarkedManifold X1(int m, Signs s) {
  return sum(Y1(1, 1), "Sigma2", Zpp(1, 1, m, s.e1, s.e3), "SigmaBar2", "Y", "Z");
}

MarkedManifold X1_tilde(int p, int m, Signs s) {
  return sum(Y1(p, 1), "Sigma2", Zpp(1, 1, m, s.e1, s.e3), "SigmaBar2", "Y", "Z");
}

MarkedManifold Xn(int n, int m, Signs s) {
  return sum(Yn(n, m), "Sigma2", Zpp(1, 0, 1, s.e1, s.e3), "SigmaBar2", "Y", "Z");
}

MarkedManifold V(int m, Signs s) {
  return sum(Mqr(1, 1), "SigmaHat2", Zpp(1, 1, m, s.e1, s.e3), "SigmaBar2", "M", "Z");
}

MarkedManifold W(int m, Signs s) {
  return sum(T2xS2_4blowups(), "SigmaTilde2", Zpp(1, 1, m, s.e1, s.e3), "SigmaBar2", "T", "Z");
}

MarkedManifold Yn_unsurgered_sum(int n, Signs s) {
  return sum(Yn(n, 1), "Sigma2", T4CP2bar(s.e1, s.e3), "SigmaBar2", "Y", "Z");
}

}  // namespace m4kit
