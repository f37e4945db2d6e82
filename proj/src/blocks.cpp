#include "m4kit/blocks.hpp"

#include <numeric>

#include "m4kit/error.hpp"
#include "m4kit/surgery.hpp"

namespace m4kit {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Unknown: break;
  }
  return "unknown";
}

const EmbeddedSurface& MarkedManifold::surface(const std::string& n) const {
  for (const auto& s : surfaces)
    if (s.name == n) return s;
  throw Error("manifold '" + name + "' has no surface '" + n + "'");
}

bool MarkedManifold::has_surface(const std::string& n) const {
  for (const auto& s : surfaces)
    if (s.name == n) return true;
  return false;
}

const SurgeryDatum& MarkedManifold::torus(const std::string& site) const {
  for (const auto& t : tori)
    if (t.site == site) return t;
  throw Error("manifold '" + name + "' has no surgery site '" + site + "'");
}

SurgeryDatum& MarkedManifold::torus(const std::string& site) {
  for (auto& t : tori)
    if (t.site == site) return t;
  throw Error("manifold '" + name + "' has no surgery site '" + site + "'");
}

namespace {

Word w(const std::string& s) { return parse_word(s); }

// Site whose relator is pushoff^m curve^-k.
SurgeryDatum performed_site(std::string site, std::string curve, const std::string& push,
                            std::string coefficient, long long k, long long m,
                            std::vector<std::string> torus) {
  SurgeryDatum d;
  d.site = std::move(site);
  d.curve = std::move(curve);
  d.pushoff = w(push);
  d.relator = d.pushoff.pow(static_cast<int>(m)) * Word(d.curve, -static_cast<int>(k));
  d.direction = coefficient.front() == '-' ? -1 : 1;
  d.coefficient = std::move(coefficient);
  d.k = k;
  d.m = m;
  d.performed = true;
  d.torus_generators = std::move(torus);
  return d;
}

// Site not yet surgered; its relator is the commutator the surgery deletes.
SurgeryDatum open_site(std::string site, std::string curve, const std::string& push,
                       const std::string& deletes, std::string coefficient,
                       std::vector<std::string> torus) {
  SurgeryDatum d;
  d.site = std::move(site);
  d.curve = std::move(curve);
  d.pushoff = w(push);
  d.relator = w(deletes);
  d.direction = coefficient.front() == '-' ? -1 : 1;
  d.coefficient = std::move(coefficient);
  d.torus_generators = std::move(torus);
  return d;
}

Presentation without(const Presentation& p, const Word& r) {
  Presentation q = p;
  q.relators.clear();
  for (const auto& x : p.relators)
    if (!equivalent_relators(x, r)) q.relators.push_back(x);
  return q;
}

GeneratorMap exact_images(const std::vector<std::string>& words) {
  static const char* labels[] = {"a1", "b1", "a2", "b2"};
  GeneratorMap g;
  for (std::size_t i = 0; i < words.size(); ++i) g.emplace_back(labels[i], w(words[i]));
  return g;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

}  // namespace

MarkedManifold Yn(int n, int m) {
  require(n >= 2, "Yn needs n >= 2");
  require(m >= 1, "Yn needs m >= 1");
  const std::string M = std::to_string(m);
  MarkedManifold x;
  x.name = "Yn";
  x.recipe = "Yn(n=" + std::to_string(n) + ",m=" + M + ")";
  x.e = 4LL * n - 4;
  x.sigma = 0;
  x.parity = Parity::Unknown;
  x.symplectic = m == 1;
  std::vector<std::string> gens = {"a1", "b1", "a2", "b2"};
  for (int j = 1; j <= n; ++j) {
    gens.push_back("c" + std::to_string(j));
    gens.push_back("d" + std::to_string(j));
  }
  std::vector<std::string> rels = {
      "[b1^-1,d1^-1] a1^-1", "[a1^-1,d1] b1^-1",     "[b2^-1,d2^-1] a2^-1",
      "[a2^-1,d2] b2^-1",    "[d1^-1,b2^-1] c1^-1",  "[c1^-1,b2] d1^-1",
      "[d2^-1,b1^-1] c2^-1", "[c2^-1,b1]^" + M + " d2^-1",
      "[a1,c1]", "[a1,c2]", "[a1,d2]", "[b1,c1]", "[a2,c1]", "[a2,c2]", "[a2,d1]", "[b2,c2]",
      "[a1,b1][a2,b2]"};
  std::string meridian;
  for (int j = 1; j <= n; ++j) {
    auto J = std::to_string(j);
    meridian += "[c" + J + ",d" + J + "]";
  }
  for (int j = 3; j <= n; ++j) {
    auto J = std::to_string(j);
    rels.push_back("[a1^-1,d" + J + "^-1] c" + J + "^-1");
    rels.push_back("[a2^-1,c" + J + "^-1] d" + J + "^-1");
    rels.push_back("[b1,c" + J + "]");
    rels.push_back("[b2,d" + J + "]");
  }
  rels.push_back(meridian);
  x.pi1 = make_presentation(gens, rels);

  x.tori = {
      performed_site("a1'xc1'", "a1", "[b1^-1,d1^-1]", "-1", 1, 1, {"a1", "c1"}),
      performed_site("b1'xc1''", "b1", "[a1^-1,d1]", "-1", 1, 1, {"b1", "c1"}),
      performed_site("a2'xc2'", "a2", "[b2^-1,d2^-1]", "-1", 1, 1, {"a2", "c2"}),
      performed_site("b2'xc2''", "b2", "[a2^-1,d2]", "-1", 1, 1, {"b2", "c2"}),
      performed_site("a2'xc1'", "c1", "[d1^-1,b2^-1]", "+1", 1, 1, {"a2", "c1"}),
      performed_site("a2''xd1'", "d1", "[c1^-1,b2]", "+1", 1, 1, {"a2", "d1"}),
      performed_site("a1'xc2'", "c2", "[d2^-1,b1^-1]", "+1", 1, 1, {"a1", "c2"}),
      performed_site("a1''xd2'", "d2", "[c2^-1,b1]", "+m", 1, m, {"a1", "d2"}),
  };
  for (int j = 3; j <= n; ++j) {
    auto J = std::to_string(j);
    x.tori.push_back(performed_site("b1'xc" + J + "'", "c" + J, "[a1^-1,d" + J + "^-1]", "-1", 1, 1,
                                    {"b1", "c" + J}));
    x.tori.push_back(performed_site("b2'xd" + J + "'", "d" + J, "[a2^-1,c" + J + "^-1]", "-1", 1, 1,
                                    {"b2", "d" + J}));
  }

  EmbeddedSurface s;
  s.name = "Sigma2";
  s.genus = 2;
  s.images = exact_images({"a1", "b1", "a2", "b2"});
  s.meridian = w(meridian);
  s.complement = without(x.pi1, s.meridian);
  x.surfaces.push_back(std::move(s));
  return x;
}

MarkedManifold Y1(int p, int q) {
  require(p >= 0 && q >= 0, "Y1 needs p, q >= 0");
  const std::string P = std::to_string(p), Q = std::to_string(q);
  MarkedManifold x;
  x.name = "Y1";
  x.recipe = "Y1(p=" + P + ",q=" + Q + ")";
  x.e = 0;
  x.sigma = 0;
  x.parity = Parity::Even;
  x.symplectic = true;
  x.minimal = true;
  x.pi1 = make_presentation({"a1", "b1", "a2", "b2", "c", "d"},
                            {"[b1^-1,d^-1] a1^-1", "[a1^-1,d] b1^-1", "[d^-1,b2^-1] c^-" + P,
                             "[c^-1,b2] d^-" + Q, "[a1,c]", "[b1,c]", "[a2,c]", "[a2,d]",
                             "[a1,b1][a2,b2]", "[c,d]"});
  x.tori = {
      performed_site("a1'xc'", "a1", "[b1^-1,d^-1]", "-1", 1, 1, {"a1", "c"}),
      performed_site("b1'xc''", "b1", "[a1^-1,d]", "-1", 1, 1, {"b1", "c"}),
      performed_site("a2'xc'", "c", "[d^-1,b2^-1]", "+1/p", p, 1, {"a2", "c"}),
      performed_site("a2''xd'", "d", "[c^-1,b2]", "+1/q", q, 1, {"a2", "d"}),
  };
  // A 0-surgery is not a Luttinger surgery.
  if (p == 0 || q == 0) {
    x.symplectic = false;
    x.minimal = false;
  }
  EmbeddedSurface s;
  s.name = "Sigma2";
  s.genus = 2;
  s.images = exact_images({"a1", "b1", "a2", "b2"});
  s.meridian = w("[c,d]");
  s.complement = without(x.pi1, s.meridian);
  x.surfaces.push_back(std::move(s));
  return x;
}

namespace {

std::string eps(int e) {
  require(e == 1 || e == -1, "sign parameters must be +1 or -1");
  return e == 1 ? "" : "^-1";
}

}  // namespace

MarkedManifold T4() {
  MarkedManifold x;
  x.name = "T4";
  x.recipe = "T4()";
  x.e = 0;
  x.sigma = 0;
  x.parity = Parity::Even;
  x.symplectic = true;
  x.minimal = true;
  x.pi1 = make_presentation({"alpha1", "alpha2", "alpha3", "alpha4"},
                            {"[alpha1,alpha2]", "[alpha1,alpha3]", "[alpha1,alpha4]",
                             "[alpha2,alpha3]", "[alpha2,alpha4]", "[alpha3,alpha4]"});
  x.tori = {
      open_site("alpha2'xalpha3'", "alpha3", "[alpha1^-1,alpha4^-1]", "[alpha1,alpha4]", "-1/q",
                {"alpha2", "alpha3"}),
      open_site("alpha2''xalpha4'", "alpha4", "[alpha1,alpha3^-1]", "[alpha1,alpha3]", "-m/r",
                {"alpha2", "alpha4"}),
      open_site("alpha1'xalpha3'", "alpha1", "[alpha2^-1,alpha4^-1]", "[alpha2,alpha4]", "-1/q",
                {"alpha1", "alpha3"}),
      open_site("alpha2'xalpha3''", "alpha2", "[alpha1^-1,alpha4]", "[alpha1,alpha4]", "-1/r",
                {"alpha2", "alpha3"}),
  };
  return x;
}

MarkedManifold T4CP2bar(int e1, int e3) {
  MarkedManifold x = blow_up(T4());
  x.name = "T4CP2bar";
  x.recipe = "T4CP2bar(e1=" + std::to_string(e1) + ",e3=" + std::to_string(e3) + ")";
  x.tori.resize(2);
  x.tori[1].pushoff = w("[alpha1" + eps(e1) + ",alpha3" + eps(e3) + "]");

  EmbeddedSurface s;
  s.name = "SigmaBar2";
  s.genus = 2;
  s.images = exact_images({"alpha1", "alpha2", "alpha3^2", "alpha4"});
  s.modulo_meridian = {"a2"};
  s.meridian = w("[alpha3,alpha4]");
  s.complement = without(without(x.pi1, w("[alpha1,alpha2]")), s.meridian);
  s.complement.meridional.push_back({"g", s.meridian});
  x.surfaces.push_back(std::move(s));
  return x;
}

MarkedManifold Zpp(int q, int r, int m, int e1, int e3) {
  require(q >= 0 && r >= 0 && m >= 1, "Zpp needs q, r >= 0 and m >= 1");
  require(std::gcd(m, r) == 1, "Zpp needs gcd(m, r) = 1");
  MarkedManifold x = T4CP2bar(e1, e3);
  x = torus_surgery(x, "alpha2'xalpha3'", q, 1);
  x = torus_surgery(x, "alpha2''xalpha4'", r, m);
  x.name = "Zpp";
  x.recipe = "Zpp(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ",m=" + std::to_string(m) +
             ",e1=" + std::to_string(e1) + ",e3=" + std::to_string(e3) + ")";
  x.minimal = false;
  return x;
}

MarkedManifold T4_2CP2bar() {
  MarkedManifold x = blow_up(blow_up(T4()));
  x.name = "T4_2CP2bar";
  x.recipe = "T4_2CP2bar()";
  x.tori.erase(x.tori.begin(), x.tori.begin() + 2);
  EmbeddedSurface s;
  s.name = "SigmaHat2";
  s.genus = 2;
  s.images = exact_images({"alpha1", "alpha2", "alpha3", "alpha4"});
  s.complement = x.pi1;
  x.surfaces.push_back(std::move(s));
  return x;
}

MarkedManifold Mqr(int q, int r) {
  require(q >= 0 && r >= 0, "Mqr needs q, r >= 0");
  MarkedManifold x = T4_2CP2bar();
  x = torus_surgery(x, "alpha1'xalpha3'", q, 1);
  x = torus_surgery(x, "alpha2'xalpha3''", r, 1);
  x.name = "Mqr";
  x.recipe = "Mqr(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
  return x;
}

MarkedManifold T2xS2_4blowups() {
  MarkedManifold x;
  x.name = "T2xS2_4blowups";
  x.recipe = "T2xS2_4blowups()";
  x.e = 4;
  x.sigma = -4;
  x.parity = Parity::Odd;
  x.symplectic = true;
  x.pi1 = make_presentation({"c", "d"}, {"[c,d]"});
  EmbeddedSurface s;
  s.name = "SigmaTilde2";
  s.genus = 2;
  s.images = exact_images({"c", "d", "c^-1", "d^-1"});
  s.complement = x.pi1;
  x.surfaces.push_back(std::move(s));
  return x;
}

const std::vector<CatalogEntry>& catalog() {
  using Args = std::map<std::string, long long>;
  auto i = [](const Args& a, const char* k) { return static_cast<int>(a.at(k)); };
  static const std::vector<CatalogEntry> entries = {
      {"Yn", {{"n", 2, true}, {"m", 1, false}}, "Sigma_2 x Sigma_n after 2n+4 surgeries",
       [i](const Args& a) { return Yn(i(a, "n"), i(a, "m")); }},
      {"Y1", {{"p", 1, false}, {"q", 1, false}}, "Sigma_2 x T^2 after four surgeries",
       [i](const Args& a) { return Y1(i(a, "p"), i(a, "q")); }},
      {"T4", {}, "four-torus", [](const Args&) { return T4(); }},
      {"T4CP2bar", {{"e1", 1, false}, {"e3", -1, false}}, "T^4 # CP2bar with braided genus-2 surface",
       [i](const Args& a) { return T4CP2bar(i(a, "e1"), i(a, "e3")); }},
      {"Zpp",
       {{"q", 1, false}, {"r", 1, false}, {"m", 1, false}, {"e1", 1, false}, {"e3", -1, false}},
       "two surgeries on T^4 # CP2bar",
       [i](const Args& a) {
         return Zpp(i(a, "q"), i(a, "r"), i(a, "m"), i(a, "e1"), i(a, "e3"));
       }},
      {"T4_2CP2bar", {}, "T^4 # 2 CP2bar", [](const Args&) { return T4_2CP2bar(); }},
      {"Mqr", {{"q", 1, false}, {"r", 1, false}}, "two Luttinger surgeries on T^4 # 2 CP2bar",
       [i](const Args& a) { return Mqr(i(a, "q"), i(a, "r")); }},
      {"T2xS2_4blowups", {}, "(T^2 x S^2) # 4 CP2bar", [](const Args&) { return T2xS2_4blowups(); }},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error("unknown block '" + name + "'");
}

}  // namespace m4kit
