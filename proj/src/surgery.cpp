#include "m4kit/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "m4kit/error.hpp"

namespace m4kit {

namespace {

// [x^a, y^b] with a, b = +-1, viewed up to the signs.
bool commutator_letters(const Word& w, std::string* x, std::string* y) {
  Word c = cyclically_reduce(w);
  if (c.size() != 4) return false;
  const auto& l = c.letters();
  if (l[0].gen == l[1].gen) return false;
  if (!l[2].cancels(l[0]) || !l[3].cancels(l[1])) return false;
  *x = l[0].gen;
  *y = l[1].gen;
  if (*x > *y) std::swap(*x, *y);
  return true;
}

// Same normal closure, or both simple commutators on the same pair of
// generators (these define the same quotient).
bool site_match(const Word& a, const Word& b) {
  if (equivalent_relators(a, b)) return true;
  std::string ax, ay, bx, by;
  return commutator_letters(a, &ax, &ay) && commutator_letters(b, &bx, &by) && ax == bx &&
         ay == by;
}

bool replace_relator(Presentation& p, const Word& old_rel, const Word& new_rel) {
  for (auto& r : p.relators) {
    if (site_match(r, old_rel)) {
      r = new_rel;
      return true;
    }
  }
  return false;
}

std::string fresh_name(std::string g, const std::set<std::string>& taken) {
  do g += "'";
  while (taken.count(g));
  return g;
}

}  // namespace

MarkedManifold torus_surgery(const MarkedManifold& mfd, const std::string& site, long long k,
                             long long m) {
  if (k < 0) throw Error("surgery coefficient k must be >= 0");
  if (m < 1) throw Error("surgery multiplicity m must be >= 1");
  if (std::gcd(k, m) != 1) throw Error("surgery needs gcd(k, m) = 1");
  MarkedManifold out = mfd;
  SurgeryDatum& d = out.torus(site);
  Word rel = d.pushoff.pow(static_cast<int>(m)) * Word(d.curve, -static_cast<int>(k));
  if (!replace_relator(out.pi1, d.relator, rel)) {
    throw Error("site '" + site + "': relator " + to_string(d.relator) +
                " is not present in the presentation");
  }
  for (auto& s : out.surfaces) replace_relator(s.complement, d.relator, rel);
  d.relator = rel;
  d.k = k;
  d.m = m;
  d.performed = true;
  out.symplectic = mfd.symplectic && m == 1;
  out.minimal = false;
  out.recipe = "surgery(" + mfd.recipe + ", site=\"" + site + "\", k=" + std::to_string(k) +
               ", m=" + std::to_string(m) + ")";
  return out;
}

MarkedManifold blow_up(const MarkedManifold& mfd) {
  MarkedManifold out = mfd;
  out.e += 1;
  out.sigma -= 1;
  out.parity = Parity::Odd;
  out.minimal = false;
  out.recipe = "blowup(" + mfd.recipe + ")";
  return out;
}

MarkedManifold fiber_sum(const MarkedManifold& x, const std::string& s,
                         const MarkedManifold& n, const std::string& s_prime,
                         const SumIdentification& id) {
  if (id.name != "standard") throw Error("unknown surface identification '" + id.name + "'");
  const EmbeddedSurface& sx = x.surface(s);
  const EmbeddedSurface& sn = n.surface(s_prime);
  if (sx.genus != sn.genus) {
    throw Error("genus mismatch: " + s + " has genus " + std::to_string(sx.genus) + ", " + s_prime +
                " has genus " + std::to_string(sn.genus));
  }
  if (sx.self_intersection != 0 || sn.self_intersection != 0) {
    throw Error("fiber sum needs surfaces of self-intersection 0");
  }

  // Names on the N side, then primes appended to clashing X-side names.
  std::set<std::string> taken(sn.complement.generators.begin(), sn.complement.generators.end());
  for (const auto& t : sn.complement.meridional) taken.insert(t.name);
  for (const auto& g : n.pi1.generators) taken.insert(g);
  std::map<std::string, std::string> names;
  std::set<std::string> used = taken;
  for (const auto& g : x.pi1.generators) used.insert(g);
  for (const auto& t : sx.complement.meridional) used.insert(t.name);
  auto assign = [&](const std::string& g) {
    if (names.count(g)) return;
    if (taken.count(g)) {
      std::string f = fresh_name(g, used);
      used.insert(f);
      names[g] = f;
    } else {
      names[g] = g;
    }
  };
  for (const auto& g : x.pi1.generators) assign(g);
  for (const auto& t : sx.complement.meridional) assign(t.name);
  std::map<std::string, Word> as_words;
  for (const auto& [from, to] : names) as_words[from] = Word(to);
  auto rx = [&](const Word& w) { return substitute(w, as_words); };

  Presentation cx = rename(sx.complement, names);
  Presentation cn = sn.complement;
  Presentation p = free_product(cx, cn, x.name, n.name);

  std::map<std::string, Word> nimg(sn.images.begin(), sn.images.end());
  std::vector<Word> exact;
  for (const auto& [label, wx] : sx.images) {
    auto it = nimg.find(label);
    if (it == nimg.end()) throw Error("surface " + s_prime + " has no image for " + label);
    Word rel = rx(wx) * it->second.inverse();
    if (sn.modulo_meridian.count(label)) {
      p.conditional.push_back({rel, sn.meridian});
    } else if (sx.modulo_meridian.count(label)) {
      p.conditional.push_back({rel, rx(sx.meridian)});
    } else if (!rel.is_identity()) {
      exact.push_back(rel);
    }
  }
  Word mu = rx(sx.meridian) * sn.meridian;
  if (!mu.is_identity()) exact.push_back(mu);
  p = impose(p, exact);
  p.validate();

  MarkedManifold out;
  out.name = x.name + "#" + n.name;
  out.recipe = "fibersum(" + x.recipe + "." + s + ", " + n.recipe + "." + s_prime + ")";
  out.e = x.e + n.e - 2 * (2 - 2 * sx.genus);
  out.sigma = x.sigma + n.sigma;
  out.parity = (out.sigma % 8 != 0) ? Parity::Odd : Parity::Unknown;
  out.symplectic = x.symplectic && n.symplectic;
  out.minimal = false;
  out.pi1_candidate = true;
  out.pi1 = std::move(p);
  for (const auto& t : x.tori) {
    SurgeryDatum d = t;
    d.site = x.name + "." + t.site;
    d.curve = names.count(t.curve) ? names.at(t.curve) : t.curve;
    d.pushoff = rx(t.pushoff);
    d.relator = rx(t.relator);
    for (auto& g : d.torus_generators)
      if (names.count(g)) g = names.at(g);
    out.tori.push_back(std::move(d));
  }
  for (const auto& t : n.tori) {
    SurgeryDatum d = t;
    d.site = n.name + "." + t.site;
    out.tori.push_back(std::move(d));
  }
  return out;
}

Presentation torus_complement(const MarkedManifold& mfd, const std::string& site) {
  const SurgeryDatum& d = mfd.torus(site);
  Presentation p = mfd.pi1;
  auto it = std::find_if(p.relators.begin(), p.relators.end(),
                         [&](const Word& r) { return site_match(r, d.relator); });
  if (it == p.relators.end()) {
    throw Error("site '" + site + "': relator " + to_string(d.relator) + " is not present");
  }
  p.relators.erase(it);
  return p;
}

}  // namespace m4kit
