#include "m4kit/geography.hpp"

#include "m4kit/blocks.hpp"
#include "m4kit/constructions.hpp"
#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"
#include "m4kit/surgery.hpp"

namespace m4kit {

GeoPoint coords(long long e, long long sigma) {
  if ((e + sigma) % 4 != 0) {
    throw Error("not admissible: e + sigma = " + std::to_string(e + sigma) +
                " is not divisible by 4");
  }
  return {(e + sigma) / 4, 2 * e + 3 * sigma};
}

GeoPoint coords(const MarkedManifold& m) { return coords(m.e, m.sigma); }

std::pair<long long, long long> euler_signature(const GeoPoint& p) {
  long long sigma = p.c1sq - 8 * p.chi_h;
  return {4 * p.chi_h - sigma, sigma};
}

bool region_check(const GeoPoint& p) { return p.c1sq >= 0 && p.c1sq <= 8 * p.chi_h - 1; }

std::string FreedmanModel::name() const {
  auto part = [](long long k, const char* base) {
    return (k == 1 ? std::string() : std::to_string(k)) + base;
  };
  if (b2_minus == 0) return part(b2_plus, "CP2");
  if (b2_plus == 0) return part(b2_minus, "CP2bar");
  return part(b2_plus, "CP2") + "#" + part(b2_minus, "CP2bar");
}

FreedmanModel freedman_numbers(long long e, long long sigma) {
  long long b2 = e - 2;
  if (b2 < 0 || (b2 + sigma) % 2 != 0 || b2 < sigma || b2 < -sigma) {
    throw Error("(e, sigma) = (" + std::to_string(e) + ", " + std::to_string(sigma) +
                ") is not realized by a simply connected manifold");
  }
  return {(b2 + sigma) / 2, (b2 - sigma) / 2};
}

FreedmanModel freedman_model(const MarkedManifold& m, const Certificate& pi1) {
  if (pi1.claim != Claim::Group || pi1.verdict != Verdict::Trivial) {
    throw Error("Freedman model needs a trivial fundamental group certificate");
  }
  if (m.parity != Parity::Odd) {
    throw Error("Freedman model needs an odd intersection form (parity is " + to_string(m.parity) +
                ")");
  }
  return freedman_numbers(m.e, m.sigma);
}

GeoPoint wedge_sum(const GeoPoint& x, long long chi, long long c) {
  if (chi < 0 || c < 0 || c > 8 * chi - 1) {
    throw Error("(chi, c) = (" + std::to_string(chi) + ", " + std::to_string(c) +
                ") violates 0 <= c <= 8 chi - 1");
  }
  return {x.chi_h + chi, x.c1sq + c};
}

bool Realization::established() const {
  return !arithmetic_only && pi1.verdict == Verdict::InfiniteCyclic && surjectivity_index &&
         *surjectivity_index == 1 && meridian.verdict == Verdict::Trivial;
}

namespace {

struct Row {
  std::string construction;
  std::string site;
  std::vector<std::string> torus;
  std::string designated;
  MarkedManifold base;
  bool arithmetic;
};

Row make_row(const GeoPoint& p) {
  if (p == GeoPoint{1, 7}) {
    return {"X1(1) = Y1(1,1) # Zpp(1,1,1), surgery (a2'xc', c', +1) skipped",
            "Y.a2'xc'", {"a2", "c"}, "c", X1(1), false};
  }
  if (p == GeoPoint{1, 5}) {
    return {"V(1) = Mqr(1,1) # Zpp(1,1,1), surgery (alpha2''xalpha4', alpha4', -1) skipped",
            "Z.alpha2''xalpha4'", {"alpha2", "alpha4"}, "alpha4", V(1), false};
  }
  if (p == GeoPoint{2, 13}) {
    return {"X1(1) with (a2'xc', c', +1) skipped, summed with T4_2CP2bar along SigmaHat2",
            "Y.a2'xc'", {"a2", "c"}, "c", X1(1), true};
  }
  if (p == GeoPoint{2, 11}) {
    return {"V(1) with (alpha2''xalpha4', alpha4', -1) skipped, summed with T4_2CP2bar",
            "Z.alpha2''xalpha4'", {"alpha2", "alpha4"}, "alpha4", V(1), true};
  }
  if (p == GeoPoint{2, 9}) {
    return {"W(1) with (alpha2''xalpha4', alpha4', -1) skipped, summed with T4_2CP2bar",
            "Z.alpha2''xalpha4'", {"alpha2", "alpha4"}, "alpha4", W(1), true};
  }
  if (p.chi_h >= 2 && p.c1sq == 8 * p.chi_h - 1) {
    int chi = static_cast<int>(p.chi_h);
    return {"X" + std::to_string(chi) + "(1) = Y" + std::to_string(chi) +
                "(1) # Z', surgery (a2'xc1', c1', +1) skipped",
            "Y.a2'xc1'", {"a2", "c1"}, "c1", Xn(chi, 1), false};
  }
  throw Error("pair (" + std::to_string(p.chi_h) + ", " + std::to_string(p.c1sq) +
              ") is not constructed here; the remaining pairs rely on the ABBKP constructions");
}

}  // namespace

Realization realize_pair(const GeoPoint& target, const Budget& budget) {
  if (!region_check(target)) {
    throw Error("pair (" + std::to_string(target.chi_h) + ", " + std::to_string(target.c1sq) +
                ") lies outside 0 <= c <= 8 chi - 1");
  }
  Row row = make_row(target);
  Realization r;
  r.point = target;
  r.construction = row.construction;
  r.skipped_site = row.site;
  r.designated = row.designated;
  r.arithmetic_only = row.arithmetic;

  // Skipping the surgery: the trivial 0-denominator coefficient.
  MarkedManifold n = torus_surgery(row.base, row.site, 0, 1);
  n.name = "N";
  const SurgeryDatum& t = n.torus(row.site);
  r.torus_generators = t.torus_generators;
  Word meridian = t.pushoff;

  r.pi1 = certify(n.pi1, Target::infinite_cyclic(row.designated), budget);
  if (r.pi1.conclusive()) {
    std::vector<Word> subgroup;
    for (const auto& g : r.torus_generators) subgroup.push_back(r.pi1.images.at(g));
    Presentation fin = r.pi1.final_presentation;
    fin.conditional.clear();
    auto res = todd_coxeter(fin, subgroup, budget.max_cosets);
    if (!res.exceeded()) r.surjectivity_index = *res.index;
  }
  r.meridian = prove_word_trivial(torus_complement(n, row.site), meridian, budget);

  if (row.arithmetic) {
    MarkedManifold hat = T4_2CP2bar();
    const long long genus = hat.surface("SigmaHat2").genus;
    r.e = n.e + hat.e - 2 * (2 - 2 * genus);
    r.sigma = n.sigma + hat.sigma;
    r.note = "pi1 of the sum with T4_2CP2bar is not computed: the genus-2 surface in N is not "
             "specified; invariants only";
  } else {
    r.e = n.e;
    r.sigma = n.sigma;
  }
  if (coords(r.e, r.sigma) != target) {
    throw Error("construction reaches (" + std::to_string(coords(r.e, r.sigma).chi_h) + ", " +
                std::to_string(coords(r.e, r.sigma).c1sq) + "), not the requested pair");
  }
  r.n = std::move(n);
  return r;
}

std::vector<GeoPoint> supported_pairs(long long max_chi) {
  std::vector<GeoPoint> out = {{1, 5}, {1, 7}};
  if (max_chi >= 2) {
    out.insert(out.end(), {{2, 9}, {2, 11}, {2, 13}});
  }
  for (long long chi = 2; chi <= max_chi; ++chi) out.push_back({chi, 8 * chi - 1});
  return out;
}

}  // namespace m4kit
