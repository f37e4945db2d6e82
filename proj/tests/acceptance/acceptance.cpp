// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "m4kit/abelianize.hpp"
#include "m4kit/certify.hpp"
#include "m4kit/constructions.hpp"
#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"
#include "m4kit/geography.hpp"
#include "m4kit/replay.hpp"
#include "oracles.hpp"

using namespace m4kit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Budget kBudget = Budget::from_env();
const std::vector<Signs> kAllSigns = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};

// Every conclusive certificate produced along the way, for criterion 9.
std::vector<std::pair<std::string, Certificate>> g_emitted;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

struct Point {
  std::string label;
  long long e, sigma;
  bool simply_connected;
};
std::vector<Point> g_points;  // manifolds built in criteria 1-5, for criterion 6

Certificate keep(const std::string& label, Certificate c) {
  if (c.conclusive()) g_emitted.emplace_back(label, c);
  return c;
}

// Builds, certifies trivial and checks invariants and the Freedman model.
void check_simply_connected(Outcome& out, const std::string& label, const MarkedManifold& m,
                            long long e, long long sigma, long long bp, long long bm,
                            double limit_s) {
  auto t0 = Clock::now();
  Certificate c = keep(label, certify(m.pi1, Target::trivial(), kBudget));
  double dt = seconds_since(t0);
  out.require(m.e == e && m.sigma == sigma,
              label + ": (e, sigma) = (" + std::to_string(m.e) + ", " + std::to_string(m.sigma) + ")");
  out.require(c.verdict == Verdict::Trivial, label + ": " + describe(c));
  if (c.verdict == Verdict::Trivial) {
    FreedmanModel f = freedman_model(m, c);
    out.require(f.b2_plus == bp && f.b2_minus == bm, label + ": model " + f.name());
  }
  out.require(dt < limit_s, label + ": took " + std::to_string(dt) + " s");
  g_points.push_back({label, m.e, m.sigma, c.verdict == Verdict::Trivial});
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < 4; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > 4) s += "; ... (" + std::to_string(v.size()) + " total)";
  return s;
}

Outcome c1(const Signs& s = {}) {
  Outcome o;
  double worst = 0;
  for (int m = 1; m <= 5; ++m) {
    auto t0 = Clock::now();
    check_simply_connected(o, "X1(" + std::to_string(m) + ")", X1(m, s), 5, -1, 1, 2, 10.0);
    worst = std::max(worst, seconds_since(t0));
  }
  o.detail << "X1(m), m=1..5: e=5 sigma=-1 trivial model (1,2); slowest " << worst << " s";
  return o;
}

Outcome c2(const Signs& s = {}) {
  Outcome o;
  auto t0 = Clock::now();
  for (int n = 2; n <= 10; ++n)
    for (int m = 1; m <= 3; ++m)
      check_simply_connected(o, "X" + std::to_string(n) + "(" + std::to_string(m) + ")",
                             Xn(n, m, s), 4 * n + 1, -1, 2 * n - 1, 2 * n, 120.0);
  double dt = seconds_since(t0);
  o.require(dt < 120.0, "sweep took " + std::to_string(dt) + " s");
  o.detail << "Xn(m), n=2..10, m=1..3: 27 manifolds trivial; sweep " << dt << " s";
  return o;
}

Outcome c3(const Signs& s = {}) {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    check_simply_connected(o, "V(" + std::to_string(m) + ")", V(m, s), 7, -3, 1, 4, 600.0);
    check_simply_connected(o, "W(" + std::to_string(m) + ")", W(m, s), 9, -5, 1, 6, 600.0);
  }
  o.detail << "V(m) -> (7,-3) model (1,4), W(m) -> (9,-5) model (1,6), m=1..3";
  return o;
}

Outcome c4() {
  Outcome o;
  for (int p : {0, 2, 3, 4, 5, 6}) {
    std::string label = "X1~(" + std::to_string(p) + ",1)";
    MarkedManifold x = X1_tilde(p, 1);
    Target t = p == 0 ? Target::infinite_cyclic("c") : Target::finite_cyclic(p, "c");
    auto t0 = Clock::now();
    Certificate c = keep(label, certify(x.pi1, t, kBudget));
    double dt = seconds_since(t0);
    Verdict want = p == 0 ? Verdict::InfiniteCyclic : Verdict::FiniteCyclic;
    o.require(c.verdict == want && c.generator == "c" && (p == 0 || c.order == p),
              label + ": " + describe(c));
    // Independent of the engine's verdict: H1 and coset index over <c>.
    H1Result h = h1(closed_candidate(x.pi1));
    o.require(to_string(h) == (p == 0 ? "Z" : "Z/" + std::to_string(p)), label + ": H1 " + to_string(h));
    CosetResult r = todd_coxeter(closed_candidate(x.pi1), {Word("c")}, kBudget.max_cosets);
    o.require(r.index == std::optional<std::size_t>(1), label + ": coset index over <c> not 1");
    o.require(dt < 10.0, label + ": took " + std::to_string(dt) + " s");
    g_points.push_back({label, x.e, x.sigma, false});
  }
  o.detail << "p=0 -> Z, p=2..6 -> Z/p, generator c, index of <c> is 1";
  return o;
}

Outcome c5() {
  Outcome o;
  MarkedManifold x = Yn_unsurgered_sum(2);
  Certificate c = keep("Y2(1) # T4CP2bar", certify(x.pi1, Target::finite_cyclic(2, "alpha3"), kBudget));
  H1Result h = h1(closed_candidate(x.pi1));
  CosetResult r = todd_coxeter(closed_candidate(x.pi1), {Word("alpha3")}, kBudget.max_cosets);
  bool fallback = to_string(h) == "Z/2" && r.index == std::optional<std::size_t>(1);
  if (c.verdict == Verdict::FiniteCyclic) {
    o.require(c.order == 2, "order " + std::to_string(c.order));
    o.detail << "FiniteCyclic(2), generator " << c.generator;
  } else {
    o.require(fallback, "engine " + describe(c) + ", H1 " + to_string(h));
    o.detail << "engine inconclusive; H1 = Z/2 and index of <alpha3> is 1";
  }
  o.require(fallback, "H1 " + to_string(h) + " / coset index check");
  g_points.push_back({"Y2(1) # T4CP2bar", x.e, x.sigma, false});
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& p : g_points) {
    o.require((p.e + p.sigma) % 4 == 0, p.label + ": e + sigma not divisible by 4");
    if ((p.e + p.sigma) % 4) continue;
    GeoPoint g = coords(p.e, p.sigma);
    o.require(g.c1sq - 8 * g.chi_h == p.sigma, p.label + ": c1^2 - 8 chi_h != sigma");
    auto [e, s] = euler_signature(g);
    o.require(e == p.e && s == p.sigma, p.label + ": inverse mismatch");
    if (p.simply_connected) o.require(region_check(g), p.label + ": outside region");
    ++n;
  }
  // Listed target points.
  const std::vector<GeoPoint> listed = {{1, 7}, {2, 15}, {3, 23}, {1, 5}, {2, 13}, {2, 11}, {2, 9}};
  for (const auto& t : listed) {
    Realization r = realize_pair(t, kBudget);
    GeoPoint g = coords(r.e, r.sigma);
    o.require(g == t, "realize(" + std::to_string(t.chi_h) + "," + std::to_string(t.c1sq) + ") lands at (" +
                          std::to_string(g.chi_h) + "," + std::to_string(g.c1sq) + ")");
    o.require(g.c1sq - 8 * g.chi_h == r.sigma, "realized sigma identity");
    o.require(region_check(g), "realized point outside region");
  }
  o.detail << n << " constructed manifolds plus " << listed.size() << " listed points";
  return o;
}

Outcome c7() {
  Outcome o;
  struct Row {
    GeoPoint p;
    bool must_surject;
  };
  const std::vector<Row> rows = {{{1, 7}, true},   {{2, 15}, true},  {{3, 23}, true},
                                 {{1, 5}, false},  {{2, 13}, false}, {{2, 11}, false},
                                 {{2, 9}, false}};
  std::vector<std::string> status;
  for (const auto& row : rows) {
    std::string label = "(" + std::to_string(row.p.chi_h) + "," + std::to_string(row.p.c1sq) + ")";
    Realization r;
    try {
      r = realize_pair(row.p, kBudget);
    } catch (const Error& e) {
      o.require(false, label + ": " + e.what());
      continue;
    }
    keep(label + " pi1", r.pi1);
    keep(label + " meridian", r.meridian);
    if (row.must_surject) {
      o.require(r.pi1.verdict == Verdict::InfiniteCyclic, label + ": pi1 " + describe(r.pi1));
      o.require(r.surjectivity_index == std::optional<std::size_t>(1), label + ": torus generators do not surject");
      o.require(r.meridian.verdict == Verdict::Trivial, label + ": meridian " + describe(r.meridian));
    }
    status.push_back(label + (r.established() ? " established" : r.arithmetic_only ? " arithmetic" : " inconclusive"));
  }
  Realization first = realize_pair({1, 7}, kBudget);
  o.require(first.pi1.generator == "c", "(1,7): generator " + first.pi1.generator);
  o.require(first.meridian.subject == parse_word("[d^-1,b2^-1]"),
            "(1,7): meridian word " + to_string(first.meridian.subject));
  o.detail << join(status);
  return o;
}

Outcome c8() {
  Outcome o;
  oracle::Gen gen(20240601);
  std::size_t agree = 0, tried = 0;
  while (agree + o.failures.size() < 200 && tried < 5000) {
    ++tried;
    std::size_t ngens = static_cast<std::size_t>(gen.uniform(1, 4));
    Presentation p = gen.abelian(ngens, ngens + 1, 9);
    H1Result h = h1(p);
    if (h.rank != 0) continue;  // infinite: no coset index to compare
    BigInt order = 1;
    for (const auto& t : h.torsion) order *= t;
    CosetResult r = todd_coxeter(p, {}, kBudget.max_cosets);
    if (r.exceeded()) {
      o.require(false, to_text(p) + ": coset budget exceeded (order " + order.str() + ")");
      continue;
    }
    if (BigInt(*r.index) == order) {
      ++agree;
    } else {
      o.require(false, to_text(p) + ": SNF " + order.str() + " vs TC " + std::to_string(*r.index));
    }
  }
  o.require(agree >= 200, "only " + std::to_string(agree) + " agreeing cases");
  o.detail << agree << "/" << agree + o.failures.size() << " finite presentations agree";
  return o;
}

Outcome c9() {
  Outcome o;
  std::size_t steps = 0;
  for (const auto& [label, c] : g_emitted) {
    ReplayResult r = replay(c, kBudget);
    o.require(r.ok, label + ": " + r.error);
    steps += r.steps_checked;
  }
  o.require(!g_emitted.empty(), "no certificates emitted");
  o.detail << g_emitted.size() << " certificates, " << steps << " steps replayed";
  return o;
}

Outcome c10() {
  Outcome o;
  for (const auto& s : kAllSigns) {
    std::string tag = "(e1,e3)=(" + std::to_string(s.e1) + "," + std::to_string(s.e3) + ")";
    for (auto* crit : {&c1, &c2, &c3}) {
      Outcome r = (*crit)(s);
      for (const auto& f : r.failures) o.require(false, tag + " " + f);
    }
  }
  o.detail << "criteria 1-3 under all four sign choices";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 X1(m) simply connected, model (1,2)", [] { return c1(); }},
      {"2 Xn(m) simply connected, model (2n-1,2n)", [] { return c2(); }},
      {"3 V(m) and W(m) simply connected", [] { return c3(); }},
      {"4 cyclic family X1~(p,1)", c4},
      {"5 Z/2 from the unsurgered sum", c5},
      {"6 geography identities", c6},
      {"7 listed realizations", c7},
      {"8 Smith order equals coset index", c8},
      {"9 certificate replay", c9},
      {"10 sign robustness", c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o = c.run();
    double dt = seconds_since(t0);
    std::cout << (o.ok ? "PASS " : "FAIL ") << "criterion " << c.name << " [" << o.detail.str()
              << "] " << dt << " s";
    if (!o.ok) std::cout << ": " << join(o.failures);
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (failed ? "FAIL " : "PASS ") << failed << " of " << criteria.size()
            << " criteria failed" << std::endl;
  return failed ? 1 : 0;
}
