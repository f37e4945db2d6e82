#include "m4kit/certify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"

namespace m4kit {

namespace {

constexpr long long kGrowthLimit = 32;

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// [x^s, y^t] in some rotation: l0 l1 l0^-1 l1^-1 on two distinct generators.
bool commutator_shape(const Word& w, std::string* x, std::string* y) {
  if (w.size() != 4) return false;
  const auto& l = w.letters();
  if (l[0].gen == l[1].gen) return false;
  if (l[2] != l[0].inverse() || l[3] != l[1].inverse()) return false;
  *x = l[0].gen;
  *y = l[1].gen;
  return true;
}

struct Meridian {
  Word word;
  bool activated = false;
};

struct PendingConditional {
  Word relator;
  std::size_t meridian;
};

class Engine {
 public:
  Engine(const Presentation& p, const Budget& budget, std::string protect)
      : budget_(budget), protect_(std::move(protect)) {
    gens_ = p.generators;
    rels_ = p.relators;
    for (const auto& g : p.generators) images_[g] = Word(g);
    auto meridian_slot = [&](const Word& m) {
      for (std::size_t i = 0; i < meridians_.size(); ++i)
        if (meridians_[i].word == m) return i;
      meridians_.push_back({m, false});
      return meridians_.size() - 1;
    };
    for (const auto& t : p.meridional) meridian_slot(t.meridian);
    for (const auto& c : p.conditional) conds_.push_back({c.relator, meridian_slot(c.meridian)});
    distinguished_ = p.distinguished;
  }

  void set_subject(const Word& w) {
    has_subject_ = true;
    subject_ = w;
  }

  std::vector<Step>& trace() { return trace_; }
  bool exhausted() const { return exhausted_; }
  const std::vector<std::string>& gens() const { return gens_; }
  const Word& subject() const { return subject_; }
  const Word& image(const std::string& g) const { return images_.at(g); }
  const std::map<std::string, Word>& images() const { return images_; }
  bool all_meridians_activated() const {
    return std::all_of(meridians_.begin(), meridians_.end(),
                       [](const Meridian& m) { return m.activated; });
  }
  const CommutingPairs& pairs() const { return pairs_; }

  // Relators plus the commutators of every known commuting pair.
  Presentation current() const {
    Presentation p;
    p.generators = gens_;
    p.relators = rels_;
    for (const auto& [x, y] : pairs_) {
      Word c = commutator(Word(x), Word(y));
      if (std::none_of(p.relators.begin(), p.relators.end(),
                       [&](const Word& r) { return equivalent_relators(r, c); }))
        p.relators.push_back(c);
    }
    for (const auto& c : conds_) p.conditional.push_back({c.relator, meridians_[c.meridian].word});
    p.distinguished = distinguished_;
    return p;
  }

  void record(Step s) {
    trace_.push_back(std::move(s));
    if (trace_.size() >= budget_.max_steps) exhausted_ = true;
  }

  // Main rewriting loop. With `activate` false, conditional relators stay dormant.
  void run(bool activate) {
    while (!exhausted_) {
      normalize();
      if (try_kill()) continue;
      if (try_identify()) continue;
      if (activate && try_activate(false)) continue;
      if (try_cancel()) continue;
      if (try_eliminate()) continue;
      if (activate && try_activate(true)) continue;
      break;
    }
    normalize();
  }

  void closure() {
    bool changed = true;
    while (changed && !exhausted_) {
      changed = false;
      for (const auto& r : rels_) {
        std::string x, y;
        if (commutator_shape(r, &x, &y) && !pairs_.count(key(x, y))) {
          pairs_.insert(key(x, y));
          record({.rule = "seed-commute", .gen = x, .gen2 = y, .inputs = {r}});
          changed = true;
        }
      }
      for (const auto& r : rels_) {
        for (std::size_t i = 0; i < r.size() && !exhausted_; ++i) {
          const std::string& g = r[i].gen;
          if (r.occurrences(g) != 1) continue;
          Word rest = rotate(r, i + 1);  // ends with g^e
          for (const auto& x : gens_) {
            if (x == g || pairs_.count(key(g, x))) continue;
            bool ok = true;
            for (const auto& l : rest.letters()) {
              if (l.gen == g) continue;
              if (l.gen != x && !pairs_.count(key(l.gen, x))) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            pairs_.insert(key(g, x));
            record({.rule = "derive-commute", .gen = g, .gen2 = x, .inputs = {r}});
            changed = true;
          }
        }
      }
    }
  }

  // Locate x ... x^-1 (cyclically) with x commuting with everything between.
  bool find_cancel(const Word& w, long long* rot, long long* pos) const {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& x = w[i];
      for (std::size_t t = 1; t < n; ++t) {
        const Letter& y = w[(i + t) % n];
        if (t >= 2 && y == x.inverse()) {
          *rot = static_cast<long long>(i);
          *pos = static_cast<long long>(t);
          return true;
        }
        if (y.gen != x.gen && !pairs_.count(key(y.gen, x.gen))) break;
      }
    }
    return false;
  }

  static Word cancel_at(const Word& w, long long rot, long long pos) {
    Word r = rotate(w, static_cast<std::size_t>(rot));
    std::vector<Letter> raw;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (k != 0 && k != static_cast<std::size_t>(pos)) raw.push_back(r[k]);
    return reduce(std::move(raw));
  }

  bool try_cancel() {
    closure();
    if (exhausted_) return false;
    long long rot, pos;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      if (!find_cancel(rels_[i], &rot, &pos)) continue;
      Word out = cancel_at(rels_[i], rot, pos);
      record({.rule = "commute-cancel", .target = "relator", .slot = i, .inputs = {rels_[i]},
              .output = out, .rotation = rot, .pos2 = pos});
      rels_[i] = out;
      return true;
    }
    if (has_subject_ && find_cancel(cyclically_reduce(subject_), &rot, &pos)) {
      Word cr = cyclically_reduce(subject_);
      Word out = cancel_at(cr, rot, pos);
      record({.rule = "commute-cancel", .target = "subject", .inputs = {subject_},
              .output = out, .rotation = rot, .pos2 = pos});
      subject_ = out;
      return true;
    }
    for (std::size_t i = 0; i < meridians_.size(); ++i) {
      auto& m = meridians_[i];
      if (m.activated) continue;
      Word cr = cyclically_reduce(m.word);
      if (!find_cancel(cr, &rot, &pos)) continue;
      Word out = cancel_at(cr, rot, pos);
      record({.rule = "commute-cancel", .target = "meridian", .slot = i, .inputs = {m.word},
              .output = out, .rotation = rot, .pos2 = pos});
      m.word = out;
      return true;
    }
    return false;
  }

  bool try_kill() {
    for (const auto& r : rels_) {
      if (r.size() != 1) continue;
      std::string g = r[0].gen;
      record({.rule = "kill", .gen = g, .inputs = {r}});
      substitute_all(g, Word{});
      return true;
    }
    return false;
  }

  bool try_identify() {
    for (const auto& r : rels_) {
      if (r.size() != 2 || r[0].gen == r[1].gen) continue;
      // r = g^e h^f: eliminate whichever generator comes later.
      int i0 = index_of(r[0].gen), i1 = index_of(r[1].gen);
      std::size_t k = i0 > i1 ? 0 : 1;
      if (r[k].gen == protect_) k = 1 - k;
      eliminate_with(r, k);
      return true;
    }
    return false;
  }

  bool try_eliminate() {
    long long best_cost = 0;
    const Word* best_rel = nullptr;
    std::size_t best_pos = 0;
    for (const auto& r : rels_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        const std::string& g = r[i].gen;
        if (r.occurrences(g) != 1) continue;
        long long occ = 0;
        for (const auto& s : rels_)
          if (&s != &r) occ += s.occurrences(g);
        for (const auto& c : conds_) occ += c.relator.occurrences(g);
        for (const auto& m : meridians_) occ += m.word.occurrences(g);
        if (has_subject_) occ += subject_.occurrences(g);
        long long def = static_cast<long long>(r.size()) - 1;
        long long cost = occ * (def - 1) - static_cast<long long>(r.size());
        if (g == protect_) cost += 1000;
        if (cost > kGrowthLimit) continue;
        if (!best_rel || cost < best_cost) {
          best_cost = cost;
          best_rel = &r;
          best_pos = i;
        }
      }
    }
    if (!best_rel) return false;
    Word r = *best_rel;
    eliminate_with(r, best_pos);
    return true;
  }

  // Meridian proved trivial: by free reduction, by coinciding with a
  // relator, or (when `use_cosets`) by coset enumeration.
  bool try_activate(bool use_cosets) {
    for (std::size_t i = 0; i < meridians_.size(); ++i) {
      auto& m = meridians_[i];
      if (m.activated) continue;
      std::string how;
      if (cyclically_reduce(m.word).is_identity()) {
        how = "reduces";
      } else if (std::any_of(rels_.begin(), rels_.end(),
                             [&](const Word& r) { return equivalent_relators(r, m.word); })) {
        how = "relator";
      } else if (use_cosets && word_trivial_by_cosets(m.word)) {
        how = "coset";
      } else {
        continue;
      }
      record({.rule = "activate", .slot = i, .inputs = {m.word}, .value = how});
      m.activated = true;
      std::vector<PendingConditional> keep;
      for (auto& c : conds_) {
        if (c.meridian == i) {
          rels_.push_back(c.relator);
        } else {
          keep.push_back(c);
        }
      }
      conds_ = std::move(keep);
      return true;
    }
    return false;
  }

  // w = 1 iff [G : <w>] = |G|, decided only when G is finite within budget.
  bool word_trivial_by_cosets(const Word& w) {
    Presentation p = current();
    p.conditional.clear();
    auto whole = todd_coxeter(p, {}, budget_.max_cosets);
    cosets_used_ = std::max(cosets_used_, whole.max_live);
    if (whole.exceeded()) return false;
    auto sub = todd_coxeter(p, {w}, budget_.max_cosets);
    cosets_used_ = std::max(cosets_used_, sub.max_live);
    return !sub.exceeded() && *sub.index == *whole.index;
  }

  std::size_t cosets_used() const { return cosets_used_; }
  void note_cosets(std::size_t n) { cosets_used_ = std::max(cosets_used_, n); }

 private:
  int index_of(const std::string& g) const {
    auto it = std::find(gens_.begin(), gens_.end(), g);
    return static_cast<int>(it - gens_.begin());
  }

  void eliminate_with(const Word& r, std::size_t k) {
    const std::string g = r[k].gen;
    const int e = r[k].sign;
    Word rest = rotate(r, k + 1);  // w g^e
    std::vector<Letter> w(rest.letters().begin(), rest.letters().end() - 1);
    // w g^e = 1  =>  g = w^-e
    Word def = reduce(std::move(w)).pow(-e);
    record({.rule = "eliminate", .gen = g, .inputs = {r}, .output = def});
    auto it = std::find(rels_.begin(), rels_.end(), r);
    if (it != rels_.end()) rels_.erase(it);
    substitute_all(g, def);
  }

  void substitute_all(const std::string& g, const Word& def) {
    gens_.erase(std::remove(gens_.begin(), gens_.end(), g), gens_.end());
    for (auto& r : rels_) r = substitute(r, g, def);
    for (auto& c : conds_) c.relator = substitute(c.relator, g, def);
    for (auto& m : meridians_) m.word = substitute(m.word, g, def);
    for (auto& [k, w] : images_) w = substitute(w, g, def);
    for (auto& [k, w] : distinguished_) w = substitute(w, g, def);
    if (has_subject_) subject_ = substitute(subject_, g, def);
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->first == g || it->second == g) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
  }

  void normalize() {
    std::vector<Word> out;
    for (const auto& r : rels_) {
      Word c = cyclically_reduce(r);
      if (c.is_identity()) continue;
      bool dup = std::any_of(out.begin(), out.end(),
                             [&](const Word& o) { return equivalent_relators(o, c); });
      if (!dup) out.push_back(std::move(c));
    }
    rels_ = std::move(out);
  }

  Budget budget_;
  std::string protect_;
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
  std::vector<Meridian> meridians_;
  std::vector<PendingConditional> conds_;
  std::map<std::string, Word> images_;
  std::map<std::string, Word> distinguished_;
  CommutingPairs pairs_;
  std::vector<Step> trace_;
  bool has_subject_ = false;
  Word subject_;
  bool exhausted_ = false;
  std::size_t cosets_used_ = 0;
};

bool h1_matches(const H1Result& h, const Target& t) {
  if (t.kind == Target::Kind::InfiniteCyclic) return h.rank == 1 && h.torsion.empty();
  if (t.kind == Target::Kind::FiniteCyclic)
    return h.rank == 0 && h.torsion.size() == 1 && h.torsion[0] == t.order;
  return h.trivial();
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("M4KIT_BUDGET_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) b.max_cosets = v;
  }
  return b;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::FiniteCyclic: return "finite-cyclic";
    case Verdict::InfiniteCyclic: return "infinite-cyclic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string describe(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::Trivial:
      return c.claim == Claim::WordTrivial ? "word trivial" : "trivial";
    case Verdict::FiniteCyclic:
      return "Z/" + std::to_string(c.order) + " (generator " + c.generator + ")";
    case Verdict::InfiniteCyclic:
      return "Z (generator " + c.generator + ")";
    case Verdict::Inconclusive:
      return "inconclusive: " + c.reason;
  }
  return "inconclusive";
}

CommutingPairs commutation_closure(const Presentation& p) {
  Engine e(strip_meridional(p), Budget{}, {});
  e.closure();
  return e.pairs();
}

Simplified simplify(const Presentation& p, const Budget& budget) {
  Engine e(strip_meridional(p), budget, {});
  e.record({.rule = "strip-meridional"});
  e.run(false);
  Simplified s;
  s.result = e.current();
  s.trace = e.trace();
  s.budget_exhausted = e.exhausted();
  return s;
}

namespace {

Certificate finish_group(Engine& e, Certificate cert, const Budget& budget) {
  auto inconclusive = [&](std::string why) {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = std::move(why);
    e.record({.rule = "verdict", .value = "inconclusive"});
    return cert;
  };
  const Target& t = cert.target;
  const bool want_cyclic =
      t.kind == Target::Kind::FiniteCyclic || t.kind == Target::Kind::InfiniteCyclic;

  if (e.exhausted()) return inconclusive("derivation step budget exhausted");

  if (e.gens().empty()) {
    if (!want_cyclic) {
      cert.verdict = Verdict::Trivial;
      e.record({.rule = "verdict", .value = "trivial"});
      return cert;
    }
    if (t.kind == Target::Kind::InfiniteCyclic) return inconclusive("group collapsed to the trivial group");
  }

  // The closed candidate pins the abelianization of the certified group.
  H1Result h = h1(closed_candidate(cert.input));
  e.record({.rule = "h1", .value = to_string(h)});
  cert.final_h1 = h;

  if (t.kind == Target::Kind::Trivial || (t.kind == Target::Kind::Auto && h.trivial())) {
    if (!h.trivial()) return inconclusive("abelianization is " + to_string(h));
    Presentation cur = e.current();
    cur.conditional.clear();
    auto res = todd_coxeter(cur, {}, budget.max_cosets);
    e.note_cosets(res.max_live);
    e.record({.rule = "coset-index", .value = res.exceeded() ? "exceeded" : std::to_string(*res.index)});
    if (res.exceeded()) return inconclusive("coset budget exceeded");
    if (*res.index != 1) return inconclusive("coset enumeration gave index " + std::to_string(*res.index));
    cert.verdict = Verdict::Trivial;
    e.record({.rule = "verdict", .value = "trivial"});
    return cert;
  }

  if (!h.is_cyclic()) return inconclusive("abelianization " + to_string(h) + " is not cyclic");
  Target eff = t;
  if (eff.kind == Target::Kind::Auto) {
    if (h.rank == 1) {
      eff.kind = Target::Kind::InfiniteCyclic;
    } else {
      eff.kind = Target::Kind::FiniteCyclic;
      eff.order = static_cast<long long>(h.torsion[0]);
    }
  }
  if (!h1_matches(h, eff)) return inconclusive("abelianization is " + to_string(h));
  if (!e.all_meridians_activated()) return inconclusive("meridian not proved trivial; tiers not discharged");

  std::vector<std::string> candidates;
  if (eff.generator.empty()) {
    if (e.gens().empty()) return inconclusive("no generator left to designate");
    candidates = e.gens();
  } else if (!cert.input.has_generator(eff.generator)) {
    throw Error("designated generator '" + eff.generator + "' is not a generator of the presentation");
  } else {
    candidates = {eff.generator};
  }
  Presentation cur = e.current();
  cur.conditional.clear();
  std::string gen, why;
  for (const auto& g : candidates) {
    Word img;
    try {
      img = e.image(g);
    } catch (const std::out_of_range&) {
      // `g` was not an input generator but survives in the current presentation.
      img = Word(g);
    }
    auto res = todd_coxeter(cur, {img}, budget.max_cosets);
    e.note_cosets(res.max_live);
    e.record({.rule = "coset-index", .gen = g, .inputs = {img},
              .value = res.exceeded() ? "exceeded" : std::to_string(*res.index)});
    if (!res.exceeded() && *res.index == 1) {
      gen = g;
      break;
    }
    if (why.empty()) {
      why = res.exceeded() ? "coset budget exceeded over <" + g + ">"
                           : "<" + g + "> has index " + std::to_string(*res.index);
    }
    if (e.exhausted()) break;
  }
  if (gen.empty()) return inconclusive(why);
  cert.generator = gen;
  if (eff.kind == Target::Kind::InfiniteCyclic) {
    cert.verdict = Verdict::InfiniteCyclic;
    e.record({.rule = "verdict", .gen = gen, .value = "infinite-cyclic"});
  } else {
    cert.verdict = Verdict::FiniteCyclic;
    cert.order = eff.order;
    e.record({.rule = "verdict", .gen = gen, .value = "finite-cyclic " + std::to_string(eff.order)});
  }
  return cert;
}

}  // namespace

Certificate certify(const Presentation& p, const Target& target, const Budget& budget) {
  p.validate();
  if (target.kind == Target::Kind::FiniteCyclic && target.order < 2) {
    throw Error("finite cyclic target needs order >= 2");
  }
  Certificate cert;
  cert.input = p;
  cert.target = target;
  Engine e(strip_meridional(p), budget, target.generator);
  e.record({.rule = "strip-meridional"});
  e.run(true);
  cert = finish_group(e, std::move(cert), budget);
  cert.trace = e.trace();
  cert.steps_used = cert.trace.size();
  cert.cosets_used = e.cosets_used();
  cert.final_presentation = e.current();
  cert.images = e.images();
  return cert;
}

Certificate prove_word_trivial(const Presentation& p, const Word& w, const Budget& budget) {
  p.validate();
  Certificate cert;
  cert.input = p;
  cert.claim = Claim::WordTrivial;
  cert.subject = w;
  cert.target = Target::trivial();
  Engine e(strip_meridional(p), budget, {});
  e.set_subject(w);
  e.record({.rule = "strip-meridional"});
  e.run(true);
  if (cyclically_reduce(e.subject()).is_identity()) {
    cert.verdict = Verdict::Trivial;
    e.record({.rule = "verdict", .value = "word-trivial"});
  } else if (!e.exhausted() && e.word_trivial_by_cosets(e.subject())) {
    e.record({.rule = "coset-index", .inputs = {e.subject()}, .value = "word"});
    cert.verdict = Verdict::Trivial;
    e.record({.rule = "verdict", .value = "word-trivial"});
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = e.exhausted() ? "derivation step budget exhausted"
                                : "word not reduced to the identity: " + to_string(e.subject());
    e.record({.rule = "verdict", .value = "inconclusive"});
  }
  cert.trace = e.trace();
  cert.steps_used = cert.trace.size();
  cert.cosets_used = e.cosets_used();
  cert.final_presentation = e.current();
  cert.images = e.images();
  return cert;
}

}  // namespace m4kit
