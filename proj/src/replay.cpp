#include "m4kit/replay.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"

namespace m4kit {

namespace {

struct Failure {
  std::string what;
};

[[noreturn]] void fail(const std::string& what) { throw Failure{what}; }

void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

class Checker {
 public:
  Checker(const Certificate& cert, const Budget& budget) : cert_(cert), budget_(budget) {
    const Presentation& p = cert.input;
    gens_ = p.generators;
    rels_ = p.relators;
    for (const auto& g : gens_) images_[g] = Word(g);
    auto slot = [&](const Word& m) {
      for (std::size_t i = 0; i < meridians_.size(); ++i)
        if (meridians_[i] == m) return i;
      meridians_.push_back(m);
      activated_.push_back(false);
      return meridians_.size() - 1;
    };
    for (const auto& c : p.conditional) conds_.emplace_back(c.relator, slot(c.meridian));
    subject_ = cert.subject;
  }

  void run() {
    const auto& trace = cert_.trace;
    require(!trace.empty() && trace.front().rule == "strip-meridional",
            "trace must open with strip-meridional");
    require(trace.back().rule == "verdict", "trace must end with a verdict");
    for (std::size_t i = 1; i < trace.size(); ++i) {
      normalize();
      step_ = i;
      const Step& s = trace[i];
      if (s.rule == "seed-commute") {
        seed(s);
      } else if (s.rule == "derive-commute") {
        derive(s);
      } else if (s.rule == "commute-cancel") {
        cancel(s);
      } else if (s.rule == "kill") {
        kill(s);
      } else if (s.rule == "eliminate") {
        eliminate(s);
      } else if (s.rule == "shorten") {
        shorten(s);
      } else if (s.rule == "activate") {
        activate(s);
      } else if (s.rule == "h1") {
        check_h1(s);
      } else if (s.rule == "coset-index") {
        coset(s);
      } else if (s.rule == "verdict") {
        require(i + 1 == trace.size(), "verdict before the end of the trace");
        verdict(s);
      } else {
        fail("unknown rule '" + s.rule + "'");
      }
    }
  }

  std::size_t step() const { return step_; }

 private:
  bool is_gen(const std::string& g) const {
    return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
  }

  bool commute(const std::string& a, const std::string& b) const {
    return a == b || pairs_.count(ordered(a, b)) > 0;
  }

  std::size_t find_relator(const Word& w) const {
    auto it = std::find(rels_.begin(), rels_.end(), w);
    require(it != rels_.end(), "relator " + to_string(w) + " is not present");
    return static_cast<std::size_t>(it - rels_.begin());
  }

  void touched() {
    trivial_index_one_ = false;
    cyclic_index_one_ = false;
    word_by_cosets_ = false;
  }

  void normalize() {
    std::vector<Word> out;
    for (const auto& r : rels_) {
      Word c = cyclically_reduce(r);
      if (c.is_identity()) continue;
      bool dup = false;
      for (const auto& o : out)
        if (canonical_relator(o) == canonical_relator(c)) dup = true;
      if (!dup) out.push_back(c);
    }
    rels_ = std::move(out);
  }

  void seed(const Step& s) {
    require(s.inputs.size() == 1, "seed-commute needs one relator");
    find_relator(s.inputs[0]);
    const Word& w = s.inputs[0];
    require(w.size() == 4, "seed relator is not a commutator");
    const auto& l = w.letters();
    require(l[2] == l[0].inverse() && l[3] == l[1].inverse() && l[0].gen != l[1].gen,
            "seed relator is not a commutator of two generators");
    require(ordered(l[0].gen, l[1].gen) == ordered(s.gen, s.gen2), "seed pair mismatch");
    pairs_.insert(ordered(s.gen, s.gen2));
  }

  void derive(const Step& s) {
    require(s.inputs.size() == 1, "derive-commute needs one relator");
    find_relator(s.inputs[0]);
    const Word& w = s.inputs[0];
    require(is_gen(s.gen) && is_gen(s.gen2) && s.gen != s.gen2, "derive-commute generators invalid");
    require(w.occurrences(s.gen) == 1, s.gen + " must occur exactly once in the relator");
    for (const auto& l : w.letters()) {
      if (l.gen == s.gen) continue;
      require(commute(l.gen, s.gen2), l.gen + " is not known to commute with " + s.gen2);
    }
    pairs_.insert(ordered(s.gen, s.gen2));
  }

  void cancel(const Step& s) {
    require(s.inputs.size() == 1, "commute-cancel needs one word");
    Word* target = nullptr;
    if (s.target == "relator") {
      require(s.slot < rels_.size() && rels_[s.slot] == s.inputs[0], "commute-cancel relator mismatch");
      target = &rels_[s.slot];
    } else if (s.target == "subject") {
      require(cert_.claim == Claim::WordTrivial && subject_ == s.inputs[0], "subject mismatch");
      target = &subject_;
    } else if (s.target == "meridian") {
      require(s.slot < meridians_.size() && !activated_[s.slot] && meridians_[s.slot] == s.inputs[0],
              "meridian mismatch");
      target = &meridians_[s.slot];
    } else {
      fail("unknown commute-cancel target '" + s.target + "'");
    }
    Word cr = cyclically_reduce(*target);
    const long long n = static_cast<long long>(cr.size());
    require(s.rotation >= 0 && s.rotation < n && s.pos2 >= 2 && s.pos2 < n, "cancel positions out of range");
    Word r = rotate(cr, static_cast<std::size_t>(s.rotation));
    const Letter x = r[0];
    require(r[static_cast<std::size_t>(s.pos2)] == x.inverse(), "cancelled letters are not inverse");
    std::vector<Letter> raw;
    for (long long k = 1; k < s.pos2; ++k) {
      require(commute(r[static_cast<std::size_t>(k)].gen, x.gen),
              r[static_cast<std::size_t>(k)].gen + " is not known to commute with " + x.gen);
    }
    for (long long k = 1; k < n; ++k)
      if (k != s.pos2) raw.push_back(r[static_cast<std::size_t>(k)]);
    Word out = reduce(std::move(raw));
    require(out == s.output, "commute-cancel output mismatch");
    *target = out;
    touched();
  }

  void substitute_all(const std::string& g, const Word& def) {
    gens_.erase(std::remove(gens_.begin(), gens_.end(), g), gens_.end());
    for (auto& r : rels_) r = substitute(r, g, def);
    for (auto& [w, m] : conds_) w = substitute(w, g, def);
    for (auto& m : meridians_) m = substitute(m, g, def);
    for (auto& [k, w] : images_) w = substitute(w, g, def);
    subject_ = substitute(subject_, g, def);
    for (auto it = pairs_.begin(); it != pairs_.end();)
      it = (it->first == g || it->second == g) ? pairs_.erase(it) : std::next(it);
    touched();
  }

  void kill(const Step& s) {
    require(s.inputs.size() == 1, "kill needs one relator");
    find_relator(s.inputs[0]);
    Word c = cyclically_reduce(s.inputs[0]);
    require(c.size() == 1 && c[0].gen == s.gen && is_gen(s.gen), "kill relator is not a single letter");
    substitute_all(s.gen, Word{});
  }

  void eliminate(const Step& s) {
    require(s.inputs.size() == 1, "eliminate needs one relator");
    std::size_t i = find_relator(s.inputs[0]);
    require(is_gen(s.gen), "eliminated symbol is not a generator");
    require(!s.output.contains(s.gen), "definition mentions the eliminated generator");
    for (const auto& l : s.output.letters()) require(is_gen(l.gen), "definition uses unknown generator");
    require(equivalent_relators(s.inputs[0], Word(s.gen) * s.output.inverse()),
            "relator does not define " + s.gen);
    rels_.erase(rels_.begin() + static_cast<std::ptrdiff_t>(i));
    substitute_all(s.gen, s.output);
  }

  void shorten(const Step& s) {
    require(s.inputs.size() == 2, "shorten needs a relator and a source");
    std::size_t i = find_relator(s.inputs[0]);
    find_relator(s.inputs[1]);
    Word r = rotate(cyclically_reduce(s.inputs[0]), static_cast<std::size_t>(s.rotation));
    const std::size_t len = static_cast<std::size_t>(s.pos1);
    require(len >= 1 && len <= r.size(), "shorten length out of range");
    Word src = cyclically_reduce(s.inputs[1]);
    const std::size_t k = static_cast<std::size_t>(s.pos2 / 2);
    Word var = rotate(s.pos2 % 2 ? src.inverse() : src, k);
    std::vector<Letter> u(r.letters().begin(), r.letters().begin() + static_cast<std::ptrdiff_t>(len));
    require(var.size() >= len &&
                std::equal(u.begin(), u.end(), var.letters().begin()),
            "source does not begin with the replaced segment");
    Word t = reduce(std::vector<Letter>(var.letters().begin() + static_cast<std::ptrdiff_t>(len), var.letters().end()));
    Word rest = reduce(std::vector<Letter>(r.letters().begin() + static_cast<std::ptrdiff_t>(len), r.letters().end()));
    require(t.inverse() * rest == s.output, "shorten output mismatch");
    rels_[i] = s.output;
    touched();
  }

  // Relators plus the commutators of every known commuting pair.
  Presentation enumeration() const {
    Presentation p;
    p.generators = gens_;
    p.relators = rels_;
    for (const auto& [x, y] : pairs_) {
      Word c = commutator(Word(x), Word(y));
      bool present = false;
      for (const auto& r : p.relators) present = present || canonical_relator(r) == canonical_relator(c);
      if (!present) p.relators.push_back(c);
    }
    return p;
  }

  bool trivial_by_cosets(const Word& w) const {
    Presentation p = enumeration();
    auto whole = todd_coxeter(p, {}, budget_.max_cosets);
    if (whole.exceeded()) return false;
    auto sub = todd_coxeter(p, {w}, budget_.max_cosets);
    return !sub.exceeded() && *sub.index == *whole.index;
  }

  void activate(const Step& s) {
    require(s.inputs.size() == 1 && s.slot < meridians_.size(), "activate slot invalid");
    require(!activated_[s.slot] && meridians_[s.slot] == s.inputs[0], "activate meridian mismatch");
    const Word& m = s.inputs[0];
    if (s.value == "reduces") {
      require(cyclically_reduce(m).is_identity(), "meridian does not reduce to the identity");
    } else if (s.value == "relator") {
      bool found = std::any_of(rels_.begin(), rels_.end(),
                               [&](const Word& r) { return equivalent_relators(r, m); });
      require(found, "meridian is not a relator");
    } else if (s.value == "coset") {
      require(trivial_by_cosets(m), "coset enumeration does not show the meridian trivial");
    } else {
      fail("unknown activation justification '" + s.value + "'");
    }
    activated_[s.slot] = true;
    std::vector<std::pair<Word, std::size_t>> keep;
    for (auto& c : conds_) {
      if (c.second == s.slot) {
        rels_.push_back(c.first);
      } else {
        keep.push_back(c);
      }
    }
    conds_ = std::move(keep);
    touched();
  }

  void check_h1(const Step& s) {
    H1Result h = h1(closed_candidate(cert_.input));
    require(to_string(h) == s.value, "h1 mismatch: recomputed " + to_string(h));
    h1_ = h;
  }

  void coset(const Step& s) {
    Presentation p = enumeration();
    if (s.value == "word") {
      require(s.inputs.size() == 1 && s.inputs[0] == subject_, "coset word mismatch");
      require(trivial_by_cosets(subject_), "coset enumeration does not show the word trivial");
      word_by_cosets_ = true;
      return;
    }
    auto res = todd_coxeter(p, s.inputs, budget_.max_cosets);
    std::string got = res.exceeded() ? "exceeded" : std::to_string(*res.index);
    require(got == s.value, "coset index mismatch: recomputed " + got);
    if (s.gen.empty()) {
      require(s.inputs.empty(), "trivial-subgroup enumeration with generators");
      trivial_index_one_ = got == "1";
    } else {
      auto it = images_.find(s.gen);
      Word img = it == images_.end() ? Word(s.gen) : it->second;
      require(s.inputs.size() == 1 && s.inputs[0] == img, "subgroup word is not the generator's image");
      cyclic_index_one_ = got == "1";
      cyclic_gen_ = s.gen;
    }
  }

  void verdict(const Step& s) {
    const Verdict v = cert_.verdict;
    if (s.value == "inconclusive") {
      require(v == Verdict::Inconclusive, "verdict text disagrees with certificate");
      return;
    }
    if (s.value == "word-trivial") {
      require(v == Verdict::Trivial && cert_.claim == Claim::WordTrivial, "verdict text disagrees");
      require(cyclically_reduce(subject_).is_identity() || word_by_cosets_, "word not shown trivial");
      return;
    }
    if (s.value == "trivial") {
      require(v == Verdict::Trivial && cert_.claim == Claim::Group, "verdict text disagrees");
      require(gens_.empty() || trivial_index_one_, "group not shown trivial");
      return;
    }
    const bool finite = s.value.rfind("finite-cyclic", 0) == 0;
    require(finite || s.value == "infinite-cyclic", "unknown verdict '" + s.value + "'");
    require(v == (finite ? Verdict::FiniteCyclic : Verdict::InfiniteCyclic), "verdict kind disagrees");
    require(cyclic_index_one_ && cyclic_gen_ == cert_.generator && s.gen == cert_.generator,
            "cyclicity over the designated generator not shown");
    require(std::all_of(activated_.begin(), activated_.end(), [](bool b) { return b; }),
            "a meridian was never proved trivial");
    require(h1_.has_value(), "abelianization not checked");
    if (finite) {
      require(s.value == "finite-cyclic " + std::to_string(cert_.order), "order disagrees");
      require(h1_->rank == 0 && h1_->torsion.size() == 1 && h1_->torsion[0] == cert_.order,
              "abelianization is not Z/" + std::to_string(cert_.order));
    } else {
      require(h1_->rank == 1 && h1_->torsion.empty(), "abelianization is not Z");
    }
  }

  const Certificate& cert_;
  Budget budget_;
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
  std::vector<Word> meridians_;
  std::vector<bool> activated_;
  std::vector<std::pair<Word, std::size_t>> conds_;
  std::map<std::string, Word> images_;
  std::set<std::pair<std::string, std::string>> pairs_;
  Word subject_;
  std::optional<H1Result> h1_;
  bool trivial_index_one_ = false;
  bool cyclic_index_one_ = false;
  bool word_by_cosets_ = false;
  std::string cyclic_gen_;
  std::size_t step_ = 0;
};

}  // namespace

ReplayResult replay(const Certificate& cert, const Budget& budget) {
  ReplayResult res;
  Checker checker(cert, budget);
  try {
    checker.run();
    res.ok = true;
    res.steps_checked = cert.trace.size();
  } catch (const Failure& f) {
    res.error = "step " + std::to_string(checker.step()) + ": " + f.what;
    res.steps_checked = checker.step();
  } catch (const Error& e) {
    res.error = "step " + std::to_string(checker.step()) + ": " + e.what();
    res.steps_checked = checker.step();
  }
  return res;
}

}  // namespace m4kit
