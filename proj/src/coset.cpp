#include "m4kit/coset.hpp"

#include <algorithm>
#include <deque>

#include "m4kit/error.hpp"

namespace m4kit {

namespace {

constexpr int kUndef = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, std::size_t limit)
      : ncols_(static_cast<int>(2 * p.generators.size())), limit_(limit) {
    for (const auto& r : p.relators) {
      auto w = encode(p, cyclically_reduce(r));
      if (!w.empty()) rels_.push_back(std::move(w));
    }
    for (const auto& h : subgroup) {
      auto w = encode(p, h);
      if (!w.empty()) subgroup_.push_back(std::move(w));
    }
    // Short relators first: they close the table sooner.
    std::stable_sort(rels_.begin(), rels_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }

  CosetResult run() {
    CosetResult res;
    if (limit_ == 0) return res;
    new_coset();
    while (!fill_subgroup()) {
      if (!make_room()) return finish(res, false);
    }
    for (int c = 0; c < n_; ++c) {
      while (p_[c] == c && !process(c)) {
        if (!make_room(&c)) return finish(res, false);
        if (c >= n_) break;
      }
    }
    return finish(res, true);
  }

 private:
  static int inv(int x) { return x ^ 1; }

  std::vector<int> encode(const Presentation& p, const Word& w) const {
    std::vector<int> out;
    for (const auto& l : w.letters()) {
      int j = p.generator_index(l.gen);
      if (j < 0) throw Error("coset enumeration: unknown generator '" + l.gen + "'");
      out.push_back(2 * j + (l.sign > 0 ? 0 : 1));
    }
    return out;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }

  bool new_coset() {
    if (static_cast<std::size_t>(n_) >= limit_) return false;
    table_.resize(table_.size() + ncols_, kUndef);
    p_.push_back(n_);
    ++n_;
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return true;
  }

  bool define(int c, int x) {
    if (!new_coset()) return false;
    int d = n_ - 1;
    at(c, x) = d;
    at(d, inv(x)) = c;
    return true;
  }

  int rep(int k) {
    int r = k;
    while (p_[r] != r) r = p_[r];
    while (p_[k] != r) {
      int next = p_[k];
      p_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int mu = std::min(k, l), nu = std::max(k, l);
    p_[nu] = mu;
    q.push_back(nu);
    --live_;
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int g = q.front();
      q.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int d = at(g, x);
        if (d == kUndef) continue;
        at(d, inv(x)) = kUndef;
        int mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x), q);
        } else if (at(nu, inv(x)) != kUndef) {
          merge(mu, at(nu, inv(x)), q);
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  // Returns false when a definition was needed but the budget is spent.
  bool scan_and_fill(int c, const std::vector<int>& w, bool may_define) {
    const int len = static_cast<int>(w.size());
    int f = c, b = c, i = 0, j = len - 1;
    while (true) {
      while (i <= j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return true;
      }
      while (j >= i && at(b, inv(w[j])) != kUndef) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return true;
      }
      if (!may_define) return true;
      if (!define(f, w[i])) return false;
    }
  }

  bool fill_subgroup() {
    for (const auto& w : subgroup_) {
      if (!scan_and_fill(rep(0), w, true)) return false;
    }
    return true;
  }

  bool process(int c) {
    for (const auto& r : rels_) {
      if (p_[c] != c) return true;
      if (!scan_and_fill(c, r, true)) return false;
    }
    if (p_[c] != c) return true;
    for (int x = 0; x < ncols_; ++x) {
      if (at(c, x) == kUndef && !define(c, x)) return false;
    }
    return true;
  }

  // Lookahead then compaction. `cursor` is remapped to the first live coset
  // at or after its old position. False when nothing was freed.
  bool make_room(int* cursor = nullptr) {
    const std::size_t before = live_;
    for (int c = 0; c < n_; ++c) {
      for (const auto& r : rels_) {
        if (p_[c] != c) break;
        scan_and_fill(c, r, false);
      }
    }
    for (const auto& w : subgroup_) scan_and_fill(rep(0), w, false);
    std::vector<int> renum(n_, kUndef);
    int next = 0;
    for (int c = 0; c < n_; ++c)
      if (p_[c] == c) renum[c] = next++;
    if (static_cast<std::size_t>(next) == static_cast<std::size_t>(n_) && live_ == before) {
      return false;
    }
    std::vector<int> t(static_cast<std::size_t>(next) * ncols_, kUndef);
    for (int c = 0; c < n_; ++c) {
      if (renum[c] == kUndef) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = at(c, x);
        if (d != kUndef) t[static_cast<std::size_t>(renum[c]) * ncols_ + x] = renum[rep(d)];
      }
    }
    if (cursor) {
      int c = *cursor;
      while (c < n_ && renum[c] == kUndef) ++c;
      *cursor = c < n_ ? renum[c] : next;
    }
    table_ = std::move(t);
    n_ = next;
    p_.resize(n_);
    for (int c = 0; c < n_; ++c) p_[c] = c;
    return true;
  }

  CosetResult& finish(CosetResult& res, bool complete) {
    res.max_live = max_live_;
    res.defined = defined_;
    if (complete) res.index = live_;
    return res;
  }

  int ncols_;
  std::size_t limit_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> subgroup_;
  std::vector<int> table_;
  std::vector<int> p_;
  int n_ = 0;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                         std::size_t max_cosets) {
  return Enumerator(p, subgroup, max_cosets).run();
}

}  // namespace m4kit
