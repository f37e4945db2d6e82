#include "m4kit/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "m4kit/error.hpp"

namespace m4kit {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_space();
    Word w = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_term_start() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return ident_start(c) || c == '[' || c == '(' || c == '1';
  }

  Word parse_product() {
    std::vector<Letter> raw;
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (!at_term_start()) break;
      Word t = parse_term();
      raw.insert(raw.end(), t.letters().begin(), t.letters().end());
    }
    return reduce(std::move(raw));
  }

  Word parse_term() {
    Word base = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) fail("expected integer exponent");
      long e = std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
      if (e > 1'000'000 || e < -1'000'000) fail("exponent out of range");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Word parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '1' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return Word{};
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return Word(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_product();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_product();
      expect(',');
      Word y = parse_product();
      expect(']');
      return commutator(x, y);
    }
    fail("expected generator, '[' or '('");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool valid_generator_name(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

Word::Word(std::string gen, int power) {
  if (!valid_generator_name(gen)) throw Error("invalid generator name '" + gen + "'");
  int sign = power < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(power); ++i) letters_.push_back({gen, sign});
}

Word reduce(std::vector<Letter> raw) {
  Word w;
  auto& out = w.letters_;
  out.reserve(raw.size());
  for (auto& l : raw) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) raw.push_back(it->inverse());
  return reduce(std::move(raw));
}

Word Word::pow(int n) const {
  if (n == 0) return Word{};
  Word base = n < 0 ? inverse() : *this;
  std::vector<Letter> raw;
  for (int i = 0; i < std::abs(n); ++i) {
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  }
  return reduce(std::move(raw));
}

bool Word::contains(std::string_view gen) const {
  return std::any_of(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.gen == gen; });
}

int Word::occurrences(std::string_view gen) const {
  return static_cast<int>(
      std::count_if(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.gen == gen; }));
}

int Word::exponent_sum(std::string_view gen) const {
  int s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.sign;
  return s;
}

std::set<std::string> Word::support() const {
  std::set<std::string> s;
  for (const auto& l : letters_) s.insert(l.gen);
  return s;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.letters());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce(std::move(raw));
}

Word invert(const Word& u) { return u.inverse(); }

Word conjugate(const Word& u, const Word& by) { return by * u * by.inverse(); }

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word substitute(const Word& w, std::string_view gen, const Word& replacement) {
  std::vector<Letter> raw;
  const Word inv = replacement.inverse();
  for (const auto& l : w.letters()) {
    if (l.gen == gen) {
      const auto& r = l.sign > 0 ? replacement : inv;
      raw.insert(raw.end(), r.letters().begin(), r.letters().end());
    } else {
      raw.push_back(l);
    }
  }
  return reduce(std::move(raw));
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
  std::vector<Letter> raw;
  for (const auto& l : w.letters()) {
    auto it = images.find(l.gen);
    if (it == images.end()) {
      raw.push_back(l);
      continue;
    }
    const Word r = l.sign > 0 ? it->second : it->second.inverse();
    raw.insert(raw.end(), r.letters().begin(), r.letters().end());
  }
  return reduce(std::move(raw));
}

Word cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i].cancels(ls[j - 1])) {
    ++i;
    --j;
  }
  return reduce(std::vector<Letter>(ls.begin() + i, ls.begin() + j));
}

Word rotate(const Word& w, std::size_t k) {
  const auto& ls = w.letters();
  if (ls.empty()) return w;
  k %= ls.size();
  std::vector<Letter> raw(ls.begin() + k, ls.end());
  raw.insert(raw.end(), ls.begin(), ls.begin() + k);
  return reduce(std::move(raw));
}

Word canonical_relator(const Word& w) {
  Word c = cyclically_reduce(w);
  if (c.is_identity()) return c;
  Word best = c;
  for (const Word& base : {c, c.inverse()}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word r = rotate(base, k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

bool equivalent_relators(const Word& u, const Word& v) {
  return canonical_relator(u) == canonical_relator(v);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int power = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += ls[i].gen;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word product(const std::vector<Word>& ws) {
  std::vector<Letter> raw;
  for (const auto& w : ws) raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  return reduce(std::move(raw));
}

}  // namespace m4kit
