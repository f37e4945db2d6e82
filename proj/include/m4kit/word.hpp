#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace m4kit {

// A signed generator symbol. `sign` is +1 or -1.
struct Letter {
  std::string gen;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(const Letter& other) const {
    return gen == other.gen && sign == -other.sign;
  }

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// True when `name` is a legal generator symbol: a letter or underscore
// followed by letters, digits, underscores or primes.
bool valid_generator_name(std::string_view name);

// An element of a free group, stored as a freely reduced letter sequence.
// The empty word is the identity.
class Word {
 public:
  Word() = default;
  // gen^power.
  explicit Word(std::string gen, int power = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(int n) const;

  bool contains(std::string_view gen) const;
  // Number of letters (either sign) on `gen`.
  int occurrences(std::string_view gen) const;
  int exponent_sum(std::string_view gen) const;
  std::set<std::string> support() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  friend Word reduce(std::vector<Letter> raw);

 private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter list.
Word reduce(std::vector<Letter> raw);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
// by * u * by^-1
Word conjugate(const Word& u, const Word& by);
// [x,y] = x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);
Word substitute(const Word& w, std::string_view gen, const Word& replacement);
Word substitute(const Word& w, const std::map<std::string, Word>& images);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

// Strip conjugating prefix/suffix pairs so the word is cyclically reduced.
Word cyclically_reduce(const Word& w);
// Cyclic rotation: letters [k..n) followed by [0..k). `w` must be cyclically
// reduced for the result to stay reduced.
Word rotate(const Word& w, std::size_t k);
// Least rotation of the cyclic reduction of w or w^-1 under the letter order.
// Two relators define the same normal closure when their canonical forms agree.
Word canonical_relator(const Word& w);
bool equivalent_relators(const Word& u, const Word& v);

// Text form: juxtaposed letters, powers as `g^k`, identity as `1`.
std::string to_string(const Word& w);
// Accepts `a b^-1`, `a^3`, `[x,y]` (nested), `(x y)^k` and `1`.
Word parse_word(std::string_view text);

// Product of the words in order.
Word product(const std::vector<Word>& ws);

}  // namespace m4kit
