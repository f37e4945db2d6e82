#pragma once

// Reference computations used only by tests. They share the Word and
// Presentation data types with the library but none of its algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "m4kit/presentation.hpp"

namespace oracle {

using Perm = std::vector<int>;

// (a*b)(i) = b(a(i)): apply a first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Every element of the group generated by `gens`, by breadth-first closure.
inline std::vector<Perm> closure(const std::vector<Perm>& gens) {
  int n = static_cast<int>(gens.front().size());
  std::vector<Perm> elems = {identity(n)};
  std::map<Perm, bool> seen = {{elems[0], true}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm x = compose(elems[i], g);
      if (!seen.count(x)) {
        seen[x] = true;
        elems.push_back(x);
      }
    }
  }
  return elems;
}

inline std::vector<Perm> symmetric_group(int n) {
  Perm t = identity(n), c = identity(n);
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return closure({t, c});
}

// Number of homomorphisms from the group of `p` (relators only) into the
// permutation group `group`, by backtracking over generator images. Each
// relator is checked as soon as all its generators are assigned.
inline long long count_homs(const m4kit::Presentation& p, const std::vector<Perm>& group) {
  const auto& gens = p.generators;
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i]] = static_cast<int>(i);
  std::vector<std::vector<const m4kit::Word*>> due(gens.size());
  for (const auto& r : p.relators) {
    int last = -1;
    for (const auto& l : r.letters()) last = std::max(last, idx.at(l.gen));
    if (last < 0) continue;
    due[last].push_back(&r);
  }
  const int n = static_cast<int>(group.front().size());
  std::vector<Perm> inv;
  for (const auto& g : group) inv.push_back(inverse(g));
  std::vector<int> choice(gens.size());
  auto eval = [&](const m4kit::Word& w) {
    Perm x = identity(n);
    for (const auto& l : w.letters()) {
      int i = idx.at(l.gen);
      x = compose(x, l.sign > 0 ? group[choice[i]] : inv[choice[i]]);
    }
    return x;
  };
  long long count = 0;
  const Perm id = identity(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < group.size(); ++c) {
      choice[k] = static_cast<int>(c);
      bool ok = true;
      for (const auto* r : due[k]) {
        if (eval(*r) != id) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Cyclic group Z/m as permutations of m points.
inline std::vector<Perm> cyclic_group(int m) {
  Perm c(m);
  for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
  return closure({c});
}

inline long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// |Hom(A, Z/m)| for A = Z^rank + sum Z/d_i.
inline long long homs_from_abelian(std::size_t rank, const std::vector<long long>& torsion,
                                   long long m) {
  long long r = ipow(m, static_cast<long long>(rank));
  for (long long d : torsion) r *= std::gcd(d, m);
  return r;
}

// Integer relation matrix (rows = relators, columns = generators) by
// counting exponent sums letter by letter.
inline std::vector<std::vector<long long>> exponent_matrix(const m4kit::Presentation& p) {
  std::vector<std::vector<long long>> m;
  for (const auto& r : p.relators) {
    std::vector<long long> row(p.generators.size(), 0);
    for (const auto& l : r.letters()) {
      auto it = std::find(p.generators.begin(), p.generators.end(), l.gen);
      row[it - p.generators.begin()] += l.sign;
    }
    m.push_back(row);
  }
  return m;
}

// Rank over Q by elimination on exact rationals kept as integer rows
// (cross-multiplication, rows reduced by their gcd).
inline std::size_t rational_rank(std::vector<std::vector<long long>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long a = m[rank][c], b = m[r][c];
      long long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * a - m[rank][k] * b;
        g = std::gcd(g, std::llabs(m[r][k]));
      }
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

// Determinant by Laplace expansion along the first row.
inline long long laplace_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    long long term = m[0][j] * laplace_det(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}. Only nonzero factors are returned.
inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<long long>> sub;
        for (auto i : r) {
          std::vector<long long> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::llabs(laplace_det(sub)));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Hand-rolled generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  m4kit::Word word(const std::vector<std::string>& gens, std::size_t max_len) {
    std::vector<m4kit::Letter> raw;
    std::size_t len = static_cast<std::size_t>(uniform(0, static_cast<long long>(max_len)));
    for (std::size_t i = 0; i < len; ++i) {
      raw.push_back({gens[uniform(0, static_cast<long long>(gens.size()) - 1)],
                     uniform(0, 1) ? 1 : -1});
    }
    return m4kit::reduce(raw);
  }

  // Abelian presentation: commutators plus one power-product relator per row.
  m4kit::Presentation abelian(std::size_t ngens, std::size_t nrows, long long max_entry) {
    m4kit::Presentation p;
    for (std::size_t i = 0; i < ngens; ++i) p.generators.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < ngens; ++i)
      for (std::size_t j = i + 1; j < ngens; ++j)
        p.relators.push_back(m4kit::commutator(m4kit::Word(p.generators[i]), m4kit::Word(p.generators[j])));
    for (std::size_t r = 0; r < nrows; ++r) {
      m4kit::Word w;
      for (std::size_t i = 0; i < ngens; ++i) {
        int e = static_cast<int>(uniform(-max_entry, max_entry));
        if (e) w = w * m4kit::Word(p.generators[i], e);
      }
      if (!w.is_identity()) p.relators.push_back(w);
    }
    return p;
  }
};

}  // namespace oracle
