#include "m4kit/abelianize.hpp"

#include <utility>

#include "m4kit/error.hpp"

namespace m4kit {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

// row_a += k * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t j = 0; j < m.cols; ++j) m(a, j) += k * m(b, j);
}

// col_a += k * col_b
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, a) += k * m(i, b);
}

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  // Bareiss elimination.
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  IntMatrix& d = s.d;
  const std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < lim; ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j) {
          if (d(i, j) == 0) continue;
          BigInt a = babs(d(i, j));
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold in a row whose entries the pivot does not divide.
      std::size_t bad = d.rows;
      for (std::size_t i = t + 1; i < d.rows && bad == d.rows; ++i)
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == d.rows) break;
      add_row(d, t, bad, 1);
      add_row(s.u, t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < d.cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < s.u.cols; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  return s;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& l : p.relators[i].letters()) {
      int j = p.generator_index(l.gen);
      if (j < 0) throw Error("relator letter '" + l.gen + "' is not a generator");
      m(i, static_cast<std::size_t>(j)) += l.sign;
    }
  return m;
}

H1Result h1_of_matrix(const IntMatrix& m) {
  H1Result h;
  SmithForm s = smith_normal_form(m);
  const std::size_t lim = std::min(m.rows, m.cols);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < lim; ++i) {
    const BigInt& x = s.d(i, i);
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) h.torsion.push_back(x);
  }
  h.rank = m.cols - nonzero;
  return h;
}

H1Result h1(const Presentation& p) { return h1_of_matrix(relation_matrix(p)); }

std::string to_string(const H1Result& h) {
  std::string out;
  if (h.rank == 1) out = "Z";
  if (h.rank > 1) out = "Z^" + std::to_string(h.rank);
  for (const auto& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace m4kit
