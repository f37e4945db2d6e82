#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "m4kit/presentation.hpp"

namespace m4kit {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
// Exact determinant by fraction-free elimination; square matrices only.
BigInt determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

// U * M * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

struct H1Result {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool is_cyclic() const { return rank + torsion.size() <= 1; }
  bool operator==(const H1Result&) const = default;
};

// Exponent-sum matrix over the ordinary generators; meridional tiers and
// conditional relators are ignored.
IntMatrix relation_matrix(const Presentation& p);
H1Result h1(const Presentation& p);
H1Result h1_of_matrix(const IntMatrix& m);
// "Z^2 + Z/2 + Z/6", "0" for the trivial group.
std::string to_string(const H1Result& h);

}  // namespace m4kit
