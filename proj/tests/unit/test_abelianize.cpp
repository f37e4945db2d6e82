#include "catch_amalgamated.hpp"

#include "m4kit/abelianize.hpp"
#include "oracles.hpp"

using namespace m4kit;

namespace {

std::vector<long long> diagonal(const IntMatrix& d) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) {
    if (d(i, i) != 0) out.push_back(static_cast<long long>(d(i, i)));
  }
  return out;
}

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("Smith form of a small matrix", "[abelianize]") {
  std::vector<std::vector<long long>> rows = {{2, 4}, {6, 8}};
  SmithForm s = smith_normal_form(IntMatrix::from_rows(rows));
  CHECK(diagonal(s.d) == oracle::invariant_factors(rows));
  CHECK(diagonal(s.d) == std::vector<long long>{2, 4});
  CHECK(s.u * IntMatrix::from_rows(rows) * s.v == s.d);
}

TEST_CASE("determinant agrees with Laplace expansion", "[abelianize]") {
  std::vector<std::vector<long long>> rows = {{2, -1, 3}, {0, 4, 5}, {7, 1, -6}};
  CHECK(determinant(IntMatrix::from_rows(rows)) == oracle::laplace_det(rows));
  CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("H1 of standard presentations", "[abelianize]") {
  CHECK(to_string(h1(make_presentation({"a", "b"}, {"[a,b]"}))) == "Z^2");
  CHECK(to_string(h1(make_presentation({"a"}, {"a^6"}))) == "Z/6");
  CHECK(to_string(h1(make_presentation({"a", "b"}, {"a^2", "b^3"}))) == "Z/6");
  CHECK(to_string(h1(make_presentation({"a", "b"}, {"a^2", "b^4"}))) == "Z/2 + Z/4");
  CHECK(h1(make_presentation({"a"}, {"a"})).trivial());
  CHECK(to_string(h1(make_presentation({}, {}))) == "0");
}

TEST_CASE("meridional tiers and conditional relators are ignored", "[abelianize]") {
  Presentation p = parse_presentation("<a, b | [a,b] | meridional: g ~ a | conditional: a ~ b>");
  H1Result h = h1(p);
  CHECK(h.rank == 2);
  CHECK(h.torsion.empty());
}

TEST_CASE("large entries stay exact", "[abelianize]") {
  IntMatrix m(1, 1);
  m(0, 0) = BigInt("123456789012345678901234567890");
  H1Result h = h1_of_matrix(m);
  REQUIRE(h.torsion.size() == 1);
  CHECK(h.torsion[0].str() == "123456789012345678901234567890");
}

TEST_CASE("Smith form on random matrices", "[abelianize][property]") {
  oracle::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    std::size_t r = static_cast<std::size_t>(gen.uniform(1, 4));
    std::size_t c = static_cast<std::size_t>(gen.uniform(1, 4));
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = gen.uniform(-9, 9);
    IntMatrix m = to_matrix(rows, c);
    SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK((determinant(s.u) == 1 || determinant(s.u) == -1));
    CHECK((determinant(s.v) == 1 || determinant(s.v) == -1));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (a != b) CHECK(s.d(a, b) == 0);
    std::vector<long long> d = diagonal(s.d);
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(d[k] > 0);
      if (k + 1 < d.size()) CHECK(d[k + 1] % d[k] == 0);
    }
    CHECK(d == oracle::invariant_factors(rows));
    H1Result h = h1_of_matrix(m);
    CHECK(h.rank == c - oracle::rational_rank(rows));
  }
}

TEST_CASE("H1 against homomorphism counts into cyclic groups", "[abelianize][property]") {
  oracle::Gen gen(11);
  for (int i = 0; i < 40; ++i) {
    Presentation p = gen.abelian(3, static_cast<std::size_t>(gen.uniform(1, 3)), 3);
    H1Result h = h1(p);
    std::vector<long long> torsion;
    for (const auto& t : h.torsion) torsion.push_back(static_cast<long long>(t));
    for (int m : {2, 3, 4}) {
      CHECK(oracle::count_homs(p, oracle::cyclic_group(m)) ==
            oracle::homs_from_abelian(h.rank, torsion, m));
    }
  }
}
