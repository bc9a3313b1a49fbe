#include <random>

#include "deltafn/ff.hpp"
#include "doctest.h"

using namespace deltafn;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int p, std::size_t r, std::size_t c) {
  Matrix m(p, r, c);
  std::uniform_int_distribution<int> d(0, p - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

// Every vector of F_p^n, first coordinate most significant.
std::vector<std::vector<std::uint8_t>> all_vectors(int n, int p) {
  std::vector<std::vector<std::uint8_t>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<std::uint8_t>> next;
    for (auto& v : out)
      for (int x = 0; x < p; ++x) {
        auto w = v;
        w.push_back(static_cast<std::uint8_t>(x));
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  FFScalar a(5, 3), b(2, 3);
  CHECK(a.value == 2);
  CHECK((a + b).value == 1);
  CHECK((a * b).value == 1);
  CHECK((b - a).value == 0);
  CHECK(FFScalar(-1, 5).value == 4);
  for (int p : {2, 3, 5})
    for (int x = 1; x < p; ++x) CHECK((x * inv_mod(x, p)) % p == 1);
}

TEST_CASE("rref examples") {
  auto r = rref(Matrix::identity(2, 3));
  CHECK(r.reduced == Matrix::identity(2, 3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);

  auto z = rref(Matrix(3, 2, 4));
  CHECK(z.reduced.is_zero());
  CHECK(z.pivots.empty());
  CHECK(z.rank == 0);

  auto h = rref(Matrix::from_rows(2, {{1, 1}, {1, 1}}));
  CHECK(h.reduced == Matrix::from_rows(2, {{1, 1}, {0, 0}}));
  CHECK(h.rank == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3, 4)).rows() == 0);
  auto k0 = kernel_basis(Matrix(2, 2, 2));
  CHECK(k0.rows() == 2);
  CHECK(rank(k0) == 2);

  Matrix row = Matrix::from_rows(2, {{1, 1, 0}});
  auto k = kernel_basis(row);
  REQUIRE(k.rows() == 2);
  // Oracle: enumerate all 8 vectors, keep the annihilated ones.
  std::size_t annihilated = 0;
  for (auto& v : all_vectors(3, 2)) {
    if ((v[0] + v[1]) % 2 == 0) ++annihilated;
  }
  CHECK(annihilated == 4);
  EchelonBasis eb(2, 3);
  for (std::size_t i = 0; i < k.rows(); ++i) eb.insert(k.row(i));
  CHECK(eb.contains(std::vector<std::uint8_t>{1, 1, 0}));
  CHECK(eb.contains(std::vector<std::uint8_t>{0, 0, 1}));
  CHECK_FALSE(eb.contains(std::vector<std::uint8_t>{1, 0, 0}));
}

TEST_CASE("rref idempotent and rank-nullity on random matrices") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3}) {
    for (int t = 0; t < 1000; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m = random_matrix(rng, p, r, c);
      auto a = rref(m);
      auto b = rref(a.reduced);
      REQUIRE(a.reduced == b.reduced);
      auto k = kernel_basis(m);
      REQUIRE(a.rank + k.rows() == c);
      if (k.rows()) REQUIRE((m * k.transpose()).is_zero());
      REQUIRE(rank(k) == k.rows());
    }
  }
}

TEST_CASE("left kernel") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Matrix m = random_matrix(rng, 3, 5, 3);
    auto k = left_kernel(m);
    CHECK(k.rows() == 5 - rank(m));
    if (k.rows()) CHECK((k * m).is_zero());
  }
}

TEST_CASE("solve_all examples") {
  {
    std::vector<std::pair<Matrix, Matrix>> pairs{{Matrix::identity(2, 2), Matrix::identity(2, 2)}};
    CHECK(solve_all(pairs).size() == 4);
  }
  {
    Matrix c = Matrix::from_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    std::vector<std::pair<Matrix, Matrix>> pairs{{c, c}};
    auto sol = solve_all(pairs);
    // Oracle: count all 512 matrices commuting with c.
    std::size_t count = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
      Matrix f(2, 3, 3);
      for (int i = 0; i < 9; ++i) f.set(static_cast<std::size_t>(i / 3), static_cast<std::size_t>(i % 3), (bits >> i) & 1);
      if (c * f == f * c) ++count;
    }
    CHECK(count == 8);
    CHECK(sol.size() == 3);
    for (auto& f : sol) CHECK(c * f == f * c);
  }
  {
    std::vector<std::pair<Matrix, Matrix>> pairs{{Matrix::identity(2, 1), Matrix(2, 1, 1)}};
    CHECK(solve_all(pairs).empty());
  }
  {
    std::vector<std::pair<Matrix, Matrix>> bad{{Matrix::identity(2, 2), Matrix::identity(2, 2)},
                                               {Matrix::identity(2, 3), Matrix::identity(2, 2)}};
    CHECK_THROWS_AS(solve_all(bad), DimensionError);
  }
}

TEST_CASE("solve_all solutions satisfy the constraints") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Matrix x = random_matrix(rng, 3, 3, 3), y = random_matrix(rng, 3, 2, 2);
    Matrix x2 = x * x;
    Matrix y2 = y * y;
    std::vector<std::pair<Matrix, Matrix>> pairs{{x, y}, {x2, y2}};
    for (auto& f : solve_all(pairs)) {
      CHECK(x * f == f * y);
      CHECK(x2 * f == f * y2);
    }
  }
}

TEST_CASE("kron") {
  CHECK(kron(Matrix::identity(2, 2), Matrix::identity(2, 3)) == Matrix::identity(2, 6));
  Matrix b = Matrix::from_rows(3, {{1, 2}, {0, 1}});
  CHECK(kron(Matrix::identity(3, 1), b) == b);
  Matrix s = Matrix::from_rows(2, {{0, 1}, {1, 0}});
  Matrix k = kron(s, s);
  // (i,j) -> (1-i, 1-j): index 2i+j maps to 3-(2i+j).
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(k(r, c) == (c == 3 - r ? 1 : 0));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Matrix a = random_matrix(rng, 3, 3, 3), bb = random_matrix(rng, 3, 3, 3);
    Matrix c = random_matrix(rng, 3, 3, 3), d = random_matrix(rng, 3, 3, 3);
    CHECK(kron(a, bb) * kron(c, d) == kron(a * c, bb * d));
  }
  CHECK_THROWS_AS(kron(Matrix::identity(2, 2), Matrix::identity(3, 2)), DimensionError);
}

TEST_CASE("inverse and power") {
  std::mt19937_64 rng(9);
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix m = random_matrix(rng, 3, 4, 4);
    if (!is_invertible(m)) {
      CHECK_THROWS_AS(inverse(m), AlgebraError);
      continue;
    }
    ++found;
    CHECK((m * inverse(m)).is_identity());
    CHECK(power(m, 5) == m * m * m * m * m);
  }
  CHECK(found > 0);
}

TEST_CASE("characteristic polynomial") {
  // Companion matrix of x^3 + x + 1 over F_2.
  Matrix c = Matrix::from_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  CHECK(charpoly(c) == std::vector<int>{1, 1, 0, 1});
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    Matrix m = random_matrix(rng, 3, 4, 4);
    auto cp = charpoly(m);
    REQUIRE(cp.size() == 5);
    // Cayley-Hamilton.
    Matrix acc(3, 4, 4);
    Matrix pw = Matrix::identity(3, 4);
    for (int k : cp) {
      acc = acc + pw.scaled(k);
      pw = pw * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("echelon basis expresses members") {
  std::mt19937_64 rng(17);
  Matrix m = random_matrix(rng, 3, 4, 6);
  EchelonBasis eb(3, 6, true);
  std::vector<std::size_t> inserted;
  for (std::size_t i = 0; i < 4; ++i)
    if (eb.insert(m.row(i))) inserted.push_back(i);
  std::vector<std::uint8_t> v(6, 0);
  axpy(v, m.row(0), 2, 3);
  axpy(v, m.row(3), 1, 3);
  std::vector<std::uint8_t> coeffs;
  REQUIRE(eb.express(v, coeffs));
  std::vector<std::uint8_t> back(6, 0);
  for (std::size_t k = 0; k < inserted.size(); ++k) axpy(back, m.row(inserted[k]), coeffs[k], 3);
  CHECK(back == v);
}
