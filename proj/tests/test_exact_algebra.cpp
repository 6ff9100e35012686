#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rowadj/error.hpp"
#include "rowadj/matrix.hpp"

using namespace rowadj;

TEST_CASE("scalar parsing canonicalizes") {
  CHECK(Scalar::parse("4/6") == Scalar::rational(2, 3));
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK_THROWS_AS(Scalar::parse("-3/-1"), ParseError);
}

TEST_CASE("scalar syntax") {
  CHECK(Scalar::parse("7") == Scalar(7));
  CHECK(Scalar::parse("-2/4") == Scalar::rational(-1, 2));
  CHECK(Scalar::parse("i") == Scalar(0, 1));
  CHECK(Scalar::parse("-i") == Scalar(0, -1));
  CHECK(Scalar::parse("1/2+3/4i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(Scalar::parse("1-2i") == Scalar(1, -2));
  CHECK(Scalar::parse("5/3i") == Scalar(0, mpq_class(5, 3)));
  CHECK(Scalar::parse("1/2+3/4i").str() == "1/2+3/4i");
  CHECK(Scalar::parse("1-2i").str() == "1-2i");
  CHECK(Scalar(0, -1).str() == "-i");
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("2i+1"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1+2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1+2i+3i"), ParseError);
}

TEST_CASE("gaussian field arithmetic is exact") {
  const Scalar a(1, 2), b(mpq_class(1, 3), -1);
  CHECK((a * b) / b == a);
  CHECK(a * a.reciprocal() == Scalar(1));
  CHECK(Scalar(0, 1) * Scalar(0, 1) == Scalar(-1));
  CHECK_THROWS_AS(Scalar(0).reciprocal(), DomainError);
}

TEST_CASE("multiply") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(multiply(Matrix::identity(2), a) == a);
  CHECK(multiply(Matrix{{1, 0}, {1, 1}}, Matrix{{1, 1}, {0, 1}}) == Matrix{{1, 1}, {1, 2}});
  CHECK(multiply(Matrix{{1, 1, 1}}, Matrix{{1}, {1}, {1}}) == Matrix{{3}});
  CHECK_THROWS_AS(multiply(Matrix{{1, 1}}, Matrix{{1, 1}}), DimensionError);
}

TEST_CASE("hadamard") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(hadamard(a, Matrix{{1, 1}, {1, 1}}) == a);
  CHECK(hadamard(a, Matrix(2, 2)).is_zero());
  CHECK(hadamard(a, Matrix{{1, 0}, {0, 1}}) == Matrix{{1, 0}, {0, 4}});
  CHECK_THROWS_AS(hadamard(a, Matrix(2, 3)), DimensionError);
}

TEST_CASE("det_oracle") {
  CHECK(det_oracle(Matrix::identity(4)) == Scalar(1));
  CHECK(det_oracle(Matrix{{1, 1}, {1, 2}}) == Scalar(1));
  // Needs a row swap at the first pivot.
  CHECK(det_oracle(Matrix{{0, 1}, {1, 0}}) == Scalar(-1));
  CHECK(det_oracle(Matrix{{0, 2, 1}, {0, 1, 5}, {3, 0, 0}}) == testing::leibniz_det(Matrix{{0, 2, 1}, {0, 1, 5}, {3, 0, 0}}));

  Matrix gcd6(6, 6);
  for (std::uint64_t i = 1; i <= 6; ++i)
    for (std::uint64_t j = 1; j <= 6; ++j) gcd6(i - 1, j - 1) = long(testing::brute_gcd(i, j));
  const Scalar brute = testing::leibniz_det(gcd6);
  CHECK(brute == Scalar(32));
  CHECK(det_oracle(gcd6) == brute);
  CHECK_THROWS_AS(det_oracle(Matrix(2, 3)), DimensionError);
}

TEST_CASE("rank_oracle") {
  CHECK(rank_oracle(Matrix(3, 4)) == 0);
  CHECK(rank_oracle(Matrix::identity(5)) == 5);
  const Matrix pentagon{{0, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {1, 1, 1, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}};
  CHECK(rank_oracle(pentagon) == 4);
  CHECK(rank_oracle(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("inverse_oracle") {
  CHECK(inverse_oracle(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(inverse_oracle(Matrix{{1, 1}, {1, 2}}) == Matrix{{2, -1}, {-1, 1}});
  CHECK_THROWS_AS(inverse_oracle(Matrix{{1, 1}, {1, 1}}), SingularError);
}

TEST_CASE("matrix text format") {
  const Matrix m = parse_matrix("1 1/2\n  i -3 \n\n");
  CHECK(m == Matrix{{1, Scalar::rational(1, 2)}, {Scalar(0, 1), -3}});
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("1 2\n3"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(Matrix(0, 3), DimensionError);
}

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long re = long(rng() % 7) - 3;
      const long im = rng() % 4 == 0 ? long(rng() % 3) - 1 : 0;
      const long den = long(rng() % 3) + 1;
      m(i, j) = Scalar(mpq_class(re, den), mpq_class(im));
    }
  return m;
}

}  // namespace

TEST_CASE("elimination oracles satisfy the algebraic identities") {
  std::mt19937_64 rng(20111);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix a = random_matrix(rng, n, n);
    Matrix b = random_matrix(rng, n, n);
    if (trial % 5 == 0 && n > 1)  // force a dependent row
      for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * Scalar(2);
    CAPTURE(trial);
    CHECK(det_oracle(multiply(a, b)) == det_oracle(a) * det_oracle(b));
    CHECK(det_oracle(a.transpose()) == det_oracle(a));
    CHECK(rank_oracle(a.transpose()) == rank_oracle(a));
    if (n <= 5) CHECK(det_oracle(a) == testing::leibniz_det(a));
    CHECK((rank_oracle(a) == n) == !det_oracle(a).is_zero());

    const Matrix rect = random_matrix(rng, n, 1 + rng() % 6);
    CHECK(rank_oracle(rect) <= std::min(rect.rows(), rect.cols()));
    if (!det_oracle(b).is_zero()) {
      CHECK(rank_oracle(multiply(b, rect)) == rank_oracle(rect));
      const Matrix inv = inverse_oracle(b);
      CHECK(multiply(b, inv) == Matrix::identity(n));
      CHECK(multiply(inv, b) == Matrix::identity(n));
    } else {
      CHECK_THROWS_AS(inverse_oracle(b), SingularError);
    }

    Matrix tri = random_matrix(rng, n, n);
    Scalar diag = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) tri(i, j) = 0;
      diag *= tri(i, i);
    }
    CHECK(det_oracle(tri) == diag);
  }
}
