#include <doctest.h>

#include "oracles.hpp"
#include "rowadj/error.hpp"
#include "rowadj/numtheory.hpp"
#include "rowadj/verify.hpp"

using namespace rowadj;

namespace {

std::vector<std::uint64_t> upto(std::uint64_t n) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t m = 1; m <= n; ++m) v.push_back(m);
  return v;
}

SubsetSelection first_n(std::size_t n) {
  std::vector<Element> es;
  for (std::uint64_t m = 1; m <= n; ++m) es.push_back({Universe::divisors, m});
  return SubsetSelection(OrderBackend::divisors(), es);
}

// Row i gets m -> i*m + (m mod 3) - 1, so rows genuinely differ.
ArithmeticalFamily mixed_family(std::size_t n) {
  ArithmeticalFamily fam(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t m = 1; m <= n; ++m)
      fam[i].set(m, Scalar(static_cast<long>((i + 1) * m + m % 3) - 1));
  return fam;
}

}  // namespace

TEST_CASE("mobius_nt") {
  CHECK(mobius_nt(1) == 1);
  CHECK(mobius_nt(6) == 1);
  CHECK(mobius_nt(12) == 0);
  CHECK(mobius_nt(30) == -1);
  CHECK(mobius_nt(49) == 0);
  CHECK(mobius_nt(97) == -1);
  CHECK_THROWS_AS(mobius_nt(0), DomainError);
  CHECK_THROWS_AS(mobius_nt(-4), DomainError);
}

TEST_CASE("mobius_nt is multiplicative on coprime pairs") {
  verify::Rng rng = verify::case_rng(23, 0);
  int checked = 0;
  while (checked < 500) {
    const std::int64_t a = 1 + rng() % 1000, b = 1 + rng() % 1000;
    if (std::gcd(a, b) != 1) continue;
    CHECK(mobius_nt(a * b) == mobius_nt(a) * mobius_nt(b));
    ++checked;
  }
}

TEST_CASE("poset Moebius on divisor sets matches mu(b/a)") {
  const OrderBackend dv = OrderBackend::divisors();
  for (std::uint64_t n : {12, 30, 36, 60, 64}) {
    std::vector<Element> divisors;
    for (std::uint64_t m = 1; m <= n; ++m)
      if (n % m == 0) divisors.push_back({Universe::divisors, m});
    const Matrix mu = mobius_matrix(dv, divisors);
    for (std::size_t i = 0; i < divisors.size(); ++i)
      for (std::size_t j = 0; j < divisors.size(); ++j) {
        const auto a = divisors[i].value, b = divisors[j].value;
        const long expected = b % a == 0 ? mobius_nt(static_cast<std::int64_t>(b / a)) : 0;
        CHECK(mu(i, j) == Scalar(expected));
      }
  }
}

TEST_CASE("dirichlet") {
  const ArithmeticalRow mu = mobius_row(12);
  const ArithmeticalRow id = FamilyGenerator::identity().row(upto(12));
  const ArithmeticalRow one = FamilyGenerator::constant(1).row(upto(12));
  CHECK(dirichlet(id, mu, 1) == Scalar(1));
  CHECK(dirichlet(id, mu, 6) == Scalar(2));
  CHECK(dirichlet(one, mu, 12) == Scalar(0));
  for (std::uint64_t n = 1; n <= 12; ++n) CHECK(dirichlet(id, mu, n) == Scalar(long(testing::brute_phi(n))));
  CHECK_THROWS_AS(dirichlet(id, mu, 13), MissingValueError);
}

TEST_CASE("family generators") {
  CHECK(FamilyGenerator::parse("id")(7) == Scalar(7));
  CHECK(FamilyGenerator::parse("const:3/4")(7) == Scalar::rational(3, 4));
  CHECK(FamilyGenerator::parse("pow:2")(7) == Scalar(49));
  CHECK(FamilyGenerator::parse("pow:-1")(4) == Scalar::rational(1, 4));
  CHECK(FamilyGenerator::parse("pow:0")(9) == Scalar(1));
  CHECK_THROWS_AS(FamilyGenerator::parse("pow:x"), ParseError);
  CHECK_THROWS_AS(FamilyGenerator::parse("pow:"), ParseError);
  CHECK_THROWS_AS(FamilyGenerator::parse("sigma"), ParseError);
}

TEST_CASE("gcd_family_matrix") {
  const auto id = FamilyGenerator::identity();
  CHECK(gcd_family_matrix(2, id.family(2, upto(2))) == Matrix{{1, 1}, {1, 2}});
  CHECK(gcd_family_matrix(3, id.family(3, upto(3))) == Matrix{{1, 1, 1}, {1, 2, 1}, {1, 1, 3}});
  Matrix ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
  CHECK(gcd_family_matrix(4, FamilyGenerator::constant(1).family(4, upto(4))) == ones);
  ArithmeticalFamily partial(2);
  partial[0].set(1, 1);
  CHECK_THROWS_AS(gcd_family_matrix(2, partial), MissingValueError);
}

TEST_CASE("gcd_family_det") {
  const auto id = FamilyGenerator::identity();
  CHECK(gcd_family_det(3, id.family(3, upto(3))) == Scalar(2));
  CHECK(gcd_family_det(6, id.family(6, upto(6))) == Scalar(32));
  std::uint64_t phi_product = 1;
  for (std::uint64_t i = 1; i <= 6; ++i) phi_product *= testing::brute_phi(i);
  CHECK(phi_product == 32);
  CHECK(testing::leibniz_det(gcd_family_matrix(6, id.family(6, upto(6)))) == Scalar(32));

  ArithmeticalFamily fam = mixed_family(5);
  for (std::uint64_t m = 1; m <= 5; ++m) fam[0].set(m, 0);
  CHECK(gcd_family_det(5, fam) == Scalar(0));
}

TEST_CASE("gcd family specialization agrees with the poset machinery") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const ArithmeticalFamily fam = mixed_family(n);
    const SubsetSelection s = first_n(n);
    const FunctionFamily fs = to_function_family(fam);
    const Matrix m = gcd_family_matrix(n, fam);
    CHECK(m == build_matrix(s, fs, Mode::meet));
    const Scalar det = gcd_family_det(n, fam);
    CHECK(det == theorem_det(s, fs, Mode::meet));
    CHECK(det == det_oracle(m));

    // Psi_{S,f_i}(j) = (f_i * mu)(j) everywhere on {1..n}.
    const Matrix xi = psi_table(s, ClosureSet::of_closed(s, Mode::meet), fs).grid;
    const ArithmeticalRow mu = mobius_row(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 1; j <= n; ++j) CHECK(xi(i, j - 1) == dirichlet(fam[i], mu, j));
  }
}
