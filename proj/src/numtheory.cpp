#include "rowadj/numtheory.hpp"

#include <numeric>
#include <string>

#include "rowadj/error.hpp"

namespace rowadj {

int mobius_nt(std::int64_t n) {
  if (n < 1) throw DomainError("mobius: argument must be positive, got " + std::to_string(n));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

const Scalar& ArithmeticalRow::operator()(std::uint64_t m) const {
  auto it = values_.find(m);
  if (it == values_.end())
    throw MissingValueError("arithmetical function undefined at " + std::to_string(m));
  return it->second;
}

ArithmeticalRow mobius_row(std::uint64_t limit) {
  ArithmeticalRow mu;
  for (std::uint64_t m = 1; m <= limit; ++m) mu.set(m, mobius_nt(static_cast<std::int64_t>(m)));
  return mu;
}

Scalar dirichlet(const ArithmeticalRow& f, const ArithmeticalRow& g, std::uint64_t n) {
  if (n == 0) throw DomainError("dirichlet: argument must be positive");
  Scalar sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    sum += f(d) * g(n / d);
    if (d != n / d) sum += f(n / d) * g(d);
  }
  return sum;
}

FamilyGenerator FamilyGenerator::parse(std::string_view spec) {
  if (spec == "id") return identity();
  if (spec.starts_with("const:")) return constant(Scalar::parse(spec.substr(6)));
  if (spec.starts_with("pow:")) {
    const std::string r(spec.substr(4));
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(r, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (r.empty() || used != r.size()) throw ParseError("bad exponent in '" + std::string(spec) + "'");
    return power(exponent);
  }
  throw ParseError("unknown family '" + std::string(spec) + "' (expected id, const:<c>, pow:<r>)");
}

Scalar FamilyGenerator::operator()(std::uint64_t m) const {
  switch (kind_) {
    case Kind::identity:
      return Scalar(mpq_class(mpz_class(std::to_string(m))));
    case Kind::constant:
      return constant_;
    case Kind::power: {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), m, static_cast<unsigned long>(exponent_ < 0 ? -exponent_ : exponent_));
      return exponent_ < 0 ? Scalar(mpq_class(1, 1) / mpq_class(p)) : Scalar(mpq_class(p));
    }
  }
  return 0;
}

ArithmeticalRow FamilyGenerator::row(const std::vector<std::uint64_t>& domain) const {
  ArithmeticalRow r;
  for (std::uint64_t m : domain) r.set(m, (*this)(m));
  return r;
}

ArithmeticalFamily FamilyGenerator::family(std::size_t rows,
                                           const std::vector<std::uint64_t>& domain) const {
  return ArithmeticalFamily(rows, row(domain));
}

FunctionFamily to_function_family(const ArithmeticalFamily& family) {
  FunctionFamily fs(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& [m, v] : family[i].values()) fs.set(i, Element{Universe::divisors, m}, v);
  return fs;
}

Matrix gcd_family_matrix(std::size_t n, const ArithmeticalFamily& family) {
  if (family.size() < n) throw DimensionError("family has fewer than n rows");
  Matrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m(i - 1, j - 1) = family[i - 1](std::gcd(i, j));
  return m;
}

Scalar gcd_family_det(std::size_t n, const ArithmeticalFamily& family) {
  if (family.size() < n) throw DimensionError("family has fewer than n rows");
  const ArithmeticalRow mu = mobius_row(n);
  Scalar det = 1;
  for (std::size_t i = 1; i <= n; ++i) det *= dirichlet(family[i - 1], mu, i);
  return det;
}

}  // namespace rowadj
