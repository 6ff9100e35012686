#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "rowadj/matrix.hpp"
#include "rowadj/row_adjusted.hpp"

namespace rowadj {

/// Number-theoretic Moebius function by trial division.
int mobius_nt(std::int64_t n);

/// Arithmetical function tabulated on finitely many positive integers.
class ArithmeticalRow {
 public:
  ArithmeticalRow() = default;
  explicit ArithmeticalRow(std::map<std::uint64_t, Scalar> values) : values_(std::move(values)) {}

  void set(std::uint64_t m, Scalar v) { values_[m] = std::move(v); }
  bool defined(std::uint64_t m) const { return values_.contains(m); }
  const Scalar& operator()(std::uint64_t m) const;
  const std::map<std::uint64_t, Scalar>& values() const { return values_; }

 private:
  std::map<std::uint64_t, Scalar> values_;
};

/// Row i (0-based) holds f_{i+1}, i.e. m -> F(i+1, m).
using ArithmeticalFamily = std::vector<ArithmeticalRow>;

/// mu tabulated on 1..limit.
ArithmeticalRow mobius_row(std::uint64_t limit);

/// (f * g)(n) = sum over d | n of f(d) g(n/d).
Scalar dirichlet(const ArithmeticalRow& f, const ArithmeticalRow& g, std::uint64_t n);

/// Built-in row generators: identity m, constant c, power m^r (r may be negative).
class FamilyGenerator {
 public:
  enum class Kind { identity, constant, power };

  static FamilyGenerator identity() { return FamilyGenerator(Kind::identity, 0, 1); }
  static FamilyGenerator constant(Scalar c) { return FamilyGenerator(Kind::constant, c, 0); }
  static FamilyGenerator power(long r) { return FamilyGenerator(Kind::power, 0, r); }
  /// Accepts `id`, `const:<scalar>`, `pow:<integer>`.
  static FamilyGenerator parse(std::string_view spec);

  Kind kind() const { return kind_; }
  Scalar operator()(std::uint64_t m) const;

  ArithmeticalRow row(const std::vector<std::uint64_t>& domain) const;
  ArithmeticalFamily family(std::size_t rows, const std::vector<std::uint64_t>& domain) const;

 private:
  FamilyGenerator(Kind kind, Scalar c, long r) : kind_(kind), constant_(std::move(c)), exponent_(r) {}

  Kind kind_;
  Scalar constant_;
  long exponent_;
};

/// Same family as row functions on divisor-lattice elements.
FunctionFamily to_function_family(const ArithmeticalFamily& family);

/// Row-adjusted GCD matrix of {1, ..., n}: entry (i,j) = f_i(gcd(i,j)).
Matrix gcd_family_matrix(std::size_t n, const ArithmeticalFamily& family);

/// prod_{i=1}^{n} (f_i * mu)(i).
Scalar gcd_family_det(std::size_t n, const ArithmeticalFamily& family);

}  // namespace rowadj
