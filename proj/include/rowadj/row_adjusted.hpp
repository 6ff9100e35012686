#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "rowadj/matrix.hpp"
#include "rowadj/subset.hpp"

namespace rowadj {

/// A single function on order elements, given as a finite table.
using PointFunction = std::map<Element, Scalar>;

/// The row functions f_1, ..., f_n, one finite value table per row.
class FunctionFamily {
 public:
  explicit FunctionFamily(std::size_t rows);

  /// f_1 = ... = f_n = f.
  static FunctionFamily replicate(std::size_t rows, const PointFunction& f);
  /// Evaluates `fn(row, element)` (row is 0-based) on every element of `domain`.
  static FunctionFamily tabulate(std::size_t rows, const std::vector<Element>& domain,
                                 const std::function<Scalar(std::size_t, Element)>& fn);

  std::size_t rows() const { return rows_.size(); }
  void set(std::size_t row, Element e, Scalar value);
  bool defined(std::size_t row, Element e) const;
  /// Throws MissingValueError when f_row(e) has no value.
  const Scalar& value(std::size_t row, Element e, const OrderBackend& backend) const;
  const PointFunction& row(std::size_t row) const { return rows_[row]; }

 private:
  std::vector<PointFunction> rows_;
};

/// Values Psi_{D,f_i}(d_j) (meet) or Psi'_{D',f_i}(d'_j) (join); the grid is Xi.
struct PsiTable {
  Mode mode;
  std::vector<Element> domain;
  Matrix grid;
};

struct Factorization {
  Matrix incidence;  // E_D, or E'_{D'} in join mode
  Matrix psi;        // Xi
  Matrix upsilon;    // E o Xi
  Matrix product;    // upsilon * incidence^T
};

struct RankReport {
  std::size_t k;      // number of i with Psi_{S,f_i}(x_i) = 0
  std::size_t lower;
  std::size_t upper;
  std::size_t exact;  // from rank_oracle
};

/// Triangular theta values; entries outside the triangle are zero.
struct ThetaTable {
  Mode mode;
  Matrix grid;
};

/// Inductive Psi: bottom-up over the linear extension in meet mode,
/// top-down in join mode.
PsiTable psi_table(const SubsetSelection& s, const ClosureSet& d, const FunctionFamily& fs);
/// Same table through the Moebius sum of the closure set, independent of the
/// inductive recursion.
PsiTable psi_table_mobius(const SubsetSelection& s, const ClosureSet& d,
                          const FunctionFamily& fs);
/// Checks f_i(d_k) = sum of Psi over the down-set (meet) or up-set (join) of d_k.
bool psi_reconstructs(const PsiTable& table, const ClosureSet& d, const FunctionFamily& fs);

/// Entry (i,j) = f_i(x_i ^ x_j) or f_i(x_i v x_j); transposed if `column_adjusted`.
Matrix build_matrix(const SubsetSelection& s, const FunctionFamily& fs, Mode mode,
                    bool column_adjusted = false);

Factorization factorize(const SubsetSelection& s, const ClosureSet& d, const FunctionFamily& fs);

/// Recovers Upsilon from a row-adjusted matrix on a closed set by multiplying
/// with the Moebius matrix of S (transposed in join mode).
Matrix psi_from_matrix(const Matrix& m, const SubsetSelection& s, Mode mode = Mode::meet);

/// Psi_{S,f_i}(x_i) for every row of a closed set.
std::vector<Scalar> diagonal_psi(const SubsetSelection& s, const FunctionFamily& fs, Mode mode);

Scalar theorem_det(const SubsetSelection& s, const FunctionFamily& fs, Mode mode);

/// Rank bounds on a closed set; throws TheoremMismatchError if the oracle
/// rank falls outside them.
RankReport rank_report(const SubsetSelection& s, const FunctionFamily& fs, Mode mode);

ThetaTable theta_table(const SubsetSelection& s, const FunctionFamily& fs, Mode mode);

/// Inverse assembled from the Moebius matrix of S and the theta recursion.
/// Throws SingularPsiError naming the first i with a vanishing diagonal Psi.
Matrix theorem_inverse(const SubsetSelection& s, const FunctionFamily& fs, Mode mode);

/// Rank of the ordinary meet (or join) matrix of one function f: n - k.
std::size_t ordinary_rank(const SubsetSelection& s, const PointFunction& f,
                          Mode mode = Mode::meet);

}  // namespace rowadj
