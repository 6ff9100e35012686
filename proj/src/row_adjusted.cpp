#include "rowadj/row_adjusted.hpp"

#include "rowadj/error.hpp"

namespace rowadj {

FunctionFamily::FunctionFamily(std::size_t rows) : rows_(rows) {
  if (rows == 0) throw DimensionError("function family needs at least one row");
}

FunctionFamily FunctionFamily::replicate(std::size_t rows, const PointFunction& f) {
  FunctionFamily fs(rows);
  for (auto& r : fs.rows_) r = f;
  return fs;
}

FunctionFamily FunctionFamily::tabulate(std::size_t rows, const std::vector<Element>& domain,
                                        const std::function<Scalar(std::size_t, Element)>& fn) {
  FunctionFamily fs(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (const Element& e : domain) fs.rows_[i][e] = fn(i, e);
  return fs;
}

void FunctionFamily::set(std::size_t row, Element e, Scalar value) {
  rows_.at(row)[e] = std::move(value);
}

bool FunctionFamily::defined(std::size_t row, Element e) const {
  return rows_.at(row).contains(e);
}

const Scalar& FunctionFamily::value(std::size_t row, Element e, const OrderBackend& backend) const {
  const auto& r = rows_.at(row);
  auto it = r.find(e);
  if (it == r.end())
    throw MissingValueError("f" + std::to_string(row + 1) + "(" + backend.name(e) +
                            ") is not defined");
  return it->second;
}

namespace {

void check_rows(const SubsetSelection& s, const FunctionFamily& fs) {
  if (fs.rows() != s.size())
    throw DimensionError("function family has " + std::to_string(fs.rows()) +
                         " rows but the subset has " + std::to_string(s.size()) + " elements");
}

// less[a][b]: d_a strictly below d_b.
std::vector<std::vector<bool>> strict_order(const ClosureSet& d) {
  const std::size_t m = d.size();
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) less[a][b] = d.backend().less(d[a], d[b]);
  return less;
}

Matrix square_psi(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  const ClosureSet d = ClosureSet::of_closed(s, mode);
  return psi_table(s, d, fs).grid;
}

}  // namespace

PsiTable psi_table(const SubsetSelection& s, const ClosureSet& d, const FunctionFamily& fs) {
  check_rows(s, fs);
  const std::size_t n = s.size();
  const std::size_t m = d.size();
  const auto less = strict_order(d);
  const auto& backend = d.backend();
  Matrix grid(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (d.mode() == Mode::meet) {
      for (std::size_t k = 0; k < m; ++k) {
        Scalar v = fs.value(i, d[k], backend);
        for (std::size_t u = 0; u < k; ++u)
          if (less[u][k]) v -= grid(i, u);
        grid(i, k) = std::move(v);
      }
    } else {
      for (std::size_t k = m; k-- > 0;) {
        Scalar v = fs.value(i, d[k], backend);
        for (std::size_t u = k + 1; u < m; ++u)
          if (less[k][u]) v -= grid(i, u);
        grid(i, k) = std::move(v);
      }
    }
  }
  return {d.mode(), d.elements(), std::move(grid)};
}

PsiTable psi_table_mobius(const SubsetSelection& s, const ClosureSet& d,
                          const FunctionFamily& fs) {
  check_rows(s, fs);
  const std::size_t n = s.size();
  const std::size_t m = d.size();
  const Matrix mu = mobius_matrix(d);
  Matrix grid(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      Scalar v = 0;
      for (std::size_t u = 0; u < m; ++u) {
        const Scalar& coeff = d.mode() == Mode::meet ? mu(u, k) : mu(k, u);
        if (!coeff.is_zero()) v += fs.value(i, d[u], d.backend()) * coeff;
      }
      grid(i, k) = std::move(v);
    }
  return {d.mode(), d.elements(), std::move(grid)};
}

bool psi_reconstructs(const PsiTable& table, const ClosureSet& d, const FunctionFamily& fs) {
  const auto& backend = d.backend();
  for (std::size_t i = 0; i < table.grid.rows(); ++i)
    for (std::size_t k = 0; k < d.size(); ++k) {
      Scalar sum = 0;
      for (std::size_t v = 0; v < d.size(); ++v) {
        const bool in_range = table.mode == Mode::meet ? backend.leq(d[v], d[k])
                                                       : backend.leq(d[k], d[v]);
        if (in_range) sum += table.grid(i, v);
      }
      if (!(sum == fs.value(i, d[k], backend))) return false;
    }
  return true;
}

Matrix build_matrix(const SubsetSelection& s, const FunctionFamily& fs, Mode mode,
                    bool column_adjusted) {
  check_rows(s, fs);
  const std::size_t n = s.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = fs.value(i, s.combine(i, j, mode), s.backend());
  return column_adjusted ? m.transpose() : m;
}

Factorization factorize(const SubsetSelection& s, const ClosureSet& d, const FunctionFamily& fs) {
  Matrix e = incidence_matrix(s, d);
  Matrix xi = psi_table(s, d, fs).grid;
  Matrix upsilon = hadamard(e, xi);
  Matrix product = multiply(upsilon, e.transpose());
  return {std::move(e), std::move(xi), std::move(upsilon), std::move(product)};
}

Matrix psi_from_matrix(const Matrix& m, const SubsetSelection& s, Mode mode) {
  if (!is_closed(s, mode))
    throw NotClosedError("subset is not " + std::string(to_string(mode)) + " closed");
  if (m.rows() != s.size() || m.cols() != s.size())
    throw DimensionError("matrix size does not match the subset");
  const Matrix mu = mobius_matrix(s.backend(), s.members());
  return multiply(m, mode == Mode::meet ? mu : mu.transpose());
}

std::vector<Scalar> diagonal_psi(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  const Matrix xi = square_psi(s, fs, mode);
  std::vector<Scalar> diag;
  diag.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) diag.push_back(xi(i, i));
  return diag;
}

Scalar theorem_det(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  Scalar det = 1;
  for (const Scalar& p : diagonal_psi(s, fs, mode)) det *= p;
  return det;
}

RankReport rank_report(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  const auto diag = diagonal_psi(s, fs, mode);
  const Matrix m = build_matrix(s, fs, mode);
  const std::size_t n = s.size();
  RankReport report{};
  for (const Scalar& p : diag)
    if (p.is_zero()) ++report.k;
  if (m.is_zero()) {
    report.lower = report.upper = 0;
  } else if (report.k == 0) {
    report.lower = report.upper = n;
  } else {
    report.lower = n - report.k;
    report.upper = n - 1;
  }
  report.exact = rank_oracle(m);
  if (report.exact < report.lower || report.exact > report.upper)
    throw TheoremMismatchError("oracle rank " + std::to_string(report.exact) +
                               " outside the theorem interval [" + std::to_string(report.lower) +
                               ", " + std::to_string(report.upper) + "]");
  return report;
}

ThetaTable theta_table(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  const ClosureSet d = ClosureSet::of_closed(s, mode);
  const Matrix xi = psi_table(s, d, fs).grid;
  const Matrix e = incidence_matrix(s, d);
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    if (xi(i, i).is_zero())
      throw SingularPsiError(i + 1, "Psi at x" + std::to_string(i + 1) + " (" +
                                        s.backend().name(s[i]) +
                                        ") is zero; the matrix is singular");

  Matrix theta(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    theta(j, j) = xi(j, j).reciprocal();
    if (mode == Mode::meet) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Scalar sum = 0;
        for (std::size_t u = j; u < k; ++u)
          if (!e(k, u).is_zero()) sum += xi(k, u) * theta(u, j);
        theta(k, j) = -sum / xi(k, k);
      }
    } else {
      for (std::size_t k = j; k-- > 0;) {
        Scalar sum = 0;
        for (std::size_t u = k + 1; u <= j; ++u)
          if (!e(k, u).is_zero()) sum += xi(k, u) * theta(u, j);
        theta(k, j) = -sum / xi(k, k);
      }
    }
  }
  return {mode, std::move(theta)};
}

Matrix theorem_inverse(const SubsetSelection& s, const FunctionFamily& fs, Mode mode) {
  const ThetaTable theta = theta_table(s, fs, mode);
  const Matrix mu = mobius_matrix(s.backend(), s.members());
  const std::size_t n = s.size();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sum = 0;
      if (mode == Mode::meet) {
        for (std::size_t k = j; k < n; ++k)
          if (!mu(i, k).is_zero()) sum += mu(i, k) * theta.grid(k, j);
      } else {
        for (std::size_t k = 0; k <= j; ++k)
          if (!mu(k, i).is_zero()) sum += mu(k, i) * theta.grid(k, j);
      }
      b(i, j) = std::move(sum);
    }
  return b;
}

std::size_t ordinary_rank(const SubsetSelection& s, const PointFunction& f, Mode mode) {
  const FunctionFamily fs = FunctionFamily::replicate(s.size(), f);
  std::size_t k = 0;
  for (const Scalar& p : diagonal_psi(s, fs, mode))
    if (p.is_zero()) ++k;
  const std::size_t rank = s.size() - k;
  const std::size_t oracle = rank_oracle(build_matrix(s, fs, mode));
  if (rank != oracle)
    throw TheoremMismatchError("ordinary matrix rank " + std::to_string(oracle) +
                               " differs from n - k = " + std::to_string(rank));
  return rank;
}

}  // namespace rowadj
