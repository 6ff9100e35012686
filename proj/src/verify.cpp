#include "rowadj/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rowadj/error.hpp"

namespace rowadj::verify {

namespace {

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Scalar random_scalar(Rng& rng) {
  const auto r = below(rng, 10);
  if (r < 6) return static_cast<long>(below(rng, 6)) - 2;
  if (r < 8) {
    const long num = static_cast<long>(below(rng, 7)) - 3;
    const long den = static_cast<long>(below(rng, 3)) + 2;
    return Scalar::rational(num, den);
  }
  if (r == 8)
    return Scalar(static_cast<long>(below(rng, 5)) - 2, static_cast<long>(below(rng, 3)) + 1);
  return 0;
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(rng, k)]);
}

std::vector<Element> pick_distinct(Rng& rng, std::vector<Element> pool, std::size_t count) {
  shuffle(rng, pool);
  pool.resize(std::min(count, pool.size()));
  return pool;
}

std::vector<Element> close_under(const OrderBackend& backend, std::vector<Element> members,
                                 Mode mode, std::size_t limit) {
  std::set<Element> have(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size() && members.size() <= limit; ++i)
    for (std::size_t j = 0; j <= i && members.size() <= limit; ++j) {
      const Element c = mode == Mode::meet ? backend.meet(members[i], members[j])
                                           : backend.join(members[i], members[j]);
      if (have.insert(c).second) members.push_back(c);
    }
  return members;
}

std::vector<Element> divisor_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Element> v;
  for (std::uint64_t m = lo; m <= hi; ++m) v.push_back({Universe::divisors, m});
  return v;
}

// Sets f_i(x_i) so that Psi_{S,f_i}(x_i) vanishes; only x_i itself moves.
void zero_diagonal_psi(const SubsetSelection& s, Mode mode, FunctionFamily& fs, std::size_t row) {
  const ClosureSet d = ClosureSet::of_closed(s, mode);
  const Scalar psi = psi_table(s, d, fs).grid(row, row);
  fs.set(row, s[row], fs.value(row, s[row], s.backend()) - psi);
}

std::string format_results(const std::vector<Element>& list, const OrderBackend& backend) {
  std::string out = "[";
  for (std::size_t k = 0; k < list.size(); ++k) out += (k ? " " : "") + backend.name(list[k]);
  return out + "]";
}

}  // namespace

Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

OrderBackend random_lattice(Rng& rng, std::size_t max_size) {
  std::vector<unsigned> family;
  for (;;) {
    std::set<unsigned> sets{15u};
    const auto draws = 2 + below(rng, 5);
    for (std::uint64_t k = 0; k < draws; ++k) sets.insert(static_cast<unsigned>(below(rng, 16)));
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a : std::vector<unsigned>(sets.begin(), sets.end()))
        for (unsigned b : std::vector<unsigned>(sets.begin(), sets.end()))
          grew |= sets.insert(a & b).second;
    }
    if (sets.size() <= max_size) {
      family.assign(sets.begin(), sets.end());
      break;
    }
  }
  shuffle(rng, family);
  std::vector<std::string> names;
  for (unsigned m : family) names.push_back("m" + std::to_string(m));
  std::vector<std::pair<std::string, std::string>> relations;
  for (unsigned a : family)
    for (unsigned b : family)
      if (a != b && (a & b) == a) relations.emplace_back("m" + std::to_string(a), "m" + std::to_string(b));
  shuffle(rng, relations);
  return OrderBackend(build_poset(names, relations));
}

OrderBackend random_poset(Rng& rng, std::size_t max_size) {
  const std::size_t n = 1 + below(rng, max_size);
  std::vector<std::size_t> label(n);
  for (std::size_t k = 0; k < n; ++k) label[k] = k;
  shuffle(rng, label);
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (below(rng, 3) == 0)
        relations.emplace_back("p" + std::to_string(label[i]), "p" + std::to_string(label[j]));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("p" + std::to_string(k));
  return OrderBackend(build_poset(names, relations));
}

Instance random_instance(std::uint64_t seed, std::uint64_t index, InstanceKind kind) {
  Rng rng = case_rng(seed, index * 3 + static_cast<std::uint64_t>(kind));
  const bool divisors = index % 2 == 0;
  const Mode mode = kind == InstanceKind::meet_closed   ? Mode::meet
                    : kind == InstanceKind::join_closed ? Mode::join
                    : (index / 2) % 2                   ? Mode::join
                                                        : Mode::meet;
  const OrderBackend backend = divisors ? OrderBackend::divisors() : random_lattice(rng, 10);
  const std::vector<Element> pool =
      divisors ? divisor_range(1, kind == InstanceKind::arbitrary ? 60 : 36) : backend.all_elements();

  std::vector<Element> members;
  if (kind == InstanceKind::arbitrary) {
    members = pick_distinct(rng, pool, 1 + below(rng, std::min<std::size_t>(8, pool.size())));
  } else {
    std::size_t seeds = 1 + below(rng, 4);
    for (int attempt = 0;; ++attempt) {
      members = close_under(backend, pick_distinct(rng, pool, seeds), mode, 8);
      if (members.size() <= 8) break;
      if (attempt % 8 == 7 && seeds > 1) --seeds;
    }
  }
  SubsetSelection s = SubsetSelection::sorted(backend, std::move(members));

  ClosureSet minimal = kind == InstanceKind::arbitrary ? closure_set(s, mode)
                                                       : ClosureSet::of_closed(s, mode);
  std::vector<Element> wide_elems = minimal.elements();
  {
    const std::vector<Element> extra_pool = divisors ? divisor_range(1, 120) : backend.all_elements();
    std::vector<Element> extras;
    for (const Element& e : extra_pool)
      if (!minimal.contains(e)) extras.push_back(e);
    for (const Element& e : pick_distinct(rng, extras, 1 + below(rng, 2))) wide_elems.push_back(e);
  }
  std::optional<ClosureSet> wide;
  if (wide_elems.size() > minimal.size())
    wide.emplace(s, mode, sort_linear_extension(backend, wide_elems));

  const std::size_t n = s.size();
  const auto shape = below(rng, 20);
  FunctionFamily fs = FunctionFamily::tabulate(n, wide_elems,
                                               [&](std::size_t, Element) { return random_scalar(rng); });
  if (shape < 4) {
    fs = FunctionFamily::replicate(n, fs.row(0));
  } else if (shape == 4) {
    fs = FunctionFamily::tabulate(n, wide_elems, [](std::size_t, Element) { return Scalar(0); });
  } else if (shape == 5) {
    const auto row = below(rng, n);
    for (const Element& e : wide_elems) fs.set(row, e, 0);
  }
  if (kind != InstanceKind::arbitrary && shape != 4)
    for (std::size_t i = 0; i < n; ++i)
      if (below(rng, 3) == 0) zero_diagonal_psi(s, mode, fs, i);

  return Instance{std::move(s), mode, std::move(fs), std::move(minimal), std::move(wide)};
}

std::string describe(const Instance& inst) {
  const auto& backend = inst.subset.backend();
  std::ostringstream out;
  if (backend.is_divisor_lattice()) {
    out << "backend: divisors\n";
  } else {
    const FinitePoset& p = *backend.poset();
    out << "backend: poset elements:";
    for (const auto& name : p.names()) out << ' ' << name;
    out << " covers:";
    for (auto [a, b] : p.covers()) out << ' ' << p.name(a) << '<' << p.name(b);
    out << '\n';
  }
  out << "mode: " << to_string(inst.mode) << '\n';
  out << "S: " << format_results(inst.subset.members(), backend) << '\n';
  out << "D: " << format_results(inst.minimal.elements(), backend) << '\n';
  if (inst.wide) out << "D+: " << format_results(inst.wide->elements(), backend) << '\n';
  for (std::size_t i = 0; i < inst.functions.rows(); ++i) {
    out << 'f' << i + 1 << ':';
    for (const auto& [e, v] : inst.functions.row(i)) out << ' ' << backend.name(e) << '=' << v;
    out << '\n';
  }
  return out.str();
}

std::vector<CheckResult> check_structure(const Instance& inst, const Options& opts) {
  std::vector<CheckResult> out;
  const auto& s = inst.subset;
  const Matrix direct = build_matrix(s, inst.functions, inst.mode);

  auto product_of = [&](const ClosureSet& d) {
    Factorization f = factorize(s, d, inst.functions);
    if (!opts.negate_psi) return f.product;
    Matrix neg = f.psi;
    for (std::size_t i = 0; i < neg.rows(); ++i)
      for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
    return multiply(hadamard(f.incidence, neg), f.incidence.transpose());
  };

  const Matrix p_min = product_of(inst.minimal);
  out.push_back({"factorization", p_min == direct, "Upsilon*E^T differs from the direct matrix"});
  if (inst.wide) {
    const Matrix p_wide = product_of(*inst.wide);
    out.push_back({"factorization", p_wide == direct,
                   "Upsilon*E^T over the enlarged closure set differs from the direct matrix"});
    out.push_back({"closure-invariance", p_wide == p_min, "product depends on the closure set"});
  }

  out.push_back({"transpose-duality", build_matrix(s, inst.functions, inst.mode, true) == direct.transpose(),
                 "column-adjusted output is not the transpose"});

  const PointFunction& f = inst.functions.row(0);
  const Matrix ordinary = build_matrix(s, FunctionFamily::replicate(s.size(), f), inst.mode);
  bool ok = true;
  for (std::size_t i = 0; i < s.size() && ok; ++i)
    for (std::size_t j = 0; j < s.size() && ok; ++j) {
      const Element c = s.combine(i, j, inst.mode);
      ok = ordinary(i, j) == ordinary(j, i) && ordinary(i, j) == f.at(c);
    }
  out.push_back({"equal-row-specialization", ok, "equal rows do not give the symmetric ordinary matrix"});
  return out;
}

std::vector<CheckResult> check_psi(const Instance& inst) {
  std::vector<CheckResult> out;
  auto check_one = [&](const ClosureSet& d) {
    const PsiTable inductive = psi_table(inst.subset, d, inst.functions);
    out.push_back({"psi-reconstruction", psi_reconstructs(inductive, d, inst.functions),
                   "f is not the up/down-set sum of Psi"});
    out.push_back({"psi-mobius-form", inductive.grid == psi_table_mobius(inst.subset, d, inst.functions).grid,
                   "inductive and Moebius-sum Psi differ"});
  };
  check_one(inst.minimal);
  if (inst.wide) check_one(*inst.wide);
  return out;
}

std::vector<CheckResult> check_closed(const Instance& inst) {
  std::vector<CheckResult> out;
  const auto& s = inst.subset;
  const auto& fs = inst.functions;
  const std::size_t n = s.size();
  const Matrix m = build_matrix(s, fs, inst.mode);
  const auto diag = diagonal_psi(s, fs, inst.mode);
  const Scalar det = det_oracle(m);

  out.push_back({"determinant", theorem_det(s, fs, inst.mode) == det,
                 "product of diagonal Psi differs from the oracle determinant"});

  std::size_t first_zero = 0;
  for (std::size_t i = 0; i < n && !first_zero; ++i)
    if (diag[i].is_zero()) first_zero = i + 1;
  if (first_zero == 0) {
    const Matrix b = theorem_inverse(s, fs, inst.mode);
    const Matrix id = Matrix::identity(n);
    out.push_back({"inverse", multiply(b, m) == id && multiply(m, b) == id && !det.is_zero(),
                   "theta-recursion inverse is not a two-sided inverse"});
  } else {
    bool raised = false;
    try {
      (void)theorem_inverse(s, fs, inst.mode);
    } catch (const SingularPsiError& e) {
      raised = e.index() == first_zero;
    }
    out.push_back({"inverse", det.is_zero() && raised,
                   "vanishing diagonal Psi without a zero determinant or a SingularPsiError"});
  }

  bool rank_ok = true;
  std::string rank_detail = "rank outside the trichotomy";
  try {
    const RankReport r = rank_report(s, fs, inst.mode);
    if (!m.is_zero()) {
      rank_ok = (r.exact == n) == (r.k == 0);
      if (r.k > 0) rank_ok = rank_ok && n - r.k <= r.exact && r.exact <= n - 1;
    } else {
      rank_ok = r.exact == 0;
    }
  } catch (const TheoremMismatchError& e) {
    rank_ok = false;
    rank_detail = e.what();
  }
  out.push_back({"rank-trichotomy", rank_ok, rank_detail});

  out.push_back({"upsilon-recovery",
                 psi_from_matrix(m, s, inst.mode) == factorize(s, inst.minimal, fs).upsilon,
                 "M times the Moebius matrix does not recover Upsilon"});

  bool ord_ok = true;
  std::string ord_detail = "ordinary rank differs from n - k";
  try {
    const PointFunction& f = fs.row(0);
    ord_ok = ordinary_rank(s, f, inst.mode) ==
             rank_oracle(build_matrix(s, FunctionFamily::replicate(n, f), inst.mode));
  } catch (const TheoremMismatchError& e) {
    ord_ok = false;
    ord_detail = e.what();
  }
  out.push_back({"ordinary-rank", ord_ok, ord_detail});
  return out;
}

Instance antichain_over_bottom(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1 || k >= n) throw DomainError("antichain construction needs 0 <= k < n");
  Rng rng = case_rng(seed, n * 1000 + k);
  std::vector<std::string> names{"b"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t a = 1; a < n; ++a) {
    names.push_back("a" + std::to_string(a));
    covers.emplace_back("b", names.back());
  }
  OrderBackend backend(build_poset(names, covers));
  SubsetSelection s(backend, backend.all_elements());
  auto nonzero = [&] {
    Scalar v;
    do v = random_scalar(rng);
    while (v.is_zero());
    return v;
  };
  FunctionFamily fs = FunctionFamily::tabulate(n, s.members(), [&](std::size_t, Element) { return nonzero(); });
  for (std::size_t i = 1; i < n; ++i) {
    const Scalar at_bottom = fs.value(i, s[0], backend);
    if (i <= k) {
      fs.set(i, s[i], at_bottom);
    } else if (fs.value(i, s[i], backend) == at_bottom) {
      fs.set(i, s[i], at_bottom + 1);
    }
  }
  ClosureSet d = ClosureSet::of_closed(s, Mode::meet);
  return Instance{std::move(s), Mode::meet, std::move(fs), std::move(d), std::nullopt};
}

Instance pentagon_example() {
  OrderBackend backend(build_poset({"x1", "x2", "x3", "x4", "x5"},
                                   {{"x1", "x2"}, {"x1", "x3"}, {"x3", "x4"}, {"x4", "x5"}, {"x2", "x5"}}));
  SubsetSelection s(backend, backend.all_elements());
  const int table[5][5] = {
      {0, 0, 0, 0, 0},  // f1
      {0, 1, 0, 0, 0},  // f2(x2) = 1
      {1, 0, 1, 0, 0},  // f3(x1) = f3(x3) = 1
      {0, 0, 1, 1, 0},  // f4(x3) = f4(x4) = 1
      {0, 0, 0, 1, 1},  // f5(x4) = f5(x5) = 1
  };
  FunctionFamily fs = FunctionFamily::tabulate(
      5, s.members(), [&](std::size_t row, Element e) { return Scalar(table[row][e.value]); });
  ClosureSet d = ClosureSet::of_closed(s, Mode::meet);
  return Instance{std::move(s), Mode::meet, std::move(fs), std::move(d), std::nullopt};
}

std::vector<CheckResult> check_rank_bounds_attained() {
  std::vector<CheckResult> out;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      const Instance inst = antichain_over_bottom(n, k, 7);
      const RankReport r = rank_report(inst.subset, inst.functions, Mode::meet);
      out.push_back({"rank-lower-bound-attained", r.k == k && r.exact == n - k,
                     "antichain construction n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " gave rank " + std::to_string(r.exact)});
    }
  const Instance p = pentagon_example();
  const RankReport r = rank_report(p.subset, p.functions, Mode::meet);
  out.push_back({"rank-upper-bound-attained", r.k == 4 && r.exact == 4 && r.upper == 4,
                 "pentagon example gave k=" + std::to_string(r.k) + " rank " + std::to_string(r.exact)});
  return out;
}

bool Report::passed() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const PropertyTally& t) { return t.failed == 0; });
}

Report run(std::uint64_t seed, std::size_t cases, const Options& opts) {
  if (cases == 0) throw DomainError("verify needs at least one case");
  Report report;
  report.cases = cases;
  auto record = [&](const std::vector<CheckResult>& results, const std::string& where) {
    for (const auto& r : results) {
      auto it = std::find_if(report.tallies.begin(), report.tallies.end(),
                             [&](const PropertyTally& t) { return t.property == r.property; });
      if (it == report.tallies.end()) it = report.tallies.insert(report.tallies.end(), PropertyTally{r.property});
      ++it->checked;
      if (!r.ok) {
        ++it->failed;
        if (!report.counterexample)
          report.counterexample = r.property + ": " + r.detail + "\n" + where;
      }
    }
  };
  auto guarded = [&](auto&& fn, const Instance& inst, const std::string& label) {
    try {
      record(fn(), label + describe(inst));
    } catch (const std::exception& e) {
      record({{"no-exception", false, e.what()}}, label + describe(inst));
    }
  };

  for (std::size_t index = 0; index < cases; ++index) {
    const std::string label = "case " + std::to_string(index) + "\n";
    const Instance arbitrary = random_instance(seed, index, InstanceKind::arbitrary);
    guarded([&] { return check_structure(arbitrary, opts); }, arbitrary, label);
    guarded([&] { return check_psi(arbitrary); }, arbitrary, label);

    const Instance closed = random_instance(
        seed, index, index % 2 ? InstanceKind::join_closed : InstanceKind::meet_closed);
    guarded([&] { return check_structure(closed, opts); }, closed, label);
    guarded([&] { return check_psi(closed); }, closed, label);
    guarded([&] { return check_closed(closed); }, closed, label);
  }
  record(check_rank_bounds_attained(), "rank bound constructions\n");
  return report;
}

}  // namespace rowadj::verify
