#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "rowadj/error.hpp"
#include "rowadj/numtheory.hpp"
#include "rowadj/row_adjusted.hpp"
#include "rowadj/text_io.hpp"
#include "rowadj/verify.hpp"

namespace rowadj::cli {

namespace {

enum class Format { human, machine };

struct RunConfig {
  std::string poset_file;
  bool divisors = false;
  std::string set;
  std::string family;
  std::string functions_file;
  std::string mode = "meet";
  bool column_adjusted = false;
  std::string format = "human";
};

// Everything resolved from a RunConfig.
struct Problem {
  OrderBackend backend;
  std::optional<SubsetSelection> subset;  // absent only for `mobius` on a whole poset
  Mode mode;
  Format format;
  bool column_adjusted;
};

Format parse_format(const std::string& f) {
  if (f == "human") return Format::human;
  if (f == "machine") return Format::machine;
  throw ParseError("format must be 'human' or 'machine'");
}

Problem resolve(const RunConfig& cfg, bool subset_required) {
  if (cfg.divisors == !cfg.poset_file.empty())
    throw ParseError("exactly one of --poset FILE or --divisors is required");
  std::optional<std::vector<std::string>> ids;
  std::optional<OrderBackend> backend;
  if (cfg.divisors) {
    backend = OrderBackend::divisors();
  } else {
    PosetDescription desc = parse_poset(read_file(cfg.poset_file));
    backend = std::move(desc.backend);
    ids = std::move(desc.set);
  }
  if (!cfg.set.empty()) ids = split_list(cfg.set);

  Problem p{*backend, std::nullopt, parse_mode(cfg.mode), parse_format(cfg.format),
            cfg.column_adjusted};
  if (ids) {
    if (ids->empty()) throw ParseError("the set S is empty");
    std::vector<Element> members;
    for (const auto& id : *ids) members.push_back(p.backend.element(id));
    p.subset.emplace(p.backend, std::move(members));
  } else if (!p.backend.is_divisor_lattice()) {
    if (subset_required) p.subset.emplace(p.backend, p.backend.all_elements());
  } else {
    throw ParseError("the divisor lattice needs --set or a 'set:' line");
  }
  return p;
}

FunctionFamily resolve_family(const RunConfig& cfg, const Problem& p) {
  const SubsetSelection& s = *p.subset;
  std::string file = cfg.functions_file;
  if (!cfg.family.empty() && !file.empty())
    throw ParseError("--family and --functions are mutually exclusive");
  if (cfg.family.starts_with("table:")) file = cfg.family.substr(6);
  if (!file.empty()) return parse_functions(read_file(file), p.backend, s.size());
  if (cfg.family.empty()) throw ParseError("a function family is required (--family or --functions)");

  const FamilyGenerator gen = FamilyGenerator::parse(cfg.family);
  if (!p.backend.is_divisor_lattice() && gen.kind() != FamilyGenerator::Kind::constant)
    throw ParseError("family '" + cfg.family + "' needs integer elements; use --divisors");
  const ClosureSet d = closure_set(s, p.mode);
  return FunctionFamily::tabulate(s.size(), d.elements(), [&](std::size_t, Element e) {
    return p.backend.is_divisor_lattice() ? gen(e.value) : gen(1);
  });
}

std::string join_names(const OrderBackend& backend, const std::vector<Element>& list) {
  std::string out;
  for (std::size_t k = 0; k < list.size(); ++k) out += (k ? " " : "") + backend.name(list[k]);
  return out;
}

std::string join_scalars(std::span<const Scalar> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? " " : "") + values[k].str();
  return out;
}

void print_matrix(std::ostream& out, Format format, const std::string& key, const Matrix& m) {
  if (format == Format::human) {
    out << format_matrix(m);
    return;
  }
  out << key << ".rows=" << m.rows() << '\n' << key << ".cols=" << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    out << key << ".row" << i + 1 << '=' << join_scalars(m.row(i)) << '\n';
}

std::string mode_word(Mode mode) { return std::string(to_string(mode)); }

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const Problem p = resolve(cfg, true);
  const FunctionFamily fs = resolve_family(cfg, p);
  const Matrix m = build_matrix(*p.subset, fs, p.mode, p.column_adjusted);
  const std::string adjusted = p.column_adjusted ? "column" : "row";
  if (p.format == Format::machine) {
    out << "command=matrix\nmode=" << mode_word(p.mode) << "\nadjusted=" << adjusted << '\n';
  } else {
    out << adjusted << "-adjusted " << mode_word(p.mode) << " matrix on S = {"
        << join_names(p.backend, p.subset->members()) << "}\n";
  }
  print_matrix(out, p.format, "matrix", m);
  return kOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Problem p = resolve(cfg, true);
  const SubsetSelection& s = *p.subset;
  const FunctionFamily fs = resolve_family(cfg, p);
  const Matrix m = build_matrix(s, fs, p.mode);
  const bool human = p.format == Format::human;
  auto shown = [&](const Matrix& a) { return p.column_adjusted ? a.transpose() : a; };
  const std::size_t n = s.size();

  if (human) {
    out << (p.column_adjusted ? "column" : "row") << "-adjusted " << mode_word(p.mode)
        << " matrix on S = {" << join_names(p.backend, s.members()) << "}\n";
  } else {
    out << "command=analyze\nmode=" << mode_word(p.mode)
        << "\nadjusted=" << (p.column_adjusted ? "column" : "row") << "\nn=" << n << '\n';
  }
  print_matrix(out, p.format, "matrix", shown(m));

  const Scalar det = det_oracle(m);
  if (!is_closed(s, p.mode)) {
    const std::size_t rank = rank_oracle(m);
    if (human) {
      out << "NOTCLOSED: S is not " << mode_word(p.mode) << " closed; oracle results only\n"
          << "rank: " << rank << "\ndeterminant: " << det << "\n";
    } else {
      out << "closed=false\nbanner=NOTCLOSED\nrank.exact=" << rank << "\ndet=" << det << '\n';
    }
    if (!det.is_zero()) {
      if (human) out << "inverse:\n";
      else out << "invertible=true\n";
      print_matrix(out, p.format, "inverse", shown(inverse_oracle(m)));
    } else {
      out << (human ? "invertible: no\n" : "invertible=false\n");
    }
    return kOk;
  }

  const auto diag = diagonal_psi(s, fs, p.mode);
  const RankReport rank = rank_report(s, fs, p.mode);
  const Scalar theorem = theorem_det(s, fs, p.mode);
  if (!(theorem == det))
    throw TheoremMismatchError("determinant " + theorem.str() + " from Psi disagrees with oracle " +
                               det.str());
  std::optional<Matrix> inverse;
  if (!det.is_zero()) {
    if (rank.k != 0)
      throw TheoremMismatchError("a diagonal Psi vanishes but the determinant is " + det.str());
    inverse = theorem_inverse(s, fs, p.mode);
    if (!(*inverse == inverse_oracle(m)))
      throw TheoremMismatchError("theta-recursion inverse disagrees with the oracle inverse");
  } else if (rank.k == 0) {
    throw TheoremMismatchError("all diagonal Psi are nonzero but the determinant vanishes");
  }

  if (human) {
    out << "S is " << mode_word(p.mode) << " closed (n=" << n << ")\n"
        << "diagonal Psi: " << join_scalars(diag) << '\n'
        << "k=" << rank.k << '\n'
        << "rank bounds: [" << rank.lower << ", " << rank.upper << "]\n"
        << "exact rank: " << rank.exact << '\n'
        << "determinant: " << theorem << '\n';
    if (inverse) {
      out << "inverse:\n";
      print_matrix(out, p.format, "inverse", shown(*inverse));
    } else {
      out << "invertible: no\n";
    }
  } else {
    out << "closed=true\npsi.diag=" << join_scalars(diag) << "\nk=" << rank.k
        << "\nrank.lower=" << rank.lower << "\nrank.upper=" << rank.upper
        << "\nrank.exact=" << rank.exact << "\ndet=" << theorem
        << "\ninvertible=" << (inverse ? "true" : "false") << '\n';
    if (inverse) print_matrix(out, p.format, "inverse", shown(*inverse));
  }
  return kOk;
}

int cmd_closure(const RunConfig& cfg, std::ostream& out) {
  const Problem p = resolve(cfg, true);
  const ClosureSet d = closure_set(*p.subset, p.mode);
  const bool closed = is_closed(*p.subset, p.mode);
  if (p.format == Format::machine) {
    out << "command=closure\nmode=" << mode_word(p.mode) << "\nm=" << d.size()
        << "\nclosure=" << join_names(p.backend, d.elements())
        << "\nclosed=" << (closed ? "true" : "false") << '\n';
  } else {
    out << mode_word(p.mode) << " closure (m=" << d.size()
        << "): " << join_names(p.backend, d.elements()) << '\n'
        << "S is " << (closed ? "" : "not ") << mode_word(p.mode) << " closed\n";
  }
  return kOk;
}

int cmd_mobius(const RunConfig& cfg, std::ostream& out) {
  const Problem p = resolve(cfg, false);
  const std::vector<Element> elems =
      p.subset ? closure_set(*p.subset, p.mode).elements() : p.backend.all_elements();
  const Matrix mu = mobius_matrix(p.backend, elems);
  if (p.format == Format::machine) {
    out << "command=mobius\nelements=" << join_names(p.backend, elems) << '\n';
  } else {
    out << "Moebius matrix over " << join_names(p.backend, elems) << '\n';
  }
  print_matrix(out, p.format, "mobius", mu);
  return kOk;
}

int cmd_verify(std::uint64_t seed, std::size_t cases, const std::string& fault,
               const std::string& format, std::ostream& out) {
  if (cases == 0) throw ParseError("--cases must be at least 1");
  const Format fmt = parse_format(format);
  verify::Options opts;
  if (fault == "negate-psi") opts.negate_psi = true;
  else if (!fault.empty()) throw ParseError("unknown fault '" + fault + "'");

  const verify::Report report = verify::run(seed, cases, opts);
  if (fmt == Format::machine) {
    out << "command=verify\nseed=" << seed << "\ncases=" << cases << '\n';
    for (const auto& t : report.tallies)
      out << "property." << t.property << "=" << (t.failed ? "fail" : "pass") << ' ' << t.checked
          << ' ' << t.failed << '\n';
    out << "result=" << (report.passed() ? "pass" : "fail") << '\n';
  } else {
    out << "verify: seed " << seed << ", " << cases << " cases\n";
    for (const auto& t : report.tallies)
      out << (t.failed ? "FAIL " : "PASS ") << t.property << " (" << t.checked << " checks, "
          << t.failed << " failed)\n";
    out << (report.passed() ? "all properties hold\n" : "property violations found\n");
  }
  if (report.counterexample) out << "first counterexample:\n" << *report.counterexample;
  return report.passed() ? kOk : kMismatch;
}

void add_problem_options(CLI::App* sub, RunConfig& cfg, bool needs_family) {
  auto* poset = sub->add_option("--poset", cfg.poset_file, "poset description file");
  auto* div = sub->add_flag("--divisors", cfg.divisors, "use the divisor lattice on Z+");
  poset->excludes(div);
  sub->add_option("--set", cfg.set, "elements of S, ordered by a linear extension");
  sub->add_option("--mode", cfg.mode, "meet or join")->check(CLI::IsMember({"meet", "join"}));
  sub->add_option("--format", cfg.format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  if (needs_family) {
    auto* fam = sub->add_option("--family", cfg.family, "id | const:<c> | pow:<r> | table:<file>");
    auto* fun = sub->add_option("--functions", cfg.functions_file, "function family file");
    fam->excludes(fun);
    sub->add_flag("--column-adjusted", cfg.column_adjusted, "print the transpose");
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return kParseError;
    case ErrorKind::structure: return kStructureError;
    case ErrorKind::missing_value: return kMissingValue;
    case ErrorKind::mismatch: return kMismatch;
    case ErrorKind::algebra: return kFailure;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Row-adjusted meet and join matrices over finite posets and the divisor lattice",
               "rowadj"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* matrix = app.add_subcommand("matrix", "print the row-adjusted matrix");
  add_problem_options(matrix, cfg, true);
  auto* analyze = app.add_subcommand("analyze", "rank, determinant and inverse with oracle cross-checks");
  add_problem_options(analyze, cfg, true);
  auto* closure = app.add_subcommand("closure", "meet or join closure of S");
  add_problem_options(closure, cfg, false);
  auto* mobius = app.add_subcommand("mobius", "Moebius matrix of the closure set (or whole poset)");
  add_problem_options(mobius, cfg, false);

  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::string fault;
  std::string verify_format = "human";
  auto* verify_cmd = app.add_subcommand("verify", "randomized property suite");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--cases", cases, "number of random cases");
  verify_cmd->add_option("--format", verify_format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  verify_cmd->add_option("--inject-fault", fault)->group("");

  std::vector<std::string> argv_storage{"rowadj"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*matrix) return cmd_matrix(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*closure) return cmd_closure(cfg, out);
    if (*mobius) return cmd_mobius(cfg, out);
    if (*verify_cmd) return cmd_verify(seed, cases, fault, verify_format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kFailure;
}

}  // namespace rowadj::cli
