#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rowadj/row_adjusted.hpp"

namespace rowadj::verify {

using Rng = std::mt19937_64;

/// Deterministic generator for case `index` of a run seeded with `seed`.
Rng case_rng(std::uint64_t seed, std::uint64_t index);

enum class InstanceKind { arbitrary, meet_closed, join_closed };

struct Instance {
  SubsetSelection subset;
  Mode mode;
  FunctionFamily functions;  // defined on every element of `wide` (hence of `minimal`)
  ClosureSet minimal;
  std::optional<ClosureSet> wide;  // strict admissible superset of `minimal`, when one exists
};

/// Random lattice: an intersection-closed family of subsets of a 4-set
/// (plus the full set) ordered by inclusion, presented in shuffled order.
OrderBackend random_lattice(Rng& rng, std::size_t max_size);
/// Random finite poset (not necessarily a lattice) on 1..max_size elements.
OrderBackend random_poset(Rng& rng, std::size_t max_size);

/// Backend alternates between divisors and random lattices with `index`;
/// arbitrary instances also alternate the mode.
Instance random_instance(std::uint64_t seed, std::uint64_t index, InstanceKind kind);

std::string describe(const Instance& inst);

struct CheckResult {
  std::string property;
  bool ok;
  std::string detail;
};

struct Options {
  // Harness self-test: flip the sign of Xi before multiplying out.
  bool negate_psi = false;
};

/// Factorization against the direct matrix for the minimal and the wide
/// closure set, D-invariance, transpose duality, equal-row specialization.
std::vector<CheckResult> check_structure(const Instance& inst, const Options& opts = {});
/// Reconstruction identities and inductive-vs-Moebius agreement on every
/// Psi table the instance produces.
std::vector<CheckResult> check_psi(const Instance& inst);
/// Determinant, inverse (both directions), rank trichotomy, Upsilon recovery
/// and ordinary rank. Requires a closed instance.
std::vector<CheckResult> check_closed(const Instance& inst);

/// Bottom element under an antichain: n elements, the first k of x_2..x_n
/// get f_i(x_i) = f_i(x_1) so their diagonal Psi vanishes. Meet mode.
Instance antichain_over_bottom(std::size_t n, std::size_t k, std::uint64_t seed);
/// The pentagon lattice with its five-row 0/1 function family (k = 4, rank 4).
Instance pentagon_example();

/// Both rank bounds attained by the two constructions.
std::vector<CheckResult> check_rank_bounds_attained();

struct PropertyTally {
  std::string property;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct Report {
  std::size_t cases = 0;
  std::vector<PropertyTally> tallies;
  std::optional<std::string> counterexample;

  bool passed() const;
};

/// Runs `cases` arbitrary and `cases` closed instances (meet/join alternating).
Report run(std::uint64_t seed, std::size_t cases, const Options& opts = {});

}  // namespace rowadj::verify
