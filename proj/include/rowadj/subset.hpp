#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rowadj/matrix.hpp"
#include "rowadj/poset.hpp"

namespace rowadj {

enum class Mode { meet, join };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Ordered subset S = {x_1, ..., x_n}: distinct members with
/// x_i <= x_j implying i <= j.
class SubsetSelection {
 public:
  /// Validates distinctness and ordering; throws OrderingError otherwise.
  SubsetSelection(OrderBackend backend, std::vector<Element> members);

  /// Sorts `members` into a stable linear extension first.
  static SubsetSelection sorted(OrderBackend backend, std::vector<Element> members);

  const OrderBackend& backend() const { return backend_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Element& operator[](std::size_t i) const { return members_[i]; }

  Element combine(std::size_t i, std::size_t j, Mode mode) const;

 private:
  OrderBackend backend_;
  std::vector<Element> members_;
};

/// A set D (meet mode) or D' (join mode) containing every x_i ^ x_j
/// (resp. x_i v x_j), ordered by a linear extension.
class ClosureSet {
 public:
  /// Validates a caller-supplied admissible set; throws
  /// InadmissibleClosureError if a pairwise meet/join is missing, or
  /// OrderingError if the list is not a linear extension.
  ClosureSet(const SubsetSelection& s, Mode mode, std::vector<Element> elements);

  /// D = S itself, requiring S to be closed (NotClosedError otherwise).
  static ClosureSet of_closed(const SubsetSelection& s, Mode mode);

  Mode mode() const { return mode_; }
  const OrderBackend& backend() const { return backend_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Element& operator[](std::size_t k) const { return elements_[k]; }

  bool contains(Element e) const;
  /// Position of `e` in the closure set, or size() if absent.
  std::size_t position(Element e) const;

 private:
  ClosureSet(OrderBackend backend, Mode mode, std::vector<Element> elements)
      : backend_(std::move(backend)), mode_(mode), elements_(std::move(elements)) {}

  friend ClosureSet closure_set(const SubsetSelection&, Mode);

  OrderBackend backend_;
  Mode mode_;
  std::vector<Element> elements_;
};

/// Minimal admissible set {x_i ^ x_j} (or joins), ordered by a stable linear
/// extension of first appearance (members of S first, then new elements in
/// row-major pair order).
ClosureSet closure_set(const SubsetSelection& s, Mode mode);

bool is_closed(const SubsetSelection& s, Mode mode);

/// Meet mode: (i,j) = 1 iff d_j <= x_i. Join mode: (i,j) = 1 iff x_i <= d'_j.
Matrix incidence_matrix(const SubsetSelection& s, const ClosureSet& d);

/// zeta(i,j) = 1 iff d_i <= d_j.
Matrix zeta_matrix(const OrderBackend& backend, const std::vector<Element>& elements);

/// Matrix of mu(d_i, d_j) on the poset induced by `elements`, via the
/// recursion mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z).
Matrix mobius_matrix(const OrderBackend& backend, const std::vector<Element>& elements);
Matrix mobius_matrix(const ClosureSet& d);

}  // namespace rowadj
