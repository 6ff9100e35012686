#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rowadj {

enum class Universe : std::uint8_t { finite_poset, divisors };

/// Handle for an element of some order backend.
///
/// For a finite poset `value` is the element's position in the stored linear
/// extension; for the divisor lattice it is the positive integer itself.
struct Element {
  Universe universe = Universe::finite_poset;
  std::uint64_t value = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Finite poset stored as its full order relation.
///
/// Element indices always form a linear extension: a <= b with a != b implies
/// index(a) < index(b).
class FinitePoset {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of the element with the given identifier, throwing UnknownElementError.
  std::size_t index_of(std::string_view name) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }

  /// Cover pairs (lower, upper), i.e. the transitive reduction of the order.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  /// Greatest lower bound; throws NoMeetError if it does not exist.
  std::size_t meet(std::size_t a, std::size_t b) const;
  /// Least upper bound; throws NoJoinError if it does not exist.
  std::size_t join(std::size_t a, std::size_t b) const;

 private:
  friend FinitePoset build_poset(const std::vector<std::string>&,
                                 const std::vector<std::pair<std::string, std::string>>&);

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Builds a poset from `elements` (input order) and relation pairs lower < upper.
///
/// The pairs may include non-cover relations; the stored covers are the
/// transitive reduction. Elements mentioned only in `relations` are appended
/// in order of first appearance. The stored order is the stable topological
/// sort of the input order.
FinitePoset build_poset(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& relations);

/// Either a shared finite poset or the (infinite) divisor lattice on Z+.
class OrderBackend {
 public:
  static OrderBackend divisors();
  explicit OrderBackend(FinitePoset poset);

  Universe universe() const { return universe_; }
  bool is_divisor_lattice() const { return universe_ == Universe::divisors; }
  /// Null for the divisor lattice.
  const FinitePoset* poset() const { return poset_.get(); }

  bool leq(Element a, Element b) const;
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;

  /// Looks up an identifier (a poset name, or a positive integer literal).
  Element element(std::string_view id) const;
  std::string name(Element e) const;

  /// Elements in the backend order; for a finite poset, all of them.
  std::vector<Element> all_elements() const;

  void check(Element e) const;

  friend bool operator==(const OrderBackend& a, const OrderBackend& b) {
    return a.universe_ == b.universe_ && a.poset_ == b.poset_;
  }

 private:
  OrderBackend() = default;

  Universe universe_ = Universe::divisors;
  std::shared_ptr<const FinitePoset> poset_;
};

/// Stable topological sort: repeatedly takes the earliest listed element that
/// has no unplaced strict predecessor in the list.
std::vector<Element> sort_linear_extension(const OrderBackend& backend,
                                           std::vector<Element> elements);

}  // namespace rowadj
