#include "rowadj/subset.hpp"

#include <algorithm>
#include <set>

#include "rowadj/error.hpp"

namespace rowadj {

std::string_view to_string(Mode mode) { return mode == Mode::meet ? "meet" : "join"; }

Mode parse_mode(std::string_view text) {
  if (text == "meet") return Mode::meet;
  if (text == "join") return Mode::join;
  throw ParseError("mode must be 'meet' or 'join', got '" + std::string(text) + "'");
}

namespace {

void check_linear_extension(const OrderBackend& backend, const std::vector<Element>& list,
                            std::string_view what) {
  std::set<Element> seen;
  for (const Element& e : list) {
    backend.check(e);
    if (!seen.insert(e).second)
      throw OrderingError(std::string(what) + " lists " + backend.name(e) + " twice");
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (backend.leq(list[i], list[j]))
        throw OrderingError(std::string(what) + " is not ordered by a linear extension: " +
                            backend.name(list[i]) + " <= " + backend.name(list[j]) +
                            " but appears after it");
}

}  // namespace

SubsetSelection::SubsetSelection(OrderBackend backend, std::vector<Element> members)
    : backend_(std::move(backend)), members_(std::move(members)) {
  if (members_.empty()) throw DomainError("subset selection must be non-empty");
  check_linear_extension(backend_, members_, "subset");
}

SubsetSelection SubsetSelection::sorted(OrderBackend backend, std::vector<Element> members) {
  auto ordered = sort_linear_extension(backend, std::move(members));
  return SubsetSelection(std::move(backend), std::move(ordered));
}

Element SubsetSelection::combine(std::size_t i, std::size_t j, Mode mode) const {
  return mode == Mode::meet ? backend_.meet(members_[i], members_[j])
                            : backend_.join(members_[i], members_[j]);
}

ClosureSet::ClosureSet(const SubsetSelection& s, Mode mode, std::vector<Element> elements)
    : backend_(s.backend()), mode_(mode), elements_(std::move(elements)) {
  check_linear_extension(backend_, elements_, "closure set");
  const std::set<Element> members(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) {
      const Element c = s.combine(i, j, mode);
      if (!members.contains(c))
        throw InadmissibleClosureError("closure set lacks " + backend_.name(c) + " = " +
                                       backend_.name(s[i]) +
                                       (mode == Mode::meet ? " ^ " : " v ") + backend_.name(s[j]));
    }
}

ClosureSet ClosureSet::of_closed(const SubsetSelection& s, Mode mode) {
  if (!is_closed(s, mode))
    throw NotClosedError("subset is not " + std::string(to_string(mode)) + " closed");
  return ClosureSet(s.backend(), mode, s.members());
}

bool ClosureSet::contains(Element e) const { return position(e) != elements_.size(); }

std::size_t ClosureSet::position(Element e) const {
  return static_cast<std::size_t>(std::find(elements_.begin(), elements_.end(), e) -
                                  elements_.begin());
}

ClosureSet closure_set(const SubsetSelection& s, Mode mode) {
  std::vector<Element> candidates = s.members();
  std::set<Element> seen(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Element c = s.combine(i, j, mode);
      if (seen.insert(c).second) candidates.push_back(c);
    }
  return ClosureSet(s.backend(), mode, sort_linear_extension(s.backend(), std::move(candidates)));
}

bool is_closed(const SubsetSelection& s, Mode mode) {
  const std::set<Element> members(s.members().begin(), s.members().end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!members.contains(s.combine(i, j, mode))) return false;
  return true;
}

Matrix incidence_matrix(const SubsetSelection& s, const ClosureSet& d) {
  if (!(s.backend() == d.backend()))
    throw BackendMismatchError("subset and closure set use different backends");
  Matrix e(s.size(), d.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      const bool related = d.mode() == Mode::meet ? s.backend().leq(d[j], s[i])
                                                  : s.backend().leq(s[i], d[j]);
      if (related) e(i, j) = 1;
    }
  return e;
}

Matrix zeta_matrix(const OrderBackend& backend, const std::vector<Element>& elements) {
  Matrix z(elements.size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (backend.leq(elements[i], elements[j])) z(i, j) = 1;
  return z;
}

Matrix mobius_matrix(const OrderBackend& backend, const std::vector<Element>& elements) {
  check_linear_extension(backend, elements, "element list");
  const std::size_t m = elements.size();
  Matrix mu(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    mu(i, i) = 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!backend.leq(elements[i], elements[j])) continue;
      Scalar sum = 0;
      for (std::size_t k = i; k < j; ++k)
        if (backend.leq(elements[i], elements[k]) && backend.leq(elements[k], elements[j]))
          sum += mu(i, k);
      mu(i, j) = -sum;
    }
  }
  return mu;
}

Matrix mobius_matrix(const ClosureSet& d) { return mobius_matrix(d.backend(), d.elements()); }

}  // namespace rowadj
