#include "rowadj/poset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "rowadj/error.hpp"

namespace rowadj {

std::size_t FinitePoset::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownElementError("unknown element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

// A greatest lower bound, if any, is above every common lower bound, so it is
// the common lower bound with the largest index in the linear extension.
std::size_t FinitePoset::meet(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z <= std::min(a, b); ++z)
    if (leq(z, a) && leq(z, b)) lower.push_back(z);
  if (lower.empty())
    throw NoMeetError("no common lower bound of " + names_[a] + " and " + names_[b]);
  const std::size_t top = lower.back();
  for (std::size_t z : lower)
    if (!leq(z, top))
      throw NoMeetError("no greatest lower bound of " + names_[a] + " and " + names_[b]);
  return top;
}

std::size_t FinitePoset::join(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> upper;
  for (std::size_t z = std::max(a, b); z < size(); ++z)
    if (leq(a, z) && leq(b, z)) upper.push_back(z);
  if (upper.empty())
    throw NoJoinError("no common upper bound of " + names_[a] + " and " + names_[b]);
  const std::size_t bottom = upper.front();
  for (std::size_t z : upper)
    if (!leq(bottom, z))
      throw NoJoinError("no least upper bound of " + names_[a] + " and " + names_[b]);
  return bottom;
}

FinitePoset build_poset(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& relations) {
  std::vector<std::string> input_names;
  std::map<std::string, std::size_t, std::less<>> input_index;
  auto intern = [&](const std::string& name, bool declared) {
    auto it = input_index.find(name);
    if (it != input_index.end()) {
      if (declared) throw ParseError("element '" + name + "' listed twice");
      return it->second;
    }
    input_index.emplace(name, input_names.size());
    input_names.push_back(name);
    return input_names.size() - 1;
  };
  for (const auto& name : elements) intern(name, true);

  const std::size_t n_rel = relations.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n_rel);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lo, hi] : relations) {
    const std::size_t a = intern(lo, false);
    const std::size_t b = intern(hi, false);
    if (a == b) throw CycleError("relation " + lo + "<" + hi + " is a loop");
    if (!seen.emplace(a, b).second)
      throw DuplicateCoverError("relation " + lo + "<" + hi + " listed twice");
    edges.emplace_back(a, b);
  }

  const std::size_t n = input_names.size();
  if (n == 0) throw ParseError("poset has no elements");
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    preds[b].push_back(a);
    ++indegree[b];
  }

  // Stable Kahn: always emit the earliest input element whose predecessors
  // are all placed.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::vector<std::size_t>> succs(n);
  for (auto [a, b] : edges) succs[a].push_back(b);
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    placed[v] = true;
    for (std::size_t w : succs[v])
      if (--indegree[w] == 0) ready.insert(w);
  }
  if (order.size() != n) {
    std::string culprit;
    for (std::size_t v = 0; v < n; ++v)
      if (!placed[v]) {
        culprit = input_names[v];
        break;
      }
    throw CycleError("order relation contains a cycle through '" + culprit + "'");
  }

  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

  FinitePoset poset;
  poset.names_.resize(n);
  for (std::size_t k = 0; k < n; ++k) poset.names_[k] = input_names[order[k]];
  poset.leq_.assign(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    poset.leq_[k * n + k] = 1;
    for (std::size_t p : preds[order[k]]) {
      const std::size_t pk = position[p];
      for (std::size_t z = 0; z < n; ++z)
        if (poset.leq_[z * n + pk]) poset.leq_[z * n + k] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!poset.leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = a + 1; c < b && cover; ++c)
        if (poset.leq(a, c) && poset.leq(c, b)) cover = false;
      if (cover) poset.covers_.emplace_back(a, b);
    }
  return poset;
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

OrderBackend OrderBackend::divisors() {
  OrderBackend b;
  b.universe_ = Universe::divisors;
  return b;
}

OrderBackend::OrderBackend(FinitePoset poset)
    : universe_(Universe::finite_poset),
      poset_(std::make_shared<const FinitePoset>(std::move(poset))) {}

void OrderBackend::check(Element e) const {
  if (e.universe != universe_)
    throw BackendMismatchError("element belongs to a different order backend");
  if (universe_ == Universe::divisors) {
    if (e.value == 0) throw DomainError("divisor lattice elements must be positive");
  } else if (e.value >= poset_->size()) {
    throw UnknownElementError("element index " + std::to_string(e.value) + " out of range");
  }
}

bool OrderBackend::leq(Element a, Element b) const {
  check(a);
  check(b);
  if (universe_ == Universe::divisors) return b.value % a.value == 0;
  return poset_->leq(a.value, b.value);
}

Element OrderBackend::meet(Element a, Element b) const {
  check(a);
  check(b);
  if (universe_ == Universe::divisors) return {universe_, gcd_u64(a.value, b.value)};
  return {universe_, poset_->meet(a.value, b.value)};
}

Element OrderBackend::join(Element a, Element b) const {
  check(a);
  check(b);
  if (universe_ == Universe::divisors) {
    const std::uint64_t g = gcd_u64(a.value, b.value);
    const std::uint64_t q = a.value / g;
    if (q != 0 && b.value > UINT64_MAX / q)
      throw NoJoinError("lcm of " + std::to_string(a.value) + " and " + std::to_string(b.value) +
                        " overflows 64 bits");
    return {universe_, q * b.value};
  }
  return {universe_, poset_->join(a.value, b.value)};
}

Element OrderBackend::element(std::string_view id) const {
  if (universe_ == Universe::finite_poset) return {universe_, poset_->index_of(id)};
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), v);
  if (ec != std::errc{} || ptr != id.data() + id.size())
    throw ParseError("'" + std::string(id) + "' is not a positive integer");
  if (v == 0) throw DomainError("divisor lattice elements must be positive");
  return {universe_, v};
}

std::string OrderBackend::name(Element e) const {
  check(e);
  if (universe_ == Universe::divisors) return std::to_string(e.value);
  return poset_->name(e.value);
}

std::vector<Element> OrderBackend::all_elements() const {
  if (universe_ == Universe::divisors)
    throw DomainError("the divisor lattice has no finite element list");
  std::vector<Element> all;
  for (std::size_t k = 0; k < poset_->size(); ++k) all.push_back({universe_, k});
  return all;
}

std::vector<Element> sort_linear_extension(const OrderBackend& backend,
                                           std::vector<Element> elements) {
  std::vector<Element> sorted;
  sorted.reserve(elements.size());
  std::vector<bool> placed(elements.size(), false);
  while (sorted.size() < elements.size()) {
    bool progressed = false;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (placed[k]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < elements.size() && minimal; ++j)
        if (!placed[j] && j != k && backend.less(elements[j], elements[k])) minimal = false;
      if (minimal) {
        placed[k] = true;
        sorted.push_back(elements[k]);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw CycleError("elements are not partially ordered");
  }
  return sorted;
}

}  // namespace rowadj
