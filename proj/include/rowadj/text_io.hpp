#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rowadj/poset.hpp"
#include "rowadj/row_adjusted.hpp"

namespace rowadj {

// Poset description:
//
//   # comment
//   elements: a b c d
//   covers: a<b a<c b<d c<d
//
// or, for the divisor lattice,
//
//   elements: @divisors
//   set: 1 2 3 4
//
// A `set:` line is also accepted for finite posets.
struct PosetDescription {
  OrderBackend backend;
  std::optional<std::vector<std::string>> set;
};

PosetDescription parse_poset(std::string_view text);

// Function family:
//
//   over: d1 d2 ... dm
//   f1: v1 v2 ... vm
//   ...
//   fn: v1 v2 ... vm
FunctionFamily parse_functions(std::string_view text, const OrderBackend& backend,
                               std::size_t rows);

/// Splits a list given as whitespace- and/or comma-separated identifiers.
std::vector<std::string> split_list(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace rowadj
