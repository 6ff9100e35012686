#include "rowadj/text_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rowadj/error.hpp"

namespace rowadj {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Yields (key, rest) for every non-blank, non-comment line.
std::vector<std::pair<std::string, std::string>> keyed_lines(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key: values'");
    out.emplace_back(std::string(trim(body.substr(0, colon))),
                     std::string(trim(body.substr(colon + 1))));
  }
  return out;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::string spaced(text);
  for (char& c : spaced)
    if (c == ',') c = ' ';
  return tokens(spaced);
}

PosetDescription parse_poset(std::string_view text) {
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::vector<std::string>> set;
  bool divisors = false;
  for (const auto& [key, rest] : keyed_lines(text)) {
    if (key == "elements") {
      if (elements) throw ParseError("duplicate 'elements:' line");
      elements = tokens(rest);
      if (elements->size() == 1 && elements->front() == "@divisors") {
        divisors = true;
        elements->clear();
      }
    } else if (key == "covers") {
      for (const auto& pair : tokens(rest)) {
        const auto lt = pair.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == pair.size() ||
            pair.find('<', lt + 1) != std::string::npos)
          throw ParseError("malformed cover '" + pair + "' (expected a<b)");
        covers.emplace_back(pair.substr(0, lt), pair.substr(lt + 1));
      }
    } else if (key == "set") {
      if (set) throw ParseError("duplicate 'set:' line");
      set = tokens(rest);
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!elements) throw ParseError("missing 'elements:' line");
  if (divisors) {
    if (!covers.empty()) throw ParseError("the divisor lattice takes no covers");
    return {OrderBackend::divisors(), std::move(set)};
  }
  return {OrderBackend(build_poset(*elements, covers)), std::move(set)};
}

FunctionFamily parse_functions(std::string_view text, const OrderBackend& backend,
                               std::size_t rows) {
  const auto lines = keyed_lines(text);
  if (lines.empty() || lines.front().first != "over")
    throw ParseError("function file must start with an 'over:' line");
  std::vector<Element> over;
  {
    std::set<Element> seen;
    for (const auto& id : tokens(lines.front().second)) {
      over.push_back(backend.element(id));
      if (!seen.insert(over.back()).second) throw ParseError("'over:' lists " + id + " twice");
    }
  }
  if (over.empty()) throw ParseError("'over:' line lists no elements");

  FunctionFamily fs(rows);
  std::vector<bool> given(rows, false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& [key, rest] = lines[l];
    std::size_t row = 0;
    std::size_t used = 0;
    try {
      if (key.size() < 2 || key.front() != 'f') throw ParseError("");
      row = std::stoul(key.substr(1), &used);
    } catch (const std::exception&) {
      throw ParseError("expected a row key f<i>, got '" + key + "'");
    }
    if (used + 1 != key.size() || row < 1 || row > rows)
      throw ParseError("row key '" + key + "' out of range 1.." + std::to_string(rows));
    if (given[row - 1]) throw ParseError("row " + key + " given twice");
    const auto values = tokens(rest);
    if (values.size() != over.size())
      throw ParseError("row " + key + " has " + std::to_string(values.size()) +
                       " values, expected " + std::to_string(over.size()));
    for (std::size_t k = 0; k < values.size(); ++k)
      fs.set(row - 1, over[k], Scalar::parse(values[k]));
    given[row - 1] = true;
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (!given[i]) throw ParseError("function file lacks row f" + std::to_string(i + 1));
  return fs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace rowadj
