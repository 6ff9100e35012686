#include <doctest.h>

#include "rowadj/error.hpp"
#include "rowadj/text_io.hpp"

using namespace rowadj;

TEST_CASE("parse_poset") {
  const auto desc = parse_poset(
      "# pentagon\n"
      "elements: x1 x2 x3 x4 x5\n"
      "\n"
      "covers: x1<x2 x1<x3 x3<x4 x4<x5 x2<x5\n");
  REQUIRE(desc.backend.poset() != nullptr);
  CHECK(desc.backend.poset()->size() == 5);
  CHECK_FALSE(desc.set.has_value());

  const auto dv = parse_poset("elements: @divisors\nset: 1 2 3\n");
  CHECK(dv.backend.is_divisor_lattice());
  CHECK(*dv.set == std::vector<std::string>{"1", "2", "3"});

  CHECK_THROWS_AS(parse_poset("covers: a<b\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a b\ncovers: a-b\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a b\ncovers: a<b<c\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a\nfoo: 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a b\nno colon\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: @divisors\ncovers: 1<2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("elements: a b\ncovers: a<b b<a\n"), CycleError);
}

TEST_CASE("parse_functions") {
  const OrderBackend b(build_poset({"x", "y"}, {{"x", "y"}}));
  const auto fs = parse_functions("over: y x\nf2: 1 2\nf1: 1/2 -i\n", b, 2);
  CHECK(fs.value(0, b.element("y"), b) == Scalar::rational(1, 2));
  CHECK(fs.value(0, b.element("x"), b) == Scalar(0, -1));
  CHECK(fs.value(1, b.element("x"), b) == Scalar(2));

  CHECK_THROWS_AS(parse_functions("f1: 1 2\n", b, 1), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x y\nf1: 1\n", b, 1), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x y\nf1: 1 2\n", b, 2), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x y\nf3: 1 2\n", b, 2), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x y\ng1: 1 2\n", b, 1), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x y\nf1: 1 2\nf1: 1 2\n", b, 1), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x x\nf1: 1 2\n", b, 1), ParseError);
  CHECK_THROWS_AS(parse_functions("over: x z\nf1: 1 2\n", b, 1), UnknownElementError);
  CHECK_THROWS_AS(parse_functions("over: x y\nf1: 1 q\n", b, 1), ParseError);
}

TEST_CASE("split_list") {
  CHECK(split_list("1,2, 3  4") == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(split_list(" ").empty());
}
