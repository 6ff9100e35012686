#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rowadj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ROWADJ_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("rowadj_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("matrix on the pentagon") {
  const auto r = run({"matrix", "--poset", data("pentagon.poset"), "--functions",
                      data("pentagon.functions"), "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "matrix.row1=0 0 0 0 0"));
  CHECK(has_line(r.out, "matrix.row2=0 1 0 0 1"));
  CHECK(has_line(r.out, "matrix.row3=1 1 1 1 1"));
  CHECK(has_line(r.out, "matrix.row4=0 0 1 1 1"));
  CHECK(has_line(r.out, "matrix.row5=0 0 0 1 1"));
}

TEST_CASE("matrix on divisors") {
  const auto r = run({"matrix", "--divisors", "--set", "1,2,3", "--family", "id", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "matrix.row1=1 1 1"));
  CHECK(has_line(r.out, "matrix.row2=1 2 1"));
  CHECK(has_line(r.out, "matrix.row3=1 1 3"));

  const auto plain = run({"matrix", "--divisors", "--set", "1 2 3 4", "--family", "pow:2"});
  const auto transposed =
      run({"matrix", "--divisors", "--set", "1 2 3 4", "--family", "pow:2", "--column-adjusted"});
  CHECK(plain.code == 0);
  // Equal rows give a symmetric matrix, so only the header differs.
  CHECK(plain.out.substr(plain.out.find('\n')) == transposed.out.substr(transposed.out.find('\n')));

  const auto from_file = run({"matrix", "--poset", data("first_six.poset"), "--family", "id",
                              "--format", "machine"});
  CHECK(from_file.code == 0);
  CHECK(has_line(from_file.out, "matrix.row6=1 2 3 2 1 6"));
}

TEST_CASE("column-adjusted output is the transpose") {
  const auto r = run({"matrix", "--poset", data("pentagon.poset"), "--functions",
                      data("pentagon.functions"), "--format", "machine", "--column-adjusted"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "adjusted=column"));
  CHECK(has_line(r.out, "matrix.row1=0 0 1 0 0"));
  CHECK(has_line(r.out, "matrix.row5=0 1 1 1 1"));
}

TEST_CASE("analyze") {
  const auto n5 = run({"analyze", "--poset", data("pentagon.poset"), "--functions",
                       data("pentagon.functions"), "--format", "machine"});
  CHECK(n5.code == 0);
  CHECK(has_line(n5.out, "closed=true"));
  CHECK(has_line(n5.out, "k=4"));
  CHECK(has_line(n5.out, "rank.lower=1"));
  CHECK(has_line(n5.out, "rank.upper=4"));
  CHECK(has_line(n5.out, "rank.exact=4"));
  CHECK(has_line(n5.out, "det=0"));
  CHECK(has_line(n5.out, "invertible=false"));

  const auto gcd3 = run({"analyze", "--divisors", "--set", "1,2,3", "--family", "id", "--format", "machine"});
  CHECK(gcd3.code == 0);
  CHECK(has_line(gcd3.out, "det=2"));
  CHECK(has_line(gcd3.out, "rank.exact=3"));
  CHECK(has_line(gcd3.out, "invertible=true"));
  CHECK(has_line(gcd3.out, "inverse.row1=5/2 -1 -1/2"));

  const auto join = run({"analyze", "--divisors", "--set", "2,4,8", "--family", "id", "--mode", "join",
                         "--format", "machine"});
  CHECK(join.code == 0);
  CHECK(has_line(join.out, "det=64"));

  const auto human = run({"analyze", "--divisors", "--set", "1,2,3", "--family", "id"});
  CHECK(human.code == 0);
  CHECK(human.out.find("determinant: 2") != std::string::npos);
}

TEST_CASE("analyze on a set that is not closed") {
  const auto r = run({"analyze", "--divisors", "--set", "2,3", "--family", "id", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "banner=NOTCLOSED"));
  CHECK(has_line(r.out, "det=5"));
  const auto human = run({"analyze", "--divisors", "--set", "2,3", "--family", "id"});
  CHECK(human.out.find("NOTCLOSED") != std::string::npos);
}

TEST_CASE("closure and mobius") {
  const auto c = run({"closure", "--divisors", "--set", "4,6", "--format", "machine"});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "closure=2 4 6"));
  CHECK(has_line(c.out, "closed=false"));

  const auto m = run({"mobius", "--poset", data("pentagon.poset"), "--format", "machine"});
  CHECK(m.code == 0);
  CHECK(has_line(m.out, "mobius.row1=1 -1 -1 0 1"));

  const auto chain = run({"mobius", "--divisors", "--set", "1 2 4", "--format", "machine"});
  CHECK(has_line(chain.out, "mobius.row1=1 -1 0"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == rowadj::cli::kParseError);
  CHECK(run({"matrix", "--divisors", "--poset", data("pentagon.poset"), "--set", "1", "--family", "id"}).code ==
        rowadj::cli::kParseError);
  CHECK(run({"matrix", "--divisors", "--set", "1,x", "--family", "id"}).code == rowadj::cli::kParseError);
  CHECK(run({"matrix", "--divisors", "--set", "1,2", "--family", "bogus"}).code == rowadj::cli::kParseError);
  CHECK(run({"matrix", "--poset", "/nonexistent", "--family", "const:1"}).code == rowadj::cli::kParseError);
  CHECK(run({"matrix", "--poset", data("pentagon.poset"), "--family", "id"}).code == rowadj::cli::kParseError);
  CHECK(run({"verify", "--cases", "0"}).code == rowadj::cli::kParseError);

  // Unsorted S and missing joins are order-structure errors.
  CHECK(run({"matrix", "--divisors", "--set", "4,2", "--family", "id"}).code == rowadj::cli::kStructureError);
  const auto vee = temp_file("vee.poset", "elements: a b c\ncovers: a<b a<c\n");
  CHECK(run({"matrix", "--poset", vee, "--set", "b,c", "--family", "const:1", "--mode", "join"}).code ==
        rowadj::cli::kStructureError);
  const auto cyc = temp_file("cyc.poset", "elements: a b\ncovers: a<b b<a\n");
  CHECK(run({"closure", "--poset", cyc}).code == rowadj::cli::kStructureError);

  // Values given only on S while the closure needs gcd(4, 6) = 2.
  const auto partial = temp_file("partial.functions", "over: 4 6\nf1: 4 6\nf2: 4 6\n");
  const auto missing = run({"matrix", "--divisors", "--set", "4,6", "--functions", partial});
  CHECK(missing.code == rowadj::cli::kMissingValue);
  CHECK(missing.err.find("f1(2)") != std::string::npos);
}

TEST_CASE("family from a table file") {
  const auto r = run({"analyze", "--divisors", "--set", "2 4 8", "--mode", "join", "--family",
                      "table:" + data("chain248.functions"), "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "det=64"));
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--seed", "1", "--cases", "20", "--format", "machine"});
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "result=pass"));
  // Machine output is reproducible.
  CHECK(run({"verify", "--seed", "1", "--cases", "20", "--format", "machine"}).out == ok.out);

  const auto bad = run({"verify", "--seed", "1", "--cases", "5", "--inject-fault", "negate-psi"});
  CHECK(bad.code == rowadj::cli::kMismatch);
  CHECK(bad.out.find("FAIL factorization") != std::string::npos);
  CHECK(bad.out.find("first counterexample") != std::string::npos);
}

TEST_CASE("help") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}
