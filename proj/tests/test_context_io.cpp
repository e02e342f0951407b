#include <doctest.h>

#include <sstream>

#include "conceptdim/context_io.hpp"
#include "conceptdim/errors.hpp"
#include "support/oracles.hpp"

using conceptdim::FormalContext;
using conceptdim::InvalidInputError;
using conceptdim::read_context_csv;
using conceptdim::read_cxt;
using conceptdim::to_context_csv_string;
using conceptdim::to_cxt_string;

namespace {

const char* kN3Cxt =
    "B\n"
    "\n"
    "3\n"
    "3\n"
    "\n"
    "g1\n"
    "g2\n"
    "g3\n"
    "m1\n"
    "m2\n"
    "m3\n"
    ".XX\n"
    "X.X\n"
    "XX.\n";

FormalContext parse_cxt(const std::string& text) {
  std::istringstream in(text);
  return read_cxt(in);
}

}  // namespace

TEST_CASE("cxt writer emits the canonical layout") {
  FormalContext k = testsupport::contranominal(3).to_context();
  CHECK(to_cxt_string(k) == kN3Cxt);
}

TEST_CASE("cxt round-trip is byte identical") {
  FormalContext k = parse_cxt(kN3Cxt);
  CHECK(k.object_count() == 3);
  CHECK(k.attribute_count() == 3);
  CHECK_FALSE(k.incidence(0, 0));
  CHECK(k.incidence(0, 1));
  CHECK(to_cxt_string(k) == kN3Cxt);
}

TEST_CASE("cxt round-trip for a zero-object context") {
  std::string text = "B\n\n0\n2\n\nm1\nm2\n";
  FormalContext k = parse_cxt(text);
  CHECK(k.object_count() == 0);
  CHECK(k.attribute_count() == 2);
  CHECK(to_cxt_string(k) == text);
}

TEST_CASE("cxt reader is strict") {
  CHECK_THROWS_AS(parse_cxt(""), InvalidInputError);
  CHECK_THROWS_AS(parse_cxt("Z\n\n1\n1\n\ng\nm\nX\n"), InvalidInputError);
  // trailing space on a name line
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng \nm\nX\n"), InvalidInputError);
  // CR line endings count as trailing whitespace
  CHECK_THROWS_AS(parse_cxt("B\r\n\r\n1\r\n1\r\n\r\ng\r\nm\r\nX\r\n"), InvalidInputError);
  // wrong row width
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n2\n\ng\nm1\nm2\nX\n"), InvalidInputError);
  // bad incidence character
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nx\n"), InvalidInputError);
  // counts that do not match the body
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\nm\nX\n"), InvalidInputError);
  // missing final newline
  CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nX"), InvalidInputError);
  // duplicate names
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\ng\nm\nX\nX\n"), InvalidInputError);
  // extra trailing content
  CHECK_THROWS_AS(parse_cxt(std::string(kN3Cxt) + "\n"), InvalidInputError);
}

TEST_CASE("csv context round-trip") {
  FormalContext k = testsupport::contranominal(3).to_context();
  std::string csv = to_context_csv_string(k);
  CHECK(csv ==
        ",m1,m2,m3\n"
        "g1,0,1,1\n"
        "g2,1,0,1\n"
        "g3,1,1,0\n");
  std::istringstream in(csv);
  FormalContext back = read_context_csv(in);
  CHECK(to_context_csv_string(back) == csv);
  CHECK(to_cxt_string(back) == to_cxt_string(k));
}

TEST_CASE("csv context reader rejects bad cells and shapes") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_context_csv(in);
  };
  CHECK_THROWS_AS(parse(""), InvalidInputError);
  CHECK_THROWS_AS(parse(",m1\ng1,2\n"), InvalidInputError);
  CHECK_THROWS_AS(parse(",m1\ng1,1,0\n"), InvalidInputError);
  CHECK_THROWS_AS(parse(",m1,m1\ng1,1,0\n"), InvalidInputError);
}
