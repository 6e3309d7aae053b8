#include "doctest.h"
#include "sullivan/dsl.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

struct Caught {
  ErrorKind kind;
  int line;
  int column;
  std::string expected;
};

Caught error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const SourceError& e) {
    return {e.kind(), e.line(), e.column(), e.expected()};
  }
  FAIL("parse succeeded: " << text);
  return {};
}

}  // namespace

TEST_CASE("E54 fixture text") {
  const auto doc = parse("algebra E54\ngen x 2\ngen y 5\ngen a 3\nd y = x^3\nd a = x^2\n");
  REQUIRE(doc.items.size() == 1);
  const auto& alg = doc.algebra("E54").algebra;
  CHECK(alg.ctx().generators() == std::vector<Generator>{{"x", 2}, {"y", 5}, {"a", 3}});
  CHECK(alg.d(0).is_zero());
  CHECK(alg.d(1) == P(alg, "x^3"));
  CHECK(alg.d(2) == P(alg, "x^2"));
  CHECK(doc.warnings.empty());
}

TEST_CASE("empty and comment-only documents") {
  CHECK(parse("").items.empty());
  CHECK(parse("  # only a comment\n\n").items.empty());
  const auto doc = parse("# header\nalgebra S3  # trailing\ngen u 3 # odd\n");
  CHECK(doc.algebra("S3").algebra.size() == 1);
}

TEST_CASE("errors carry line, column and what was expected") {
  auto e = error_of("algebra E\ngen x 2\ngen y 5\nd y = x\n");
  CHECK(e.kind == ErrorKind::DegreeMismatch);
  CHECK(e.line == 4);
  CHECK(e.column == 7);
  CHECK(e.expected == "degree 6");

  e = error_of("algebra E\ngen x\n");
  CHECK(e.kind == ErrorKind::SyntaxError);
  CHECK(e.line == 2);
  CHECK(e.column == 6);
  CHECK(e.expected == "degree");

  e = error_of("algebra E\ngen x 2\ngen y 5\nd y = z^3\n");
  CHECK(e.kind == ErrorKind::UnknownGenerator);
  CHECK(e.column == 7);

  e = error_of("morphism f : A -> B\n");
  CHECK(e.kind == ErrorKind::UnknownName);
  CHECK(e.column == 14);

  e = error_of("algebra E\ngen x 2\ngen y 5\nd y = x^^3\n");
  CHECK(e.kind == ErrorKind::SyntaxError);
  CHECK(e.column == 9);
  CHECK(e.expected == "exponent");

  e = error_of("bogus\n");
  CHECK(e.kind == ErrorKind::SyntaxError);
  CHECK(e.line == 1);
  CHECK(e.column == 1);

  CHECK(error_of("algebra E\ngen x 2\nalgebra E\ngen z 2\n").line == 3);
  CHECK(error_of("algebra E\ngen x 2\ngen x 3\n").kind == ErrorKind::SyntaxError);
  CHECK(error_of("lie L\ngen a 1\ngen b 2\nbracket [a,a] = a\n").kind == ErrorKind::DegreeMismatch);
  CHECK(error_of("algebra S2\ngen x 2\ngen y 3\nd y = x^2\nfibration F : base S2 fiber {\ngen x 3\n}\n").kind ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("free-order monomials are normalized with a warning on sign flips") {
  const auto doc = parse("algebra E\ngen x 2\ngen y 3\ngen b 3\ngen s 7\nd s = x*b*y\n");
  const auto& alg = doc.algebra("E").algebra;
  CHECK(alg.d(3) == P(alg, "-x*y*b"));
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].line == 6);
  CHECK(doc.warnings[0].message.find("flips the sign") != std::string::npos);

  const auto zero = parse("algebra E\ngen y 3\ngen b 3\ngen s 7\nd s = b*y*y\n");
  CHECK(zero.algebra("E").algebra.d(2).is_zero());
  CHECK(zero.warnings.size() == 1);

  // Even reorderings are silent.
  CHECK(parse("algebra E\ngen x 2\ngen a 2\ngen s 3\nd s = a*x\n").warnings.empty());
}

TEST_CASE("E53 fixture warns twice and keeps the transcribed sign") {
  const auto doc = testing::corpus("E53.sul");
  CHECK(doc.warnings.size() == 2);
  const auto& alg = doc.algebra("E53").algebra;
  CHECK(alg.d(4) == P(alg, "-x*y*a*b"));
}

TEST_CASE("morphisms, Lie algebras and fibrations") {
  const auto doc = testing::corpus("spheres.sul");
  const auto& m = doc.morphism("twice");
  CHECK(m.source == "S2");
  CHECK(m.target == "S2");
  CHECK(m.map.image(0) == P(m.map.target(), "2*x"));
  const auto lie = testing::corpus("lie.sul");
  CHECK(lie.lie("H").lie.size() == 3);
  CHECK(lie.lie("F3").free_cutoff == 4);
  CHECK(lie.algebra("CF3").ce_of == "F3");
  CHECK(lie.algebra("CF3").ce_cutoff == 5);
  const auto& f = doc.fibration("S2_over_S3");
  CHECK(f.base_name == "S3");
  CHECK(f.fiber.size() == 2);
  CHECK(f.default_cutoff() == 4);
  CHECK_THROWS_AS(doc.algebra("twice"), Error);
  CHECK_THROWS_AS(doc.algebra("nothing"), Error);
  CHECK(item_kind(*doc.find("twice")) == "morphism");
}

TEST_CASE("parse_polynomial") {
  const auto doc = testing::corpus("E54.sul");
  const auto& alg = doc.algebra("E54").algebra;
  const auto p = parse_polynomial("3/2*x^2*a - y + 1/2*x*x*a", alg.context());
  CHECK(p == alg.gen("x") * alg.gen("x") * alg.gen("a").scaled(2) - alg.gen("y"));
  CHECK(parse_polynomial("0", alg.context()).is_zero());
  CHECK_THROWS_AS(parse_polynomial("q", alg.context()), SourceError);
  CHECK_THROWS_AS(parse_polynomial("x +", alg.context()), SourceError);
}

TEST_CASE("print then parse reproduces every corpus document") {
  for (const auto* file : testing::kCorpusFiles) {
    CAPTURE(file);
    const auto doc = testing::corpus(file);
    const auto text = print(doc);
    const auto again = parse(text);
    CHECK(again == doc);
    CHECK(print(again) == text);
    CHECK(again.warnings.empty());
  }
}
