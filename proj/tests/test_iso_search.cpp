#include "doctest.h"
#include "sullivan/coformal.hpp"
#include "sullivan/iso_search.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

ParamPoly v(std::uint32_t i) { return ParamPoly::variable(i); }

}  // namespace

TEST_CASE("parameter polynomials") {
  const ParamPoly p = v(0) * v(1) + v(0) * v(0) * ParamPoly(3) - ParamPoly(2);
  CHECK_FALSE(p.is_constant());
  CHECK(p.constant_term() == -2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.variables() == std::vector<std::uint32_t>{0, 1});
  CHECK(p.linear_coefficient(1) == v(0));
  CHECK_FALSE(p.linear_coefficient(0));
  CHECK(p.substitute(1, ParamPoly(0)) == v(0) * v(0) * ParamPoly(3) - ParamPoly(2));
  CHECK(p.evaluate({Rational(1), Rational(2)}) == 3);
  const ParamPoly q = v(0) * v(0) * v(1) + v(0) * v(0) * v(0);
  CHECK(q.strip_variable(0) == v(1) + v(0));
  CHECK((p - p).is_zero());
  CHECK(to_string(v(0) * v(1) - ParamPoly(1), {"s", "t"}) != "");
}

TEST_CASE("constraint system for a self map of S^2") {
  const auto doc = testing::corpus("spheres.sul");
  const auto& s2 = doc.algebra("S2").algebra;
  const auto t = build_iso_system(s2, s2, 4);
  // x -> c0 x, y -> c1 y; one equation c0^2 - c1 = 0 and one condition per degree.
  CHECK(t.parameters.size() == 2);
  CHECK(t.equations.size() == 1);
  CHECK(t.conditions.size() == 2);
}

TEST_CASE("E54 is isomorphic to its coformal limit") {
  const auto e54 = testing::corpus("E54.sul").algebra("E54").algebra;
  const auto lim = coformal_limit(e54);
  const auto v = parametrized_iso_search(e54, lim);
  CHECK(v.kind == SearchKind::IsoFound);
  REQUIRE(v.iso);
  CHECK(validate_morphism(*v.iso, v.cutoff).ok());
  CHECK(linear_part(*v.iso).is_invertible());
  CHECK(parametrized_iso_search(e54, e54).kind == SearchKind::IsoFound);
}

TEST_CASE("CP3 is not isomorphic to its limit, with a replayable trace") {
  const auto cp3 = testing::corpus("CP3.sul").algebra("CP3").algebra;
  const auto lim = coformal_limit(cp3);
  const auto v = parametrized_iso_search(cp3, lim);
  CHECK(v.kind == SearchKind::NoIsoExists);
  CHECK_FALSE(v.trace.branches.empty());
  for (const auto& b : v.trace.branches) {
    CHECK(b.outcome == BranchOutcome::Contradiction);
    CHECK_FALSE(describe(v.trace, b).empty());
  }
  CHECK(replay(v, cp3, lim));
}

TEST_CASE("E53 against its limit") {
  const auto e53 = testing::corpus("E53.sul").algebra("E53").algebra;
  const auto lim = coformal_limit(e53);
  const auto v = parametrized_iso_search(e53, lim, std::nullopt, 4);
  CHECK(v.kind == SearchKind::NoIsoExists);
  CHECK(v.split_depth == 4);
  CHECK(replay(v, e53, lim));
}

TEST_CASE("replay rejects tampered traces") {
  const auto e53 = testing::corpus("E53.sul").algebra("E53").algebra;
  const auto lim = coformal_limit(e53);
  const auto v = parametrized_iso_search(e53, lim);
  REQUIRE(v.kind == SearchKind::NoIsoExists);
  REQUIRE(replay(v, e53, lim));

  SUBCASE("a dropped branch leaves a gap in the case tree") {
    auto bad = v;
    if (bad.trace.branches.size() > 1) {
      bad.trace.branches.pop_back();
      CHECK_FALSE(replay(bad, e53, lim));
    } else {
      bad.trace.branches.clear();
      CHECK_FALSE(replay(bad, e53, lim));
    }
  }
  SUBCASE("an altered step no longer checks out") {
    auto bad = v;
    bool changed = false;
    for (auto& b : bad.trace.branches) {
      for (auto& s : b.steps) {
        if (s.kind == StepKind::Substitute) {
          s.value = s.value + ParamPoly(1);
          changed = true;
          break;
        }
        if (s.kind == StepKind::ForceZero || s.kind == StepKind::NonzeroFromCondition) {
          s.var = s.var + 1;
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
    REQUIRE(changed);
    CHECK_FALSE(replay(bad, e53, lim));
  }
  SUBCASE("a verdict other than NoIsoExists is not replayable") {
    auto bad = v;
    bad.kind = SearchKind::Inconclusive;
    CHECK_FALSE(replay(bad, e53, lim));
  }
}

TEST_CASE("different generator censuses are rejected at once") {
  const auto doc = testing::corpus("spheres.sul");
  const auto v = parametrized_iso_search(doc.algebra("S2").algebra, doc.algebra("S3").algebra);
  CHECK(v.kind == SearchKind::NoIsoExists);
  CHECK(v.trace.branches.empty());
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("S2xS2 is isomorphic to a sheared copy") {
  const auto doc = testing::corpus("spheres.sul");
  const auto& a = doc.algebra("S2xS2").algebra;
  // d b = (x+a)^2: undone by a -> a - x.
  const auto sheared = parse("algebra T\ngen x 2\ngen y 3\ngen a 2\ngen b 3\nd y = x^2\nd b = x^2 + 2*x*a + a^2\n");
  const auto& t = sheared.algebra("T").algebra;
  const auto v = parametrized_iso_search(a, t, std::nullopt, 2);
  CHECK(v.kind == SearchKind::IsoFound);
  REQUIRE(v.iso);
  CHECK(validate_morphism(*v.iso, v.cutoff).ok());
  // Same betti numbers, but every form in the span of x^2, x*a factors over Q
  // while x^2 + a^2 does not.
  const auto other = parse("algebra U\ngen x 2\ngen y 3\ngen a 2\ngen b 3\nd y = x^2\nd b = x*a\n");
  const auto w = parametrized_iso_search(a, other.algebra("U").algebra, std::nullopt, 4);
  CHECK(w.kind == SearchKind::NoIsoExists);
  CHECK(replay(w, a, other.algebra("U").algebra));
}
