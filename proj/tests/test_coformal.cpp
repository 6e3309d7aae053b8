#include "doctest.h"
#include "sullivan/coformal.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

const Document& e54_doc() {
  static const auto doc = testing::corpus("E54.sul");
  return doc;
}

}  // namespace

TEST_CASE("coformal limit is the quadratic part") {
  const auto& e54 = e54_doc().algebra("E54").algebra;
  const auto lim = coformal_limit(e54);
  CHECK(lim == quadratic_part(e54));
  CHECK(lim.d(1).is_zero());
  CHECK(lim.d(2) == P(lim, "x^2"));
}

TEST_CASE("E54 coformalizes with one substitution") {
  const auto& e54 = e54_doc().algebra("E54").algebra;
  const auto v = coformalize(e54, 11);
  CHECK(v.kind == CoformalKind::CertifiedCoformal);
  CHECK(v.cutoff == 11);
  REQUIRE(v.substitutions.size() == 1);
  CHECK(v.substitutions[0].generator == 1);
  CHECK(v.substitutions[0].correction == P(e54, "x*a"));
  CHECK(to_string(e54.ctx(), v.substitutions[0]) == "y |-> y - x*a");
  REQUIRE(v.iso);
  REQUIRE(v.inverse);
  CHECK(validate_morphism(*v.iso, 11).ok());
  CHECK(validate_morphism(*v.inverse, 11).ok());
  CHECK(linear_part(*v.iso).is_identity());
  CHECK(v.iso->target() == coformal_limit(e54));
  const auto round = compose(*v.iso, *v.inverse);
  CHECK(round.assignment() == DgaMorphism::identity(v.iso->target()).assignment());
}

TEST_CASE("already quadratic algebras need no substitutions") {
  const auto doc = testing::corpus("spheres.sul");
  for (const auto* name : {"S2", "S2xS2", "S3xS5"}) {
    const auto v = coformalize(doc.algebra(name).algebra, 12);
    CHECK(v.kind == CoformalKind::CertifiedCoformal);
    CHECK(v.substitutions.empty());
  }
}

TEST_CASE("CP2 and CP3 are obstructed") {
  const auto& cp2 = e54_doc().algebra("CP2").algebra;
  const auto v = coformalize(cp2, 11);
  CHECK(v.kind == CoformalKind::Obstructed);
  REQUIRE(v.generator);
  CHECK(*v.generator == 1);
  CHECK(v.obstruction == P(cp2, "x^3"));
  CHECK_FALSE(v.obstruction_class.empty());
  bool nonzero = false;
  for (const auto& c : v.obstruction_class) nonzero = nonzero || c != 0;
  CHECK(nonzero);

  const auto cp3 = testing::corpus("CP3.sul").algebra("CP3").algebra;
  CHECK(coformalize(cp3, 15).kind == CoformalKind::Obstructed);
}

TEST_CASE("E53 as transcribed fails closedness") {
  const auto e53 = testing::corpus("E53.sul").algebra("E53").algebra;
  try {
    coformalize(e53, 19);
    FAIL("expected ClosednessViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosednessViolation);
  }
}

TEST_CASE("non-minimal input is rejected") {
  auto ctx = make_context({{"u", 3}, {"v", 4}});
  const SullivanAlgebra cone(ctx, {Polynomial::generator(ctx, 1), Polynomial(ctx)});
  CHECK_THROWS_AS(coformal_limit(cone), Error);
  CHECK_THROWS_AS(coformalize(cone, 6), Error);
}

TEST_CASE("coformality report") {
  const auto& e54 = e54_doc().algebra("E54").algebra;
  const auto r = coformality_report(e54, 11);
  CHECK(r.conclusion == Coformality::Coformal);
  CHECK(r.limit_toomer.value == 2);
  CHECK(r.cat0 == 2);
  CHECK_FALSE(r.search);

  const auto& cp2 = e54_doc().algebra("CP2").algebra;
  const auto r2 = coformality_report(cp2, 11);
  CHECK(r2.conclusion == Coformality::NotCoformal);
  REQUIRE(r2.search);
  CHECK(r2.search->kind == SearchKind::NoIsoExists);
  CHECK_FALSE(r2.cat0);

  const auto e53 = testing::corpus("E53.sul").algebra("E53").algebra;
  const auto r3 = coformality_report(e53, 19);
  CHECK_FALSE(r3.elimination);
  CHECK_FALSE(r3.elimination_error.empty());
  CHECK(r3.limit_toomer.value == 3);
  REQUIRE(r3.search);
  CHECK(r3.search->kind == SearchKind::NoIsoExists);
  CHECK(r3.conclusion == Coformality::NotCoformal);
  CHECK(to_string(r3.conclusion) == "not-coformal");
}
