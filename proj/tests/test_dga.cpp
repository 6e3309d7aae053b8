#include "doctest.h"
#include "sullivan/dga.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

SullivanAlgebra e54() { return testing::corpus("E54.sul").algebra("E54").algebra; }

}  // namespace

TEST_CASE("d extends by the graded Leibniz rule") {
  const auto alg = testing::corpus("spheres.sul").algebra("S2xS2").algebra;
  // d(y*b) = x^2*b - y*a^2
  CHECK(alg.apply_d(P(alg, "y*b")) == P(alg, "x^2*b - y*a^2"));
  // d(x*y) = x^3
  CHECK(alg.apply_d(P(alg, "x*y")) == P(alg, "x^3"));
  CHECK(alg.apply_d(alg.one()).is_zero());
  CHECK(alg.gen("b") == P(alg, "b"));
  CHECK_THROWS_AS(alg.gen("q"), Error);
}

TEST_CASE("validate on well-formed models") {
  const auto alg = e54();
  const auto r = validate(alg, 12);
  CHECK(r.ok());
  CHECK(r.minimal);
  CHECK(r.simply_connected);
  CHECK(r.counterexamples.empty());
  CHECK(alg.is_minimal());
  CHECK_FALSE(alg.is_purely_quadratic());
  CHECK(alg.is_simply_connected());
}

TEST_CASE("validate reports d^2 != 0 with a counterexample") {
  // d(a*x*b*y) != 0 in the transcribed E53.
  const auto alg = testing::corpus("E53.sul").algebra("E53").algebra;
  const auto r = validate(alg, 12);
  CHECK_FALSE(r.d_squared_ok);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().generator == "s");
  CHECK_FALSE(r.counterexamples.front().value.is_zero());
}

TEST_CASE("validate flags degree errors, degree-1 generators and linear parts") {
  auto ctx = make_context({{"x", 2}, {"y", 3}, {"z", 3}});
  const auto x = Polynomial::generator(ctx, 0);
  const SullivanAlgebra bad_degree(ctx, {Polynomial(ctx), x, x * x});
  CHECK_FALSE(validate(bad_degree, 6).degree_ok);

  auto ctx2 = make_context({{"x", 2}, {"w", 1}});
  const SullivanAlgebra low(ctx2, {Polynomial(ctx2), Polynomial(ctx2)});
  CHECK_FALSE(validate(low, 4).simply_connected);
  CHECK_FALSE(validate(low, 4).ok());

  auto ctx3 = make_context({{"u", 3}, {"v", 4}});
  const SullivanAlgebra cone(ctx3, {Polynomial::generator(ctx3, 1), Polynomial(ctx3)});
  CHECK_FALSE(cone.is_minimal());
  CHECK_FALSE(validate(cone, 6).minimal);
  CHECK(validate(cone, 6).d_squared_ok);
}

TEST_CASE("quadratic part keeps only Lambda^2") {
  const auto alg = e54();
  const auto q = quadratic_part(alg);
  CHECK(q.d(1).is_zero());  // x^3 dropped
  CHECK(q.d(2) == P(q, "x^2"));
  CHECK(q.is_purely_quadratic());
  CHECK(wordlength_part(alg, 2)[1] == P(alg, "x^3"));
  auto ctx = make_context({{"u", 3}, {"v", 4}});
  const SullivanAlgebra cone(ctx, {Polynomial::generator(ctx, 1), Polynomial(ctx)});
  CHECK_THROWS_AS(quadratic_part(cone), Error);
}

TEST_CASE("sphere models") {
  const auto s3 = sphere_model(3);
  CHECK(s3.size() == 1);
  CHECK(s3.d(0).is_zero());
  const auto s4 = sphere_model(4, "u", "v");
  CHECK(s4.size() == 2);
  CHECK(s4.ctx().gen(1).degree == 7);
  CHECK(s4.d(1) == P(s4, "u^2"));
  CHECK_THROWS_AS(sphere_model(1), Error);
}

TEST_CASE("tensor renames clashing generators") {
  const auto t = tensor(sphere_model(2), sphere_model(2));
  REQUIRE(t.size() == 4);
  CHECK(t.ctx().gen(2).name == "x_2");
  CHECK(t.ctx().gen(3).name == "y_2");
  CHECK(t.d(3) == P(t, "x_2^2"));
  CHECK(validate(t, 10).ok());
}

TEST_CASE("transport recomputes Koszul signs") {
  auto src = make_context({{"y", 3}, {"b", 3}});
  auto dst = make_context({{"b", 3}, {"y", 3}});
  const auto yb = Polynomial::generator(src, 0) * Polynomial::generator(src, 1);
  const auto moved = transport(yb, dst, {1, 0});
  // y*b in the new order is -b*y
  CHECK(moved == -(Polynomial::generator(dst, 0) * Polynomial::generator(dst, 1)));
}

TEST_CASE("algebra equality ignores provenance") {
  auto a = e54();
  auto b = a;
  b.set_wedge({{3, 3}});
  CHECK(a == b);
  CHECK_FALSE(a == quadratic_part(a));
}
