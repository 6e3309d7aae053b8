#include "doctest.h"
#include "sullivan/cohomology.hpp"
#include "sullivan/morphism.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

const Document& spheres() {
  static const auto doc = testing::corpus("spheres.sul");
  return doc;
}

const SullivanAlgebra& S2() { return spheres().algebra("S2").algebra; }

}  // namespace

TEST_CASE("corpus morphisms validate") {
  for (const auto* name : {"twice", "first_factor", "pinch"}) {
    CAPTURE(name);
    CHECK(validate_morphism(spheres().morphism(name).map, 12).ok());
  }
}

TEST_CASE("a map that does not commute with d is caught") {
  const DgaMorphism bad(S2(), S2(), {P(S2(), "2*x"), P(S2(), "3*y")});
  const auto r = validate_morphism(bad, 8);
  CHECK(r.degree_ok);
  CHECK_FALSE(r.commutes);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].generator == "y");
  // phi(dy) - d(phi y) = 4x^2 - 3x^2
  CHECK(r.witnesses[0].defect == P(S2(), "x^2"));

  const DgaMorphism wrong_degree(S2(), S2(), {P(S2(), "y"), P(S2(), "y")});
  CHECK_FALSE(validate_morphism(wrong_degree, 8).degree_ok);
}

TEST_CASE("images are extended multiplicatively") {
  const auto& twice = spheres().morphism("twice").map;
  CHECK(twice.apply(P(S2(), "x^3")) == P(S2(), "8*x^3"));
  CHECK(twice.apply(P(S2(), "x*y - 1")) == P(S2(), "8*x*y - 1"));
}

TEST_CASE("composition and identity") {
  const auto& twice = spheres().morphism("twice").map;
  const auto four = compose(twice, twice);
  CHECK(four.image(0) == P(S2(), "4*x"));
  CHECK(four.image(1) == P(S2(), "16*y"));
  const auto id = DgaMorphism::identity(S2());
  CHECK(compose(id, twice).assignment() == twice.assignment());
  CHECK(compose(twice, id).assignment() == twice.assignment());
  const auto& first = spheres().morphism("first_factor").map;
  const auto& pinch = spheres().morphism("pinch").map;
  const auto round = compose(pinch, first);
  CHECK(round.assignment() == id.assignment());
}

TEST_CASE("linear part") {
  const auto lp = linear_part(spheres().morphism("twice").map);
  CHECK(lp.blocks.at(2).at(0, 0) == 2);
  CHECK(lp.blocks.at(3).at(0, 0) == 4);
  CHECK(lp.is_invertible());
  CHECK_FALSE(lp.is_identity());
  CHECK(linear_part(DgaMorphism::identity(S2())).is_identity());
  CHECK_FALSE(linear_part(spheres().morphism("first_factor").map).is_invertible());
}

TEST_CASE("quadratic model map drops longer words") {
  const auto doc = testing::corpus("E54.sul");
  const auto& e54 = doc.algebra("E54").algebra;
  const DgaMorphism change(e54, e54, {P(e54, "x"), P(e54, "y - x*a"), P(e54, "a")});
  const auto q = quadratic_model_map(change);
  CHECK(q.image(1) == P(q.target(), "y"));
  CHECK(q.source().is_purely_quadratic());
}

TEST_CASE("extend_degreewise solves generator by generator") {
  const auto phi = extend_degreewise(S2(), S2(), {{0, P(S2(), "2*x")}}, 10);
  REQUIRE(phi);
  CHECK(phi->image(1) == P(S2(), "4*y"));
  CHECK(validate_morphism(*phi, 10).ok());

  // x -> x + a into S2xS2 needs a primitive of 2*x*a.
  const auto& s2s2 = spheres().algebra("S2xS2").algebra;
  CHECK_FALSE(extend_degreewise(S2(), s2s2, {{0, P(s2s2, "x + a")}}, 10));

  // Seeds of the wrong degree are rejected.
  CHECK_THROWS_AS(extend_degreewise(S2(), S2(), {{0, P(S2(), "y")}}, 10), Error);

  // Generators above the cutoff go to 0.
  const auto low = extend_degreewise(S2(), S2(), {{0, P(S2(), "x")}}, 2);
  REQUIRE(low);
  CHECK(low->image(1).is_zero());
}

TEST_CASE("invert an isomorphism") {
  const auto& twice = spheres().morphism("twice").map;
  const auto inv = invert(twice, 10);
  REQUIRE(inv);
  CHECK(inv->image(0) == P(S2(), "1/2*x"));
  CHECK(inv->image(1) == P(S2(), "1/4*y"));
  CHECK(compose(twice, *inv).assignment() == DgaMorphism::identity(S2()).assignment());

  const auto doc = testing::corpus("E54.sul");
  const auto& e54 = doc.algebra("E54").algebra;
  const DgaMorphism change(e54, e54, {P(e54, "x"), P(e54, "y - x*a"), P(e54, "a")});
  const auto back = invert(change, 8);
  REQUIRE(back);
  CHECK(back->image(1) == P(e54, "y + x*a"));

  CHECK_FALSE(invert(spheres().morphism("first_factor").map, 8));
}

TEST_CASE("induced maps are functorial") {
  const auto& twice = spheres().morphism("twice").map;
  const auto h1 = induced_on_H(twice, 8);
  const auto h2 = induced_on_H(compose(twice, twice), 8);
  for (const auto& [deg, block] : h2.blocks) {
    CHECK(block == h1.blocks.at(deg) * h1.blocks.at(deg));
  }
  const auto& first = spheres().morphism("first_factor").map;
  const auto& pinch = spheres().morphism("pinch").map;
  const auto hp = induced_on_H(pinch, 8), hf = induced_on_H(first, 8);
  const auto hpf = induced_on_H(compose(pinch, first), 8);
  for (const auto& [deg, block] : hpf.blocks) CHECK(block == hp.blocks.at(deg) * hf.blocks.at(deg));
}
