#include "doctest.h"
#include "sullivan/cohomology.hpp"
#include "support.hpp"

using namespace sullivan;
using testing::P;

namespace {

// (x_2, y_{2n+1}; dy = x^{n+1})
SullivanAlgebra cpn(int n) {
  auto ctx = make_context({{"x", 2}, {"y", 2 * n + 1}});
  Polynomial p = Polynomial::constant(ctx, 1);
  for (int i = 0; i <= n; ++i) p = p * Polynomial::generator(ctx, 0);
  return SullivanAlgebra(ctx, {Polynomial(ctx), p});
}

std::vector<std::size_t> dims(const SullivanAlgebra& a, int cutoff) { return betti(a, cutoff).dims(); }

const Document& spheres() {
  static const auto doc = testing::corpus("spheres.sul");
  return doc;
}

}  // namespace

TEST_CASE("sphere cohomology") {
  CHECK(dims(spheres().algebra("S2").algebra, 8) == std::vector<std::size_t>{1, 0, 1, 0, 0, 0, 0, 0});
  CHECK(dims(spheres().algebra("S3").algebra, 8) == std::vector<std::size_t>{1, 0, 0, 1, 0, 0, 0, 0});
  CHECK(dims(spheres().algebra("S4").algebra, 10) ==
        std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 0, 0});
  CHECK(dims(sphere_model(6), 14) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("complex projective spaces") {
  for (int n = 1; n <= 4; ++n) {
    const auto d = dims(cpn(n), 2 * n + 6);
    for (int k = 0; k < 2 * n + 6; ++k) {
      const std::size_t expected = (k % 2 == 0 && k <= 2 * n) ? 1 : 0;
      CHECK(d[k] == expected);
    }
  }
}

TEST_CASE("Kuenneth on products of spheres") {
  const auto s2s3 = dims(spheres().algebra("S2xS3").algebra, 8);
  CHECK(s2s3 == std::vector<std::size_t>{1, 0, 1, 1, 0, 1, 0, 0});
  const auto s2s2 = dims(spheres().algebra("S2xS2").algebra, 8);
  CHECK(s2s2 == std::vector<std::size_t>{1, 0, 2, 0, 1, 0, 0, 0});
  const auto t = tensor(cpn(2), spheres().algebra("S3").algebra);
  const auto a = dims(cpn(2), 12), b = dims(spheres().algebra("S3").algebra, 12), ab = dims(t, 12);
  for (int k = 0; k < 12; ++k) {
    std::size_t sum = 0;
    for (int i = 0; i <= k; ++i) sum += a[i] * b[k - i];
    CHECK(ab[k] == sum);
  }
}

TEST_CASE("E54 is S^2 x S^5 after y -> y - x*a") {
  const auto alg = testing::corpus("E54.sul").algebra("E54").algebra;
  CHECK(dims(alg, 9) == std::vector<std::size_t>{1, 0, 1, 0, 0, 1, 0, 1, 0});
}

TEST_CASE("class_of and coboundaries") {
  const auto& alg = spheres().algebra("S2xS2").algebra;
  const auto t = betti(alg, 6);
  CHECK(t.cutoff() == 6);
  CHECK(t.top_degree() == 5);
  CHECK(t.is_coboundary(P(alg, "x^2")));
  CHECK_FALSE(t.is_coboundary(P(alg, "x*a")));
  const auto c = t.class_of(P(alg, "x*a"));
  REQUIRE(c.size() == 1);
  CHECK(c[0] != 0);
  CHECK(t.class_of(P(alg, "x^2")) == std::vector<Rational>{0});
  CHECK_THROWS_AS(t.class_of(P(alg, "y")), Error);
  CHECK_THROWS_AS(betti(alg, 0), Error);
}

TEST_CASE("find_primitive") {
  const auto& alg = spheres().algebra("S2xS2").algebra;
  CHECK(find_primitive(alg, P(alg, "x^2")) == P(alg, "y"));
  // x^2*a^2 = d(y*a^2) = d(x^2*b)
  const auto p = find_primitive(alg, P(alg, "x^2*a^2"));
  REQUIRE(p);
  CHECK(alg.apply_d(*p) == P(alg, "x^2*a^2"));
  CHECK_FALSE(find_primitive(alg, P(alg, "x*a")));
  CHECK_THROWS_AS(find_primitive(alg, P(alg, "y")), Error);
  // With a wordlength floor the primitive of x^2 does not exist.
  CHECK_FALSE(find_primitive(alg, P(alg, "x^2"), 2));
}

TEST_CASE("induced maps on cohomology") {
  const auto& twice = spheres().morphism("twice").map;
  const auto h = induced_on_H(twice, 6);
  CHECK(h.blocks.at(2).at(0, 0) == 2);
  CHECK(h.injective_everywhere());
  const auto& first = spheres().morphism("first_factor").map;
  const auto hf = induced_on_H(first, 8);
  CHECK(hf.injective_everywhere());
  CHECK_FALSE(hf.surjective_everywhere());
  const auto& pinch = spheres().morphism("pinch").map;
  const auto hp = induced_on_H(pinch, 8);
  CHECK(hp.surjective_everywhere());
  CHECK_FALSE(hp.injective_everywhere());
  CHECK_THROWS_AS(induced_on_H(pinch, betti(pinch.source(), 6), betti(pinch.target(), 7)), Error);
}

TEST_CASE("Toomer invariant with witnesses") {
  const auto v2 = toomer(spheres().algebra("S2").algebra, 8);
  CHECK(v2.value == 1);
  REQUIRE(v2.witness);
  CHECK(v2.witness->cocycle.min_wordlength() >= 1);

  const auto vss = toomer(spheres().algebra("S2xS2").algebra, 10);
  CHECK(vss.value == 2);
  REQUIRE(vss.witness);
  CHECK(vss.witness->degree == 4);
  CHECK(vss.witness->cocycle.min_wordlength() >= 2);

  for (int n = 1; n <= 3; ++n) CHECK(toomer(cpn(n), 2 * n + 4).value == n);

  CHECK(toomer(spheres().algebra("S3xS5").algebra, 10).value == 2);
  auto ctx = make_context({{"u", 3}, {"v", 4}});
  const SullivanAlgebra cone(ctx, {Polynomial::generator(ctx, 1), Polynomial(ctx)});
  CHECK_THROWS_AS(toomer(cone, 6), Error);
}

TEST_CASE("rho kernel witnesses") {
  const auto& alg = spheres().algebra("S2xS2").algebra;
  const auto t = betti(alg, 6);
  const auto w = rho_kernel_witness(t, 1, 4);
  REQUIRE(w);
  CHECK(w->min_wordlength() >= 2);
  CHECK_FALSE(rho_kernel_witness(t, 2, 4));
}

TEST_CASE("cup length evidence") {
  CHECK(cup_length_evidence(spheres().algebra("S2").algebra, 8) == 1);
  CHECK(cup_length_evidence(spheres().algebra("S2xS2").algebra, 8) == 2);
  CHECK(cup_length_evidence(cpn(3), 10) == 3);
  CHECK(cup_length_evidence(cpn(5), 14, 4) == 4);
}
