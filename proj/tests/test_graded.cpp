#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sullivan/graded.hpp"
#include "support.hpp"

using namespace sullivan;

namespace {

ContextPtr ctx_xyab() {
  return make_context({{"x", 2}, {"y", 3}, {"a", 2}, {"b", 3}});
}

// Sign of sorting a word by bubble sort, counting odd-odd transpositions.
int bubble_sign(const GradedContext& ctx, std::vector<std::size_t> w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] > w[j + 1]) {
        if (ctx.is_odd(w[j]) && ctx.is_odd(w[j + 1])) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
    }
  }
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j] == w[j + 1] && ctx.is_odd(w[j])) return 0;
  }
  return sign;
}

// Coefficients of prod (1+t^d) over odd d times prod 1/(1-t^d) over even d.
std::vector<std::size_t> hilbert(const GradedContext& ctx, int top) {
  std::vector<std::size_t> h(top + 1, 0);
  h[0] = 1;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const int d = ctx.degree(i);
    if (ctx.is_odd(i)) {
      for (int k = top; k >= d; --k) h[k] += h[k - d];
    } else {
      for (int k = d; k <= top; ++k) h[k] += h[k - d];
    }
  }
  return h;
}

}  // namespace

TEST_CASE("context lookup and degrees") {
  auto ctx = ctx_xyab();
  CHECK(ctx->size() == 4);
  CHECK(ctx->index_of("a") == 2u);
  CHECK_FALSE(ctx->index_of("z"));
  CHECK(ctx->max_degree() == 3);
  CHECK(ctx->min_degree() == 2);
  CHECK(ctx->is_odd(1));
  CHECK_FALSE(ctx->is_odd(0));
}

TEST_CASE("normalize: Koszul signs of small words") {
  auto ctx = ctx_xyab();
  // b*y = -y*b (both odd)
  const std::size_t by[] = {3, 1};
  CHECK(normalize(*ctx, by).sign == -1);
  // a*x*b*y: moving b past y is the only odd swap
  const std::size_t axby[] = {2, 0, 3, 1};
  auto s = normalize(*ctx, axby);
  CHECK(s.sign == -1);
  CHECK(to_string(*ctx, s.mono) == "x*y*a*b");
  // y*y = 0
  const std::size_t yy[] = {1, 1};
  CHECK(normalize(*ctx, yy).sign == 0);
  // x*x = x^2, even
  const std::size_t xx[] = {0, 0};
  auto s2 = normalize(*ctx, xx);
  CHECK(s2.sign == 1);
  CHECK(to_string(*ctx, s2.mono) == "x^2");
}

TEST_CASE("normalize agrees with a bubble-sort oracle") {
  auto ctx = make_context({{"p", 1}, {"q", 2}, {"r", 3}, {"s", 5}, {"t", 4}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::size_t> w(1 + rng() % 6);
    for (auto& g : w) g = rng() % ctx->size();
    const auto s = normalize(*ctx, w);
    CHECK(s.sign == bubble_sign(*ctx, w));
    if (s.sign != 0) CHECK(s.mono.wordlength() == static_cast<int>(w.size()));
  }
}

TEST_CASE("monomial order: wordlength first, then larger exponents") {
  auto ctx = make_context({{"x", 2}, {"y", 3}, {"a", 3}, {"b", 3}});
  auto m = [&](std::vector<std::uint16_t> e) { return *Monomial::from_exponents(*ctx, e); };
  CHECK(m({1, 0, 0, 0}) < m({2, 0, 0, 0}));
  CHECK(m({3, 1, 0, 0}) < m({3, 0, 0, 1}));
  CHECK(m({3, 0, 0, 1}) < m({2, 0, 1, 1}));
  CHECK_FALSE(Monomial::from_exponents(*ctx, {0, 2, 0, 0}));
}

TEST_CASE("basis counts match the Hilbert series") {
  auto ctx = make_context({{"x", 2}, {"y", 3}, {"a", 2}, {"b", 3}, {"s", 9}});
  const auto h = hilbert(*ctx, 20);
  for (int d = 0; d <= 20; ++d) CHECK(basis(*ctx, d).size() == h[d]);
  // Wordlength windows partition the basis.
  for (int d = 0; d <= 14; ++d) {
    std::size_t total = 0;
    for (int w = 0; w <= d; ++w) total += basis(*ctx, d, w, w).size();
    CHECK(total == h[d]);
  }
}

TEST_CASE("basis is sorted in monomial order") {
  auto ctx = ctx_xyab();
  const auto b = basis(*ctx, 10);
  CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("polynomial arithmetic") {
  auto ctx = ctx_xyab();
  auto x = Polynomial::generator(ctx, 0), y = Polynomial::generator(ctx, 1);
  auto a = Polynomial::generator(ctx, 2), b = Polynomial::generator(ctx, 3);
  CHECK((y * b + b * y).is_zero());
  CHECK((y * y).is_zero());
  CHECK(x * a == a * x);
  CHECK(((x + a) * (x - a)) == x * x - a * a);
  const auto p = x * x * a - y * b;
  CHECK(p.degree() == 6);
  CHECK(p.min_wordlength() == 2);
  CHECK(p.max_wordlength() == 3);
  CHECK(p.wordlength_part(3) == x * x * a);
  CHECK(to_string(p) == "-y*b + x^2*a");  // monomial order
  CHECK_FALSE((x + y).degree());
  CHECK(Polynomial(ctx).is_homogeneous());
}

TEST_CASE("mixing contexts throws") {
  auto c1 = ctx_xyab(), c2 = ctx_xyab();
  auto p = Polynomial::generator(c1, 0), q = Polynomial::generator(c2, 0);
  // Equal generator lists count as the same context.
  CHECK(same_context(c1, c2));
  auto c3 = make_context({{"z", 2}});
  auto r = Polynomial::generator(c3, 0);
  CHECK_THROWS_AS(p * r, Error);
  try {
    p += r;
    FAIL("expected MixedContexts");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedContexts);
  }
  CHECK(p * q == p * p);
}

TEST_CASE("coordinates round trip through a basis") {
  auto ctx = ctx_xyab();
  const auto b = basis(*ctx, 6);
  const auto idx = index_of(b);
  const auto p = testing::P(SullivanAlgebra(ctx, std::vector<Polynomial>(4, Polynomial(ctx))),
                            "3/2*x^3 - x*a^2 + y*b");
  const auto v = coordinates(p, idx);
  CHECK(from_coordinates(ctx, b, v) == p);
  CHECK_THROWS(coordinates(Polynomial::generator(ctx, 0), idx));
}
