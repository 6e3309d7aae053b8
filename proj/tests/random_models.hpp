#pragma once

// Seeded generators of small random contexts, polynomials and minimal
// algebras for the property suite and the acceptance run.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/linalg.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Small nonzero rationals, mostly integers.
inline sullivan::Rational small_rational(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -3, 3);
  sullivan::Rational q(num, uniform(rng, 0, 3) == 0 ? 2 : 1);
  q.canonicalize();
  return q;
}

// Generators g0, g1, ... with nondecreasing degrees in [lo, hi].
inline sullivan::ContextPtr random_context(Rng& rng, int ngens, int lo, int hi) {
  std::vector<int> degrees(ngens);
  for (auto& d : degrees) d = uniform(rng, lo, hi);
  std::sort(degrees.begin(), degrees.end());
  std::vector<sullivan::Generator> gens;
  for (int i = 0; i < ngens; ++i) gens.push_back({"g" + std::to_string(i), degrees[i]});
  return sullivan::make_context(std::move(gens));
}

// Random combination of at most `terms` basis monomials; may be zero when the
// degree is empty.
inline sullivan::Polynomial random_polynomial(Rng& rng, const sullivan::ContextPtr& ctx, int degree,
                                              int wordlength_min = 0, int terms = 3) {
  sullivan::Polynomial p(ctx);
  const auto monos = sullivan::basis(*ctx, degree, wordlength_min);
  if (monos.empty()) return p;
  for (int t = 0; t < terms; ++t) {
    const auto& m = monos[uniform(rng, 0, static_cast<int>(monos.size()) - 1)];
    p += sullivan::Polynomial::monomial(ctx, m, small_rational(rng));
  }
  return p;
}

// Random element of ker d in Lambda^{>=2} of the given degree, using only
// generators whose differential is already fixed.
inline sullivan::Polynomial random_decomposable_cocycle(Rng& rng, const sullivan::SullivanAlgebra& alg, int degree) {
  const auto& ctx = alg.context();
  const auto src = sullivan::basis(*ctx, degree, 2);
  if (src.empty()) return alg.zero();
  const auto dst = sullivan::basis(*ctx, degree + 1);
  const auto dst_index = sullivan::index_of(dst);
  std::vector<sullivan::SparseVector> cols;
  for (const auto& m : src) cols.push_back(sullivan::coordinates(alg.apply_d(m), dst_index));
  const auto ker = sullivan::kernel_basis(sullivan::RatMatrix::from_columns(dst.size(), cols));
  sullivan::Polynomial z(ctx);
  for (const auto& v : ker) {
    if (uniform(rng, 0, 3) == 0) continue;
    z += sullivan::from_coordinates(ctx, src, v).scaled(small_rational(rng));
  }
  return z;
}

// Minimal algebra with the given nondecreasing generator degrees (all >= 2),
// each d(g) a random decomposable cocycle. d^2 = 0 holds by construction.
inline sullivan::SullivanAlgebra random_minimal(Rng& rng, const std::vector<int>& degrees) {
  std::vector<sullivan::Generator> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({"g" + std::to_string(i), degrees[i]});
  const auto ctx = sullivan::make_context(std::move(gens));
  std::vector<sullivan::Polynomial> diff(degrees.size(), sullivan::Polynomial(ctx));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    // Factors of a decomposable element of degree |g|+1 have degree < |g|,
    // so only earlier generators are involved.
    const sullivan::SullivanAlgebra partial(ctx, diff);
    diff[i] = random_decomposable_cocycle(rng, partial, degrees[i] + 1);
  }
  return sullivan::SullivanAlgebra(ctx, std::move(diff));
}

// Degrees drawn uniformly from [lo, hi].
inline sullivan::SullivanAlgebra random_minimal(Rng& rng, int ngens, int lo, int hi) {
  std::vector<int> degrees(ngens);
  for (auto& d : degrees) d = uniform(rng, lo, hi);
  std::sort(degrees.begin(), degrees.end());
  return random_minimal(rng, degrees);
}

}  // namespace testing
