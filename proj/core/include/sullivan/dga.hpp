#pragma once

// Sullivan algebras (Lambda V, d) with d stored on generators only and
// extended to all of Lambda V by the graded Leibniz rule.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/graded.hpp"

namespace sullivan {

// Set only by the free-Lie constructor: the algebra is (a truncation of) the
// quadratic model of a wedge of spheres. Never inferred from the differential.
struct WedgeProvenance {
  std::vector<int> sphere_dimensions;
  bool all_odd() const;
};

class SullivanAlgebra {
 public:
  SullivanAlgebra() = default;
  // diff[i] is d of generator i; must live in ctx.
  SullivanAlgebra(ContextPtr ctx, std::vector<Polynomial> diff);

  const ContextPtr& context() const { return ctx_; }
  const GradedContext& ctx() const { return *ctx_; }
  std::size_t size() const { return ctx_->size(); }
  const Polynomial& d(std::size_t generator) const { return diff_.at(generator); }
  const std::vector<Polynomial>& differential() const { return diff_; }

  Polynomial gen(std::size_t i) const { return Polynomial::generator(ctx_, i); }
  Polynomial gen(std::string_view name) const;
  Polynomial zero() const { return Polynomial(ctx_); }
  Polynomial one() const { return Polynomial::constant(ctx_, Rational(1)); }

  Polynomial apply_d(const Monomial& m) const;
  Polynomial apply_d(const Polynomial& p) const;

  bool is_minimal() const;            // no linear (or constant) part on any generator
  bool is_purely_quadratic() const;   // every d(g) lies in Lambda^2
  bool is_simply_connected() const;   // every generator has degree >= 2

  const std::optional<WedgeProvenance>& wedge() const { return wedge_; }
  void set_wedge(WedgeProvenance w) { wedge_ = std::move(w); }

  // Same context and differential; provenance is metadata and ignored.
  friend bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b);

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Monomial, Polynomial> d_of;
  };

  ContextPtr ctx_ = make_context({});
  std::vector<Polynomial> diff_;
  std::optional<WedgeProvenance> wedge_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct ValidationIssue {
  std::string generator;
  Polynomial value;
  std::string reason;
};

struct ValidationReport {
  int cutoff = 0;
  bool degree_ok = true;
  bool d_squared_ok = true;
  bool minimal = true;
  bool simply_connected = true;
  bool finite_type = true;
  std::vector<ValidationIssue> counterexamples;

  bool ok() const { return degree_ok && d_squared_ok && simply_connected && finite_type; }
};

// d^2 = 0 is checked on every generator of degree < cutoff.
ValidationReport validate(const SullivanAlgebra& alg, int cutoff);

// Lambda^{i+1} component of d on each generator.
std::vector<Polynomial> wordlength_part(const SullivanAlgebra& alg, int i);

// (Lambda V, d_1). Throws NotMinimal.
SullivanAlgebra quadratic_part(const SullivanAlgebra& alg);

// Odd n: (Lambda x_n, 0). Even n: (Lambda(x_n, y_{2n-1}), dy = x^2).
SullivanAlgebra sphere_model(int n, const std::string& fundamental = "x",
                             const std::string& partner = "y");

// Generators of b that clash with names in a get the smallest free suffix
// "_2", "_3", ...
SullivanAlgebra tensor(const SullivanAlgebra& a, const SullivanAlgebra& b);

// Rewrites p into another context by sending generator i to generator
// index_map[i]; Koszul signs are recomputed for the new order.
Polynomial transport(const Polynomial& p, const ContextPtr& target,
                     const std::vector<std::size_t>& index_map);

}  // namespace sullivan
