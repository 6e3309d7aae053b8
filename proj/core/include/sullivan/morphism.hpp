#pragma once

// Morphisms of Sullivan algebras: generator assignments extended
// multiplicatively, their validation, linear parts and degree-by-degree
// construction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/dga.hpp"

namespace sullivan {

class DgaMorphism {
 public:
  DgaMorphism() = default;
  // assignment[i] is the image of source generator i, a polynomial in target.
  DgaMorphism(SullivanAlgebra source, SullivanAlgebra target, std::vector<Polynomial> assignment);

  static DgaMorphism identity(const SullivanAlgebra& alg);

  const SullivanAlgebra& source() const { return source_; }
  const SullivanAlgebra& target() const { return target_; }
  const Polynomial& image(std::size_t generator) const { return assignment_.at(generator); }
  const std::vector<Polynomial>& assignment() const { return assignment_; }

  Polynomial apply(const Polynomial& p) const;

 private:
  SullivanAlgebra source_;
  SullivanAlgebra target_;
  std::vector<Polynomial> assignment_;
};

// outer o inner
DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner);

struct MorphismIssue {
  std::string generator;
  std::string reason;
  Polynomial defect;  // phi(d g) - d(phi g), or the offending image
};

struct MorphismReport {
  int cutoff = 0;
  bool degree_ok = true;
  bool commutes = true;
  std::vector<MorphismIssue> witnesses;
  bool ok() const { return degree_ok && commutes; }
};

MorphismReport validate_morphism(const DgaMorphism& phi, int cutoff);

// Q(phi) in each degree: rows index target generators of that degree, columns
// source generators of that degree (both in declaration order).
struct GradedLinearMap {
  std::map<int, RatMatrix> blocks;
  bool is_identity() const;
  bool is_invertible() const;
};

GradedLinearMap linear_part(const DgaMorphism& phi);

// Lambda Q(phi) between the quadratic parts of source and target.
DgaMorphism quadratic_model_map(const DgaMorphism& phi);

// Builds phi generator by generator in ascending degree. Seeded generators are
// checked; every other generator of degree <= cutoff is solved from the
// linear constraint phi(d g) = d(phi g), taking the RREF-canonical solution.
// Generators above the cutoff are sent to 0. Absent when some constraint has
// no solution. Throws SeedInvalid.
std::optional<DgaMorphism> extend_degreewise(const SullivanAlgebra& source,
                                             const SullivanAlgebra& target,
                                             const std::map<std::size_t, Polynomial>& seed,
                                             int cutoff);

// Two-sided inverse of an isomorphism, solved degree by degree from
// phi(psi(h)) = h. Absent when phi is not invertible on generators up to the
// cutoff.
std::optional<DgaMorphism> invert(const DgaMorphism& phi, int cutoff);

}  // namespace sullivan
