#pragma once

// The coformal limit and the elimination procedure that tries to conjugate a
// minimal algebra onto its quadratic part.

#include <optional>
#include <string>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/dga.hpp"
#include "sullivan/iso_search.hpp"
#include "sullivan/morphism.hpp"

namespace sullivan {

// Equal to quadratic_part. Throws NotMinimal.
SullivanAlgebra coformal_limit(const SullivanAlgebra& alg);

// One elimination step v |-> v - correction, the correction written in the
// generators current at that step.
struct Substitution {
  std::size_t generator = 0;
  Polynomial correction;
};

std::string to_string(const GradedContext& ctx, const Substitution& s);

enum class CoformalKind { CertifiedCoformal, Obstructed, Inconclusive };

std::string_view to_string(CoformalKind kind);

struct CoformalVerdict {
  CoformalKind kind = CoformalKind::Inconclusive;
  int cutoff = 0;
  std::vector<Substitution> substitutions;

  // CertifiedCoformal: iso (alg, d) -> (alg, d_1) with identity linear part,
  // and its inverse.
  std::optional<DgaMorphism> iso;
  std::optional<DgaMorphism> inverse;

  // Obstructed: theta(v) = d v - d_1 v, with no primitive of wordlength >= 2.
  std::optional<std::size_t> generator;
  Polynomial obstruction;
  std::vector<Rational> obstruction_class;  // coordinates in H(Lambda V, d_1)

  std::string reason;
};

// Throws NotMinimal, ClosednessViolation.
CoformalVerdict coformalize(const SullivanAlgebra& alg, int cutoff);

enum class Coformality { Coformal, NotCoformal, Undetermined };

std::string_view to_string(Coformality c);

// Limit, its Toomer invariant, the elimination verdict and, when elimination
// stalls, the parametrized search against the limit. "not coformal" is only
// claimed on NoIsoExists.
struct CoformalityReport {
  int cutoff = 0;
  SullivanAlgebra limit;
  ToomerVerdict limit_toomer;                 // cat0 of the limit
  std::optional<CoformalVerdict> elimination;  // absent when closedness failed
  std::string elimination_error;
  std::optional<SearchVerdict> search;
  Coformality conclusion = Coformality::Undetermined;
  std::optional<int> cat0;  // only when CertifiedCoformal
};

CoformalityReport coformality_report(const SullivanAlgebra& alg, int cutoff, int split_depth = 4);

}  // namespace sullivan
