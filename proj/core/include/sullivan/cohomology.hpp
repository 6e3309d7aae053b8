#pragma once

// Cohomology of Sullivan algebras degree by degree, with canonical
// representatives, primitives, induced maps, the Toomer invariant and
// cup-length evidence.

#include <map>
#include <optional>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/morphism.hpp"

namespace sullivan {

struct DegreeCohomology {
  int degree = 0;
  std::vector<Monomial> cochain_basis;
  // RREF basis of the coboundaries, then representatives of a complement
  // inside the cocycles. Representatives vanish at every coboundary pivot.
  Echelon coboundaries;
  std::vector<SparseVector> representative_coords;
  std::vector<std::size_t> representative_pivots;
  std::vector<Polynomial> representatives;
  std::vector<Polynomial> coboundary_basis;

  std::size_t dim() const { return representatives.size(); }
};

class CohomologyTable {
 public:
  CohomologyTable() = default;
  CohomologyTable(SullivanAlgebra alg, int cutoff, std::vector<DegreeCohomology> degrees);

  const SullivanAlgebra& algebra() const { return alg_; }
  int cutoff() const { return cutoff_; }
  // Highest degree reported; cutoff - 1.
  int top_degree() const { return cutoff_ - 1; }
  const DegreeCohomology& at(int degree) const;
  std::size_t dim(int degree) const { return at(degree).dim(); }
  std::vector<std::size_t> dims() const;

  // Coordinates of [z] in the representative basis. Throws NotACocycle.
  std::vector<Rational> class_of(const Polynomial& z) const;
  bool is_coboundary(const Polynomial& z) const;

 private:
  SullivanAlgebra alg_;
  int cutoff_ = 0;
  std::vector<DegreeCohomology> degrees_;
};

// H^k for 0 <= k <= cutoff - 1. Throws CutoffTooSmall when cutoff < 1.
CohomologyTable betti(const SullivanAlgebra& alg, int cutoff);

// z' with d z' = z whose terms all have wordlength >= min_wordlength, the
// RREF-canonical choice. Throws NotACocycle.
std::optional<Polynomial> find_primitive(const SullivanAlgebra& alg, const Polynomial& z,
                                         int min_wordlength = 0);

struct InducedMap {
  int cutoff = 0;
  // Rows: target representatives; columns: source representatives.
  std::map<int, RatMatrix> blocks;
  std::map<int, bool> injective;
  std::map<int, bool> surjective;

  bool injective_everywhere() const;
  bool surjective_everywhere() const;
};

InducedMap induced_on_H(const DgaMorphism& phi, int cutoff);
// Throws CutoffMismatch when the tables disagree on the cutoff.
InducedMap induced_on_H(const DgaMorphism& phi, const CohomologyTable& source,
                        const CohomologyTable& target);

enum class ToomerCertainty { ExactUpToCutoff, LowerBoundOnly };

struct ToomerWitness {
  int degree = 0;
  Polynomial cocycle;            // of wordlength > value - 1, not a coboundary
  std::vector<Rational> klass;  // its coordinates in the representative basis
};

struct ToomerVerdict {
  int value = 0;
  int cutoff = 0;
  ToomerCertainty certainty = ToomerCertainty::ExactUpToCutoff;
  std::optional<ToomerWitness> witness;
};

// Whether H(rho_r): H(Lambda V) -> H(Lambda V / Lambda^{>r} V) is injective
// in degree k. Kernel = cocycles inside Lambda^{>r} modulo coboundaries.
// Returns the first offending cocycle if not.
std::optional<Polynomial> rho_kernel_witness(const CohomologyTable& table, int r, int degree);

// Smallest r with H(rho_r) injective in every degree <= cutoff - 1. Throws
// NotMinimal, CutoffTooSmall.
ToomerVerdict toomer(const SullivanAlgebra& alg, int cutoff);

// Largest k <= kmax such that a k-fold product of positive-degree
// representatives is a nonzero class within the cutoff.
int cup_length_evidence(const SullivanAlgebra& alg, int cutoff, int kmax = 4);
int cup_length_evidence(const CohomologyTable& table, int kmax = 4);

}  // namespace sullivan
