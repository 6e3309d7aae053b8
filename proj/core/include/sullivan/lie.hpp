#pragma once

// Graded Lie algebras over Q, the free graded Lie algebra on a list of
// generators (Lyndon basis), and the passage to and from purely quadratic
// Sullivan algebras.
//
// Pairing convention, fixed once: Lie element x of degree n corresponds to a
// Sullivan generator v of degree n+1 with the same name, and for basis
// elements x_i, x_j (i < j in basis order)
//   coefficient of v_i v_j in d v_k = (-1)^{|x_i|+1} c^k_{ij}
//   coefficient of v_i^2  in d v_k = c^k_{ii} / 2        (|x_i| odd)
// where [x_i, x_j] = sum_k c^k_{ij} x_k.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

struct LieElement {
  std::string name;
  int degree = 0;

  friend bool operator==(const LieElement&, const LieElement&) = default;
};

class GradedLieAlgebra {
 public:
  using Brackets = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  GradedLieAlgebra() = default;
  // brackets holds [x_i, x_j] for i <= j only; missing pairs are zero.
  // A truncation N means the algebra is L / L_{>N}: nothing above degree N.
  GradedLieAlgebra(std::vector<LieElement> basis, Brackets brackets,
                   std::optional<int> truncation = std::nullopt);

  std::size_t size() const { return basis_.size(); }
  const LieElement& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<LieElement>& basis() const { return basis_; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const Brackets& structure() const { return brackets_; }
  std::optional<int> truncation() const { return truncation_; }

  SparseVector bracket(std::size_t i, std::size_t j) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  // Printable bracketing of each basis element, e.g. "[a,[a,b]]".
  const std::vector<std::string>& forms() const { return forms_; }
  void set_forms(std::vector<std::string> forms);

  const std::optional<WedgeProvenance>& wedge() const { return wedge_; }
  void set_wedge(WedgeProvenance w) { wedge_ = std::move(w); }

  // dim L_n for n = 0..max_degree
  std::vector<std::size_t> graded_dims(int max_degree) const;

  friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
    return a.basis_ == b.basis_ && a.brackets_ == b.brackets_;
  }

 private:
  std::vector<LieElement> basis_;
  Brackets brackets_;
  std::optional<int> truncation_;
  std::vector<std::string> forms_;
  std::optional<WedgeProvenance> wedge_;
};

struct LieReport {
  bool degrees_ok = true;
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return degrees_ok && antisymmetry_ok && jacobi_ok; }
};

LieReport validate_lie(const GradedLieAlgebra& l);

// Free graded Lie algebra truncated above `cutoff`. Basis: standard
// bracketings of Lyndon words, plus [w,w] for every odd-degree Lyndon w.
GradedLieAlgebra free_lie(const std::vector<LieElement>& generators, int cutoff);

// C*(L, 0) on the basis elements of degree <= cutoff - 1 (all of them when
// the cutoff is absent). Throws LieInvalid.
SullivanAlgebra ce_quadratic_model(const GradedLieAlgebra& l,
                                   std::optional<int> cutoff = std::nullopt);

// Inverse of ce_quadratic_model. Throws NotQuadratic.
GradedLieAlgebra quadratic_dual(const SullivanAlgebra& alg);

}  // namespace sullivan
