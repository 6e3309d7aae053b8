#pragma once

// Deciding whether two minimal algebras are isomorphic by treating every
// coefficient of a candidate morphism as an unknown. Commutation with d gives
// polynomial equations in the unknowns; invertibility of the linear part
// gives nonzero conditions. Satisfiability is settled by exact substitution
// and case splits; every refuted branch leaves a replayable step list.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/morphism.hpp"

namespace sullivan {

// Polynomial over Q in the search parameters.
class ParamPoly {
 public:
  // Sorted (variable, exponent) pairs, exponents > 0.
  using Mono = std::vector<std::pair<std::uint32_t, std::uint16_t>>;
  using Terms = std::map<Mono, Rational>;

  ParamPoly() = default;
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT: Coeff(0), Coeff(1)
  ParamPoly(const Rational& c);                 // NOLINT
  static ParamPoly variable(std::uint32_t v);
  static ParamPoly monomial(Mono m, Rational c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<std::uint32_t> variables() const;
  int degree_in(std::uint32_t v) const;
  // Coefficient of v^1 when v occurs at most linearly; absent otherwise.
  std::optional<ParamPoly> linear_coefficient(std::uint32_t v) const;

  ParamPoly substitute(std::uint32_t v, const ParamPoly& value) const;
  // Divides every term by v^k for the largest k dividing all terms.
  ParamPoly strip_variable(std::uint32_t v) const;
  Rational evaluate(const std::vector<Rational>& values) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add(const Mono& m, const Rational& c);
  Terms terms_;
};

inline bool coeff_is_zero(const ParamPoly& p) { return p.is_zero(); }

std::string to_string(const ParamPoly& p, const std::vector<std::string>& names);

using SymbolicPolynomial = BasicPolynomial<ParamPoly>;

enum class StepKind {
  AssumeZero,            // branch choice var = 0
  AssumeNonzero,         // branch choice var != 0
  Substitute,            // equation = coeff * multiplier * (var - value)
  ForceZero,             // equation is a monomial whose other variables are nonzero
  NonzeroFromCondition,  // a nonzero condition reduced to a monomial containing var
  EquationContradiction, // equation reduced to a nonzero monomial in nonzero variables
  ConditionContradiction // nonzero condition reduced to 0
};

std::string_view to_string(StepKind kind);

struct TraceStep {
  StepKind kind = StepKind::AssumeZero;
  std::uint32_t var = 0;
  ParamPoly value;         // Substitute
  ParamPoly multiplier;    // Substitute: monomial in nonzero variables
  Rational coeff = 0;      // Substitute
  std::size_t source = 0;  // equation or condition index
};

enum class BranchOutcome { Contradiction, Solved, Undecided };

struct BranchTrace {
  std::vector<TraceStep> steps;
  BranchOutcome outcome = BranchOutcome::Undecided;
  std::string note;
};

struct SearchTrace {
  std::vector<std::string> parameters;
  std::vector<ParamPoly> equations;   // must vanish
  std::vector<ParamPoly> conditions;  // must not vanish
  std::vector<BranchTrace> branches;
};

std::string describe(const SearchTrace& trace, const BranchTrace& branch);

enum class SearchKind { IsoFound, NoIsoExists, Inconclusive };

std::string_view to_string(SearchKind kind);

struct SearchVerdict {
  SearchKind kind = SearchKind::Inconclusive;
  int cutoff = 0;
  int split_depth = 0;
  std::optional<DgaMorphism> iso;
  SearchTrace trace;
  std::string reason;
};

// Cutoff defaults to one more than the largest generator degree of either
// algebra. Different generator censuses give NoIsoExists immediately.
SearchVerdict parametrized_iso_search(const SullivanAlgebra& source, const SullivanAlgebra& target,
                                      std::optional<int> cutoff = std::nullopt, int split_depth = 4);

// The constraint system the search starts from.
SearchTrace build_iso_system(const SullivanAlgebra& source, const SullivanAlgebra& target, int cutoff);

// Re-derives every contradiction branch of a NoIsoExists verdict from the
// regenerated constraint system and checks that the branches cover all
// cases. True when every step checks out.
bool replay(const SearchVerdict& verdict, const SullivanAlgebra& source,
            const SullivanAlgebra& target);

}  // namespace sullivan
