#pragma once

// Relative Sullivan models (Lambda V_B (x) Lambda W, d) of fibrations
// F -> E -> B, and the checks run on them.

#include <optional>
#include <string>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/coformal.hpp"
#include "sullivan/dga.hpp"
#include "sullivan/morphism.hpp"

namespace sullivan {

class RelativeModel {
 public:
  const SullivanAlgebra& base() const { return base_; }
  const std::vector<Generator>& fiber_generators() const { return fiber_; }
  // Base generators first, in base order, then the fiber generators.
  const SullivanAlgebra& total() const { return total_; }
  // (Lambda W, dbar): the total algebra with Lambda^+ V_B killed.
  const SullivanAlgebra& quotient() const { return quotient_; }
  int cutoff() const { return cutoff_; }

  DgaMorphism inclusion() const;   // base -> total
  DgaMorphism projection() const;  // total -> quotient

 private:
  friend RelativeModel assemble(const SullivanAlgebra&, const std::vector<Generator>&,
                                const std::vector<Polynomial>&, int);
  SullivanAlgebra base_;
  std::vector<Generator> fiber_;
  SullivanAlgebra total_;
  SullivanAlgebra quotient_;
  int cutoff_ = 0;
};

// Context of the total algebra for a base and fiber generators. Names must
// be distinct (InvalidArgument).
ContextPtr total_context(const SullivanAlgebra& base, const std::vector<Generator>& fiber);

// total_diff has one entry per generator of total_context(base, fiber).
// Throws RestrictionMismatch, RelativeMinimalityViolation, DSquaredViolation,
// DegreeMismatch, InvalidArgument.
RelativeModel assemble(const SullivanAlgebra& base, const std::vector<Generator>& fiber,
                       const std::vector<Polynomial>& total_diff, int cutoff);

// The base as a relative model over a point.
RelativeModel over_point(const SullivanAlgebra& fiber, int cutoff);

// Reads off the linear part of d generator by generator; independent of
// SullivanAlgebra::is_minimal.
bool check_tnhz(const RelativeModel& rm);

// Surjectivity of H(total) -> H(quotient) in every degree below cutoff.
bool check_tncz(const RelativeModel& rm, int cutoff);

// Throws NotMinimal, BaseNotQuadratic.
RelativeModel limit_fibration(const RelativeModel& rm);

struct DegreeGap {
  bool applies = false;
  int n = 0;               // largest fiber generator degree
  std::optional<int> m;    // base connectivity; absent for a point base
};

// Throws HypothesesNotMet unless the total is minimal and simply connected
// and both base and quotient are purely quadratic.
DegreeGap degree_gap_criterion(const RelativeModel& rm);

struct SphericalVerdict {
  int sphere_dimension = 0;
  std::optional<int> koszul_case;  // 1, 2 or 3
  bool wedge_base = false;
  bool tnhz = false;
  bool tncz = false;
  std::optional<bool> fiber_class_hit;  // i^* nonzero in degree n
  std::optional<bool> claim_a;          // [a][theta(b)] = 0 in H(E')
  std::optional<int> cup_length;        // evidence on H(E')
  std::string reason;
};

// Throws NotSpherical when the quotient is not a sphere model.
SphericalVerdict spherical_koszul_classifier(const RelativeModel& rm, int cutoff);

struct FibrationAnalysis {
  int cutoff = 0;
  bool tnhz = false;
  bool total_minimal = false;  // second route to tnhz
  bool tncz = false;
  std::optional<DegreeGap> degree_gap;
  std::string degree_gap_note;
  std::optional<RelativeModel> limit;
  std::optional<ToomerVerdict> limit_toomer;
  // Set when tnhz holds, base and quotient are quadratic and e0(E') <= 2.
  std::optional<CoformalVerdict> pipeline;
  std::optional<SphericalVerdict> spherical;
  std::string spherical_note;
};

FibrationAnalysis analyze(const RelativeModel& rm, int cutoff);

}  // namespace sullivan
