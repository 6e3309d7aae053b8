#include "sullivan/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sullivan {

namespace {

bool touches_base(const Monomial& m, std::size_t nb) {
  for (std::size_t i = 0; i < nb; ++i) {
    if (m.exponent(i) > 0) return true;
  }
  return false;
}

std::vector<std::size_t> iota_map(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), offset);
  return map;
}

}  // namespace

ContextPtr total_context(const SullivanAlgebra& base, const std::vector<Generator>& fiber) {
  std::vector<Generator> gens = base.ctx().generators();
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.name);
  for (const auto& g : fiber) {
    if (!names.insert(g.name).second) {
      throw Error(ErrorKind::InvalidArgument, "fiber generator " + g.name + " clashes with another name");
    }
    gens.push_back(g);
  }
  return make_context(std::move(gens));
}

RelativeModel assemble(const SullivanAlgebra& base, const std::vector<Generator>& fiber,
                       const std::vector<Polynomial>& total_diff, int cutoff) {
  const ContextPtr ctx = total_context(base, fiber);
  const std::size_t nb = base.size();
  if (total_diff.size() != ctx->size()) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(ctx->size()) +
                                                " differentials, got " + std::to_string(total_diff.size()));
  }
  std::vector<Polynomial> diff;
  for (std::size_t i = 0; i < total_diff.size(); ++i) {
    const auto& p = total_diff[i];
    if (!p.is_zero() && !same_context(p.context(), ctx)) {
      throw Error(ErrorKind::MixedContexts, "d(" + ctx->gen(i).name + ") is not written in the total generators");
    }
    diff.push_back(p.is_zero() ? Polynomial(ctx) : p);
    if (!p.is_zero() && p.degree() != ctx->degree(i) + 1) {
      throw Error(ErrorKind::DegreeMismatch, "d(" + ctx->gen(i).name + ") = " + to_string(p) +
                                                 " does not have degree " + std::to_string(ctx->degree(i) + 1));
    }
  }

  const auto base_map = iota_map(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    if (!(transport(base.d(i), ctx, base_map) == diff[i])) {
      throw Error(ErrorKind::RestrictionMismatch,
                  "d(" + ctx->gen(i).name + ") differs from the base differential");
    }
  }
  for (std::size_t i = nb; i < ctx->size(); ++i) {
    for (const auto& [m, c] : diff[i].terms()) {
      if (!touches_base(m, nb) && m.wordlength() < 2) {
        throw Error(ErrorKind::RelativeMinimalityViolation,
                    "d(" + ctx->gen(i).name + ") has the term " + to_string(Polynomial::monomial(ctx, m, c)) +
                        " outside Lambda^+ V_B (x) Lambda W + Lambda^{>=2} W");
      }
    }
  }

  RelativeModel rm;
  rm.base_ = base;
  rm.fiber_ = fiber;
  rm.total_ = SullivanAlgebra(ctx, diff);
  rm.cutoff_ = cutoff;
  const auto report = validate(rm.total_, cutoff);
  if (!report.d_squared_ok) {
    for (const auto& issue : report.counterexamples) {
      if (issue.reason == "d(d(g)) != 0") {
        throw Error(ErrorKind::DSquaredViolation,
                    "d^2(" + issue.generator + ") = " + to_string(issue.value) + " below cutoff " + std::to_string(cutoff));
      }
    }
  }

  const ContextPtr fctx = make_context(fiber);
  std::vector<std::size_t> to_fiber(ctx->size(), 0);
  for (std::size_t i = nb; i < ctx->size(); ++i) to_fiber[i] = i - nb;
  std::vector<Polynomial> qdiff;
  for (std::size_t i = nb; i < ctx->size(); ++i) {
    Polynomial pure(ctx);
    for (const auto& [m, c] : diff[i].terms()) {
      if (!touches_base(m, nb)) pure.add_term(m, c);
    }
    qdiff.push_back(transport(pure, fctx, to_fiber));
  }
  rm.quotient_ = SullivanAlgebra(fctx, std::move(qdiff));
  return rm;
}

RelativeModel over_point(const SullivanAlgebra& fiber, int cutoff) {
  const SullivanAlgebra point(make_context({}), {});
  return assemble(point, fiber.ctx().generators(), fiber.differential(), cutoff);
}

DgaMorphism RelativeModel::inclusion() const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base_.size(); ++i) images.push_back(total_.gen(i));
  return DgaMorphism(base_, total_, std::move(images));
}

DgaMorphism RelativeModel::projection() const {
  std::vector<Polynomial> images;
  const std::size_t nb = base_.size();
  for (std::size_t i = 0; i < total_.size(); ++i) {
    images.push_back(i < nb ? quotient_.zero() : quotient_.gen(i - nb));
  }
  return DgaMorphism(total_, quotient_, std::move(images));
}

bool check_tnhz(const RelativeModel& rm) {
  const auto& alg = rm.total();
  const std::size_t n = alg.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& dg = alg.d(i);
    if (dg.coefficient(Monomial::unit(n)) != 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (dg.coefficient(Monomial::generator(n, j)) != 0) return false;
    }
  }
  return true;
}

bool check_tncz(const RelativeModel& rm, int cutoff) {
  return induced_on_H(rm.projection(), cutoff).surjective_everywhere();
}

RelativeModel limit_fibration(const RelativeModel& rm) {
  if (!rm.total().is_minimal()) throw Error(ErrorKind::NotMinimal, "the total algebra has linear terms");
  if (!rm.base().is_purely_quadratic()) {
    throw Error(ErrorKind::BaseNotQuadratic, "the base differential is not purely quadratic");
  }
  return assemble(rm.base(), rm.fiber_generators(), quadratic_part(rm.total()).differential(), rm.cutoff());
}

DegreeGap degree_gap_criterion(const RelativeModel& rm) {
  if (!rm.total().is_minimal() || !rm.total().is_simply_connected()) {
    throw Error(ErrorKind::HypothesesNotMet, "the total algebra must be minimal and simply connected");
  }
  if (!rm.base().is_purely_quadratic() || !rm.quotient().is_purely_quadratic()) {
    throw Error(ErrorKind::HypothesesNotMet, "base and fiber quotient must be purely quadratic");
  }
  DegreeGap g;
  for (const auto& w : rm.fiber_generators()) g.n = std::max(g.n, w.degree);
  if (rm.base().size() > 0) g.m = rm.base().ctx().min_degree() - 1;
  g.applies = !g.m || g.n <= *g.m + 3;
  if (g.applies && !rm.total().is_purely_quadratic()) {
    throw std::logic_error("degree gap holds but the total differential is not purely quadratic");
  }
  return g;
}

// ---------------------------------------------------------------- classifier

namespace {

struct SphereShape {
  int n = 0;
  std::size_t a = 0;                // fundamental generator (quotient index)
  std::optional<std::size_t> b;     // even case partner
  Rational c = 0;                   // dbar b = c a^2
};

SphereShape sphere_shape(const SullivanAlgebra& q) {
  const auto& ctx = q.ctx();
  if (ctx.size() == 1 && ctx.is_odd(0) && q.d(0).is_zero()) return {ctx.degree(0), 0, std::nullopt, 0};
  if (ctx.size() == 2) {
    for (std::size_t a = 0; a < 2; ++a) {
      const std::size_t b = 1 - a;
      const int n = ctx.degree(a);
      if (n % 2 != 0 || ctx.degree(b) != 2 * n - 1 || !q.d(a).is_zero()) continue;
      const Polynomial a2 = q.gen(a) * q.gen(a);
      const Rational c = q.d(b).coefficient(a2.terms().begin()->first);
      if (c != 0 && q.d(b) == a2.scaled(c)) return {n, a, b, c};
    }
  }
  throw Error(ErrorKind::NotSpherical, "the fiber quotient is not a model of a sphere");
}

}  // namespace

SphericalVerdict spherical_koszul_classifier(const RelativeModel& rm, int cutoff) {
  const SphereShape shape = sphere_shape(rm.quotient());
  SphericalVerdict v;
  v.sphere_dimension = shape.n;
  v.wedge_base = rm.base().wedge().has_value();
  v.tnhz = check_tnhz(rm);
  v.tncz = check_tncz(rm, cutoff);
  if (!v.wedge_base) {
    v.reason = "base carries no wedge-of-spheres provenance";
    return v;
  }
  const int n = shape.n;
  if (n % 2 != 0) {
    if (cutoff <= n) throw Error(ErrorKind::CutoffTooSmall, "need cutoff above the sphere dimension");
    const auto map = induced_on_H(rm.projection(), cutoff);
    const auto& block = map.blocks.at(n);
    v.fiber_class_hit = rref(block).rank > 0;
    if (*v.fiber_class_hit) {
      v.koszul_case = 1;
      v.reason = "odd sphere fiber and i^* is nonzero in degree " + std::to_string(n);
    } else {
      v.reason = "odd sphere fiber but i^* vanishes in degree " + std::to_string(n);
    }
    return v;
  }

  if (rm.base().wedge()->all_odd() && v.tncz) {
    v.koszul_case = 3;
    v.reason = "even sphere fiber over a wedge of odd spheres, TNCZ";
    return v;
  }
  if (!v.tnhz || !v.tncz) {
    v.reason = std::string("even sphere fiber but the fibration is ") + (v.tnhz ? "" : "not TNHZ") +
               (!v.tnhz && !v.tncz ? " and " : "") + (v.tncz ? "" : "not TNCZ");
    return v;
  }
  if (cutoff <= 3 * n) {
    v.reason = "cutoff " + std::to_string(cutoff) + " too small to decide [a][theta(b)] in degree " +
               std::to_string(3 * n);
    return v;
  }
  const RelativeModel lim = limit_fibration(rm);
  const SullivanAlgebra& ep = lim.total();
  const std::size_t nb = rm.base().size();
  const Polynomial a = ep.gen(nb + shape.a);
  const Polynomial theta = (a * a).scaled(shape.c) - ep.d(nb + *shape.b);
  const Polynomial product = a * theta;
  const auto table = betti(ep, cutoff);
  v.claim_a = ep.apply_d(theta).is_zero() && table.is_coboundary(product);
  v.cup_length = cup_length_evidence(table, 3);
  if (*v.claim_a && *v.cup_length <= 2) {
    v.koszul_case = 2;
    v.reason = "even sphere fiber, TNHZ and TNCZ, [a][theta(b)] = 0 and cup length evidence " +
               std::to_string(*v.cup_length);
  } else {
    v.reason = *v.claim_a ? "cup length evidence exceeds 2 below the cutoff"
                          : "[a][theta(b)] is not zero in H(E')";
  }
  return v;
}

FibrationAnalysis analyze(const RelativeModel& rm, int cutoff) {
  FibrationAnalysis out;
  out.cutoff = cutoff;
  out.tnhz = check_tnhz(rm);
  out.total_minimal = validate(rm.total(), cutoff).minimal;
  out.tncz = check_tncz(rm, cutoff);
  try {
    out.degree_gap = degree_gap_criterion(rm);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesesNotMet) throw;
    out.degree_gap_note = e.what();
  }
  if (out.total_minimal && rm.base().is_purely_quadratic()) {
    out.limit = limit_fibration(rm);
    out.limit_toomer = toomer(out.limit->total(), cutoff);
    if (out.tnhz && rm.quotient().is_purely_quadratic() && out.limit_toomer->value <= 2 &&
        out.limit_toomer->certainty == ToomerCertainty::ExactUpToCutoff) {
      out.pipeline = coformalize(rm.total(), cutoff);
    }
  }
  try {
    out.spherical = spherical_koszul_classifier(rm, cutoff);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSpherical) throw;
    out.spherical_note = e.what();
  }
  return out;
}

}  // namespace sullivan
