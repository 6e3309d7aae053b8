#include "sullivan/coformal.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace sullivan {

SullivanAlgebra coformal_limit(const SullivanAlgebra& alg) { return quadratic_part(alg); }

std::string to_string(const GradedContext& ctx, const Substitution& s) {
  const std::string v = ctx.gen(s.generator).name;
  std::string z = to_string(s.correction);
  if (s.correction.size() > 1) z = "(" + z + ")";
  if (!z.empty() && z[0] == '-') return v + " |-> " + v + " + " + z.substr(1);
  return v + " |-> " + v + " - " + z;
}

std::string_view to_string(CoformalKind kind) {
  switch (kind) {
    case CoformalKind::CertifiedCoformal: return "CertifiedCoformal";
    case CoformalKind::Obstructed: return "Obstructed";
    case CoformalKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CoformalVerdict coformalize(const SullivanAlgebra& alg, int cutoff) {
  if (!alg.is_minimal()) throw Error(ErrorKind::NotMinimal, "coformalize needs a minimal algebra");
  const auto& ctx = alg.ctx();
  const std::size_t n = ctx.size();
  const SullivanAlgebra quad = quadratic_part(alg);

  std::vector<Polynomial> diff = alg.differential();
  std::vector<Polynomial> to_current(n), to_original(n);
  for (std::size_t i = 0; i < n; ++i) to_current[i] = to_original[i] = alg.gen(i);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ctx.degree(a) < ctx.degree(b); });

  CoformalVerdict out;
  out.cutoff = cutoff;
  for (std::size_t v : order) {
    const Polynomial theta = diff[v] - diff[v].wordlength_part(2);
    if (theta.is_zero()) continue;
    if (ctx.degree(v) >= cutoff) {
      out.kind = CoformalKind::Inconclusive;
      out.reason = "generator " + ctx.gen(v).name + " of degree " + std::to_string(ctx.degree(v)) +
                   " lies at or above the cutoff " + std::to_string(cutoff) +
                   " and its differential is not yet quadratic";
      return out;
    }
    if (!quad.apply_d(theta).is_zero()) {
      throw Error(ErrorKind::ClosednessViolation,
                  "theta(" + ctx.gen(v).name + ") = " + to_string(theta) + " is not d_1-closed");
    }
    const SullivanAlgebra current(alg.context(), diff);
    const auto z = find_primitive(current, theta, 2);
    if (!z) {
      out.kind = CoformalKind::Obstructed;
      out.generator = v;
      out.obstruction = theta;
      out.obstruction_class = betti(quad, ctx.degree(v) + 2).class_of(theta);
      out.reason = "theta(" + ctx.gen(v).name + ") has no primitive of wordlength >= 2";
      return out;
    }

    // Conjugate by v = v' + z; z avoids v since it is decomposable of degree |v|.
    std::vector<Polynomial> sigma_images;
    for (std::size_t g = 0; g < n; ++g) sigma_images.push_back(alg.gen(g));
    sigma_images[v] += *z;
    const DgaMorphism sigma(current, current, std::move(sigma_images));
    const DgaMorphism back(current, alg, to_original);

    const Polynomial new_dv = diff[v].wordlength_part(2);
    if (!(current.apply_d(alg.gen(v) - *z) == new_dv)) {
      throw std::logic_error("elimination left a non-quadratic differential on " + ctx.gen(v).name);
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (g != v) diff[g] = sigma.apply(diff[g]);
      to_current[g] = sigma.apply(to_current[g]);
    }
    diff[v] = new_dv;
    to_original[v] = to_original[v] - back.apply(*z);
    out.substitutions.push_back({v, *z});
  }

  const SullivanAlgebra result(alg.context(), diff);
  if (!(result == quad)) throw std::logic_error("eliminations did not reach the quadratic part");
  DgaMorphism iso(alg, quad, std::move(to_current));
  DgaMorphism inverse(quad, alg, std::move(to_original));
  const int check = std::max(cutoff, ctx.max_degree() + 1);
  if (!validate_morphism(iso, check).ok() || !validate_morphism(inverse, check).ok()) {
    throw std::logic_error("coformalizing iso failed to commute with d");
  }
  if (!linear_part(iso).is_identity()) throw std::logic_error("coformalizing iso has a non-identity linear part");
  out.kind = CoformalKind::CertifiedCoformal;
  out.iso = std::move(iso);
  out.inverse = std::move(inverse);
  return out;
}

std::string_view to_string(Coformality c) {
  switch (c) {
    case Coformality::Coformal: return "coformal";
    case Coformality::NotCoformal: return "not-coformal";
    case Coformality::Undetermined: return "undetermined";
  }
  return "?";
}

CoformalityReport coformality_report(const SullivanAlgebra& alg, int cutoff, int split_depth) {
  CoformalityReport r;
  r.cutoff = cutoff;
  r.limit = coformal_limit(alg);
  auto toomer_job = std::async(std::launch::async, [&] { return toomer(r.limit, cutoff); });

  bool escalate = false;
  try {
    r.elimination = coformalize(alg, cutoff);
    if (r.elimination->kind == CoformalKind::CertifiedCoformal) {
      r.conclusion = Coformality::Coformal;
    } else if (r.elimination->kind == CoformalKind::Obstructed) {
      escalate = true;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClosednessViolation) throw;
    r.elimination_error = e.what();
    escalate = true;
  }
  if (escalate) {
    r.search = parametrized_iso_search(alg, r.limit, std::nullopt, split_depth);
    if (r.search->kind == SearchKind::NoIsoExists) r.conclusion = Coformality::NotCoformal;
    if (r.search->kind == SearchKind::IsoFound) r.conclusion = Coformality::Coformal;
  }
  r.limit_toomer = toomer_job.get();
  if (r.elimination && r.elimination->kind == CoformalKind::CertifiedCoformal) r.cat0 = r.limit_toomer.value;
  return r;
}

}  // namespace sullivan
