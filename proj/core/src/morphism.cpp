#include "sullivan/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace sullivan {

namespace {

std::vector<std::size_t> generators_by_degree(const GradedContext& ctx) {
  std::vector<std::size_t> order(ctx.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ctx.degree(a) < ctx.degree(b);
  });
  return order;
}

std::vector<std::size_t> generators_of_degree(const GradedContext& ctx, int degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx.degree(i) == degree) out.push_back(i);
  }
  return out;
}

}  // namespace

DgaMorphism::DgaMorphism(SullivanAlgebra source, SullivanAlgebra target,
                         std::vector<Polynomial> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) {
    throw Error(ErrorKind::InvalidArgument, "a morphism must assign every source generator");
  }
  for (auto& p : assignment_) {
    if (p.is_zero()) {
      p = target_.zero();
    } else if (!same_context(p.context(), target_.context())) {
      throw Error(ErrorKind::MixedContexts, "generator image does not live in the target");
    }
  }
}

DgaMorphism DgaMorphism::identity(const SullivanAlgebra& alg) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < alg.size(); ++i) images.push_back(alg.gen(i));
  return DgaMorphism(alg, alg, std::move(images));
}

Polynomial DgaMorphism::apply(const Polynomial& p) const {
  Polynomial out = target_.zero();
  if (p.is_zero()) return out;
  if (!same_context(p.context(), source_.context())) {
    throw Error(ErrorKind::MixedContexts, "polynomial is not in the morphism's source");
  }
  for (const auto& [m, coeff] : p.terms()) {
    Polynomial term = Polynomial::constant(target_.context(), coeff);
    for (std::size_t i = 0; i < m.exponents().size() && !term.is_zero(); ++i) {
      for (int k = 0; k < m.exponent(i); ++k) term = term * assignment_[i];
    }
    out += term;
  }
  return out;
}

DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner) {
  if (!same_context(inner.target().context(), outer.source().context())) {
    throw Error(ErrorKind::MixedContexts, "morphisms are not composable");
  }
  std::vector<Polynomial> images;
  for (const auto& p : inner.assignment()) images.push_back(outer.apply(p));
  return DgaMorphism(inner.source(), outer.target(), std::move(images));
}

MorphismReport validate_morphism(const DgaMorphism& phi, int cutoff) {
  MorphismReport r;
  r.cutoff = cutoff;
  const auto& src = phi.source().ctx();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& g = src.gen(i);
    const auto& img = phi.image(i);
    if (!img.is_zero() && img.degree() != g.degree) {
      r.degree_ok = false;
      r.witnesses.push_back({g.name, "image has the wrong degree", img});
      continue;
    }
    if (g.degree >= cutoff) continue;
    Polynomial defect = phi.apply(phi.source().d(i)) - phi.target().apply_d(img);
    if (!defect.is_zero()) {
      r.commutes = false;
      r.witnesses.push_back({g.name, "phi(d g) != d(phi g)", defect});
    }
  }
  return r;
}

bool GradedLinearMap::is_identity() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& kv) {
    const auto& m = kv.second;
    return m.rows() == m.cols() && m == RatMatrix::identity(m.rows());
  });
}

bool GradedLinearMap::is_invertible() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& kv) {
    const auto& m = kv.second;
    return m.rows() == m.cols() && rref(m).rank == m.rows();
  });
}

GradedLinearMap linear_part(const DgaMorphism& phi) {
  const auto& src = phi.source().ctx();
  const auto& tgt = phi.target().ctx();
  std::vector<int> degrees;
  for (const auto& g : src.generators()) degrees.push_back(g.degree);
  for (const auto& g : tgt.generators()) degrees.push_back(g.degree);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  GradedLinearMap out;
  for (int deg : degrees) {
    const auto cols = generators_of_degree(src, deg);
    const auto rows = generators_of_degree(tgt, deg);
    RatMatrix block(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Polynomial lin = phi.image(cols[c]).wordlength_part(1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational coeff =
            lin.coefficient(Monomial::generator(tgt.size(), rows[r]));
        if (coeff != 0) block.set(r, c, coeff);
      }
    }
    out.blocks.emplace(deg, std::move(block));
  }
  return out;
}

DgaMorphism quadratic_model_map(const DgaMorphism& phi) {
  std::vector<Polynomial> images;
  SullivanAlgebra src = quadratic_part(phi.source());
  SullivanAlgebra tgt = quadratic_part(phi.target());
  for (const auto& p : phi.assignment()) images.push_back(p.wordlength_part(1));
  return DgaMorphism(std::move(src), std::move(tgt), std::move(images));
}

std::optional<DgaMorphism> extend_degreewise(const SullivanAlgebra& source,
                                             const SullivanAlgebra& target,
                                             const std::map<std::size_t, Polynomial>& seed,
                                             int cutoff) {
  const auto& sctx = source.ctx();
  const auto& tctx = target.ctx();
  std::vector<Polynomial> images(source.size(), target.zero());
  for (const auto& [i, p] : seed) {
    if (i >= source.size()) throw Error(ErrorKind::SeedInvalid, "seed names an unknown generator");
    if (!p.is_zero() && (!same_context(p.context(), target.context()) ||
                         p.degree() != sctx.degree(i))) {
      throw Error(ErrorKind::SeedInvalid,
                  "seed image of '" + sctx.gen(i).name + "' has the wrong degree or context");
    }
    images[i] = p.is_zero() ? target.zero() : p;
  }

  DgaMorphism partial(source, target, images);
  for (std::size_t i : generators_by_degree(sctx)) {
    const int deg = sctx.degree(i);
    if (deg > cutoff) break;
    partial = DgaMorphism(source, target, images);
    const Polynomial lhs = partial.apply(source.d(i));  // phi(d g): lower generators only
    if (seed.count(i)) {
      if (!(lhs == target.apply_d(images[i]))) {
        throw Error(ErrorKind::SeedInvalid,
                    "seed does not commute with d on '" + sctx.gen(i).name + "'");
      }
      continue;
    }
    const auto unknowns = basis(tctx, deg, 1);
    const auto rows = basis(tctx, deg + 1);
    const auto row_index = index_of(rows);
    std::vector<SparseVector> columns;
    for (const auto& m : unknowns) columns.push_back(coordinates(target.apply_d(m), row_index));
    const RatMatrix a = RatMatrix::from_columns(rows.size(), columns);
    const auto b = coordinates(lhs, row_index).to_dense(rows.size());
    auto sol = solve_affine(a, b);
    if (!sol) return std::nullopt;
    images[i] = from_coordinates(target.context(), unknowns,
                                 SparseVector::from_dense(sol->particular));
  }
  return DgaMorphism(source, target, std::move(images));
}

std::optional<DgaMorphism> invert(const DgaMorphism& phi, int cutoff) {
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  std::vector<Polynomial> images(tgt.size(), src.zero());
  for (std::size_t h = 0; h < tgt.size(); ++h) {
    const int deg = tgt.ctx().degree(h);
    if (deg > cutoff) continue;
    const auto unknowns = basis(src.ctx(), deg, 1);
    const auto rows = basis(tgt.ctx(), deg, 1);
    const auto row_index = index_of(rows);
    std::vector<SparseVector> columns;
    for (const auto& m : unknowns) {
      columns.push_back(coordinates(phi.apply(Polynomial::monomial(src.context(), m)), row_index));
    }
    const RatMatrix a = RatMatrix::from_columns(rows.size(), columns);
    const auto b = coordinates(tgt.gen(h), row_index).to_dense(rows.size());
    auto sol = solve_affine(a, b);
    if (!sol || !sol->kernel.empty()) return std::nullopt;
    images[h] = from_coordinates(src.context(), unknowns, SparseVector::from_dense(sol->particular));
  }
  return DgaMorphism(tgt, src, std::move(images));
}

}  // namespace sullivan
