#include "sullivan/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sullivan {

namespace {

DegreeCohomology compute_degree(const SullivanAlgebra& alg, int k) {
  const auto& ctx = alg.ctx();
  DegreeCohomology out;
  out.degree = k;
  out.cochain_basis = basis(ctx, k);
  const auto index = index_of(out.cochain_basis);
  const std::size_t n = out.cochain_basis.size();

  out.coboundaries = Echelon(n);
  if (k > 0) {
    for (const auto& m : basis(ctx, k - 1)) out.coboundaries.insert(coordinates(alg.apply_d(m), index));
  }

  const auto next = basis(ctx, k + 1);
  const auto next_index = index_of(next);
  std::vector<SparseVector> columns;
  columns.reserve(n);
  for (const auto& m : out.cochain_basis) columns.push_back(coordinates(alg.apply_d(m), next_index));
  const auto cocycles = kernel_basis(RatMatrix::from_columns(next.size(), columns));

  Echelon reps(n);
  for (const auto& z : cocycles) reps.insert(out.coboundaries.reduce(z));
  out.representative_coords = reps.rref_rows();
  out.representative_pivots = reps.pivots();
  for (const auto& v : out.representative_coords) {
    out.representatives.push_back(from_coordinates(alg.context(), out.cochain_basis, v));
  }
  for (const auto& v : out.coboundaries.rref_rows()) {
    out.coboundary_basis.push_back(from_coordinates(alg.context(), out.cochain_basis, v));
  }
  return out;
}

int homogeneous_degree(const Polynomial& p) {
  auto deg = p.degree();
  if (!deg) throw Error(ErrorKind::InvalidArgument, "expected a nonzero homogeneous polynomial");
  return *deg;
}

}  // namespace

CohomologyTable::CohomologyTable(SullivanAlgebra alg, int cutoff,
                                 std::vector<DegreeCohomology> degrees)
    : alg_(std::move(alg)), cutoff_(cutoff), degrees_(std::move(degrees)) {}

const DegreeCohomology& CohomologyTable::at(int degree) const {
  if (degree < 0 || degree >= cutoff_) {
    throw Error(ErrorKind::CutoffTooSmall, "degree " + std::to_string(degree) +
                                               " is outside the table (cutoff " +
                                               std::to_string(cutoff_) + ")");
  }
  return degrees_[static_cast<std::size_t>(degree)];
}

std::vector<std::size_t> CohomologyTable::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.dim());
  return out;
}

std::vector<Rational> CohomologyTable::class_of(const Polynomial& z) const {
  if (z.is_zero()) return {};
  const int k = homogeneous_degree(z);
  const auto& deg = at(k);
  if (!alg_.apply_d(z).is_zero()) throw Error(ErrorKind::NotACocycle, to_string(z) + " is not closed");
  const SparseVector rem = deg.coboundaries.reduce(coordinates(z, index_of(deg.cochain_basis)));
  std::vector<Rational> coords;
  for (std::size_t p : deg.representative_pivots) coords.push_back(rem.at(p));
  return coords;
}

bool CohomologyTable::is_coboundary(const Polynomial& z) const {
  const auto c = class_of(z);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
}

CohomologyTable betti(const SullivanAlgebra& alg, int cutoff) {
  if (cutoff < 1) throw Error(ErrorKind::CutoffTooSmall, "cutoff must be at least 1");
  std::vector<DegreeCohomology> degrees;
  for (int k = 0; k < cutoff; ++k) degrees.push_back(compute_degree(alg, k));
  return CohomologyTable(alg, cutoff, std::move(degrees));
}

std::optional<Polynomial> find_primitive(const SullivanAlgebra& alg, const Polynomial& z,
                                         int min_wordlength) {
  if (z.is_zero()) return alg.zero();
  if (!alg.apply_d(z).is_zero()) throw Error(ErrorKind::NotACocycle, to_string(z) + " is not closed");
  const int k = homogeneous_degree(z);
  const auto unknowns = basis(alg.ctx(), k - 1, min_wordlength);
  const auto rows = basis(alg.ctx(), k);
  const auto row_index = index_of(rows);
  std::vector<SparseVector> columns;
  for (const auto& m : unknowns) columns.push_back(coordinates(alg.apply_d(m), row_index));
  const auto b = coordinates(z, row_index).to_dense(rows.size());
  auto sol = solve_affine(RatMatrix::from_columns(rows.size(), columns), b);
  if (!sol) return std::nullopt;
  return from_coordinates(alg.context(), unknowns, SparseVector::from_dense(sol->particular));
}

bool InducedMap::injective_everywhere() const {
  return std::all_of(injective.begin(), injective.end(), [](const auto& kv) { return kv.second; });
}

bool InducedMap::surjective_everywhere() const {
  return std::all_of(surjective.begin(), surjective.end(), [](const auto& kv) { return kv.second; });
}

InducedMap induced_on_H(const DgaMorphism& phi, int cutoff) {
  return induced_on_H(phi, betti(phi.source(), cutoff), betti(phi.target(), cutoff));
}

InducedMap induced_on_H(const DgaMorphism& phi, const CohomologyTable& source,
                        const CohomologyTable& target) {
  if (source.cutoff() != target.cutoff()) {
    throw Error(ErrorKind::CutoffMismatch, "cohomology tables were computed to different cutoffs");
  }
  InducedMap out;
  out.cutoff = source.cutoff();
  for (int k = 0; k < source.cutoff(); ++k) {
    const auto& src = source.at(k);
    const std::size_t m = target.dim(k);
    RatMatrix block(m, src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
      const auto coords = target.class_of(phi.apply(src.representatives[c]));
      for (std::size_t r = 0; r < coords.size(); ++r) {
        if (coords[r] != 0) block.set(r, c, coords[r]);
      }
    }
    const std::size_t rank = rref(block).rank;
    out.injective[k] = rank == src.dim();
    out.surjective[k] = rank == m;
    out.blocks.emplace(k, std::move(block));
  }
  return out;
}

std::optional<Polynomial> rho_kernel_witness(const CohomologyTable& table, int r, int degree) {
  const auto& alg = table.algebra();
  const auto& deg = table.at(degree);
  const auto high = basis(alg.ctx(), degree, r + 1);
  if (high.empty()) return std::nullopt;
  const auto next = basis(alg.ctx(), degree + 1);
  const auto next_index = index_of(next);
  std::vector<SparseVector> columns;
  for (const auto& m : high) columns.push_back(coordinates(alg.apply_d(m), next_index));
  const auto index = index_of(deg.cochain_basis);
  for (const auto& v : kernel_basis(RatMatrix::from_columns(next.size(), columns))) {
    Polynomial z = from_coordinates(alg.context(), high, v);
    if (!deg.coboundaries.contains(coordinates(z, index))) return z;
  }
  return std::nullopt;
}

ToomerVerdict toomer(const SullivanAlgebra& alg, int cutoff) {
  if (!alg.is_minimal()) throw Error(ErrorKind::NotMinimal, "the Toomer invariant needs a minimal algebra");
  if (cutoff < 2) throw Error(ErrorKind::CutoffTooSmall, "cutoff must be at least 2");
  const auto table = betti(alg, cutoff);

  // Above this wordlength nothing lives in degrees < cutoff.
  const int min_deg = std::max(1, alg.ctx().min_degree());
  const int r_max = (cutoff - 1) / min_deg;

  auto first_failure = [&](int r) -> std::optional<ToomerWitness> {
    for (int k = 0; k < cutoff; ++k) {
      if (auto z = rho_kernel_witness(table, r, k)) return ToomerWitness{k, *z, table.class_of(*z)};
    }
    return std::nullopt;
  };

  ToomerVerdict out;
  out.cutoff = cutoff;
  out.value = -1;
  std::optional<ToomerWitness> previous;
  for (int r = 0; r <= r_max; ++r) {
    auto failure = first_failure(r);
    if (out.value < 0) {
      if (!failure) {
        out.value = r;
        out.witness = previous;
      } else {
        previous = std::move(failure);
      }
    } else if (failure) {
      throw std::logic_error("Toomer monotonicity violated at r = " + std::to_string(r));
    }
  }
  if (out.value < 0) throw std::logic_error("rho_r failed to become injective below the cutoff");

  const bool truncated = std::any_of(alg.ctx().generators().begin(), alg.ctx().generators().end(),
                                     [&](const Generator& g) { return g.degree >= cutoff; });
  out.certainty = truncated ? ToomerCertainty::LowerBoundOnly : ToomerCertainty::ExactUpToCutoff;
  return out;
}

int cup_length_evidence(const SullivanAlgebra& alg, int cutoff, int kmax) {
  return cup_length_evidence(betti(alg, cutoff), kmax);
}

int cup_length_evidence(const CohomologyTable& table, int kmax) {
  if (kmax < 1 || kmax > 4) throw Error(ErrorKind::InvalidArgument, "kmax must lie in 1..4");
  struct Rep {
    int degree;
    Polynomial poly;
  };
  std::vector<Rep> reps;
  for (int k = 1; k < table.cutoff(); ++k) {
    for (const auto& p : table.at(k).representatives) reps.push_back({k, p});
  }
  if (reps.empty()) return 0;

  int best = 1;
  std::function<void(std::size_t, int, const Polynomial&, int)> extend =
      [&](std::size_t start, int degree, const Polynomial& product, int length) {
        best = std::max(best, length);
        if (best == kmax || length == kmax) return;
        for (std::size_t j = start; j < reps.size() && best < kmax; ++j) {
          if (degree + reps[j].degree >= table.cutoff()) continue;
          Polynomial next = product * reps[j].poly;
          if (next.is_zero() || table.is_coboundary(next)) continue;
          extend(j, degree + reps[j].degree, next, length + 1);
        }
      };
  for (std::size_t i = 0; i < reps.size() && best < kmax; ++i) extend(i, reps[i].degree, reps[i].poly, 1);
  return best;
}

}  // namespace sullivan
