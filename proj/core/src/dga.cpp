#include "sullivan/dga.hpp"

#include <algorithm>
#include <set>

namespace sullivan {

bool WedgeProvenance::all_odd() const {
  return std::all_of(sphere_dimensions.begin(), sphere_dimensions.end(),
                     [](int n) { return n % 2 != 0; });
}

SullivanAlgebra::SullivanAlgebra(ContextPtr ctx, std::vector<Polynomial> diff)
    : ctx_(std::move(ctx)), diff_(std::move(diff)) {
  if (!ctx_) throw Error(ErrorKind::InvalidArgument, "algebra without context");
  if (diff_.size() != ctx_->size()) {
    throw Error(ErrorKind::InvalidArgument, "differential must be given on every generator");
  }
  for (auto& p : diff_) {
    if (p.is_zero()) {
      p = Polynomial(ctx_);
    } else if (!same_context(p.context(), ctx_)) {
      throw Error(ErrorKind::MixedContexts, "differential value from a different context");
    }
  }
}

Polynomial SullivanAlgebra::gen(std::string_view name) const {
  auto i = ctx_->index_of(name);
  if (!i) throw Error(ErrorKind::UnknownGenerator, "no generator named '" + std::string(name) + "'");
  return gen(*i);
}

Polynomial SullivanAlgebra::apply_d(const Monomial& m) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->d_of.find(m);
    if (it != cache_->d_of.end()) return it->second;
  }
  const auto& c = *ctx_;
  const std::size_t n = c.size();
  Polynomial result(ctx_);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = m.exponent(i);
    if (e == 0 || diff_[i].is_zero()) continue;
    std::vector<std::uint16_t> before(n, 0), after(n, 0), power(n, 0);
    int prefix_degree = 0;
    for (std::size_t k = 0; k < i; ++k) {
      before[k] = m.exponent(k);
      prefix_degree += before[k] * c.degree(k);
    }
    for (std::size_t k = i + 1; k < n; ++k) after[k] = m.exponent(k);
    power[i] = static_cast<std::uint16_t>(e - 1);
    // d(g^e) = e g^{e-1} dg; only even g can have e > 1, so the order of
    // g^{e-1} and dg is immaterial.
    Polynomial term = Polynomial::monomial(ctx_, *Monomial::from_exponents(c, before)) *
                      (Polynomial::monomial(ctx_, *Monomial::from_exponents(c, power),
                                            Rational(e)) *
                       diff_[i]) *
                      Polynomial::monomial(ctx_, *Monomial::from_exponents(c, after));
    if (prefix_degree % 2 != 0) {
      result -= term;
    } else {
      result += term;
    }
  }
  std::lock_guard lock(cache_->mutex);
  cache_->d_of.emplace(m, result);
  return result;
}

Polynomial SullivanAlgebra::apply_d(const Polynomial& p) const {
  Polynomial out(ctx_);
  if (p.is_zero()) return out;
  if (!same_context(p.context(), ctx_)) {
    throw Error(ErrorKind::MixedContexts, "polynomial is not in the algebra's context");
  }
  for (const auto& [m, coeff] : p.terms()) out += apply_d(m).scaled(coeff);
  return out;
}

bool SullivanAlgebra::is_minimal() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const Polynomial& p) {
    return p.is_zero() || p.min_wordlength() >= 2;
  });
}

bool SullivanAlgebra::is_purely_quadratic() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const Polynomial& p) {
    return p.is_zero() || (p.min_wordlength() == 2 && p.max_wordlength() == 2);
  });
}

bool SullivanAlgebra::is_simply_connected() const { return ctx_->min_degree() >= 2 || ctx_->size() == 0; }

bool operator==(const SullivanAlgebra& a, const SullivanAlgebra& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  for (std::size_t i = 0; i < a.diff_.size(); ++i) {
    if (!(a.diff_[i] == b.diff_[i])) return false;
  }
  return true;
}

ValidationReport validate(const SullivanAlgebra& alg, int cutoff) {
  ValidationReport r;
  r.cutoff = cutoff;
  const auto& c = alg.ctx();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gen(i);
    const auto& dg = alg.d(i);
    if (g.degree < 2) {
      r.simply_connected = false;
      r.counterexamples.push_back({g.name, alg.gen(i), "degree below 2"});
    }
    if (!dg.is_zero()) {
      auto deg = dg.degree();
      if (!deg || *deg != g.degree + 1) {
        r.degree_ok = false;
        r.counterexamples.push_back({g.name, dg, "d does not raise degree by 1"});
      }
      if (dg.min_wordlength() < 2) {
        r.minimal = false;
        r.counterexamples.push_back({g.name, dg.wordlength_part(1) + dg.wordlength_part(0),
                                     "linear part"});
      }
    }
    if (g.degree < cutoff) {
      Polynomial dd = alg.apply_d(dg);
      if (!dd.is_zero()) {
        r.d_squared_ok = false;
        r.counterexamples.push_back({g.name, dd, "d(d(g)) != 0"});
      }
    }
  }
  return r;
}

std::vector<Polynomial> wordlength_part(const SullivanAlgebra& alg, int i) {
  if (i < 0) throw Error(ErrorKind::InvalidArgument, "wordlength part index must be >= 0");
  std::vector<Polynomial> out;
  out.reserve(alg.size());
  for (const auto& p : alg.differential()) out.push_back(p.wordlength_part(i + 1));
  return out;
}

SullivanAlgebra quadratic_part(const SullivanAlgebra& alg) {
  if (!alg.is_minimal()) {
    throw Error(ErrorKind::NotMinimal, "the quadratic part is only defined for minimal algebras");
  }
  SullivanAlgebra q(alg.context(), wordlength_part(alg, 1));
  if (alg.wedge()) q.set_wedge(*alg.wedge());
  return q;
}

SullivanAlgebra sphere_model(int n, const std::string& fundamental, const std::string& partner) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "sphere dimension must be at least 2");
  if (n % 2 != 0) {
    auto ctx = make_context({{fundamental, n}});
    return SullivanAlgebra(ctx, {Polynomial(ctx)});
  }
  auto ctx = make_context({{fundamental, n}, {partner, 2 * n - 1}});
  Polynomial x = Polynomial::generator(ctx, 0);
  return SullivanAlgebra(ctx, {Polynomial(ctx), x * x});
}

Polynomial transport(const Polynomial& p, const ContextPtr& target,
                     const std::vector<std::size_t>& index_map) {
  Polynomial out(target);
  if (p.is_zero()) return out;
  const auto& src = *p.context();
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (int k = 0; k < m.exponent(i); ++k) word.push_back(index_map.at(i));
    }
    auto sm = normalize(*target, word);
    if (sm.sign == 0) continue;
    out.add_term(sm.mono, sm.sign > 0 ? coeff : Rational(-coeff));
  }
  return out;
}

SullivanAlgebra tensor(const SullivanAlgebra& a, const SullivanAlgebra& b) {
  std::vector<Generator> gens = a.ctx().generators();
  std::set<std::string> used;
  for (const auto& g : gens) used.insert(g.name);
  for (const auto& g : b.ctx().generators()) {
    std::string name = g.name;
    for (int k = 2; used.count(name); ++k) name = g.name + "_" + std::to_string(k);
    used.insert(name);
    gens.push_back({name, g.degree});
  }
  auto ctx = make_context(std::move(gens));
  std::vector<std::size_t> map_a(a.size()), map_b(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) map_a[i] = i;
  for (std::size_t i = 0; i < b.size(); ++i) map_b[i] = a.size() + i;
  std::vector<Polynomial> diff;
  for (const auto& p : a.differential()) diff.push_back(transport(p, ctx, map_a));
  for (const auto& p : b.differential()) diff.push_back(transport(p, ctx, map_b));
  return SullivanAlgebra(ctx, std::move(diff));
}

}  // namespace sullivan
