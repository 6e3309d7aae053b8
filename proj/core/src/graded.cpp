#include "sullivan/graded.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace sullivan {

GradedContext::GradedContext(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.name.empty()) throw Error(ErrorKind::InvalidArgument, "generator with empty name");
    if (g.degree < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator '" + g.name + "' must have positive degree");
    }
    if (!by_name_.emplace(g.name, i).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate generator name '" + g.name + "'");
    }
  }
}

std::optional<std::size_t> GradedContext::index_of(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int GradedContext::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree);
  return d;
}

int GradedContext::min_degree() const {
  if (gens_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& g : gens_) d = std::min(d, g.degree);
  return d;
}

ContextPtr make_context(std::vector<Generator> generators) {
  return std::make_shared<const GradedContext>(std::move(generators));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// -------------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) wordlength_ += e;
}

Monomial Monomial::unit(std::size_t ngens) {
  return Monomial(std::vector<std::uint16_t>(ngens, 0));
}

Monomial Monomial::generator(std::size_t ngens, std::size_t index) {
  std::vector<std::uint16_t> e(ngens, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::from_exponents(const GradedContext& ctx,
                                                 std::vector<std::uint16_t> exps) {
  if (exps.size() != ctx.size()) {
    throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
  }
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (ctx.is_odd(i) && exps[i] > 1) return std::nullopt;
  }
  return Monomial(std::move(exps));
}

int Monomial::degree(const GradedContext& ctx) const {
  int d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += exps_[i] * ctx.degree(i);
  return d;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.wordlength_ != b.wordlength_) return a.wordlength_ < b.wordlength_;
  return a.exps_ > b.exps_;
}

SignedMonomial multiply(const GradedContext& ctx, const Monomial& a, const Monomial& b) {
  const std::size_t n = ctx.size();
  std::vector<std::uint16_t> exps(n);
  // Each odd factor of b moves left past every odd factor of a that sorts
  // after it.
  int odd_a_after = 0;
  int swaps = 0;
  for (std::size_t k = n; k-- > 0;) {
    if (ctx.is_odd(k)) {
      if (a.exps_[k] && b.exps_[k]) return SignedMonomial{0, Monomial::unit(n)};
      if (b.exps_[k]) swaps += odd_a_after;
      if (a.exps_[k]) ++odd_a_after;
    }
    exps[k] = static_cast<std::uint16_t>(a.exps_[k] + b.exps_[k]);
  }
  return SignedMonomial{(swaps % 2 == 0) ? 1 : -1, Monomial(std::move(exps))};
}

SignedMonomial normalize(const GradedContext& ctx, std::span<const std::size_t> factors) {
  const std::size_t n = ctx.size();
  std::vector<std::uint16_t> exps(n, 0);
  int inversions = 0;
  for (std::size_t p = 0; p < factors.size(); ++p) {
    const std::size_t g = factors[p];
    if (g >= n) throw Error(ErrorKind::MixedContexts, "factor does not belong to the context");
    if (ctx.is_odd(g)) {
      if (exps[g]) return SignedMonomial{0, Monomial::unit(n)};
      for (std::size_t q = 0; q < p; ++q) {
        if (ctx.is_odd(factors[q]) && factors[q] > g) ++inversions;
      }
    }
    ++exps[g];
  }
  return SignedMonomial{(inversions % 2 == 0) ? 1 : -1, Monomial(std::move(exps))};
}

std::string to_string(const GradedContext& ctx, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.gen(i).name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> basis(const GradedContext& ctx, int degree, int wordlength_min,
                            std::optional<int> wordlength_max) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const std::size_t n = ctx.size();
  std::vector<std::uint16_t> exps(n, 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int remaining, int wl) {
    if (wordlength_max && wl > *wordlength_max) return;
    if (k == n) {
      if (remaining == 0 && wl >= wordlength_min) {
        out.push_back(*Monomial::from_exponents(ctx, exps));
      }
      return;
    }
    const int d = ctx.degree(k);
    const int cap = ctx.is_odd(k) ? 1 : remaining / d;
    for (int e = 0; e <= cap && e * d <= remaining; ++e) {
      exps[k] = static_cast<std::uint16_t>(e);
      rec(k + 1, remaining - e * d, wl + e);
    }
    exps[k] = 0;
  };
  rec(0, degree, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += to_string(*p.context(), m);
    }
  }
  return out;
}

SparseVector coordinates(const Polynomial& p, const std::map<Monomial, std::size_t>& index) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  "monomial " + to_string(*p.context(), m) + " lies outside the basis");
    }
    entries.emplace_back(it->second, c);
  }
  return SparseVector::from_entries(std::move(entries));
}

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Polynomial from_coordinates(const ContextPtr& ctx, const std::vector<Monomial>& basis,
                            const SparseVector& coords) {
  Polynomial p(ctx);
  for (const auto& [i, c] : coords.entries()) p.add_term(basis.at(i), c);
  return p;
}

}  // namespace sullivan
