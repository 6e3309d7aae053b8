#pragma once

// The free graded-commutative algebra on a finite list of generators:
// monomials in Koszul normal form and polynomials with coefficients in any
// commutative ring that supplies +, -, * and coeff_is_zero().

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sullivan/error.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Ordered generator list. Declaration order is the total order used for
// monomial normal forms.
class GradedContext {
 public:
  GradedContext() = default;
  explicit GradedContext(std::vector<Generator> generators);

  std::size_t size() const { return gens_.size(); }
  const Generator& gen(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  bool is_odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const GradedContext& a, const GradedContext& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

using ContextPtr = std::shared_ptr<const GradedContext>;

ContextPtr make_context(std::vector<Generator> generators);
bool same_context(const ContextPtr& a, const ContextPtr& b);

struct SignedMonomial;

// Exponent vector in normal form. Instances only come out of the factory
// functions below, which never produce an odd generator with exponent > 1.
class Monomial {
 public:
  static Monomial unit(std::size_t ngens);
  static Monomial generator(std::size_t ngens, std::size_t index);
  // Absent when an odd generator has exponent > 1.
  static std::optional<Monomial> from_exponents(const GradedContext& ctx,
                                                std::vector<std::uint16_t> exps);

  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  std::uint16_t exponent(std::size_t i) const { return exps_[i]; }
  int wordlength() const { return wordlength_; }
  int degree(const GradedContext& ctx) const;
  bool is_unit() const { return wordlength_ == 0; }

  // Order: shorter words first, then lexicographically larger exponent
  // vectors first (x^3*y before x^3*b before x^2*a*y when x<y<a<b).
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  explicit Monomial(std::vector<std::uint16_t> exps);
  std::vector<std::uint16_t> exps_;
  int wordlength_ = 0;

  friend SignedMonomial multiply(const GradedContext&, const Monomial&, const Monomial&);
  friend SignedMonomial normalize(const GradedContext&, std::span<const std::size_t>);
};

struct SignedMonomial {
  int sign = 0;  // +1, -1, or 0 when an odd generator repeats
  Monomial mono = Monomial::unit(0);
};

SignedMonomial multiply(const GradedContext& ctx, const Monomial& a, const Monomial& b);

// Sorts a word of generator indices into normal form with its Koszul sign.
SignedMonomial normalize(const GradedContext& ctx, std::span<const std::size_t> factors);

std::string to_string(const GradedContext& ctx, const Monomial& m);

// Normal-form monomials of one degree inside a wordlength window, in
// monomial order.
std::vector<Monomial> basis(const GradedContext& ctx, int degree, int wordlength_min = 0,
                            std::optional<int> wordlength_max = std::nullopt);

inline bool coeff_is_zero(const Rational& q) { return q == 0; }

template <class Coeff>
class BasicPolynomial {
 public:
  using Terms = std::map<Monomial, Coeff>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static BasicPolynomial constant(ContextPtr ctx, Coeff c) {
    BasicPolynomial p(ctx);
    p.add_term(Monomial::unit(p.ctx_->size()), std::move(c));
    return p;
  }
  static BasicPolynomial generator(ContextPtr ctx, std::size_t index, Coeff c = Coeff(1)) {
    BasicPolynomial p(ctx);
    p.add_term(Monomial::generator(p.ctx_->size(), index), std::move(c));
    return p;
  }
  static BasicPolynomial monomial(ContextPtr ctx, Monomial m, Coeff c = Coeff(1)) {
    BasicPolynomial p(std::move(ctx));
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Monomial m, Coeff c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  // Degree of a nonzero homogeneous polynomial; absent for zero or mixed.
  std::optional<int> degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
      const int d = m.degree(*ctx_);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg;
  }
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  int min_wordlength() const {
    int w = -1;
    for (const auto& [m, c] : terms_) {
      if (w < 0 || m.wordlength() < w) w = m.wordlength();
    }
    return w;
  }
  int max_wordlength() const {
    int w = -1;
    for (const auto& [m, c] : terms_) w = std::max(w, m.wordlength());
    return w;
  }

  // Component in Lambda^k.
  BasicPolynomial wordlength_part(int k) const {
    BasicPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m.wordlength() == k) out.terms_.emplace(m, c);
    }
    return out;
  }
  BasicPolynomial wordlength_at_least(int k) const {
    BasicPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
      if (m.wordlength() >= k) out.terms_.emplace(m, c);
    }
    return out;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& other) {
    adopt_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& other) {
    adopt_context(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  BasicPolynomial operator-() const {
    BasicPolynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }

  BasicPolynomial scaled(const Coeff& factor) const {
    BasicPolynomial out(ctx_);
    if (coeff_is_zero(factor)) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * factor);
    return out;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    BasicPolynomial out(a.ctx_ ? a.ctx_ : b.ctx_);
    if (a.ctx_ && b.ctx_ && !same_context(a.ctx_, b.ctx_)) {
      throw Error(ErrorKind::MixedContexts, "product of polynomials from different contexts");
    }
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto sm = multiply(*out.ctx_, ma, mb);
        if (sm.sign == 0) continue;
        Coeff c = ca * cb;
        if (sm.sign < 0) c = -c;
        out.add_term(std::move(sm.mono), std::move(c));
      }
    }
    return out;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
  }

 private:
  void adopt_context(const BasicPolynomial& other) {
    if (!ctx_) {
      ctx_ = other.ctx_;
    } else if (other.ctx_ && !same_context(ctx_, other.ctx_)) {
      throw Error(ErrorKind::MixedContexts, "sum of polynomials from different contexts");
    }
  }

  ContextPtr ctx_;
  Terms terms_;
};

using Polynomial = BasicPolynomial<Rational>;

std::string to_string(const Polynomial& p);

// Coordinates of a polynomial in a monomial basis; throws when a term falls
// outside the basis.
SparseVector coordinates(const Polynomial& p, const std::map<Monomial, std::size_t>& index);
std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis);
Polynomial from_coordinates(const ContextPtr& ctx, const std::vector<Monomial>& basis,
                            const SparseVector& coords);

}  // namespace sullivan
