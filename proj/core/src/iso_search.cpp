#include "sullivan/iso_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace sullivan {

// ------------------------------------------------------------------ ParamPoly

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

ParamPoly ParamPoly::variable(std::uint32_t v) { return monomial({{v, 1}}, Rational(1)); }

ParamPoly ParamPoly::monomial(Mono m, Rational c) {
  ParamPoly p;
  p.add(m, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::uint32_t> ParamPoly::variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

int ParamPoly::degree_in(std::uint32_t v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [w, e] : m) {
      if (w == v) d = std::max(d, static_cast<int>(e));
    }
  }
  return d;
}

std::optional<ParamPoly> ParamPoly::linear_coefficient(std::uint32_t v) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Mono rest;
    int e = 0;
    for (const auto& [w, k] : m) {
      if (w == v) {
        e = k;
      } else {
        rest.emplace_back(w, k);
      }
    }
    if (e > 1) return std::nullopt;
    if (e == 1) out.add(rest, c);
  }
  return out;
}

void ParamPoly::add(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

namespace {

ParamPoly::Mono mono_product(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
  ParamPoly::Mono out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, static_cast<std::uint16_t>(a[i].second + b[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(mono_product(ma, mb), ca * cb);
  }
  return out;
}

ParamPoly ParamPoly::substitute(std::uint32_t v, const ParamPoly& value) const {
  ParamPoly out;
  std::map<int, ParamPoly> powers;
  for (const auto& [m, c] : terms_) {
    Mono rest;
    int e = 0;
    for (const auto& [w, k] : m) {
      if (w == v) {
        e = k;
      } else {
        rest.emplace_back(w, k);
      }
    }
    if (e == 0) {
      out.add(m, c);
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) {
      ParamPoly pw(1);
      for (int k = 0; k < e; ++k) pw = pw * value;
      it = powers.emplace(e, std::move(pw)).first;
    }
    out += monomial(rest, c) * it->second;
  }
  return out;
}

ParamPoly ParamPoly::strip_variable(std::uint32_t v) const {
  int k = -1;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& [w, x] : m) {
      if (w == v) e = x;
    }
    k = k < 0 ? e : std::min(k, e);
  }
  if (k <= 0) return *this;
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    Mono reduced;
    for (const auto& [w, x] : m) {
      if (w != v) {
        reduced.emplace_back(w, x);
      } else if (x > k) {
        reduced.emplace_back(w, static_cast<std::uint16_t>(x - k));
      }
    }
    out.add(reduced, c);
  }
  return out;
}

Rational ParamPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [w, e] : m) {
      for (int k = 0; k < e; ++k) t *= values.at(w);
    }
    total += t;
  }
  return total;
}

std::string to_string(const ParamPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += '*';
      mono += v < names.size() ? names[v] : "p" + std::to_string(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += mono;
    }
  }
  return out;
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::AssumeZero: return "assume-zero";
    case StepKind::AssumeNonzero: return "assume-nonzero";
    case StepKind::Substitute: return "substitute";
    case StepKind::ForceZero: return "force-zero";
    case StepKind::NonzeroFromCondition: return "nonzero-from-condition";
    case StepKind::EquationContradiction: return "equation-contradiction";
    case StepKind::ConditionContradiction: return "condition-contradiction";
  }
  return "?";
}

std::string_view to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::IsoFound: return "IsoFound";
    case SearchKind::NoIsoExists: return "NoIsoExists";
    case SearchKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string describe(const SearchTrace& trace, const BranchTrace& branch) {
  const auto& names = trace.parameters;
  std::string out;
  for (const auto& s : branch.steps) {
    if (!out.empty()) out += "; ";
    const std::string v = s.var < names.size() ? names[s.var] : "?";
    switch (s.kind) {
      case StepKind::AssumeZero: out += "assume " + v + " = 0"; break;
      case StepKind::AssumeNonzero: out += "assume " + v + " != 0"; break;
      case StepKind::Substitute:
        out += v + " := " + to_string(s.value, names) + " (eq " + std::to_string(s.source) + ")";
        break;
      case StepKind::ForceZero: out += v + " := 0 (eq " + std::to_string(s.source) + ")"; break;
      case StepKind::NonzeroFromCondition:
        out += v + " != 0 (condition " + std::to_string(s.source) + ")";
        break;
      case StepKind::EquationContradiction:
        out += "eq " + std::to_string(s.source) + " reduces to a nonzero monomial in nonzero parameters";
        break;
      case StepKind::ConditionContradiction:
        out += "condition " + std::to_string(s.source) + " reduces to 0";
        break;
    }
  }
  if (!branch.note.empty()) out += (out.empty() ? "" : "; ") + branch.note;
  return out;
}

// ------------------------------------------------------------- system setup

namespace {

std::map<int, std::size_t> census(const GradedContext& ctx) {
  std::map<int, std::size_t> c;
  for (const auto& g : ctx.generators()) ++c[g.degree];
  return c;
}

struct Unknowns {
  // per source generator: (parameter index, target monomial)
  std::vector<std::vector<std::pair<std::uint32_t, Monomial>>> slots;
  std::vector<std::string> names;
};

Unknowns make_unknowns(const SullivanAlgebra& source, const SullivanAlgebra& target, int cutoff) {
  Unknowns u;
  u.slots.resize(source.size());
  for (std::size_t g = 0; g < source.size(); ++g) {
    const int deg = source.ctx().degree(g);
    if (deg > cutoff) continue;
    for (const auto& m : basis(target.ctx(), deg, 1)) {
      u.slots[g].emplace_back(static_cast<std::uint32_t>(u.names.size()), m);
      u.names.push_back("c(" + source.ctx().gen(g).name + "|" + to_string(target.ctx(), m) + ")");
    }
  }
  return u;
}

ParamPoly determinant(const std::vector<std::vector<ParamPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  ParamPoly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    ParamPoly term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

constexpr std::size_t kMaxDeterminantSize = 6;

}  // namespace

SearchTrace build_iso_system(const SullivanAlgebra& source, const SullivanAlgebra& target, int cutoff) {
  const auto u = make_unknowns(source, target, cutoff);
  SearchTrace t;
  t.parameters = u.names;
  const ContextPtr& tctx = target.context();

  std::vector<SymbolicPolynomial> images;
  for (std::size_t g = 0; g < source.size(); ++g) {
    SymbolicPolynomial img(tctx);
    for (const auto& [p, m] : u.slots[g]) img.add_term(m, ParamPoly::variable(p));
    images.push_back(std::move(img));
  }

  for (std::size_t g = 0; g < source.size(); ++g) {
    if (source.ctx().degree(g) + 1 > cutoff) continue;
    SymbolicPolynomial lhs(tctx);
    for (const auto& [m, c] : source.d(g).terms()) {
      SymbolicPolynomial term = SymbolicPolynomial::constant(tctx, ParamPoly(c));
      for (std::size_t i = 0; i < source.size() && !term.is_zero(); ++i) {
        for (int k = 0; k < m.exponent(i); ++k) term = term * images[i];
      }
      lhs += term;
    }
    for (const auto& [p, m] : u.slots[g]) {
      const Polynomial dm = target.apply_d(m);
      for (const auto& [m2, c] : dm.terms()) {
        lhs.add_term(m2, ParamPoly(Rational(-c)) * ParamPoly::variable(p));
      }
    }
    for (const auto& [m, c] : lhs.terms()) t.equations.push_back(c);
  }

  // Invertibility of the linear part, one determinant per degree.
  std::map<int, std::vector<std::size_t>> src_by_deg, tgt_by_deg;
  for (std::size_t g = 0; g < source.size(); ++g) src_by_deg[source.ctx().degree(g)].push_back(g);
  for (std::size_t h = 0; h < target.size(); ++h) tgt_by_deg[target.ctx().degree(h)].push_back(h);
  for (const auto& [deg, cols] : src_by_deg) {
    if (deg > cutoff) continue;
    const auto& rows = tgt_by_deg[deg];
    if (rows.size() != cols.size() || cols.empty() || cols.size() > kMaxDeterminantSize) continue;
    std::vector<std::vector<ParamPoly>> block(rows.size(), std::vector<ParamPoly>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const auto& [p, m] : u.slots[cols[c]]) {
        if (m.wordlength() != 1) continue;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (m.exponent(rows[r]) == 1) block[r][c] = ParamPoly::variable(p);
        }
      }
    }
    t.conditions.push_back(determinant(block));
  }
  return t;
}

// ------------------------------------------------------------------- search

namespace {

struct State {
  std::vector<ParamPoly> eqs;
  std::vector<ParamPoly> divisor;  // eqs[j] * divisor[j] = original eq j after substitutions
  std::vector<ParamPoly> conds;
  std::set<std::uint32_t> nonzero;
  std::map<std::uint32_t, ParamPoly> subs;
  std::vector<TraceStep> steps;
  int depth = 0;
};

void apply_substitution(State& s, std::uint32_t v, const ParamPoly& value) {
  for (auto& e : s.eqs) e = e.substitute(v, value);
  for (auto& c : s.conds) c = c.substitute(v, value);
  for (auto& m : s.divisor) m = m.substitute(v, value);
  for (auto& [w, val] : s.subs) val = val.substitute(v, value);
  s.subs[v] = value;
}

enum class Simplified { Open, Contradiction, Solved };

Simplified simplify(State& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < s.conds.size(); ++k) {
      const auto& c = s.conds[k];
      if (c.is_zero()) {
        s.steps.push_back({StepKind::ConditionContradiction, 0, {}, {}, 0, k});
        return Simplified::Contradiction;
      }
      if (!c.is_monomial()) continue;
      for (auto v : c.variables()) {
        if (s.nonzero.insert(v).second) {
          s.steps.push_back({StepKind::NonzeroFromCondition, v, {}, {}, 0, k});
          changed = true;
        }
      }
    }
    for (std::size_t j = 0; j < s.eqs.size() && !changed; ++j) {
      auto& e = s.eqs[j];
      if (e.is_zero()) continue;
      for (auto v : e.variables()) {
        if (!s.nonzero.count(v)) continue;
        const ParamPoly stripped = e.strip_variable(v);
        const int k = e.degree_in(v) - stripped.degree_in(v);
        if (k > 0) {
          s.divisor[j] = s.divisor[j] * ParamPoly::monomial({{v, static_cast<std::uint16_t>(k)}}, Rational(1));
          e = stripped;
        }
      }
      if (e.is_constant()) {
        s.steps.push_back({StepKind::EquationContradiction, 0, {}, {}, 0, j});
        return Simplified::Contradiction;
      }
      if (e.is_monomial()) {
        const auto vars = e.variables();
        if (vars.size() == 1) {
          s.steps.push_back({StepKind::ForceZero, vars[0], {}, {}, 0, j});
          apply_substitution(s, vars[0], ParamPoly());
          changed = true;
        }
      }
    }
    if (changed) continue;
    // Linear elimination, unknown variables first. A nonzero variable may be
    // eliminated too; its value then joins the nonzero conditions.
    for (int pass = 0; pass < 2 && !changed; ++pass) {
      for (std::size_t j = 0; j < s.eqs.size() && !changed; ++j) {
        const auto& e = s.eqs[j];
        if (e.is_zero() || e.is_monomial()) continue;
        for (auto v : e.variables()) {
          if ((s.nonzero.count(v) > 0) != (pass == 1)) continue;
          auto lc = e.linear_coefficient(v);
          if (!lc || !lc->is_constant()) continue;
          const Rational c = lc->constant_term();
          const ParamPoly rest = e - ParamPoly::monomial({{v, 1}}, c);
          const ParamPoly value = rest * ParamPoly(Rational(-1 / c));
          s.steps.push_back({StepKind::Substitute, v, value, s.divisor[j], c, j});
          if (pass == 1) s.conds.push_back(value);
          apply_substitution(s, v, value);
          changed = true;
          break;
        }
      }
    }
  }
  const bool open = std::any_of(s.eqs.begin(), s.eqs.end(), [](const ParamPoly& e) { return !e.is_zero(); });
  return open ? Simplified::Open : Simplified::Solved;
}

std::optional<std::uint32_t> choose_split(const State& s) {
  for (const auto& e : s.eqs) {
    if (e.is_zero() || !e.is_monomial()) continue;
    for (auto v : e.variables()) {
      if (!s.nonzero.count(v)) return v;
    }
  }
  std::map<std::uint32_t, int> counts;
  for (const auto& e : s.eqs) {
    if (e.is_zero()) continue;
    for (auto v : e.variables()) {
      if (!s.nonzero.count(v)) ++counts[v];
    }
  }
  std::optional<std::uint32_t> best;
  int best_count = 0;
  for (const auto& [v, c] : counts) {
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

std::optional<DgaMorphism> concretize(const State& s, const SullivanAlgebra& source,
                                      const SullivanAlgebra& target, const Unknowns& u,
                                      std::size_t nparams, int cutoff) {
  std::mt19937 rng(20240917u);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> values(nparams, Rational(0));
    for (std::size_t v = 0; v < nparams; ++v) {
      if (s.subs.count(static_cast<std::uint32_t>(v))) continue;
      const bool nz = s.nonzero.count(static_cast<std::uint32_t>(v)) > 0;
      if (attempt == 0) {
        values[v] = nz ? 1 : 0;
      } else {
        int x = dist(rng);
        while (nz && x == 0) x = dist(rng);
        values[v] = x;
      }
    }
    for (const auto& [v, expr] : s.subs) values[v] = expr.evaluate(values);
    const bool conds_ok = std::all_of(s.conds.begin(), s.conds.end(),
                                      [&](const ParamPoly& c) { return c.evaluate(values) != 0; });
    const bool nz_ok = std::all_of(s.nonzero.begin(), s.nonzero.end(),
                                   [&](std::uint32_t v) { return values[v] != 0; });
    if (!conds_ok || !nz_ok) continue;
    std::vector<Polynomial> images;
    for (std::size_t g = 0; g < source.size(); ++g) {
      Polynomial img = target.zero();
      for (const auto& [p, m] : u.slots[g]) img.add_term(m, values[p]);
      images.push_back(std::move(img));
    }
    DgaMorphism phi(source, target, std::move(images));
    if (!validate_morphism(phi, cutoff).ok()) continue;
    auto lin = linear_part(phi);
    bool invertible = true;
    for (const auto& [deg, block] : lin.blocks) {
      if (deg > cutoff) continue;
      if (block.rows() != block.cols() || rref(block).rank != block.rows()) invertible = false;
    }
    if (invertible) return phi;
  }
  return std::nullopt;
}

}  // namespace

SearchVerdict parametrized_iso_search(const SullivanAlgebra& source, const SullivanAlgebra& target,
                                      std::optional<int> cutoff, int split_depth) {
  SearchVerdict out;
  out.split_depth = split_depth;
  out.cutoff = cutoff.value_or(std::max(source.ctx().max_degree(), target.ctx().max_degree()) + 1);
  if (census(source.ctx()) != census(target.ctx())) {
    out.kind = SearchKind::NoIsoExists;
    out.reason = std::string(to_string(ErrorKind::CensusMismatch)) +
                 ": the generator degree censuses differ, so no isomorphism exists";
    return out;
  }
  const auto u = make_unknowns(source, target, out.cutoff);
  out.trace = build_iso_system(source, target, out.cutoff);
  const std::size_t nparams = u.names.size();

  State root;
  root.eqs = out.trace.equations;
  root.divisor.assign(root.eqs.size(), ParamPoly(1));
  root.conds = out.trace.conditions;

  std::vector<State> stack{std::move(root)};
  bool undecided = false;
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    const auto status = simplify(s);
    BranchTrace branch;
    if (status == Simplified::Contradiction) {
      branch.outcome = BranchOutcome::Contradiction;
      branch.steps = std::move(s.steps);
      out.trace.branches.push_back(std::move(branch));
      continue;
    }
    if (status == Simplified::Solved) {
      auto phi = concretize(s, source, target, u, nparams, out.cutoff);
      branch.steps = std::move(s.steps);
      if (phi) {
        branch.outcome = BranchOutcome::Solved;
        out.trace.branches.push_back(std::move(branch));
        out.kind = SearchKind::IsoFound;
        out.iso = std::move(phi);
        out.reason = "a branch yields a concrete isomorphism, validated up to the cutoff";
        return out;
      }
      branch.note = "equations solved but no concrete invertible point found";
      out.trace.branches.push_back(std::move(branch));
      undecided = true;
      continue;
    }
    const auto v = choose_split(s);
    if (!v || s.depth >= split_depth) {
      branch.steps = std::move(s.steps);
      branch.note = v ? "split depth exhausted" : "no parameter left to split on";
      out.trace.branches.push_back(std::move(branch));
      undecided = true;
      continue;
    }
    State nonzero = s;
    nonzero.depth = s.depth + 1;
    nonzero.steps.push_back({StepKind::AssumeNonzero, *v, {}, {}, 0, 0});
    nonzero.nonzero.insert(*v);
    State zero = std::move(s);
    zero.depth = nonzero.depth;
    zero.steps.push_back({StepKind::AssumeZero, *v, {}, {}, 0, 0});
    apply_substitution(zero, *v, ParamPoly());
    stack.push_back(std::move(nonzero));
    stack.push_back(std::move(zero));
  }
  if (undecided) {
    out.kind = SearchKind::Inconclusive;
    out.reason = "some branch neither closed nor produced an isomorphism";
  } else {
    out.kind = SearchKind::NoIsoExists;
    out.reason = "every branch ends in an exact contradiction";
  }
  return out;
}

// ------------------------------------------------------------------- replay

namespace {

bool monomial_in(const ParamPoly& p, const std::set<std::uint32_t>& nonzero,
                 std::optional<std::uint32_t> except = std::nullopt) {
  if (!p.is_monomial()) return false;
  for (auto v : p.variables()) {
    if (v != except && !nonzero.count(v)) return false;
  }
  return true;
}

bool replay_branch(const SearchTrace& t, const BranchTrace& b) {
  if (b.outcome != BranchOutcome::Contradiction || b.steps.empty()) return false;
  std::vector<ParamPoly> eqs = t.equations;
  std::vector<ParamPoly> conds = t.conditions;
  std::set<std::uint32_t> nonzero;
  auto substitute = [&](std::uint32_t v, const ParamPoly& value) {
    for (auto& e : eqs) e = e.substitute(v, value);
    for (auto& c : conds) c = c.substitute(v, value);
  };
  for (std::size_t i = 0; i < b.steps.size(); ++i) {
    const auto& s = b.steps[i];
    const bool last = i + 1 == b.steps.size();
    switch (s.kind) {
      case StepKind::AssumeZero:
        if (nonzero.count(s.var)) return false;
        substitute(s.var, ParamPoly());
        break;
      case StepKind::AssumeNonzero:
        nonzero.insert(s.var);
        break;
      case StepKind::Substitute: {
        if (s.source >= eqs.size() || s.coeff == 0) return false;
        if (s.value.degree_in(s.var) != 0 || !monomial_in(s.multiplier, nonzero)) return false;
        const ParamPoly expected = ParamPoly(s.coeff) * s.multiplier *
                                   (ParamPoly::variable(s.var) - s.value);
        if (!(eqs[s.source] == expected)) return false;
        if (nonzero.count(s.var)) conds.push_back(s.value);
        substitute(s.var, s.value);
        break;
      }
      case StepKind::ForceZero: {
        if (s.source >= eqs.size() || nonzero.count(s.var)) return false;
        if (eqs[s.source].degree_in(s.var) == 0 || !monomial_in(eqs[s.source], nonzero, s.var)) return false;
        substitute(s.var, ParamPoly());
        break;
      }
      case StepKind::NonzeroFromCondition:
        if (s.source >= conds.size() || !conds[s.source].is_monomial() ||
            conds[s.source].degree_in(s.var) == 0) {
          return false;
        }
        nonzero.insert(s.var);
        break;
      case StepKind::EquationContradiction:
        return last && s.source < eqs.size() && monomial_in(eqs[s.source], nonzero);
      case StepKind::ConditionContradiction:
        return last && s.source < conds.size() && conds[s.source].is_zero();
    }
  }
  return false;
}

using Assumptions = std::vector<std::pair<std::uint32_t, bool>>;

// Leaves cover every case when they form a full binary tree of splits.
bool covers(const std::vector<Assumptions>& leaves, std::size_t pos) {
  if (leaves.empty()) return false;
  if (leaves.size() == 1 && leaves[0].size() == pos) return true;
  std::optional<std::uint32_t> var;
  std::vector<Assumptions> zero, nonzero;
  for (const auto& l : leaves) {
    if (l.size() <= pos) return false;
    if (var && *var != l[pos].first) return false;
    var = l[pos].first;
    (l[pos].second ? nonzero : zero).push_back(l);
  }
  return covers(zero, pos + 1) && covers(nonzero, pos + 1);
}

}  // namespace

bool replay(const SearchVerdict& verdict, const SullivanAlgebra& source, const SullivanAlgebra& target) {
  if (verdict.kind != SearchKind::NoIsoExists) return false;
  if (census(source.ctx()) != census(target.ctx())) return true;
  const auto fresh = build_iso_system(source, target, verdict.cutoff);
  if (fresh.equations != verdict.trace.equations || fresh.conditions != verdict.trace.conditions) return false;
  std::vector<Assumptions> leaves;
  for (const auto& b : verdict.trace.branches) {
    if (!replay_branch(verdict.trace, b)) return false;
    Assumptions a;
    for (const auto& s : b.steps) {
      if (s.kind == StepKind::AssumeZero) a.emplace_back(s.var, false);
      if (s.kind == StepKind::AssumeNonzero) a.emplace_back(s.var, true);
    }
    leaves.push_back(std::move(a));
  }
  return covers(leaves, 0);
}

}  // namespace sullivan
