#include "sullivan/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace sullivan {

namespace {

int koszul(int a, int b) { return (a % 2 != 0 && b % 2 != 0) ? -1 : 1; }

// Elements of the tensor algebra, keyed by words in generator indices.
using Word = std::vector<std::uint8_t>;
using TensorPoly = std::map<Word, Rational>;

void add_into(TensorPoly& out, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

TensorPoly tensor_product(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_into(out, w, ca * cb);
    }
  }
  return out;
}

// uv - (-1)^{|u||v|} vu
TensorPoly commutator(const TensorPoly& u, int du, const TensorPoly& v, int dv) {
  TensorPoly out = tensor_product(u, v);
  const Rational sign = koszul(du, dv) > 0 ? Rational(-1) : Rational(1);
  for (const auto& [w, c] : tensor_product(v, u)) add_into(out, w, sign * c);
  return out;
}

int word_degree(const Word& w, const std::vector<LieElement>& gens) {
  int d = 0;
  for (auto letter : w) d += gens[letter].degree;
  return d;
}

// Duval: every Lyndon word of length <= n over k letters, in lexicographic
// order.
std::vector<Word> lyndon_words(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  if (k == 0 || n == 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    Word word(w.begin(), w.end());
    out.push_back(word);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
  }
  return out;
}

bool is_lyndon(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + static_cast<long>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(std::vector<LieElement> basis, Brackets brackets,
                                   std::optional<int> truncation)
    : basis_(std::move(basis)), brackets_(std::move(brackets)), truncation_(truncation) {
  for (const auto& e : basis_) {
    if (e.degree < 1) throw Error(ErrorKind::LieInvalid, "Lie element '" + e.name + "' needs degree >= 1");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (basis_[i].name == basis_[j].name) {
        throw Error(ErrorKind::LieInvalid, "duplicate Lie element '" + basis_[i].name + "'");
      }
    }
  }
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    const auto [i, j] = it->first;
    if (i > j || j >= basis_.size()) throw Error(ErrorKind::LieInvalid, "bracket key out of range");
    for (const auto& [k, c] : it->second.entries()) {
      if (k >= basis_.size()) throw Error(ErrorKind::LieInvalid, "bracket value out of range");
    }
    it = it->second.empty() ? brackets_.erase(it) : std::next(it);
  }
  forms_.reserve(basis_.size());
  for (const auto& e : basis_) forms_.push_back(e.name);
}

std::optional<std::size_t> GradedLieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

void GradedLieAlgebra::set_forms(std::vector<std::string> forms) {
  if (forms.size() != basis_.size()) throw Error(ErrorKind::InvalidArgument, "one form per basis element");
  forms_ = std::move(forms);
}

SparseVector GradedLieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i <= j) {
    auto it = brackets_.find({i, j});
    return it == brackets_.end() ? SparseVector{} : it->second;
  }
  SparseVector v = bracket(j, i);
  v.scale(Rational(-koszul(degree(i), degree(j))));
  return v;
}

SparseVector GradedLieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, ci] : x.entries()) {
    for (const auto& [j, cj] : y.entries()) out.axpy(ci * cj, bracket(i, j));
  }
  return out;
}

std::vector<std::size_t> GradedLieAlgebra::graded_dims(int max_degree) const {
  std::vector<std::size_t> dims(static_cast<std::size_t>(std::max(0, max_degree + 1)), 0);
  for (const auto& e : basis_) {
    if (e.degree <= max_degree) ++dims[static_cast<std::size_t>(e.degree)];
  }
  return dims;
}

LieReport validate_lie(const GradedLieAlgebra& l) {
  LieReport r;
  const std::size_t n = l.size();
  for (const auto& [key, value] : l.structure()) {
    const auto [i, j] = key;
    for (const auto& [k, c] : value.entries()) {
      if (l.degree(k) != l.degree(i) + l.degree(j)) {
        r.degrees_ok = false;
        r.failures.push_back("[" + l.element(i).name + "," + l.element(j).name + "] has a term " +
                             l.element(k).name + " of the wrong degree");
      }
    }
    if (i == j && l.degree(i) % 2 == 0) {
      r.antisymmetry_ok = false;
      r.failures.push_back("[" + l.element(i).name + "," + l.element(i).name +
                           "] must vanish for an even element");
    }
  }
  // The graded Jacobi form is permutation invariant up to sign, so sorted
  // triples suffice.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const int dx = l.degree(i), dy = l.degree(j), dz = l.degree(k);
        SparseVector jac;
        jac.axpy(Rational(koszul(dx, dz)), l.bracket(SparseVector::unit(i), l.bracket(j, k)));
        jac.axpy(Rational(koszul(dy, dx)), l.bracket(SparseVector::unit(j), l.bracket(k, i)));
        jac.axpy(Rational(koszul(dz, dy)), l.bracket(SparseVector::unit(k), l.bracket(i, j)));
        if (!jac.empty()) {
          r.jacobi_ok = false;
          r.failures.push_back("Jacobi fails on (" + l.element(i).name + "," + l.element(j).name +
                               "," + l.element(k).name + ")");
        }
      }
    }
  }
  return r;
}

GradedLieAlgebra free_lie(const std::vector<LieElement>& generators, int cutoff) {
  if (generators.size() > 255) throw Error(ErrorKind::InvalidArgument, "too many generators");
  int min_deg = cutoff + 1;
  for (const auto& g : generators) {
    if (g.degree < 1) throw Error(ErrorKind::LieInvalid, "generator '" + g.name + "' needs degree >= 1");
    min_deg = std::min(min_deg, g.degree);
  }
  const bool short_names = std::all_of(generators.begin(), generators.end(),
                                       [](const LieElement& g) { return g.name.size() == 1; });
  auto spell = [&](const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !short_names) s += '_';
      s += generators[w[i]].name;
    }
    return s;
  };

  struct Element {
    Word word;
    int degree;
    TensorPoly image;
    std::string form;
  };
  std::map<Word, std::size_t> lyndon_index;
  std::vector<Element> elements;

  std::vector<Word> words;
  if (min_deg <= cutoff) {
    words = lyndon_words(generators.size(), static_cast<std::size_t>(cutoff / min_deg));
  }
  std::vector<Word> lyndon;
  for (auto& w : words) {
    if (word_degree(w, generators) <= cutoff) lyndon.push_back(std::move(w));
  }
  // Shorter words first so standard factors are built before they are used.
  std::stable_sort(lyndon.begin(), lyndon.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::map<Word, std::pair<TensorPoly, std::string>> built;
  for (const auto& w : lyndon) {
    const int deg = word_degree(w, generators);
    if (w.size() == 1) {
      built[w] = {TensorPoly{{w, Rational(1)}}, generators[w[0]].name};
    } else {
      // Standard factorization: v is the longest proper Lyndon suffix.
      std::size_t split = 1;
      while (!is_lyndon(Word(w.begin() + static_cast<long>(split), w.end()))) ++split;
      const Word u(w.begin(), w.begin() + static_cast<long>(split));
      const Word v(w.begin() + static_cast<long>(split), w.end());
      const auto& [iu, fu] = built.at(u);
      const auto& [iv, fv] = built.at(v);
      built[w] = {commutator(iu, word_degree(u, generators), iv, word_degree(v, generators)),
                  "[" + fu + "," + fv + "]"};
    }
    elements.push_back({w, deg, built[w].first, built[w].second});
    if (deg % 2 != 0 && 2 * deg <= cutoff) {
      Word ww = w;
      ww.insert(ww.end(), w.begin(), w.end());
      elements.push_back({ww, 2 * deg, commutator(built[w].first, deg, built[w].first, deg),
                          "[" + built[w].second + "," + built[w].second + "]"});
    }
  }
  std::stable_sort(elements.begin(), elements.end(), [](const Element& a, const Element& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.word < b.word;
  });

  std::vector<LieElement> basis;
  std::vector<std::string> forms;
  for (const auto& e : elements) {
    basis.push_back({spell(e.word), e.degree});
    forms.push_back(e.form);
  }

  // Per degree: the images span a subspace of the tensor algebra; brackets
  // are read off by solving in it.
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < elements.size(); ++i) by_degree[elements[i].degree].push_back(i);

  GradedLieAlgebra::Brackets brackets;
  for (const auto& [deg, members] : by_degree) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<TensorPoly> values;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = i; j < elements.size(); ++j) {
        if (elements[i].degree + elements[j].degree != deg) continue;
        auto c = commutator(elements[i].image, elements[i].degree, elements[j].image, elements[j].degree);
        if (c.empty()) continue;
        pairs.emplace_back(i, j);
        values.push_back(std::move(c));
      }
    }
    std::map<Word, std::size_t> word_index;
    auto index_words = [&](const TensorPoly& p) {
      for (const auto& [w, c] : p) word_index.try_emplace(w, word_index.size());
    };
    for (std::size_t m : members) index_words(elements[m].image);
    for (const auto& v : values) index_words(v);
    auto to_vec = [&](const TensorPoly& p) {
      std::vector<SparseVector::Entry> entries;
      for (const auto& [w, c] : p) entries.emplace_back(word_index.at(w), c);
      return SparseVector::from_entries(std::move(entries));
    };
    std::vector<SparseVector> columns;
    for (std::size_t m : members) columns.push_back(to_vec(elements[m].image));
    const RatMatrix a = RatMatrix::from_columns(word_index.size(), columns);
    if (rref(a).rank != members.size()) {
      throw std::logic_error("free Lie basis is linearly dependent in degree " + std::to_string(deg));
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto b = to_vec(values[p]).to_dense(word_index.size());
      auto sol = solve_affine(a, b);
      if (!sol) throw std::logic_error("free Lie basis does not span degree " + std::to_string(deg));
      std::vector<SparseVector::Entry> entries;
      for (std::size_t c = 0; c < members.size(); ++c) entries.emplace_back(members[c], sol->particular[c]);
      brackets[pairs[p]] = SparseVector::from_entries(std::move(entries));
    }
  }

  GradedLieAlgebra l(std::move(basis), std::move(brackets), cutoff);
  l.set_forms(std::move(forms));
  WedgeProvenance w;
  for (const auto& g : generators) w.sphere_dimensions.push_back(g.degree + 1);
  l.set_wedge(std::move(w));
  return l;
}

SullivanAlgebra ce_quadratic_model(const GradedLieAlgebra& l, std::optional<int> cutoff) {
  const auto report = validate_lie(l);
  if (!report.ok()) {
    throw Error(ErrorKind::LieInvalid, report.failures.empty() ? "invalid Lie algebra" : report.failures.front());
  }
  std::vector<std::size_t> kept;
  std::vector<std::size_t> position(l.size(), l.size());
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (cutoff && l.degree(i) > *cutoff - 1) continue;
    position[i] = kept.size();
    kept.push_back(i);
    gens.push_back({l.element(i).name, l.degree(i) + 1});
  }
  auto ctx = make_context(std::move(gens));
  std::vector<Polynomial> diff(kept.size(), Polynomial(ctx));
  for (const auto& [key, value] : l.structure()) {
    const auto [i, j] = key;
    if (position[i] == l.size() || position[j] == l.size()) continue;
    const Polynomial vv = Polynomial::generator(ctx, position[i]) * Polynomial::generator(ctx, position[j]);
    const Rational factor = i == j ? Rational(1, 2)
                                   : Rational(l.degree(i) % 2 != 0 ? 1 : -1);
    for (const auto& [k, c] : value.entries()) {
      if (position[k] == l.size()) continue;
      diff[position[k]] += vv.scaled(factor * c);
    }
  }
  SullivanAlgebra alg(ctx, std::move(diff));
  if (l.wedge()) alg.set_wedge(*l.wedge());
  return alg;
}

GradedLieAlgebra quadratic_dual(const SullivanAlgebra& alg) {
  if (!alg.is_minimal() || !alg.is_purely_quadratic()) {
    throw Error(ErrorKind::NotQuadratic, "the quadratic dual needs a purely quadratic minimal algebra");
  }
  const auto& ctx = alg.ctx();
  std::vector<LieElement> basis;
  for (const auto& g : ctx.generators()) {
    if (g.degree < 2) throw Error(ErrorKind::NotQuadratic, "generator '" + g.name + "' has degree < 2");
    basis.push_back({g.name, g.degree - 1});
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SparseVector::Entry>> acc;
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    for (const auto& [m, a] : alg.d(k).terms()) {
      std::vector<std::size_t> idx;
      for (std::size_t g = 0; g < ctx.size(); ++g) {
        for (int e = 0; e < m.exponent(g); ++e) idx.push_back(g);
      }
      const std::size_t i = idx[0], j = idx[1];
      const Rational c = i == j ? Rational(2 * a)
                                : Rational(basis[i].degree % 2 != 0 ? a : Rational(-a));
      acc[{i, j}].emplace_back(k, c);
    }
  }
  GradedLieAlgebra::Brackets brackets;
  for (auto& [key, entries] : acc) brackets[key] = SparseVector::from_entries(std::move(entries));
  GradedLieAlgebra l(std::move(basis), std::move(brackets));
  if (alg.wedge()) l.set_wedge(*alg.wedge());
  return l;
}

}  // namespace sullivan
