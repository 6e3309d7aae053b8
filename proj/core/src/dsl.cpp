#include "sullivan/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace sullivan {

SourceError::SourceError(ErrorKind kind, int line, int column, std::string expected, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment stripped
};

class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line), s_(line.text) {}

  int column() const { return static_cast<int>(pos_) + 1; }
  // Column of the next non-blank character.
  int here() {
    skip_ws();
    return column();
  }
  int line() const { return line_.number; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (s_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < s_.size() && is_ident_char(s_[end]) && is_ident_char(word.back())) return false;
    pos_ = end;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("'" + std::string(word) + "'");
  }
  void expect_end() {
    if (!at_end()) fail("end of line");
  }

  std::string ident(const std::string& what = "identifier") {
    skip_ws();
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) fail(what);
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  bool at_ident() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long integer(const std::string& what = "integer") {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(what);
    if (pos_ - start > 9) fail("integer below 10^9", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Rational rational() {
    skip_ws();
    Rational num = integer("number");
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t dpos = pos_;
      const long den = integer("denominator");
      if (den == 0) fail("nonzero denominator", dpos);
      num /= den;
    }
    return num;
  }

  [[noreturn]] void fail(const std::string& expected) { fail(expected, pos_); }
  [[noreturn]] void fail(const std::string& expected, std::size_t at) {
    std::string found = at < s_.size() ? "'" + std::string(s_.substr(at, 12)) + "'" : "end of line";
    throw SourceError(ErrorKind::SyntaxError, line_.number, static_cast<int>(at) + 1, expected,
                      "expected " + expected + ", found " + found);
  }

 private:
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  const Line& line_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

// A parsed sum of products, before resolving names.
struct Factor {
  std::string name;
  int power = 1;
  int column = 0;
};
struct Term {
  Rational coeff = 1;
  std::vector<Factor> factors;
  int column = 0;
};

std::vector<Term> parse_sum(Cursor& c) {
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    Term t;
    t.column = c.here();
    if (c.accept('-')) {
      t.coeff = -1;
    } else if (!c.accept('+') && !first) {
      break;
    }
    first = false;
    do {
      if (c.at_digit()) {
        t.coeff *= c.rational();
      } else {
        Factor f;
        f.column = c.here();
        f.name = c.ident("number or generator");
        if (c.accept('^')) f.power = static_cast<int>(c.integer("exponent"));
        t.factors.push_back(std::move(f));
      }
    } while (c.accept('*'));
    terms.push_back(std::move(t));
    if (c.at_end()) break;
  }
  c.expect_end();
  return terms;
}

Polynomial resolve_poly(const std::vector<Term>& terms, const ContextPtr& ctx, int line,
                        std::vector<Warning>& warnings) {
  Polynomial out(ctx);
  for (const auto& t : terms) {
    std::vector<std::size_t> word;
    for (const auto& f : t.factors) {
      auto idx = ctx->index_of(f.name);
      if (!idx) {
        throw SourceError(ErrorKind::UnknownGenerator, line, f.column, "generator",
                          "unknown generator '" + f.name + "'");
      }
      for (int k = 0; k < f.power; ++k) word.push_back(*idx);
    }
    const auto sm = normalize(*ctx, word);
    if (sm.sign == 0) {
      warnings.push_back({line, t.column, "term repeats an odd generator and vanishes"});
      continue;
    }
    if (sm.sign < 0) {
      warnings.push_back({line, t.column,
                          "reordering to " + to_string(*ctx, sm.mono) + " flips the sign"});
    }
    out.add_term(sm.mono, sm.sign > 0 ? t.coeff : Rational(-t.coeff));
  }
  return out;
}

void check_degree(const Polynomial& p, int expected, int line, int column, const std::string& what) {
  if (p.is_zero()) return;
  const auto deg = p.degree();
  if (!deg || *deg != expected) {
    throw SourceError(ErrorKind::DegreeMismatch, line, column, "degree " + std::to_string(expected),
                      what + " has degree " + (deg ? std::to_string(*deg) : std::string("mixed")) +
                          ", expected " + std::to_string(expected));
  }
}

struct GenDecl {
  std::string name;
  int degree = 0;
  int line = 0;
  int column = 0;
};

GenDecl parse_gen(Cursor& c) {
  GenDecl g;
  g.line = c.line();
  g.column = c.here();
  g.name = c.ident("generator name");
  const int col = c.here();
  g.degree = static_cast<int>(c.integer("degree"));
  if (g.degree < 1) {
    throw SourceError(ErrorKind::SyntaxError, c.line(), col, "positive degree", "degree must be positive");
  }
  c.expect_end();
  return g;
}

std::vector<Generator> to_generators(const std::vector<GenDecl>& decls) {
  std::set<std::string> seen;
  std::vector<Generator> out;
  for (const auto& g : decls) {
    if (!seen.insert(g.name).second) {
      throw SourceError(ErrorKind::SyntaxError, g.line, g.column, "new generator name",
                        "generator '" + g.name + "' declared twice");
    }
    out.push_back({g.name, g.degree});
  }
  return out;
}

struct Block {
  std::string keyword;
  Line header;
  std::vector<Line> body;
};

class Parser {
 public:
  explicit Parser(std::string_view text) { split(text); }

  Document run() {
    for (std::size_t i = 0; i < lines_.size();) {
      Cursor c(lines_[i]);
      const int col = c.here();
      std::string kw = c.ident("'algebra', 'lie', 'morphism' or 'fibration'");
      if (kw != "algebra" && kw != "lie" && kw != "morphism" && kw != "fibration") {
        throw SourceError(ErrorKind::SyntaxError, lines_[i].number, col,
                          "'algebra', 'lie', 'morphism' or 'fibration'", "unexpected '" + kw + "'");
      }
      Block b{kw, lines_[i], {}};
      ++i;
      if (kw == "fibration") {
        bool closed = false;
        while (i < lines_.size()) {
          Cursor t(lines_[i]);
          if (t.accept('}')) {
            t.expect_end();
            closed = true;
            ++i;
            break;
          }
          b.body.push_back(lines_[i++]);
        }
        if (!closed) {
          const Line& last = b.body.empty() ? b.header : b.body.back();
          throw SourceError(ErrorKind::SyntaxError, last.number, static_cast<int>(last.text.size()) + 1, "'}'",
                            "fibration block is not closed");
        }
      } else {
        while (i < lines_.size() && !starts_block(lines_[i])) b.body.push_back(lines_[i++]);
      }
      handle(b);
    }
    return std::move(doc_);
  }

 private:
  void split(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string s(text.substr(start, end - start));
      ++number;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
      if (s.find_first_not_of(" \t") != std::string::npos) lines_.push_back({number, s});
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  static bool starts_block(const Line& l) {
    Cursor c(l);
    return c.accept(std::string_view("algebra")) || c.accept(std::string_view("lie")) ||
           c.accept(std::string_view("morphism")) || c.accept(std::string_view("fibration"));
  }

  void claim_name(const std::string& name, const Line& l, int col) {
    if (doc_.find(name)) {
      throw SourceError(ErrorKind::SyntaxError, l.number, col, "new item name", "'" + name + "' is already defined");
    }
  }

  template <class T>
  const T& lookup(const std::string& name, const Line& l, int col, std::string_view kind) {
    const Item* it = doc_.find(name);
    const T* item = it ? std::get_if<T>(it) : nullptr;
    if (!item) {
      throw SourceError(ErrorKind::UnknownName, l.number, col, std::string(kind),
                        "no " + std::string(kind) + " named '" + name + "' defined above");
    }
    return *item;
  }

  void handle(const Block& b) {
    if (b.keyword == "algebra") return algebra(b);
    if (b.keyword == "lie") return lie(b);
    if (b.keyword == "morphism") return morphism(b);
    return fibration(b);
  }

  // Splits a body into gen declarations and keyword lines.
  std::vector<GenDecl> gens_of(const Block& b, std::vector<std::pair<std::string, Line>>& rest,
                               const std::set<std::string>& allowed) {
    std::vector<GenDecl> gens;
    for (const auto& l : b.body) {
      Cursor c(l);
      const int col = c.here();
      const std::string kw = c.ident("keyword");
      if (kw == "gen" && allowed.count("gen")) {
        gens.push_back(parse_gen(c));
      } else if (allowed.count(kw)) {
        rest.emplace_back(kw, l);
      } else {
        std::string expected;
        for (const auto& a : allowed) expected += (expected.empty() ? "'" : " or '") + a + "'";
        throw SourceError(ErrorKind::SyntaxError, l.number, col, expected, "unexpected '" + kw + "'");
      }
    }
    return gens;
  }

  void algebra(const Block& b) {
    Cursor c(b.header);
    c.expect("algebra");
    const int ncol = c.here();
    AlgebraItem item;
    item.name = c.ident("algebra name");
    claim_name(item.name, b.header, ncol);
    if (c.accept('=')) {
      c.expect("ce");
      const int lcol = c.here();
      const std::string lname = c.ident("Lie algebra name");
      const auto& l = lookup<LieItem>(lname, b.header, lcol, "lie algebra");
      item.ce_of = lname;
      if (!c.at_end()) item.ce_cutoff = static_cast<int>(c.integer("cutoff"));
      c.expect_end();
      if (!b.body.empty()) {
        throw SourceError(ErrorKind::SyntaxError, b.body.front().number, 1, "new item",
                          "a derived algebra has no body");
      }
      item.algebra = ce_quadratic_model(l.lie, item.ce_cutoff);
      doc_.items.emplace_back(std::move(item));
      return;
    }
    c.expect_end();
    std::vector<std::pair<std::string, Line>> rest;
    const auto decls = gens_of(b, rest, {"gen", "d"});
    const ContextPtr ctx = make_context(to_generators(decls));
    std::vector<Polynomial> diff(ctx->size(), Polynomial(ctx));
    std::vector<bool> set(ctx->size(), false);
    for (const auto& [kw, l] : rest) {
      auto [idx, p] = differential_line(l, ctx);
      if (set[idx]) {
        throw SourceError(ErrorKind::SyntaxError, l.number, 1, "one 'd' line per generator",
                          "d(" + ctx->gen(idx).name + ") given twice");
      }
      set[idx] = true;
      diff[idx] = std::move(p);
    }
    item.algebra = SullivanAlgebra(ctx, std::move(diff));
    doc_.items.emplace_back(std::move(item));
  }

  std::pair<std::size_t, Polynomial> differential_line(const Line& l, const ContextPtr& ctx) {
    Cursor c(l);
    c.expect("d");
    const int gcol = c.here();
    const std::string g = c.ident("generator name");
    auto idx = ctx->index_of(g);
    if (!idx) throw SourceError(ErrorKind::UnknownGenerator, l.number, gcol, "generator", "unknown generator '" + g + "'");
    c.expect('=');
    const int ecol = c.here();
    Polynomial p = resolve_poly(parse_sum(c), ctx, l.number, doc_.warnings);
    check_degree(p, ctx->degree(*idx) + 1, l.number, ecol, "d(" + g + ")");
    return {*idx, std::move(p)};
  }

  void lie(const Block& b) {
    Cursor c(b.header);
    c.expect("lie");
    const int ncol = c.here();
    LieItem item;
    item.name = c.ident("Lie algebra name");
    claim_name(item.name, b.header, ncol);
    std::optional<int> free_cutoff;
    if (c.accept(std::string_view("free"))) free_cutoff = static_cast<int>(c.integer("cutoff"));
    c.expect_end();
    std::vector<std::pair<std::string, Line>> rest;
    const auto decls = gens_of(b, rest, free_cutoff ? std::set<std::string>{"gen"} : std::set<std::string>{"gen", "bracket"});
    std::vector<LieElement> basis;
    for (const auto& g : to_generators(decls)) basis.push_back({g.name, g.degree});
    if (free_cutoff) {
      item.free_cutoff = free_cutoff;
      item.free_generators = basis;
      item.lie = free_lie(basis, *free_cutoff);
      doc_.items.emplace_back(std::move(item));
      return;
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].name] = i;
    auto element = [&](Cursor& cur, const Line& l) {
      const int col = cur.here();
      const std::string n = cur.ident("basis element");
      auto it = index.find(n);
      if (it == index.end()) throw SourceError(ErrorKind::UnknownGenerator, l.number, col, "basis element", "unknown basis element '" + n + "'");
      return it->second;
    };
    GradedLieAlgebra::Brackets brackets;
    for (const auto& [kw, l] : rest) {
      Cursor cur(l);
      cur.expect("bracket");
      cur.expect('[');
      std::size_t i = element(cur, l);
      cur.expect(',');
      std::size_t j = element(cur, l);
      cur.expect(']');
      cur.expect('=');
      const int ecol = cur.here();
      std::vector<SparseVector::Entry> entries;
      for (const auto& t : parse_sum(cur)) {
        if (t.factors.size() != 1 || t.factors[0].power != 1) {
          throw SourceError(ErrorKind::SyntaxError, l.number, t.column, "linear combination of basis elements",
                            "bracket values are linear");
        }
        auto it = index.find(t.factors[0].name);
        if (it == index.end()) {
          throw SourceError(ErrorKind::UnknownGenerator, l.number, t.factors[0].column, "basis element",
                            "unknown basis element '" + t.factors[0].name + "'");
        }
        if (basis[it->second].degree != basis[i].degree + basis[j].degree) {
          throw SourceError(ErrorKind::DegreeMismatch, l.number, t.factors[0].column,
                            "degree " + std::to_string(basis[i].degree + basis[j].degree),
                            "'" + t.factors[0].name + "' has the wrong degree for this bracket");
        }
        entries.emplace_back(it->second, t.coeff);
      }
      SparseVector value = SparseVector::from_entries(std::move(entries));
      if (i > j) {
        // [y,x] = -(-1)^{|x||y|} [x,y]
        std::swap(i, j);
        const bool both_odd = basis[i].degree % 2 != 0 && basis[j].degree % 2 != 0;
        value.scale(both_odd ? Rational(1) : Rational(-1));
      }
      if (brackets.count({i, j})) {
        throw SourceError(ErrorKind::SyntaxError, l.number, ecol, "one bracket line per pair",
                          "bracket given twice");
      }
      if (!value.empty()) brackets[{i, j}] = std::move(value);
    }
    item.lie = GradedLieAlgebra(std::move(basis), std::move(brackets));
    doc_.items.emplace_back(std::move(item));
  }

  void morphism(const Block& b) {
    Cursor c(b.header);
    c.expect("morphism");
    const int ncol = c.here();
    MorphismItem item;
    item.name = c.ident("morphism name");
    claim_name(item.name, b.header, ncol);
    c.expect(':');
    const int scol = c.here();
    item.source = c.ident("source algebra");
    c.expect('-');
    c.expect('>');
    const int tcol = c.here();
    item.target = c.ident("target algebra");
    c.expect_end();
    const auto& src = lookup<AlgebraItem>(item.source, b.header, scol, "algebra").algebra;
    const auto& tgt = lookup<AlgebraItem>(item.target, b.header, tcol, "algebra").algebra;
    std::vector<std::pair<std::string, Line>> rest;
    gens_of(b, rest, {"map"});
    std::vector<Polynomial> images(src.size(), tgt.zero());
    std::vector<bool> set(src.size(), false);
    for (const auto& [kw, l] : rest) {
      Cursor cur(l);
      cur.expect("map");
      const int gcol = cur.here();
      const std::string g = cur.ident("source generator");
      auto idx = src.ctx().index_of(g);
      if (!idx) throw SourceError(ErrorKind::UnknownGenerator, l.number, gcol, "source generator", "unknown generator '" + g + "'");
      if (set[*idx]) throw SourceError(ErrorKind::SyntaxError, l.number, gcol, "one 'map' line per generator", "map for '" + g + "' given twice");
      set[*idx] = true;
      cur.expect('=');
      const int ecol = cur.here();
      Polynomial p = resolve_poly(parse_sum(cur), tgt.context(), l.number, doc_.warnings);
      check_degree(p, src.ctx().degree(*idx), l.number, ecol, "image of " + g);
      images[*idx] = std::move(p);
    }
    item.map = DgaMorphism(src, tgt, std::move(images));
    doc_.items.emplace_back(std::move(item));
  }

  void fibration(const Block& b) {
    Cursor c(b.header);
    c.expect("fibration");
    const int ncol = c.here();
    FibrationItem item;
    item.name = c.ident("fibration name");
    claim_name(item.name, b.header, ncol);
    c.expect(':');
    c.expect("base");
    const int bcol = c.here();
    item.base_name = c.ident("base algebra");
    c.expect("fiber");
    c.expect('{');
    c.expect_end();
    item.base = lookup<AlgebraItem>(item.base_name, b.header, bcol, "algebra").algebra;
    std::vector<std::pair<std::string, Line>> rest;
    const auto decls = gens_of(b, rest, {"gen", "d"});
    item.fiber = to_generators(decls);
    ContextPtr ctx;
    try {
      ctx = total_context(item.base, item.fiber);
    } catch (const Error& e) {
      GenDecl d = decls.empty() ? GenDecl{} : decls.front();
      std::string message = e.what();
      for (const auto& g : decls) {
        if (item.base.ctx().index_of(g.name)) {
          d = g;
          message = "fiber generator '" + g.name + "' clashes with a base name";
          break;
        }
      }
      throw SourceError(e.kind(), d.line ? d.line : b.header.number, d.column ? d.column : 1,
                        "fiber names distinct from the base", message);
    }
    const std::size_t nb = item.base.size();
    std::vector<std::size_t> base_map(nb);
    for (std::size_t i = 0; i < nb; ++i) base_map[i] = i;
    for (std::size_t i = 0; i < nb; ++i) item.total_diff.push_back(transport(item.base.d(i), ctx, base_map));
    item.total_diff.resize(ctx->size(), Polynomial(ctx));
    std::vector<bool> set(ctx->size(), false);
    for (const auto& [kw, l] : rest) {
      auto [idx, p] = differential_line(l, ctx);
      if (idx < nb) {
        throw SourceError(ErrorKind::SyntaxError, l.number, 1, "d of a fiber generator",
                          "the base differential comes from the base algebra");
      }
      if (set[idx]) throw SourceError(ErrorKind::SyntaxError, l.number, 1, "one 'd' line per generator", "d given twice");
      set[idx] = true;
      item.total_diff[idx] = std::move(p);
    }
    doc_.items.emplace_back(std::move(item));
  }

  std::vector<Line> lines_;
  Document doc_;
};

std::string lie_value(const GradedLieAlgebra& l, const SparseVector& v) {
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mag != 1) out += to_string(mag) + '*';
    out += l.element(i).name;
  }
  return out.empty() ? "0" : out;
}

void print_gens(std::ostream& os, const std::vector<Generator>& gens) {
  for (const auto& g : gens) os << "gen " << g.name << ' ' << g.degree << '\n';
}

}  // namespace

int FibrationItem::default_cutoff() const {
  int top = base.size() ? base.ctx().max_degree() : 0;
  for (const auto& g : fiber) top = std::max(top, g.degree);
  return top + 1;
}

RelativeModel FibrationItem::model(int cutoff) const { return assemble(base, fiber, total_diff, cutoff); }

const std::string& item_name(const Item& item) {
  return std::visit([](const auto& i) -> const std::string& { return i.name; }, item);
}

std::string_view item_kind(const Item& item) {
  switch (item.index()) {
    case 0: return "algebra";
    case 1: return "lie";
    case 2: return "morphism";
    default: return "fibration";
  }
}

const Item* Document::find(std::string_view name) const {
  for (const auto& item : items) {
    if (item_name(item) == name) return &item;
  }
  return nullptr;
}

namespace {

template <class T>
const T& get_item(const Document& doc, std::string_view name, std::string_view kind) {
  const Item* it = doc.find(name);
  const T* item = it ? std::get_if<T>(it) : nullptr;
  if (!item) throw Error(ErrorKind::UnknownName, "no " + std::string(kind) + " named '" + std::string(name) + "'");
  return *item;
}

}  // namespace

const AlgebraItem& Document::algebra(std::string_view name) const { return get_item<AlgebraItem>(*this, name, "algebra"); }
const LieItem& Document::lie(std::string_view name) const { return get_item<LieItem>(*this, name, "lie algebra"); }
const MorphismItem& Document::morphism(std::string_view name) const { return get_item<MorphismItem>(*this, name, "morphism"); }
const FibrationItem& Document::fibration(std::string_view name) const { return get_item<FibrationItem>(*this, name, "fibration"); }

Document parse(std::string_view text) { return Parser(text).run(); }

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
  const Line line{1, std::string(text)};
  Cursor c(line);
  std::vector<Warning> ignored;
  return resolve_poly(parse_sum(c), ctx, 1, ignored);
}

std::string print(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& item : doc.items) {
    if (!first) os << '\n';
    first = false;
    if (const auto* a = std::get_if<AlgebraItem>(&item)) {
      if (a->ce_of) {
        os << "algebra " << a->name << " = ce " << *a->ce_of;
        if (a->ce_cutoff) os << ' ' << *a->ce_cutoff;
        os << '\n';
        continue;
      }
      os << "algebra " << a->name << '\n';
      print_gens(os, a->algebra.ctx().generators());
      for (std::size_t i = 0; i < a->algebra.size(); ++i) {
        if (!a->algebra.d(i).is_zero()) {
          os << "d " << a->algebra.ctx().gen(i).name << " = " << to_string(a->algebra.d(i)) << '\n';
        }
      }
    } else if (const auto* l = std::get_if<LieItem>(&item)) {
      os << "lie " << l->name;
      if (l->free_cutoff) {
        os << " free " << *l->free_cutoff << '\n';
        for (const auto& g : l->free_generators) os << "gen " << g.name << ' ' << g.degree << '\n';
        continue;
      }
      os << '\n';
      for (const auto& e : l->lie.basis()) os << "gen " << e.name << ' ' << e.degree << '\n';
      for (const auto& [ij, v] : l->lie.structure()) {
        if (v.empty()) continue;
        os << "bracket [" << l->lie.element(ij.first).name << ',' << l->lie.element(ij.second).name
           << "] = " << lie_value(l->lie, v) << '\n';
      }
    } else if (const auto* m = std::get_if<MorphismItem>(&item)) {
      os << "morphism " << m->name << " : " << m->source << " -> " << m->target << '\n';
      for (std::size_t i = 0; i < m->map.source().size(); ++i) {
        if (!m->map.image(i).is_zero()) {
          os << "map " << m->map.source().ctx().gen(i).name << " = " << to_string(m->map.image(i)) << '\n';
        }
      }
    } else if (const auto* f = std::get_if<FibrationItem>(&item)) {
      os << "fibration " << f->name << " : base " << f->base_name << " fiber {\n";
      print_gens(os, f->fiber);
      const std::size_t nb = f->base.size();
      for (std::size_t i = nb; i < f->total_diff.size(); ++i) {
        if (!f->total_diff[i].is_zero()) {
          os << "d " << f->fiber[i - nb].name << " = " << to_string(f->total_diff[i]) << '\n';
        }
      }
      os << "}\n";
    }
  }
  return os.str();
}

bool operator==(const Document& a, const Document& b) {
  if (a.items.size() != b.items.size()) return false;
  for (std::size_t k = 0; k < a.items.size(); ++k) {
    const Item& x = a.items[k];
    const Item& y = b.items[k];
    if (x.index() != y.index() || item_name(x) != item_name(y)) return false;
    if (const auto* p = std::get_if<AlgebraItem>(&x)) {
      const auto& q = std::get<AlgebraItem>(y);
      if (!(p->algebra == q.algebra) || p->ce_of != q.ce_of || p->ce_cutoff != q.ce_cutoff) return false;
    } else if (const auto* p = std::get_if<LieItem>(&x)) {
      const auto& q = std::get<LieItem>(y);
      if (!(p->lie == q.lie) || p->free_cutoff != q.free_cutoff || p->free_generators != q.free_generators) return false;
    } else if (const auto* p = std::get_if<MorphismItem>(&x)) {
      const auto& q = std::get<MorphismItem>(y);
      if (p->source != q.source || p->target != q.target || p->map.assignment() != q.map.assignment()) return false;
    } else {
      const auto& f = std::get<FibrationItem>(x);
      const auto& g = std::get<FibrationItem>(y);
      if (f.base_name != g.base_name || !(f.base == g.base) || f.fiber != g.fiber || f.total_diff != g.total_diff) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace sullivan
