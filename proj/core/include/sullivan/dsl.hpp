#pragma once

// Line-oriented text format for algebras, Lie algebras, morphisms and
// relative models.
//
//   algebra E54            lie L                  morphism f : A -> B
//   gen x 2                gen a 1                map x = 2*u
//   d y = x^3              bracket [a,a] = b
//
//   algebra W = ce L 12    lie F free 12          fibration P : base B fiber {
//                          gen a 2                gen w 3
//                                                 d w = x^2 - u
//                                                 }
//
// Monomials may be written in any order; the parser moves them to normal
// form and warns when that flips a sign.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sullivan/dga.hpp"
#include "sullivan/error.hpp"
#include "sullivan/fibration.hpp"
#include "sullivan/lie.hpp"
#include "sullivan/morphism.hpp"

namespace sullivan {

// Error with a 1-based source position.
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, int line, int column, std::string expected, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

struct Warning {
  int line = 0;
  int column = 0;
  std::string message;
};

struct AlgebraItem {
  std::string name;
  SullivanAlgebra algebra;
  // Set for "algebra N = ce L cutoff".
  std::optional<std::string> ce_of;
  std::optional<int> ce_cutoff;
};

struct LieItem {
  std::string name;
  GradedLieAlgebra lie;
  std::optional<int> free_cutoff;  // "lie N free cutoff"
  std::vector<LieElement> free_generators;
};

struct MorphismItem {
  std::string name;
  std::string source;
  std::string target;
  DgaMorphism map;
};

// Kept unassembled so that ill-formed models still load; model() runs
// assemble() and throws what it throws.
struct FibrationItem {
  std::string name;
  std::string base_name;
  SullivanAlgebra base;
  std::vector<Generator> fiber;
  std::vector<Polynomial> total_diff;  // over total_context(base, fiber)

  int default_cutoff() const;
  RelativeModel model() const { return model(default_cutoff()); }
  RelativeModel model(int cutoff) const;
};

using Item = std::variant<AlgebraItem, LieItem, MorphismItem, FibrationItem>;

const std::string& item_name(const Item& item);
std::string_view item_kind(const Item& item);

struct Document {
  std::vector<Item> items;
  std::vector<Warning> warnings;

  const Item* find(std::string_view name) const;
  const AlgebraItem& algebra(std::string_view name) const;  // UnknownName
  const LieItem& lie(std::string_view name) const;
  const MorphismItem& morphism(std::string_view name) const;
  const FibrationItem& fibration(std::string_view name) const;
};

// Throws SourceError (SyntaxError, UnknownGenerator, DegreeMismatch,
// UnknownName) and whatever free_lie / ce_quadratic_model throw.
Document parse(std::string_view text);

// One expression in the generators of ctx, e.g. "3/2*x^2*a - y".
// Throws SourceError with line 1.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

// Normalized text; parse(print(doc)) reproduces doc.
std::string print(const Document& doc);

// Structural equality of the items; warnings are ignored.
bool operator==(const Document& a, const Document& b);

}  // namespace sullivan
