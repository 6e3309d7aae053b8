#pragma once

// Exact linear algebra over Q. Vectors and matrices are sparse; every
// reduction is exact, so rank and kernel answers are yes/no facts.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sullivan {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index);
  static SparseVector from_dense(std::span<const Rational> dense);
  // Entries may be unsorted and contain zeros or duplicates (summed).
  static SparseVector from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t leading() const { return entries_.front().first; }
  Rational at(std::size_t index) const;

  // this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  std::vector<Rational> to_dense(std::size_t dim) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;  // sorted by index, no zeros
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static RatMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t i) const { return data_[i]; }
  Rational at(std::size_t i, std::size_t j) const { return data_[i].at(j); }
  void set(std::size_t i, std::size_t j, const Rational& value);

  RatMatrix transpose() const;
  std::vector<Rational> apply(std::span<const Rational> x) const;
  SparseVector apply(const SparseVector& x) const;
  std::vector<std::vector<Rational>> to_dense() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

// Incrementally built row-echelon basis of a subspace of Q^dim. Each stored
// row has a unit leading entry at a distinct pivot. An optional tag vector
// travels with each row so callers can recover the combination of inserted
// vectors that produced it.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when v was independent of the current span.
  bool insert(SparseVector v, SparseVector tag = {});
  SparseVector reduce(SparseVector v) const;
  // Reduces v; the tag is updated by the same row operations.
  std::pair<SparseVector, SparseVector> reduce_tracked(SparseVector v,
                                                       SparseVector tag) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::vector<std::size_t> pivots() const;
  // Fully reduced rows ordered by pivot: the unique RREF basis of the span.
  std::vector<SparseVector> rref_rows() const;

 private:
  struct Row {
    SparseVector vec;
    SparseVector tag;
  };
  std::size_t dim_;
  std::map<std::size_t, Row> rows_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const RatMatrix& m);

// Canonical basis of {x : m x = 0}: one vector per non-pivot column, with a 1
// in that column and zeros in the other free columns.
std::vector<SparseVector> kernel_basis(const RatMatrix& m);

struct AffineSolution {
  std::vector<Rational> particular;  // free variables set to zero
  std::vector<std::vector<Rational>> kernel;
};

std::optional<AffineSolution> solve_affine(const RatMatrix& a,
                                           std::span<const Rational> b);

// Map Q^n / S -> Q^m / T induced by a, in complement coordinates: a quotient
// Q^k / U is coordinatised by the non-pivot positions of RREF(U).
RatMatrix induced_quotient_map(const RatMatrix& a,
                               const std::vector<std::vector<Rational>>& sub_src,
                               const std::vector<std::vector<Rational>>& sub_tgt);

// Coordinates of v in Q^k / U (the non-pivot positions of RREF(U)).
std::vector<Rational> quotient_coordinates(const Echelon& sub,
                                           const SparseVector& v);

}  // namespace sullivan
