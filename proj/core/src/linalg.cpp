#include "sullivan/linalg.hpp"

#include <algorithm>
#include <set>

#include "sullivan/error.hpp"

namespace sullivan {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::unit(std::size_t index) {
  SparseVector v;
  v.entries_.emplace_back(index, Rational(1));
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  }
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& [index, value] : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == index) {
      v.entries_.back().second += value;
    } else {
      v.entries_.emplace_back(index, std::move(value));
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0; });
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dim) const {
  std::vector<Rational> out(dim);
  for (const auto& [i, v] : entries_) out.at(i) = v;
  return out;
}

// ------------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVector::unit(i);
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::InvalidArgument, "ragged dense matrix");
    }
    m.data_[i] = SparseVector::from_dense(rows[i]);
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  RatMatrix m(rows.size(), cols);
  for (const auto& r : rows) {
    if (!r.empty() && r.entries().back().first >= cols) {
      throw Error(ErrorKind::InvalidArgument, "row entry outside column range");
    }
  }
  m.data_ = std::move(rows);
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows,
                                  const std::vector<SparseVector>& cols) {
  std::vector<std::vector<SparseVector::Entry>> buckets(rows);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j].entries()) {
      if (i >= rows) throw Error(ErrorKind::InvalidArgument, "column entry outside row range");
      buckets[i].emplace_back(j, v);
    }
  }
  RatMatrix m(rows, cols.size());
  for (std::size_t i = 0; i < rows; ++i) {
    m.data_[i] = SparseVector::from_entries(std::move(buckets[i]));
  }
  return m;
}

void RatMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::InvalidArgument, "index out of range");
  auto entries = data_[i].entries();
  std::erase_if(entries, [j](const SparseVector::Entry& e) { return e.first == j; });
  entries.emplace_back(j, value);
  data_[i] = SparseVector::from_entries(std::move(entries));
}

RatMatrix RatMatrix::transpose() const {
  return from_columns(cols_, data_);
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in apply");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i].entries()) out[i] += v * x[j];
  }
  return out;
}

SparseVector RatMatrix::apply(const SparseVector& x) const {
  std::vector<SparseVector::Entry> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (const auto& [j, v] : data_[i].entries()) {
      Rational xj = x.at(j);
      if (xj != 0) acc += v * xj;
    }
    if (acc != 0) out.emplace_back(i, std::move(acc));
  }
  return SparseVector::from_entries(std::move(out));
}

std::vector<std::vector<Rational>> RatMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows_);
  for (const auto& r : data_) out.push_back(r.to_dense(cols_));
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const SparseVector& r) { return r.empty(); });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in product");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    SparseVector acc;
    for (const auto& [k, v] : a.data_[i].entries()) acc.axpy(v, b.data_[k]);
    out.data_[i] = std::move(acc);
  }
  return out;
}

// --------------------------------------------------------------------- Echelon

std::pair<SparseVector, SparseVector> Echelon::reduce_tracked(SparseVector v,
                                                              SparseVector tag) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t index = v.entries()[pos].first;
    auto it = rows_.find(index);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const Rational factor = -v.entries()[pos].second;
    v.axpy(factor, it->second.vec);
    tag.axpy(factor, it->second.tag);
    // Entries before pos are untouched because the row's leading index is
    // `index`; the entry at pos has been cancelled.
  }
  return {std::move(v), std::move(tag)};
}

SparseVector Echelon::reduce(SparseVector v) const {
  return reduce_tracked(std::move(v), SparseVector{}).first;
}

bool Echelon::insert(SparseVector v, SparseVector tag) {
  auto [rem, rem_tag] = reduce_tracked(std::move(v), std::move(tag));
  if (rem.empty()) return false;
  const Rational inv = 1 / Rational(rem.entries().front().second);
  rem.scale(inv);
  rem_tag.scale(inv);
  const std::size_t pivot = rem.leading();
  rows_.emplace(pivot, Row{std::move(rem), std::move(rem_tag)});
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseVector> Echelon::rref_rows() const {
  // Back-substitute from the last pivot upwards so every row is zero in all
  // other pivot columns.
  std::vector<SparseVector> rows;
  std::vector<std::size_t> piv;
  for (const auto& [p, row] : rows_) {
    rows.push_back(row.vec);
    piv.push_back(p);
  }
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      Rational c = rows[i].at(piv[k]);
      if (c != 0) rows[i].axpy(-c, rows[k]);
    }
  }
  return rows;
}

// ------------------------------------------------------------------ free funcs

RrefResult rref(const RatMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  RrefResult out;
  auto rows = e.rref_rows();
  out.pivots = e.pivots();
  out.rank = rows.size();
  rows.resize(m.rows());
  out.reduced = RatMatrix::from_rows(m.cols(), std::move(rows));
  return out;
}

std::vector<SparseVector> kernel_basis(const RatMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  const auto rows = e.rref_rows();
  const auto piv = e.pivots();
  std::set<std::size_t> pivot_set(piv.begin(), piv.end());
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_set.count(f)) continue;
    std::vector<SparseVector::Entry> entries;
    entries.emplace_back(f, Rational(1));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational c = rows[r].at(f);
      if (c != 0) entries.emplace_back(piv[r], -c);
    }
    out.push_back(SparseVector::from_entries(std::move(entries)));
  }
  return out;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& a,
                                           std::span<const Rational> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorKind::InvalidArgument, "right-hand side has wrong length");
  }
  const std::size_t n = a.cols();
  Echelon e(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto entries = a.row(i).entries();
    if (b[i] != 0) entries.emplace_back(n, b[i]);
    e.insert(SparseVector::from_entries(std::move(entries)));
  }
  const auto rows = e.rref_rows();
  const auto piv = e.pivots();
  if (!piv.empty() && piv.back() == n) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r) sol.particular[piv[r]] = rows[r].at(n);

  std::set<std::size_t> pivot_set(piv.begin(), piv.end());
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_set.count(f)) continue;
    std::vector<Rational> k(n);
    k[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) k[piv[r]] = -rows[r].at(f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<Rational> quotient_coordinates(const Echelon& sub, const SparseVector& v) {
  const SparseVector rem = sub.reduce(v);
  const auto piv = sub.pivots();
  std::set<std::size_t> pivot_set(piv.begin(), piv.end());
  std::vector<Rational> coords;
  coords.reserve(sub.dim() - piv.size());
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    if (!pivot_set.count(i)) coords.push_back(rem.at(i));
  }
  return coords;
}

RatMatrix induced_quotient_map(const RatMatrix& a,
                               const std::vector<std::vector<Rational>>& sub_src,
                               const std::vector<std::vector<Rational>>& sub_tgt) {
  Echelon src(a.cols());
  for (const auto& v : sub_src) {
    if (v.size() != a.cols()) throw Error(ErrorKind::InvalidArgument, "source subspace vector has wrong length");
    src.insert(SparseVector::from_dense(v));
  }
  Echelon tgt(a.rows());
  for (const auto& v : sub_tgt) {
    if (v.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "target subspace vector has wrong length");
    tgt.insert(SparseVector::from_dense(v));
  }
  for (const auto& v : sub_src) {
    if (!tgt.contains(a.apply(SparseVector::from_dense(v)))) {
      throw Error(ErrorKind::MappingNotWellDefined,
                  "the map does not send the source subspace into the target subspace");
    }
  }
  const auto src_piv = src.pivots();
  std::set<std::size_t> src_pivot_set(src_piv.begin(), src_piv.end());
  std::vector<SparseVector> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (src_pivot_set.count(j)) continue;
    const auto image = a.apply(SparseVector::unit(j));
    columns.push_back(SparseVector::from_dense(quotient_coordinates(tgt, image)));
  }
  return RatMatrix::from_columns(a.rows() - tgt.rank(), columns);
}

}  // namespace sullivan
