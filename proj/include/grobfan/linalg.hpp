#pragma once

// Dense exact linear algebra over Q, just enough for echelon forms,
// rank computations and nullspaces on the small matrices the fan code
// produces (dimensions are the number of ring variables, <= ~20).

#include <vector>

#include "grobfan/rational.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

QRow to_qrow(const IntVec& v);

// In-place reduced row echelon form; returns the pivot column of each
// surviving row (rows of zeros are removed).  Deterministic: pivots are
// chosen left to right, first nonzero row wins.
std::vector<size_t> rref(QMatrix& m);

size_t rank(QMatrix m);

// Primitive integer rows spanning the nullspace {x : m x = 0}, one per
// free column, in free-column order.  Deterministic.
std::vector<IntVec> nullspace(const QMatrix& m, size_t cols);

// Echelonized primitive integer rows (first nonzero entry positive)
// spanning the row space of `rows`; the canonical form of a subspace.
std::vector<IntVec> canonical_row_basis(const std::vector<IntVec>& rows,
                                        size_t cols);

class RowSpan {
 public:
  explicit RowSpan(size_t cols) : cols_(cols) {}
  // Returns true (and absorbs the row) iff it enlarges the span.
  bool add(const QRow& row);
  bool add(const IntVec& row);
  size_t rank() const { return rows_.size(); }

 private:
  size_t cols_;
  QMatrix rows_;                 // kept in echelon form
  std::vector<size_t> pivots_;
};

}  // namespace grobfan
