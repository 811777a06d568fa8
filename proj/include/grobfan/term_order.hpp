#pragma once

// Integer-matrix term orders.  A k x n matrix with every column
// lexicographically positive describes the order  a < b  iff  M(a-b) is
// lex-negative; internally the matrix is completed to rank n with
// reverse-lexicographic tie-breaker rows so comparisons are total.

#include <string>
#include <vector>

#include "grobfan/rational.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan {

// Abstract exponent comparison.  compare(a, b) answers for x^a vs x^b;
// implementations must behave like a total order on the exponents they
// are asked about (the directional order used by flips throws when that
// fails — ties there signal a broken invariant, not valid input).
class ExponentOrder {
 public:
  virtual ~ExponentOrder() = default;
  virtual Ordering compare(const ExpVec& a, const ExpVec& b) const = 0;
  bool less(const ExpVec& a, const ExpVec& b) const {
    return compare(a, b) == Ordering::Less;
  }
};

class TermOrderMatrix : public ExponentOrder {
 public:
  // Validates column positivity on the supplied rows, drops rows lying in
  // the span of earlier ones, appends -e_n, ..., -e_1 as needed to reach
  // rank n.  Throws OrderError on violation.
  TermOrderMatrix(std::vector<IntVec> rows, size_t n);

  static TermOrderMatrix lex(const std::vector<size_t>& priority);
  static TermOrderMatrix deglex(const std::vector<size_t>& priority);
  static TermOrderMatrix degrevlex(const std::vector<size_t>& priority);
  static TermOrderMatrix weighted(const IntVec& w, const TermOrderMatrix& tiebreak);

  size_t n() const { return n_; }
  // All rows, supplied-then-completion; rank n, columns lex-positive.
  const std::vector<IntVec>& rows() const { return rows_; }
  // The rows the caller supplied (after dependent-row pruning).
  size_t supplied_rows() const { return supplied_; }

  Ordering compare(const ExpVec& a, const ExpVec& b) const override;

  // Lex sign of M*v for an arbitrary integer vector: -1, 0, +1.
  // Zero is impossible for v != 0 since the matrix has rank n.
  int lex_sign(const IntVec& v) const;

 private:
  size_t n_ = 0;
  size_t supplied_ = 0;
  std::vector<IntVec> rows_;
};

// compare_exponents(M, a, b): row-by-row evaluation of M(a-b); exposed as
// a free function mirroring the matrix method for call-site clarity.
Ordering compare_exponents(const TermOrderMatrix& m, const ExpVec& a,
                           const ExpVec& b);

// Rank-one order used inside flips: higher <-alpha, e> wins.  Distinct
// exponents with equal value throw GuardError — in a flip every exponent
// difference is parallel to alpha, so a tie means the input was not a
// facet situation.
class DirectionalOrder : public ExponentOrder {
 public:
  explicit DirectionalOrder(IntVec minus_alpha)
      : direction_(std::move(minus_alpha)) {}
  Ordering compare(const ExpVec& a, const ExpVec& b) const override;

 private:
  IntVec direction_;
};

}  // namespace grobfan
