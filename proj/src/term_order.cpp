#include "grobfan/term_order.hpp"

#include "grobfan/linalg.hpp"

namespace grobfan {

TermOrderMatrix::TermOrderMatrix(std::vector<IntVec> supplied, size_t n)
    : n_(n) {
  if (n == 0) throw OrderError("term order needs at least one variable");
  if (supplied.empty()) throw OrderError("term order matrix has no rows");
  for (const IntVec& row : supplied) {
    if (row.size() != n)
      throw OrderError("term order row has wrong length");
  }
  // Column positivity: the first nonzero entry of every column of the
  // supplied matrix must be positive, otherwise some x_i would not
  // satisfy 1 < x_i.
  for (size_t c = 0; c < n; ++c) {
    int sign = 0;
    for (const IntVec& row : supplied) {
      if (row[c] != 0) { sign = row[c] > 0 ? 1 : -1; break; }
    }
    if (sign <= 0)
      throw OrderError("column " + std::to_string(c + 1) +
                       " is not lexicographically positive; not a term order");
  }
  RowSpan span(n);
  for (IntVec& row : supplied) {
    if (span.add(row)) rows_.push_back(std::move(row));
    // dependent rows can never decide a comparison; drop them
  }
  supplied_ = rows_.size();
  // Reverse-lexicographic completion: -e_n, ..., -e_1.  Appending -e_i
  // cannot disturb column positivity because every column already has a
  // nonzero (positive-leading) entry in the supplied rows.
  for (size_t i = n; i-- > 0 && span.rank() < n;) {
    IntVec row(n, Integer(0));
    row[i] = -1;
    if (span.add(row)) rows_.push_back(std::move(row));
  }
  if (span.rank() < n)
    throw OrderError("rank deficiency after completion");  // unreachable
}

TermOrderMatrix TermOrderMatrix::lex(const std::vector<size_t>& priority) {
  size_t n = priority.size();
  std::vector<IntVec> rows;
  rows.reserve(n);
  for (size_t v : priority) {
    IntVec row(n, Integer(0));
    row[v] = 1;
    rows.push_back(std::move(row));
  }
  return TermOrderMatrix(std::move(rows), n);
}

TermOrderMatrix TermOrderMatrix::deglex(const std::vector<size_t>& priority) {
  size_t n = priority.size();
  std::vector<IntVec> rows;
  rows.push_back(IntVec(n, Integer(1)));
  for (size_t v : priority) {
    IntVec row(n, Integer(0));
    row[v] = 1;
    rows.push_back(std::move(row));
  }
  return TermOrderMatrix(std::move(rows), n);
}

TermOrderMatrix TermOrderMatrix::degrevlex(const std::vector<size_t>& priority) {
  size_t n = priority.size();
  std::vector<IntVec> rows;
  rows.push_back(IntVec(n, Integer(1)));
  for (size_t i = n; i-- > 0;) {
    IntVec row(n, Integer(0));
    row[priority[i]] = -1;
    rows.push_back(std::move(row));
  }
  return TermOrderMatrix(std::move(rows), n);
}

TermOrderMatrix TermOrderMatrix::weighted(const IntVec& w,
                                          const TermOrderMatrix& tiebreak) {
  std::vector<IntVec> rows;
  rows.push_back(w);
  for (const IntVec& row : tiebreak.rows()) rows.push_back(row);
  return TermOrderMatrix(std::move(rows), w.size());
}

Ordering TermOrderMatrix::compare(const ExpVec& a, const ExpVec& b) const {
  for (const IntVec& row : rows_) {
    Integer d = dot(row, a) - dot(row, b);
    int s = sgn(d);
    if (s != 0) return s < 0 ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;  // a == b since the matrix has rank n
}

int TermOrderMatrix::lex_sign(const IntVec& v) const {
  for (const IntVec& row : rows_) {
    int s = sgn(dot(row, v));
    if (s != 0) return s;
  }
  return 0;
}

Ordering compare_exponents(const TermOrderMatrix& m, const ExpVec& a,
                           const ExpVec& b) {
  return m.compare(a, b);
}

Ordering DirectionalOrder::compare(const ExpVec& a, const ExpVec& b) const {
  Integer da = dot(direction_, a), db = dot(direction_, b);
  int s = cmp(da, db);
  if (s != 0) return s < 0 ? Ordering::Less : Ordering::Greater;
  if (a != b)
    throw GuardError(
        "directional order tie between distinct exponents; "
        "flip input was not restricted to a facet direction");
  return Ordering::Equal;
}

}  // namespace grobfan
