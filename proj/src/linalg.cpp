#include "grobfan/linalg.hpp"

#include <algorithm>

namespace grobfan {

QRow to_qrow(const IntVec& v) {
  QRow r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

std::vector<size_t> rref(QMatrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = m.size();
    for (size_t r = row; r < m.size(); ++r) {
      if (m[r][col] != 0) { sel = r; break; }
    }
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] /= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<IntVec> nullspace(const QMatrix& m_in, size_t cols) {
  QMatrix m = m_in;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<IntVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QRow v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<IntVec> canonical_row_basis(const std::vector<IntVec>& rows,
                                        size_t cols) {
  QMatrix m;
  m.reserve(rows.size());
  for (const IntVec& r : rows) m.push_back(to_qrow(r));
  std::vector<size_t> pivots = rref(m);
  std::vector<IntVec> out;
  out.reserve(m.size());
  for (const QRow& r : m) {
    IntVec z = primitive(r);
    // rref scales the pivot to +1, so the first nonzero is already positive
    out.push_back(std::move(z));
  }
  (void)cols;
  return out;
}

bool RowSpan::add(const QRow& row) {
  QRow r = row;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (r[pivots_[i]] == 0) continue;
    Rational f = r[pivots_[i]];
    for (size_t c = 0; c < cols_; ++c) r[c] -= f * rows_[i][c];
  }
  size_t pivot = cols_;
  for (size_t c = 0; c < cols_; ++c) {
    if (r[c] != 0) { pivot = c; break; }
  }
  if (pivot == cols_) return false;
  Rational inv = r[pivot];
  for (size_t c = 0; c < cols_; ++c) r[c] /= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpan::add(const IntVec& row) { return add(to_qrow(row)); }

}  // namespace grobfan
