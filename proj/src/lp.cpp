#include "grobfan/lp.hpp"

#include <atomic>

namespace grobfan {

namespace {

std::atomic<std::uint64_t> g_lp_calls{0};

// Dense simplex tableau in equality form  T x = rhs, x >= 0  with an
// explicit basis.  Column layout is fixed by the caller; the objective
// row is recomputed from scratch per phase (reduced costs c_j - z_j,
// entering when positive).
class Tableau {
 public:
  Tableau(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
    t_.assign(rows, std::vector<Rational>(cols, Rational(0)));
    rhs_.assign(rows, Rational(0));
    basis_.assign(rows, 0);
  }

  std::vector<Rational>& row(size_t i) { return t_[i]; }
  Rational& rhs(size_t i) { return rhs_[i]; }
  size_t basis(size_t i) const { return basis_[i]; }
  void set_basis(size_t i, size_t v) { basis_[i] = v; }
  size_t rows() const { return rows_; }

  void drop_row(size_t i) {
    t_.erase(t_.begin() + i);
    rhs_.erase(rhs_.begin() + i);
    basis_.erase(basis_.begin() + i);
    --rows_;
  }

  void pivot(size_t r, size_t e) {
    Rational inv = t_[r][e];
    for (size_t c = 0; c < cols_; ++c) t_[r][c] /= inv;
    rhs_[r] /= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][e] == 0) continue;
      Rational f = t_[i][e];
      for (size_t c = 0; c < cols_; ++c) t_[i][c] -= f * t_[r][c];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = e;
  }

  // Maximizes c over the current feasible dictionary with Bland's rule.
  // `banned` columns never enter.  Returns false on unboundedness.
  bool maximize(const std::vector<Rational>& c, const std::vector<bool>& banned) {
    while (true) {
      std::vector<Rational> red = c;  // reduced costs c_j - z_j
      for (size_t i = 0; i < rows_; ++i) {
        const Rational& cb = c[basis_[i]];
        if (cb == 0) continue;
        for (size_t j = 0; j < cols_; ++j)
          if (t_[i][j] != 0) red[j] -= cb * t_[i][j];
      }
      size_t enter = cols_;
      for (size_t j = 0; j < cols_; ++j) {
        if (!banned[j] && red[j] > 0) { enter = j; break; }  // Bland: lowest index
      }
      if (enter == cols_) return true;  // optimal
      size_t leave = rows_;
      for (size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        if (leave == rows_) { leave = i; continue; }
        Rational cur = rhs_[i] / t_[i][enter];
        Rational best = rhs_[leave] / t_[leave][enter];
        if (cur < best || (cur == best && basis_[i] < basis_[leave]))
          leave = i;  // Bland: smallest basic variable on ties
      }
      if (leave == rows_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  Rational objective_value(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (size_t i = 0; i < rows_; ++i) v += c[basis_[i]] * rhs_[i];
    return v;
  }

  Rational variable_value(size_t v) const {
    for (size_t i = 0; i < rows_; ++i)
      if (basis_[i] == v) return rhs_[i];
    return Rational(0);
  }

 private:
  size_t rows_, cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<size_t> basis_;
};

}  // namespace

LPResult lp_solve(const std::vector<std::vector<Rational>>& A,
                  const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  g_lp_calls.fetch_add(1, std::memory_order_relaxed);
  const size_t m = A.size();
  const size_t nv = c.size();
  // columns: u (nv), w (nv), slack (m), artificial (m)
  const size_t cols = 2 * nv + 2 * m;
  Tableau t(m, cols);
  for (size_t i = 0; i < m; ++i) {
    int sign = b[i] >= 0 ? 1 : -1;
    for (size_t j = 0; j < nv; ++j) {
      t.row(i)[j] = sign * A[i][j];
      t.row(i)[nv + j] = -sign * A[i][j];
    }
    t.row(i)[2 * nv + i] = sign;           // slack for A x + s = b
    t.row(i)[2 * nv + m + i] = 1;          // artificial
    t.rhs(i) = sign * b[i];
    t.set_basis(i, 2 * nv + m + i);
  }

  std::vector<bool> ban_none(cols, false);
  std::vector<Rational> phase1(cols, Rational(0));
  for (size_t i = 0; i < m; ++i) phase1[2 * nv + m + i] = -1;
  t.maximize(phase1, ban_none);  // bounded by 0, cannot be unbounded
  if (t.objective_value(phase1) != 0) return {LPResult::Status::Infeasible, {}, 0};

  // Drive leftover artificials out of the basis (they sit at value 0).
  std::vector<bool> banned(cols, false);
  for (size_t i = 0; i < m; ++i) banned[2 * nv + m + i] = true;
  for (size_t i = 0; i < t.rows();) {
    if (t.basis(i) < 2 * nv + m) { ++i; continue; }
    size_t e = cols;
    for (size_t j = 0; j < 2 * nv + m; ++j) {
      if (t.row(i)[j] != 0) { e = j; break; }
    }
    if (e == cols) {
      t.drop_row(i);  // the constraint was redundant
    } else {
      t.pivot(i, e);
      ++i;
    }
  }

  std::vector<Rational> phase2(cols, Rational(0));
  for (size_t j = 0; j < nv; ++j) {
    phase2[j] = c[j];
    phase2[nv + j] = -c[j];
  }
  if (!t.maximize(phase2, banned))
    return {LPResult::Status::Unbounded, {}, 0};

  LPResult r;
  r.status = LPResult::Status::Optimal;
  r.point.resize(nv);
  for (size_t j = 0; j < nv; ++j)
    r.point[j] = t.variable_value(j) - t.variable_value(nv + j);
  r.objective = t.objective_value(phase2);
  return r;
}

std::optional<std::vector<Rational>> strictly_feasible(
    const std::vector<IntVec>& equations, const std::vector<IntVec>& strict) {
  size_t n = 0;
  for (const IntVec& v : equations) n = v.size();
  for (const IntVec& v : strict) n = v.size();
  if (n == 0) return std::vector<Rational>{};  // no constraints, origin works
  // variables: x_1..x_n, t; maximize t
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  auto row_of = [&](const IntVec& v, const Rational& tcoef) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (size_t i = 0; i < n; ++i) row[i] = Rational(v[i]);
    row[n] = tcoef;
    return row;
  };
  for (const IntVec& e : equations) {
    A.push_back(row_of(e, 0));
    b.push_back(0);
    A.push_back(row_of(ivec_neg(e), 0));
    b.push_back(0);
  }
  for (const IntVec& a : strict) {
    // -<a,x> + t <= 0
    A.push_back(row_of(ivec_neg(a), 1));
    b.push_back(0);
  }
  {
    std::vector<Rational> row(n + 1, Rational(0));
    row[n] = 1;  // t <= 1
    A.push_back(row);
    b.push_back(1);
  }
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  LPResult r = lp_solve(A, b, c);
  if (r.status != LPResult::Status::Optimal || r.objective <= 0)
    return std::nullopt;
  r.point.resize(n);
  return r.point;
}

std::uint64_t lp_invocation_count() {
  return g_lp_calls.load(std::memory_order_relaxed);
}

}  // namespace grobfan
