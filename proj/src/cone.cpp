#include "grobfan/cone.hpp"

#include <algorithm>
#include <set>

#include "grobfan/lp.hpp"

namespace grobfan {

namespace {

struct IVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    return ivec_lex_compare(a, b) == Ordering::Less;
  }
};

std::string vec_key(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

// max t  s.t.  <rows_j, y> >= t for all j, t <= 1   (y free-coordinate
// functionals).  Returns the optimum and the maximizing y.
LPResult max_min_slack(const std::vector<std::vector<Rational>>& rows,
                       size_t g) {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& r : rows) {
    std::vector<Rational> row(g + 1, Rational(0));
    for (size_t i = 0; i < g; ++i) row[i] = -r[i];
    row[g] = 1;  // t - <r,y> <= 0
    A.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rational> cap(g + 1, Rational(0));
  cap[g] = 1;
  A.push_back(cap);
  b.push_back(1);
  std::vector<Rational> c(g + 1, Rational(0));
  c[g] = 1;
  return lp_solve(A, b, c);
}

}  // namespace

EquationSpace::EquationSpace(const std::vector<IntVec>& rows, size_t n)
    : n_(n) {
  rows_ = canonical_row_basis(rows, n);
  pivots_.reserve(rows_.size());
  for (const IntVec& r : rows_) {
    size_t p = 0;
    while (p < n && r[p] == 0) ++p;
    pivots_.push_back(p);
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_.push_back(c);
}

IntVec EquationSpace::reduce(const IntVec& a) const {
  std::vector<Rational> q(n_);
  for (size_t i = 0; i < n_; ++i) q[i] = Rational(a[i]);
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t p = pivots_[r];
    if (q[p] == 0) continue;
    Rational f = q[p] / Rational(rows_[r][p]);
    for (size_t c = p; c < n_; ++c) q[c] -= f * Rational(rows_[r][c]);
  }
  return primitive(q);
}

std::vector<Rational> EquationSpace::functional(const IntVec& a) const {
  std::vector<Rational> f(free_.size());
  for (size_t i = 0; i < free_.size(); ++i) f[i] = Rational(a[free_[i]]);
  return f;
}

std::vector<Rational> EquationSpace::lift(
    const std::vector<Rational>& free_vals) const {
  std::vector<Rational> x(n_, Rational(0));
  for (size_t i = 0; i < free_.size(); ++i) x[free_[i]] = free_vals[i];
  // echelon rows: solve pivots from the bottom up
  for (size_t r = rows_.size(); r-- > 0;) {
    Rational acc = 0;
    for (size_t c = pivots_[r] + 1; c < n_; ++c)
      if (rows_[r][c] != 0) acc += Rational(rows_[r][c]) * x[c];
    x[pivots_[r]] = -acc / Rational(rows_[r][pivots_[r]]);
  }
  return x;
}

Cone canonicalize(const Cone& input) {
  size_t n = input.n();
  std::vector<IntVec> eqs = input.equations();
  std::vector<IntVec> ineqs = input.inequalities();

  while (true) {
    EquationSpace space(eqs, n);
    // Reduce, drop zeros, dedup.
    std::set<IntVec, IVecLess> reduced;
    for (const IntVec& a : ineqs) {
      IntVec r = space.reduce(a);
      if (!is_zero(r)) reduced.insert(std::move(r));
    }
    // Antipodal pairs force equality without an LP.
    bool migrated = false;
    for (const IntVec& a : reduced) {
      if (reduced.count(ivec_neg(a))) {
        eqs = space.rows();
        eqs.push_back(a);
        ineqs.assign(reduced.begin(), reduced.end());
        migrated = true;
        break;
      }
    }
    if (migrated) continue;

    std::vector<IntVec> work(reduced.begin(), reduced.end());
    size_t g = space.free_columns().size();

    std::vector<Rational> witness(g, Rational(0));
    if (!work.empty()) {
      // One-shot relative interior attempt; min-slack 0 means implied
      // equalities exist and we fall back to per-inequality witnesses.
      std::vector<std::vector<Rational>> funcs;
      funcs.reserve(work.size());
      for (const IntVec& a : work) funcs.push_back(space.functional(a));
      LPResult one = max_min_slack(funcs, g);
      if (one.status != LPResult::Status::Optimal)
        throw GuardError("cone canonicalization LP failed");  // unreachable
      if (one.objective > 0) {
        witness.assign(one.point.begin(), one.point.begin() + g);
      } else {
        std::vector<IntVec> implied;
        for (size_t i = 0; i < work.size(); ++i) {
          Rational have = 0;
          for (size_t k = 0; k < g; ++k) have += funcs[i][k] * witness[k];
          if (have > 0) continue;
          // max <a_i, y> subject to all <a_j, y> >= 0 and <a_i, y> <= 1
          std::vector<std::vector<Rational>> A;
          std::vector<Rational> b;
          for (const auto& f : funcs) {
            std::vector<Rational> row(g);
            for (size_t k = 0; k < g; ++k) row[k] = -f[k];
            A.push_back(std::move(row));
            b.push_back(0);
          }
          A.push_back(funcs[i]);
          b.push_back(1);
          LPResult r = lp_solve(A, b, funcs[i]);
          if (r.status != LPResult::Status::Optimal)
            throw GuardError("cone canonicalization LP failed");
          if (r.objective > 0) {
            for (size_t k = 0; k < g; ++k) witness[k] += r.point[k];
          } else {
            implied.push_back(work[i]);
          }
        }
        if (!implied.empty()) {
          eqs = space.rows();
          for (IntVec& a : implied) eqs.push_back(std::move(a));
          ineqs = std::move(work);
          continue;
        }
      }
    }

    // Irredundancy: drop a_i iff <a_i, y> cannot go negative subject to
    // the others.  Sequential removal over the sorted list is sound and
    // deterministic.
    std::vector<IntVec> kept = work;
    for (size_t i = 0; i < kept.size();) {
      std::vector<std::vector<Rational>> A;
      std::vector<Rational> b;
      std::vector<Rational> fi = space.functional(kept[i]);
      for (size_t j = 0; j < kept.size(); ++j) {
        if (j == i) continue;
        std::vector<Rational> fj = space.functional(kept[j]);
        for (Rational& v : fj) v = -v;
        A.push_back(std::move(fj));
        b.push_back(0);
      }
      {
        std::vector<Rational> row = fi;
        for (Rational& v : row) v = -v;
        A.push_back(std::move(row));  // -<a_i,y> <= 1
        b.push_back(1);
      }
      std::vector<Rational> c = fi;
      for (Rational& v : c) v = -v;  // maximize -<a_i, y>
      LPResult r = lp_solve(A, b, c);
      bool redundant =
          r.status == LPResult::Status::Optimal && r.objective <= 0;
      if (redundant)
        kept.erase(kept.begin() + i);
      else
        ++i;
    }

    Cone out(n, space.rows(), std::move(kept));
    out.canonical_ = true;
    out.ri_point_ = space.lift(witness);
    out.key_ = "n" + std::to_string(n) + "|e:";
    for (const IntVec& e : out.equations_) {
      out.key_ += vec_key(e);
      out.key_ += ';';
    }
    out.key_ += "|i:";
    for (const IntVec& a : out.inequalities_) {
      out.key_ += vec_key(a);
      out.key_ += ';';
    }
    return out;
  }
}

const std::string& Cone::key() const {
  if (!canonical_) throw GuardError("key() on a non-canonical cone");
  return key_;
}

size_t cone_dimension(const Cone& c) {
  if (!c.canonical()) throw GuardError("cone_dimension needs a canonical cone");
  return c.n() - c.equations().size();
}

std::optional<std::vector<Rational>> relative_interior_point(
    const Cone& c, bool strictly_positive) {
  if (!c.canonical())
    throw GuardError("relative_interior_point needs a canonical cone");
  if (!strictly_positive) return c.ri_point_;
  std::vector<IntVec> strict = c.inequalities();
  for (size_t i = 0; i < c.n(); ++i) {
    IntVec e(c.n(), Integer(0));
    e[i] = 1;
    strict.push_back(std::move(e));
  }
  return strictly_feasible(c.equations(), strict);
}

void collect_faces(const Cone& c, std::map<std::string, Cone>& out) {
  if (!c.canonical()) throw GuardError("collect_faces needs a canonical cone");
  if (!out.emplace(c.key(), c).second) return;
  for (size_t i = 0; i < c.inequalities().size(); ++i) {
    std::vector<IntVec> eqs = c.equations();
    eqs.push_back(c.inequalities()[i]);
    std::vector<IntVec> rest;
    for (size_t j = 0; j < c.inequalities().size(); ++j)
      if (j != i) rest.push_back(c.inequalities()[j]);
    collect_faces(canonicalize(Cone(c.n(), std::move(eqs), std::move(rest))),
                  out);
  }
}

std::vector<Cone> faces_all(const Cone& c) {
  std::map<std::string, Cone> all;
  collect_faces(c, all);
  std::vector<Cone> out;
  out.reserve(all.size());
  for (auto& [k, cone] : all) out.push_back(std::move(cone));
  return out;
}

std::vector<IntVec> homogeneity_space(const std::vector<IntVec>& diffs,
                                      size_t n) {
  QMatrix m;
  m.reserve(diffs.size());
  for (const IntVec& d : diffs) m.push_back(to_qrow(d));
  std::vector<IntVec> basis = nullspace(m, n);
  return canonical_row_basis(basis, n);
}

}  // namespace grobfan
