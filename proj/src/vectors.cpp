#include "grobfan/vectors.hpp"

#include <algorithm>

namespace grobfan {

int total_degree(const ExpVec& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

Ordering grlex_compare(const ExpVec& a, const ExpVec& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

bool divides(const ExpVec& divisor, const ExpVec& e) {
  for (size_t i = 0; i < divisor.size(); ++i)
    if (divisor[i] > e[i]) return false;
  return true;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec exp_sub_nonneg(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw GuardError("negative exponent in monomial quotient");
  }
  return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

IntVec exp_diff(const ExpVec& a, const ExpVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVec& w, const ExpVec& e) {
  Integer s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (e[i] != 0) s += w[i] * e[i];
  return s;
}

IntVec ivec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec ivec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec ivec_scale(const Integer& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

IntVec ivec_neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const IntVec& a) {
  for (const Integer& x : a)
    if (x != 0) return false;
  return true;
}

IntVec primitive(const IntVec& a) {
  Integer g = 0;
  for (const Integer& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0 || g == 1) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

IntVec primitive(const std::vector<Rational>& a) {
  Integer den = 1;
  for (const Rational& q : a)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rational scaled = a[i] * den;
    r[i] = scaled.get_num();  // denominator is 1 by construction
  }
  return primitive(r);
}

bool integer_multiple_of(const IntVec& d, const IntVec& alpha, Integer* t) {
  size_t pivot = alpha.size();
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) { pivot = i; break; }
  }
  if (pivot == alpha.size()) throw GuardError("integer_multiple_of: zero alpha");
  if (d[pivot] == 0) return false;
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d[pivot].get_mpz_t(),
              alpha[pivot].get_mpz_t());
  if (r != 0) return false;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != q * alpha[i]) return false;
  if (q == 0) return false;
  if (t) *t = q;
  return true;
}

Ordering ivec_lex_compare(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

std::string ivec_to_string(const IntVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace grobfan
