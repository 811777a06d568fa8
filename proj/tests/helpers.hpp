#pragma once

// Small conveniences shared by the unit tests: terse vector literals,
// parsing shortcuts bound to fixed variable sets, and exact substitution
// checks used to audit LP witnesses.

#include <initializer_list>
#include <string>
#include <vector>

#include "grobfan/algebra.hpp"
#include "grobfan/cone.hpp"
#include "grobfan/parse.hpp"
#include "grobfan/polynomial.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan::testing {

inline ExpVec ev(std::initializer_list<int> xs) { return ExpVec(xs); }

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Rational> qv(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline const std::vector<std::string> kXY = {"x", "y"};
inline const std::vector<std::string> kXYZ = {"x", "y", "z"};
inline const std::vector<std::string> kABC = {"a", "b", "c"};

inline Polynomial poly(const std::string& text,
                       const std::vector<std::string>& vars = kXYZ) {
  return parse_polynomial(text, vars);
}

inline MarkedBasis basis(const std::string& text,
                         const std::vector<std::string>& vars = kXYZ) {
  return parse_marked_basis(text, vars);
}

inline Rational eval(const IntVec& normal, const std::vector<Rational>& point) {
  Rational s = 0;
  for (size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * point[i];
  return s;
}

// Exact audit of a cone-membership witness: equations hit zero, strict
// rows are positive, all by rational comparison.
inline bool satisfies_strictly(const std::vector<Rational>& point,
                               const std::vector<IntVec>& equations,
                               const std::vector<IntVec>& strict) {
  for (const IntVec& e : equations)
    if (eval(e, point) != 0) return false;
  for (const IntVec& a : strict)
    if (eval(a, point) <= 0) return false;
  return true;
}

inline std::vector<std::string> basis_keys(const std::vector<MarkedBasis>& v) {
  std::vector<std::string> keys;
  keys.reserve(v.size());
  for (const MarkedBasis& g : v) keys.push_back(g.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace grobfan::testing
