#pragma once

// Exponent vectors (machine ints, non-negative) and weight/normal vectors
// (arbitrary-precision integers), plus the small amount of combinatorics
// the rest of the library leans on: dot products, graded-lex comparison,
// primitive scaling, divisibility.

#include <cstdint>
#include <string>
#include <vector>

#include "grobfan/rational.hpp"

namespace grobfan {

using ExpVec = std::vector<int>;      // monomial exponents
using IntVec = std::vector<Integer>;  // weight vectors, facet normals

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering flip_ordering(Ordering o) {
  return static_cast<Ordering>(-static_cast<int>(o));
}

int total_degree(const ExpVec& a);

// Graded-lexicographic comparison: total degree first, then lex with the
// first coordinate most significant.  This is the library's fixed internal
// canonical order on exponents (sorting, pair selection, dedup keys); it
// is unrelated to whatever term order a caller supplies.
Ordering grlex_compare(const ExpVec& a, const ExpVec& b);

bool divides(const ExpVec& divisor, const ExpVec& e);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub_nonneg(const ExpVec& a, const ExpVec& b);  // throws if negative
ExpVec exp_lcm(const ExpVec& a, const ExpVec& b);
bool exp_coprime(const ExpVec& a, const ExpVec& b);

// a - b as an integer vector (entries may be negative).
IntVec exp_diff(const ExpVec& a, const ExpVec& b);

Integer dot(const IntVec& a, const IntVec& b);
Integer dot(const IntVec& w, const ExpVec& e);

IntVec ivec_add(const IntVec& a, const IntVec& b);
IntVec ivec_sub(const IntVec& a, const IntVec& b);
IntVec ivec_scale(const Integer& c, const IntVec& a);
IntVec ivec_neg(const IntVec& a);
bool is_zero(const IntVec& a);

// Divides by the gcd of the entries; the zero vector is returned as-is.
// The geometric sign is preserved (no sign normalization).
IntVec primitive(const IntVec& a);

// Clears denominators and makes the result primitive.
IntVec primitive(const std::vector<Rational>& a);

// True iff d == t*alpha for some (necessarily unique) nonzero integer t;
// alpha must be nonzero.  On success stores t.
bool integer_multiple_of(const IntVec& d, const IntVec& alpha, Integer* t);

// Plain lexicographic comparison on integer vectors, used for canonical
// sorting of normals and equation rows.
Ordering ivec_lex_compare(const IntVec& a, const IntVec& b);

std::string ivec_to_string(const IntVec& a);  // "(a1, a2, ...)"

}  // namespace grobfan
