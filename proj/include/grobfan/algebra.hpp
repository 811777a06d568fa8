#pragma once

// Gröbner basics over marked polynomials: marked division with a step
// guard, S-polynomials, Buchberger with normal pair selection, and
// autoreduction to the unique reduced basis.
//
// Division here is "marked" reduction: correctness depends only on the
// marks.  For coherently marked bases (some strictly positive weight
// vector makes every mark the initial term) it terminates; the guard
// turns runaway reductions on incoherent input into a GuardError
// instead of a hang.  An optional selection order decides which
// reducible term is rewritten first: the result is the same either way,
// but choosing the largest term under an order compatible with the
// reducers' marking gives the classical single-descent step bound,
// while an incompatible choice can re-expand already-reduced regions
// exponentially often.

#include <cstdint>
#include <span>
#include <vector>

#include "grobfan/polynomial.hpp"
#include "grobfan/term_order.hpp"

namespace grobfan {

inline constexpr std::uint64_t kDefaultReductionGuard = std::uint64_t(1) << 20;

// Remainder of f on marked division by g: no term of the result is
// divisible by any marked exponent of g.  Divisor choice: first element
// in list order whose mark divides the largest reducible term, largest
// under `selection` when given and under the canonical (graded-lex)
// order otherwise.  Throws GuardError after `guard` reduction steps.
Polynomial normal_form(const Polynomial& f,
                       std::span<const MarkedPolynomial> g,
                       std::uint64_t guard = kDefaultReductionGuard,
                       const ExponentOrder* selection = nullptr);
Polynomial normal_form(const Polynomial& f, const MarkedBasis& g,
                       std::uint64_t guard = kDefaultReductionGuard,
                       const ExponentOrder* selection = nullptr);

// S(g1,g2) = (lcm/m1)*g1 - (lcm/m2)*g2 on the marked terms (both have
// coefficient 1, so the marked terms cancel exactly).
Polynomial s_polynomial(const MarkedPolynomial& g1, const MarkedPolynomial& g2);

struct BuchbergerOptions {
  // Skip pairs with coprime marked terms (first Buchberger criterion);
  // always sound for marked initial terms under a genuine term order.
  bool coprime_criterion = true;
  // Chain (second) criterion; off by default, identical output either way.
  bool use_chain_criterion = false;
  std::uint64_t reduction_guard = kDefaultReductionGuard;
};

// Reduced Gröbner basis of <gens> under `order`, every element marked at
// its initial term, canonical element order.  Zero generators are
// dropped; an all-zero (or empty) generator list throws.
MarkedBasis buchberger(const std::vector<Polynomial>& gens,
                       const ExponentOrder& order,
                       const BuchbergerOptions& opts = {});

// Minimalizes (drops elements whose marked exponent is divisible by
// another's) and tail-reduces the survivors; marks never move.  Requires
// coherent markings.  The marked exponents generate the same monomial
// ideal before and after.
MarkedBasis autoreduce(size_t n, std::vector<MarkedPolynomial> elems,
                       std::uint64_t guard = kDefaultReductionGuard,
                       const ExponentOrder* selection = nullptr);

// Buchberger criterion: every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const MarkedBasis& g,
                       std::uint64_t guard = kDefaultReductionGuard,
                       const ExponentOrder* selection = nullptr);

// Marked exponent minus every other exponent, over all elements: the raw
// inequality normals of the Gröbner cone, and the vectors whose common
// kernel is the homogeneity space.
std::vector<IntVec> marked_differences(const MarkedBasis& g);

}  // namespace grobfan
