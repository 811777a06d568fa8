#pragma once

// Polynomials over Q and marked (reduced) bases.  A polynomial keeps its
// terms sorted descending in the internal graded-lex order, which makes
// equality, hashing and merges cheap and gives every value one canonical
// representation.

#include <optional>
#include <string>
#include <vector>

#include "grobfan/rational.hpp"
#include "grobfan/term_order.hpp"
#include "grobfan/vectors.hpp"

namespace grobfan {

struct Term {
  Rational coeff;  // never zero inside a Polynomial
  ExpVec exp;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(size_t n) : n_(n) {}
  // Merges duplicate exponents, drops zero coefficients, sorts.
  Polynomial(size_t n, std::vector<Term> terms);

  size_t n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Largest term in the internal canonical (graded-lex) order.
  const Term& canonical_leading() const;

  bool is_constant() const {
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0;
  }

  const Rational* coeff_of(const ExpVec& e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  // this * c*x^e
  Polynomial times_term(const Rational& c, const ExpVec& e) const;

  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  // Name-independent canonical key for dedup sets; user-facing text
  // lives in serialize.hpp.
  std::string key() const;

 private:
  size_t n_ = 0;
  std::vector<Term> terms_;  // grlex-descending
};

inline bool operator==(const Term& a, const Term& b) {
  return a.coeff == b.coeff && a.exp == b.exp;
}

Polynomial monomial(size_t n, const Rational& c, const ExpVec& e);

// The term of f that is largest under the given order; f must be nonzero.
const Term& initial_term(const ExponentOrder& order, const Polynomial& f);

// Terms of f with maximal <w, exp>; w = 0 returns f itself.
Polynomial initial_form(const IntVec& w, const Polynomial& f);

// A polynomial with one distinguished (marked) term of coefficient 1.
// The mark is the datum: it says which term is "initial" without naming
// any term order, and every algorithm downstream reduces against marks.
class MarkedPolynomial {
 public:
  // Scales so the marked coefficient becomes 1; the marked exponent must
  // occur in the body.
  MarkedPolynomial(Polynomial body, ExpVec marked);

  const Polynomial& body() const { return body_; }
  const ExpVec& marked_exponent() const { return marked_; }
  Polynomial tail() const;  // body minus the marked term

  bool operator==(const MarkedPolynomial& o) const {
    return marked_ == o.marked_ && body_ == o.body_;
  }

  std::string key() const;

 private:
  Polynomial body_;
  ExpVec marked_;
};

// A list of marked polynomials in canonical order (marked exponents
// grlex-descending).  Construction sorts; it does not validate reduction
// or coherence — validate_marked_basis does that on demand.
class MarkedBasis {
 public:
  MarkedBasis() = default;
  MarkedBasis(size_t n, std::vector<MarkedPolynomial> elems);

  size_t n() const { return n_; }
  const std::vector<MarkedPolynomial>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  bool operator==(const MarkedBasis& o) const {
    return n_ == o.n_ && elems_ == o.elems_;
  }

  // Canonical key: dedup handle for visited sets and orbit comparisons.
  const std::string& key() const { return key_; }

 private:
  size_t n_ = 0;
  std::vector<MarkedPolynomial> elems_;
  std::string key_;
};

// A parsed input document: ring + generators (+ optional order/symmetry
// text carried through from flags or the file).
struct IdealInput {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
  std::optional<std::string> order_spec;
  std::optional<std::string> symmetry_spec;
  size_t n() const { return variables.size(); }
};

}  // namespace grobfan
