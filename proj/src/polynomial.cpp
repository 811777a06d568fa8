#include "grobfan/polynomial.hpp"

#include <algorithm>

namespace grobfan {

namespace {

bool grlex_desc(const Term& a, const Term& b) {
  return grlex_compare(a.exp, b.exp) == Ordering::Greater;
}

void append_key(std::string& out, const Term& t) {
  out += t.coeff.get_str();
  out += '[';
  for (size_t i = 0; i < t.exp.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t.exp[i]);
  }
  out += ']';
}

}  // namespace

Polynomial::Polynomial(size_t n, std::vector<Term> terms) : n_(n) {
  std::sort(terms.begin(), terms.end(), grlex_desc);
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

const Term& Polynomial::canonical_leading() const {
  if (terms_.empty()) throw GuardError("leading term of zero polynomial");
  return terms_.front();
}

const Rational* Polynomial::coeff_of(const ExpVec& e) const {
  for (const Term& t : terms_)
    if (t.exp == e) return &t.coeff;
  return nullptr;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(n_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Ordering c = grlex_compare(terms_[i].exp, o.terms_[j].exp);
    if (c == Ordering::Greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Ordering::Less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].exp});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const ExpVec& e) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r(n_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back({t.coeff * c, exp_add(t.exp, e)});
  // adding a fixed exponent preserves the graded-lex order of the terms
  return r;
}

std::string Polynomial::key() const {
  std::string out;
  for (const Term& t : terms_) append_key(out, t);
  return out;
}

Polynomial monomial(size_t n, const Rational& c, const ExpVec& e) {
  return Polynomial(n, {Term{c, e}});
}

const Term& initial_term(const ExponentOrder& order, const Polynomial& f) {
  if (f.is_zero()) throw GuardError("initial term of zero polynomial");
  const Term* best = &f.terms()[0];
  for (size_t i = 1; i < f.terms().size(); ++i) {
    if (order.compare(f.terms()[i].exp, best->exp) == Ordering::Greater)
      best = &f.terms()[i];
  }
  return *best;
}

Polynomial initial_form(const IntVec& w, const Polynomial& f) {
  if (f.is_zero()) return f;
  std::optional<Integer> best;
  for (const Term& t : f.terms()) {
    Integer d = dot(w, t.exp);
    if (!best || d > *best) best = d;
  }
  std::vector<Term> kept;
  for (const Term& t : f.terms())
    if (dot(w, t.exp) == *best) kept.push_back(t);
  return Polynomial(f.n(), std::move(kept));
}

MarkedPolynomial::MarkedPolynomial(Polynomial body, ExpVec marked)
    : body_(std::move(body)), marked_(std::move(marked)) {
  const Rational* c = body_.coeff_of(marked_);
  if (!c) throw GuardError("marked exponent does not occur in polynomial");
  if (*c != 1) body_ = body_.scaled(1 / *c);
}

Polynomial MarkedPolynomial::tail() const {
  return body_ - monomial(body_.n(), Rational(1), marked_);
}

std::string MarkedPolynomial::key() const {
  std::string out = "!";
  for (size_t i = 0; i < marked_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(marked_[i]);
  }
  out += ';';
  out += body_.key();
  return out;
}

MarkedBasis::MarkedBasis(size_t n, std::vector<MarkedPolynomial> elems)
    : n_(n), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(),
            [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
              Ordering c = grlex_compare(a.marked_exponent(), b.marked_exponent());
              if (c != Ordering::Equal) return c == Ordering::Greater;
              return a.body().key() < b.body().key();
            });
  for (const MarkedPolynomial& e : elems_) {
    key_ += e.key();
    key_ += '|';
  }
}

}  // namespace grobfan
