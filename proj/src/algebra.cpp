#include "grobfan/algebra.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace grobfan {

namespace {

// One reduction pass used by normal_form: find the largest reducible
// term of h (under `selection` when given, grlex otherwise), subtract
// the matching multiple of the first element whose mark divides it.
// Returns false when h is fully reduced.
bool reduce_step(Polynomial& h, std::span<const MarkedPolynomial> g,
                 const ExponentOrder* selection) {
  auto reducible = [&](const Term& t) {
    for (const MarkedPolynomial& d : g)
      if (divides(d.marked_exponent(), t.exp)) return true;
    return false;
  };
  const Term* pick = nullptr;
  for (const Term& t : h.terms()) {
    if (!reducible(t)) continue;
    if (!selection) {  // terms are stored grlex-descending
      pick = &t;
      break;
    }
    if (!pick || selection->compare(pick->exp, t.exp) == Ordering::Less)
      pick = &t;
  }
  if (!pick) return false;
  for (const MarkedPolynomial& d : g) {
    if (divides(d.marked_exponent(), pick->exp)) {
      ExpVec shift = exp_sub_nonneg(pick->exp, d.marked_exponent());
      h = h - d.body().times_term(pick->coeff, shift);
      return true;
    }
  }
  return false;  // unreachable: pick was reducible
}

struct Pair {
  ExpVec lcm;
  size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    Ordering c = grlex_compare(a.lcm, b.lcm);
    if (c != Ordering::Equal) return c == Ordering::Less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const MarkedPolynomial> g,
                       std::uint64_t guard, const ExponentOrder* selection) {
  Polynomial h = f;
  std::uint64_t steps = 0;
  while (!h.is_zero()) {
    if (!reduce_step(h, g, selection)) return h;
    if (++steps > guard)
      throw GuardError("reduction exceeded " + std::to_string(guard) +
                       " steps; marking is likely incoherent");
  }
  return h;
}

Polynomial normal_form(const Polynomial& f, const MarkedBasis& g,
                       std::uint64_t guard, const ExponentOrder* selection) {
  return normal_form(f, std::span<const MarkedPolynomial>(g.elements()), guard,
                     selection);
}

Polynomial s_polynomial(const MarkedPolynomial& g1, const MarkedPolynomial& g2) {
  ExpVec l = exp_lcm(g1.marked_exponent(), g2.marked_exponent());
  Polynomial a =
      g1.body().times_term(Rational(1), exp_sub_nonneg(l, g1.marked_exponent()));
  Polynomial b =
      g2.body().times_term(Rational(1), exp_sub_nonneg(l, g2.marked_exponent()));
  return a - b;
}

MarkedBasis autoreduce(size_t n, std::vector<MarkedPolynomial> elems,
                       std::uint64_t guard, const ExponentOrder* selection) {
  // Minimalize: process marks grlex-ascending so minimal generators of
  // the marked ideal are kept and the rest dropped.
  std::sort(elems.begin(), elems.end(),
            [](const MarkedPolynomial& a, const MarkedPolynomial& b) {
              return grlex_compare(a.marked_exponent(), b.marked_exponent()) ==
                     Ordering::Less;
            });
  std::vector<MarkedPolynomial> kept;
  for (MarkedPolynomial& e : elems) {
    bool redundant = false;
    for (const MarkedPolynomial& k : kept) {
      if (divides(k.marked_exponent(), e.marked_exponent())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(e));
  }
  // Tail-reduce each survivor against the other kept elements (never
  // against itself).  Marks are fixed, and reducedness only speaks
  // about marks dividing terms, so a single pass suffices.
  for (size_t i = 0; i < kept.size(); ++i) {
    std::swap(kept[i], kept.back());
    std::span<const MarkedPolynomial> others(kept.data(), kept.size() - 1);
    Polynomial tail = normal_form(kept.back().tail(), others, guard, selection);
    Polynomial body =
        monomial(n, Rational(1), kept.back().marked_exponent()) + tail;
    kept.back() =
        MarkedPolynomial(std::move(body), kept.back().marked_exponent());
    std::swap(kept[i], kept.back());
  }
  return MarkedBasis(n, std::move(kept));
}

MarkedBasis buchberger(const std::vector<Polynomial>& gens,
                       const ExponentOrder& order,
                       const BuchbergerOptions& opts) {
  size_t n = 0;
  std::vector<Polynomial> work;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) {
      n = g.n();
      work.push_back(g);
    }
  }
  if (work.empty())
    throw Error("ideal has no nonzero generators");

  std::vector<MarkedPolynomial> basis;
  std::set<Pair, PairLess> pairs;
  std::set<std::pair<size_t, size_t>> handled;  // for the chain criterion

  auto add_element = [&](Polynomial p) {
    const Term& lead = initial_term(order, p);
    MarkedPolynomial mp(std::move(p), lead.exp);
    size_t j = basis.size();
    for (size_t i = 0; i < j; ++i) {
      pairs.insert(Pair{
          exp_lcm(basis[i].marked_exponent(), mp.marked_exponent()), i, j});
    }
    basis.push_back(std::move(mp));
  };

  for (Polynomial& g : work) add_element(std::move(g));

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    handled.insert({p.i, p.j});
    const MarkedPolynomial& gi = basis[p.i];
    const MarkedPolynomial& gj = basis[p.j];
    if (opts.coprime_criterion &&
        exp_coprime(gi.marked_exponent(), gj.marked_exponent()))
      continue;
    if (opts.use_chain_criterion) {
      bool skip = false;
      for (size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!divides(basis[k].marked_exponent(), p.lcm)) continue;
        auto ik = std::minmax(p.i, k);
        auto jk = std::minmax(p.j, k);
        if (handled.count({ik.first, ik.second}) &&
            handled.count({jk.first, jk.second}))
          skip = true;
      }
      if (skip) continue;
    }
    Polynomial s = s_polynomial(gi, gj);
    Polynomial r = normal_form(s, std::span<const MarkedPolynomial>(basis),
                               opts.reduction_guard, &order);
    if (!r.is_zero()) add_element(std::move(r));
  }

  return autoreduce(n, std::move(basis), opts.reduction_guard, &order);
}

bool is_groebner_basis(const MarkedBasis& g, std::uint64_t guard,
                       const ExponentOrder* selection) {
  const auto& e = g.elements();
  for (size_t i = 0; i < e.size(); ++i) {
    for (size_t j = i + 1; j < e.size(); ++j) {
      Polynomial s = s_polynomial(e[i], e[j]);
      if (!normal_form(s, g, guard, selection).is_zero()) return false;
    }
  }
  return true;
}

std::vector<IntVec> marked_differences(const MarkedBasis& g) {
  std::vector<IntVec> diffs;
  for (const MarkedPolynomial& e : g.elements()) {
    for (const Term& t : e.body().terms()) {
      if (t.exp == e.marked_exponent()) continue;
      diffs.push_back(exp_diff(e.marked_exponent(), t.exp));
    }
  }
  return diffs;
}

}  // namespace grobfan
