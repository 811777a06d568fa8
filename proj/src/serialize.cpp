#include "grobfan/serialize.hpp"

#include <algorithm>

namespace grobfan {

namespace {

std::string monomial_text(const ExpVec& e,
                          const std::vector<std::string>& variables) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += variables[i];
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

// One term with its sign; `leading` suppresses an explicit '+'.
std::string term_text(const Term& t, const std::vector<std::string>& variables,
                      bool leading) {
  Rational a = abs(t.coeff);
  std::string s = t.coeff < 0 ? "-" : (leading ? "" : "+");
  std::string mono = monomial_text(t.exp, variables);
  if (mono.empty()) return s + to_string(a);
  if (a != 1) s += to_string(a) + "*";
  return s + mono;
}

// Rays of a maximal cone: its dimension-(h+1) faces, each reduced
// modulo the homogeneity space and scaled primitive.
std::vector<IntVec> rays_of(const Cone& cone, const std::vector<IntVec>& homog,
                            size_t h) {
  std::vector<size_t> pivots;
  for (const IntVec& row : homog) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    pivots.push_back(p);
  }
  std::vector<IntVec> rays;
  for (const Cone& f : faces_all(cone)) {
    if (cone_dimension(f) != h + 1) continue;
    std::vector<Rational> p = relative_interior_point(f).value();
    for (size_t r = 0; r < homog.size(); ++r) {
      Rational factor = p[pivots[r]] / Rational(homog[r][pivots[r]]);
      for (size_t j = 0; j < p.size(); ++j)
        p[j] -= factor * Rational(homog[r][j]);
    }
    rays.push_back(primitive(p));
  }
  std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) {
    return ivec_lex_compare(a, b) == Ordering::Less;
  });
  return rays;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::string polynomial_to_text(const Polynomial& f,
                               const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < f.terms().size(); ++i)
    s += term_text(f.terms()[i], variables, i == 0);
  return s;
}

std::string marked_to_text(const MarkedPolynomial& g,
                           const std::vector<std::string>& variables) {
  const ExpVec& m = g.marked_exponent();
  std::string s = "!";
  for (const Term& t : g.body().terms())
    if (t.exp == m) s += term_text(t, variables, /*leading=*/true);
  // remaining terms ascending in the canonical order
  const auto& terms = g.body().terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    if (it->exp != m) s += term_text(*it, variables, /*leading=*/false);
  return s;
}

std::string basis_to_text(const MarkedBasis& g,
                          const std::vector<std::string>& variables) {
  std::string s = "{";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += marked_to_text(g.elements()[i], variables);
  }
  return s + "}";
}

std::string cone_to_text(const Cone& c) {
  Cone cc = c.canonical() ? c : canonicalize(c);
  std::string s = "dimension: " + u64(cone_dimension(cc)) + "\n";
  for (const IntVec& e : cc.equations()) s += "equation: " + ivec_to_string(e) + "\n";
  for (const IntVec& a : cc.inequalities())
    s += "inequality: " + ivec_to_string(a) + "\n";
  return s;
}

Json vector_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(to_string(x));
  return a;
}

Json basis_to_json(const MarkedBasis& g,
                   const std::vector<std::string>& variables) {
  Json a = Json::array();
  for (const MarkedPolynomial& e : g.elements())
    a.push_back(marked_to_text(e, variables));
  return a;
}

Json cone_to_json(const Cone& c) {
  Cone cc = c.canonical() ? c : canonicalize(c);
  Json j;
  j["dimension"] = u64(cone_dimension(cc));
  Json eqs = Json::array(), ineqs = Json::array();
  for (const IntVec& e : cc.equations()) eqs.push_back(vector_to_json(e));
  for (const IntVec& a : cc.inequalities()) ineqs.push_back(vector_to_json(a));
  j["equations"] = std::move(eqs);
  j["inequalities"] = std::move(ineqs);
  return j;
}

Json counters_to_json(const RunStats& stats) {
  Json j;
  j["facet_computations"] = u64(stats.facet_computations);
  j["shoots"] = u64(stats.shoots);
  j["flips"] = u64(stats.flips);
  j["lp_calls"] = u64(stats.lp_calls);
  return j;
}

Json summary_to_json(const FanSummary& summary,
                     const std::vector<std::string>& variables) {
  Json j;
  std::vector<IntVec> homog;
  if (!summary.maximal.empty())
    homog = homogeneity_space(marked_differences(summary.maximal[0]),
                              summary.maximal[0].n());
  Json cones = Json::array();
  for (const MarkedBasis& g : summary.maximal) {
    Cone c = cone_of(g);
    Json entry;
    entry["basis"] = basis_to_json(g, variables);
    Json facets = Json::array();
    for (const IntVec& a : c.inequalities()) facets.push_back(vector_to_json(a));
    entry["facets"] = std::move(facets);
    Json rays = Json::array();
    for (const IntVec& r : rays_of(c, homog, summary.h))
      rays.push_back(vector_to_json(r));
    entry["rays"] = std::move(rays);
    cones.push_back(std::move(entry));
  }
  j["maximal_cones"] = std::move(cones);
  if (summary.orbit_sizes.empty()) {
    j["orbit_sizes"] = nullptr;
    j["total_cones"] = u64(summary.maximal.size());
  } else {
    Json sizes = Json::array();
    std::uint64_t total = 0;
    for (size_t s : summary.orbit_sizes) {
      sizes.push_back(u64(s));
      total += s;
    }
    j["orbit_sizes"] = std::move(sizes);
    j["total_cones"] = u64(total);
  }
  j["h"] = u64(summary.h);
  Json warnings = Json::array();
  if (summary.fvec) {
    Json fv = Json::array();
    for (std::uint64_t c : *summary.fvec) fv.push_back(u64(c));
    j["f_vector"] = std::move(fv);
  } else {
    j["f_vector"] = nullptr;
    warnings.push_back("f_vector not computed by this command; run fvector");
  }
  j["counters"] = counters_to_json(summary.stats);
  j["warnings"] = std::move(warnings);
  return j;
}

}  // namespace grobfan
